#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "singzeta/errors.hpp"
#include "singzeta/ratfun.hpp"

using namespace singzeta;

namespace {
  MultiPoly random_poly(std::mt19937& rng, std::size_t d, int terms, int deg) {
    std::uniform_int_distribution<int> coeff(-3, 3), exp(0, deg);
    MultiPoly                          p(d);
    for (int k = 0; k < terms; ++k) {
      Exponents e(d + 1);
      for (auto& x : e) {
        x = static_cast<std::uint32_t>(exp(rng));
      }
      p.add_term(e, coeff(rng));
    }
    return p;
  }

  ZetaRatFun random_zeta(std::mt19937& rng, std::size_t d) {
    std::uniform_int_distribution<int> den(0, 2);
    std::vector<std::uint32_t>         t(d);
    for (auto& x : t) {
      x = static_cast<std::uint32_t>(den(rng));
    }
    return ZetaRatFun(random_poly(rng, d, 4, 2),
                      static_cast<std::uint32_t>(den(rng)),
                      static_cast<std::uint32_t>(den(rng)),
                      t);
  }

  PolyQ poly(std::vector<mpq_class> c) {
    return PolyQ(std::move(c));
  }
}  // namespace

TEST_CASE("graded lex order") {
  GradedLex less;
  CHECK(less({0, 1}, {1, 0}));
  CHECK(less({1, 0}, {0, 2}));
  CHECK_FALSE(less({1, 0}, {1, 0}));

  auto p = MultiPoly::u(1) + MultiPoly::u_minus_t(1, 0).pow(2);
  CHECK(p.to_string() == "U + T1^2 - 2*U*T1 + U^2");
}

TEST_CASE("multipoly arithmetic") {
  auto const u  = MultiPoly::u(2);
  auto const t1 = MultiPoly::monomial(2, {0, 1, 0}, 1);
  CHECK((u - t1) * (u + t1) == u * u - t1 * t1);
  CHECK((u - t1).pow(0) == MultiPoly::constant(2, 1));
  CHECK((u + t1 - u - t1).is_zero());
  CHECK(MultiPoly::u_minus_one(2).evaluate(5, {1, 2}) == 4);
  CHECK(MultiPoly::u_minus_t(2, 1).evaluate(5, {1, 2}) == 3);
}

TEST_CASE("exact division by denominator factors") {
  auto const p = MultiPoly::u_minus_one(2) * MultiPoly::u_minus_t(2, 1);
  CHECK(divide_exact(p, Factor::u_minus_one()) == MultiPoly::u_minus_t(2, 1));
  CHECK(divide_exact(p, Factor::u_minus_t(1)) == MultiPoly::u_minus_one(2));
  CHECK_FALSE(try_divide(p, Factor::u()).has_value());
  CHECK_FALSE(try_divide(p, Factor::u_minus_t(0)).has_value());
  CHECK_THROWS_AS(divide_exact(p, Factor::u()), NotDivisible);
  CHECK(divide_exact(MultiPoly(2), Factor::u()).is_zero());
}

TEST_CASE("zeta rational functions stay reduced") {
  auto const geo = ZetaRatFun::geometric(1, 0);
  CHECK(geo.is_canonical());
  CHECK(geo.to_string() == "U / (U-T1)");

  // U (U-1) / (U (U-1)) = 1
  auto num = MultiPoly::u(1) * MultiPoly::u_minus_one(1);
  auto raw = ZetaRatFun::unreduced(num, 1, 1, {0});
  CHECK_FALSE(raw.is_canonical());
  CHECK(reduce(raw) == ZetaRatFun::constant(1, 1));
  CHECK(ZetaRatFun(num, 1, 1, {0}) == ZetaRatFun::constant(1, 1));

  // U/(U-T) = 1 + T/(U-T)
  auto t   = ZetaRatFun(MultiPoly::monomial(1, {0, 1}, 1), 0, 0, {1});
  CHECK(ZetaRatFun::constant(1, 1) + t == geo);
  CHECK(geo - t == ZetaRatFun::constant(1, 1));
  CHECK((geo - geo).is_zero());

  CHECK(ZetaRatFun::monomial(2, -2, {1, 1}, 3).to_string() == "3*T1*T2 / U^2");
  CHECK(ZetaRatFun(MultiPoly::constant(1, 1), 0, 2, {0}).to_string()
        == "1 / (U-1)^2");
}

TEST_CASE("zeta field axioms on random elements") {
  std::mt19937 rng(20240611);
  for (int round = 0; round < 60; ++round) {
    auto const a = random_zeta(rng, 2);
    auto const b = random_zeta(rng, 2);
    auto const c = random_zeta(rng, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - b) + b == a);
    CHECK((a + b).is_canonical());
    CHECK((a * c).is_canonical());

    // evaluation commutes with the operations
    std::vector<mpq_class> const t{mpq_class(1, 3), mpq_class(-2, 5)};
    mpq_class const              u(7, 2);
    CHECK((a * b).evaluate(u, t) == a.evaluate(u, t) * b.evaluate(u, t));
    CHECK((a + c).evaluate(u, t) == a.evaluate(u, t) + c.evaluate(u, t));
  }
}

TEST_CASE("univariate polynomials and rational functions") {
  auto const p = poly({1, -1});  // 1 - T
  auto const q = poly({1, 0, -1});
  CHECK(gcd(p, q) == poly({-1, 1}));
  auto [quo, rem] = q.divmod(p);
  CHECK(quo == poly({1, 1}));
  CHECK(rem.is_zero());
  CHECK(p.pow(3).coeff(2) == 3);
  CHECK(p.scale_variable(2) == poly({1, -2}));
  CHECK(poly({1, -1, 1}).to_string() == "1 - T + T^2");
  CHECK(poly({0, 0, mpq_class(2, 9)}).to_string() == "2/9*T^2");
  CHECK(PolyQ().to_string() == "0");

  RatFunQ f(q, p);
  CHECK(f.is_polynomial());
  CHECK(f.num() == poly({1, 1}));
  RatFunQ g(poly({2}), poly({4, -4}));
  CHECK(g.den() == poly({1, -1}));
  CHECK(g.num() == poly({mpq_class(1, 2)}));
  CHECK(g.to_string() == "(1/2) / (1 - T)");
  CHECK_THROWS_AS(RatFunQ(p, PolyQ()), DivisionByZero);
  CHECK(f - f == RatFunQ());
  CHECK(g * RatFunQ(poly({2, -2})) == RatFunQ(poly({1})));
}

TEST_CASE("series expansion") {
  auto const geo = series_expand(RatFunQ(poly({1}), poly({1, -2})), 5);
  CHECK(geo == std::vector<mpq_class>{1, 2, 4, 8, 16, 32});
  auto const cusp = series_expand(RatFunQ(poly({1, -1, 1}), poly({1, -1})), 4);
  CHECK(cusp == std::vector<mpq_class>{1, 0, 1, 1, 1});
  CHECK_THROWS_AS(series_expand(RatFunQ(poly({1}), poly({0, 1})), 3),
                  NotExpandable);

  // U/(U - T1) at U = 2 is sum (T1/2)^k
  auto const multi = series_expand_multi(ZetaRatFun::geometric(1, 0), 2, 3);
  CHECK(multi.size() == 4);
  CHECK(multi.at({3}) == mpq_class(1, 8));
}

TEST_CASE("substitution") {
  auto const geo = ZetaRatFun::geometric(2, 0) * ZetaRatFun::geometric(2, 1);
  auto const c   = collapse_t(geo);
  CHECK(c.branches() == 1);
  CHECK(substitute(geo, 1) == RatFunQ(poly({1}), poly({1, -1}).pow(2)));
  CHECK(substitute(geo, 3) == RatFunQ(poly({9}), poly({3, -1}).pow(2)));

  auto const pole = ZetaRatFun(MultiPoly::constant(1, 1), 0, 1, {0});
  CHECK_THROWS_AS(specialize_u(pole, 1), PoleAtOne);
  CHECK_THROWS_AS(specialize_u(ZetaRatFun::monomial(1, -1, {0}), 0),
                  DivisionByZero);
  // (U-1)/(U-1) reduces away and specializes at 1.
  auto const cancel = ZetaRatFun(MultiPoly::u_minus_one(1), 0, 1, {0});
  CHECK(specialize_u(cancel, 1) == RatFunQ(poly({1})));
}
