#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "singzeta/errors.hpp"
#include "singzeta/ffield_oracle.hpp"
#include "singzeta/universal_zeta.hpp"

using namespace singzeta;
using namespace singzeta::testing;

namespace {
  // k + J(m) inside prod_i k[[t]]: generators t^k e_i, m_i <= k < 2 m_i.
  RingModel modulus_model(std::vector<int> const& m, int p) {
    RingModel model;
    model.p = p;
    model.d = m.size();
    std::vector<int> c(m), b(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      b[i] = 2 * m[i] + 1;
      for (int k = m[i]; k < 2 * m[i]; ++k) {
        TruncSeriesVec g;
        for (std::size_t j = 0; j < m.size(); ++j) {
          Row r(static_cast<std::size_t>(k) + 1, 0);
          if (j == i) {
            r[k] = 1;
          }
          g.branches.push_back(r);
        }
        model.generators.push_back(g);
      }
    }
    if (m == std::vector<int>{1}) {
      c = {0};  // k + t k[[t]] is already normal
    }
    model.conductor  = ValueVec(c);
    model.truncation = ValueVec(b);
    return model;
  }

  // #{zO : v(z) = n} by enumerating every element of O/J(K) rather than
  // lifts of J(n)/J(K).
  std::uint64_t brute_count(RingOracle const& oracle, ValueVec const& n) {
    auto const&      m = oracle.model();
    std::vector<int> k(m.d);
    for (std::size_t i = 0; i < m.d; ++i) {
      k[i] = n[i] + std::max(m.conductor[i], 1);
    }
    ColumnLayout const layout{ValueVec(k)};
    EchelonBasis       ring(m.p, layout.size());
    for (auto const& z : oracle.basis().elements()) {
      ring.insert(layout.flatten(z));
    }
    std::vector<TruncSeriesVec> elems;
    for (auto const& r : ring.rows()) {
      elems.push_back(layout.unflatten(r));
    }
    std::set<std::string> ideals;
    std::vector<int>      digit(ring.rank(), 0);
    while (true) {
      Row z(layout.size(), 0);
      for (std::size_t j = 0; j < digit.size(); ++j) {
        for (std::size_t c = 0; c < z.size(); ++c) {
          z[c] = static_cast<std::uint8_t>((z[c] + digit[j] * ring.rows()[j][c]) % m.p);
        }
      }
      auto const zs = layout.unflatten(z);
      auto const v  = value_vector(zs);
      if (v && *v == n) {
        EchelonBasis ideal(m.p, layout.size());
        for (auto const& b : elems) {
          ideal.insert(layout.flatten(multiply(zs, b, m.p)));
        }
        ideals.insert(ideal.key());
      }
      std::size_t j = 0;
      for (; j < digit.size(); ++j) {
        if (++digit[j] < m.p) {
          break;
        }
        digit[j] = 0;
      }
      if (j == digit.size()) {
        break;
      }
    }
    return ideals.size();
  }
}  // namespace

TEST_CASE("prime field arithmetic") {
  FpElem a(5, 7), b(-3, 7);
  CHECK(b.value() == 4);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 1);
  CHECK((a * b).value() == 6);
  CHECK((-a).value() == 2);
  CHECK((a * a.inverse()).value() == 1);
  CHECK_THROWS_AS(FpElem(0, 5).inverse(), DivisionByZero);
  CHECK_THROWS_AS(FpElem(1, 4), InvalidInput);
  CHECK(is_oracle_prime(13));
  CHECK_FALSE(is_oracle_prime(17));
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int x = 1; x < p; ++x) {
      CHECK((FpElem(x, p) * FpElem(x, p).inverse()).value() == 1);
    }
  }
}

TEST_CASE("truncated series") {
  TruncSeriesVec a{{Row{1, 1, 0, 0}, Row{0, 2}}};
  TruncSeriesVec b{{Row{1, 2, 1, 0}, Row{0, 1, 1}}};
  auto const     c = multiply(a, b, 3);
  CHECK(c.branches[0] == Row{1, 0, 0, 1});
  CHECK(c.branches[1] == Row{0, 0});
  CHECK(value_vector(a) == ValueVec{0, 1});
  CHECK_FALSE(value_vector(c).has_value());
  CHECK_THROWS_AS(multiply(a, TruncSeriesVec{{Row{1}}}, 3), DimensionMismatch);
}

TEST_CASE("column layout") {
  ColumnLayout const layout(ValueVec{2, 3});
  CHECK(layout.size() == 5);
  CHECK(layout.position(0) == std::pair<std::size_t, int>{0, 0});
  CHECK(layout.position(1) == std::pair<std::size_t, int>{1, 0});
  CHECK(layout.position(4) == std::pair<std::size_t, int>{1, 2});
  CHECK(layout.column(1, 1) == 3);
  CHECK_THROWS_AS(layout.column(0, 2), InvalidInput);
  TruncSeriesVec z{{Row{1, 2}, Row{0, 1, 2}}};
  CHECK(layout.unflatten(layout.flatten(z)) == z);
}

TEST_CASE("echelon form is canonical") {
  std::mt19937 rng(99);
  for (int p : {2, 3, 5}) {
    std::uniform_int_distribution<int> coef(0, p - 1);
    for (int round = 0; round < 40; ++round) {
      std::vector<Row> rows(5, Row(7));
      for (auto& r : rows) {
        for (auto& x : r) {
          x = static_cast<std::uint8_t>(coef(rng));
        }
      }
      EchelonBasis a(p, 7), b(p, 7);
      for (auto const& r : rows) {
        a.insert(r);
      }
      std::shuffle(rows.begin(), rows.end(), rng);
      // the span is unchanged by adding a combination of two rows
      Row mix(7);
      for (std::size_t j = 0; j < 7; ++j) {
        mix[j] = static_cast<std::uint8_t>((rows[0][j] + 2 * rows[1][j]) % p);
      }
      b.insert(mix);
      for (auto const& r : rows) {
        b.insert(r);
      }
      CHECK(a.key() == b.key());
      CHECK(a.rank() == b.rank());
      for (auto const& r : rows) {
        CHECK(a.contains(r));
      }
      CHECK(std::is_sorted(a.pivots().begin(), a.pivots().end()));
    }
  }
  EchelonBasis e(3, 2);
  CHECK_FALSE(e.insert(Row{0, 0}));
  CHECK_THROWS_AS(e.insert(Row{1}), DimensionMismatch);
}

TEST_CASE("ring model validation") {
  auto model = fixture_model("cusp_model_p3").model;
  CHECK(algebra_closure_basis(model).dimension() == 7);

  auto small = model;
  small.truncation = ValueVec{4};
  CHECK_THROWS_AS(small.normalize(), TruncationTooSmall);
  auto bad_p = model;
  bad_p.p    = 4;
  CHECK_THROWS_AS(bad_p.normalize(), InvalidInput);
  CHECK_THROWS_AS(algebra_closure_basis(model, 5), WorkLimitExceeded);
  CHECK_THROWS_AS(RingOracle(model).h_dim(ValueVec{7}), TruncationTooSmall);
  CHECK_THROWS_AS(RingOracle(model).count_principal_ideals(ValueVec{7}),
                  TruncationTooSmall);
  CHECK_THROWS_AS(RingOracle(model, 20).extract_values(), WorkLimitExceeded);
}

TEST_CASE("extracted semigroups match the fixtures") {
  for (auto const& c : matching_models()) {
    CAPTURE(c.model);
    auto const in = fixture_model(c.model);
    REQUIRE(in.expected.has_value());
    CHECK(*in.expected == fixture_semigroup(c.semigroup));
    RingOracle const oracle(in.model);
    CHECK(oracle.extract_values().matches(*in.expected));
    CHECK(oracle.semigroup() == *in.expected);
  }
}

TEST_CASE("F_2 is too small for the triple point") {
  auto const       in = fixture_model("triple_model_p2");
  RingOracle const oracle(in.model);
  auto const       values = oracle.extract_values();
  CHECK_FALSE(values.matches(*in.expected));
  CHECK(values.missing_from(*in.expected) == std::vector<ValueVec>{ValueVec{1, 1, 1}});
  CHECK(values.extra_over(*in.expected).empty());
  CHECK_THROWS_AS(oracle.semigroup(), InvalidSemigroup);
}

TEST_CASE("modulus rings have modulus semigroups") {
  for (auto const& m : std::vector<std::vector<int>>{
           {1}, {2}, {3}, {1, 1}, {2, 1}, {2, 2}, {1, 1, 1}}) {
    for (int p : {2, 3}) {
      CAPTURE(p);
      auto const s = semigroup_from_model(modulus_model(m, p));
      CHECK(s == from_modulus(m));
    }
  }
}

TEST_CASE("h from the ring equals h from the semigroup") {
  for (auto const& c : matching_models()) {
    CAPTURE(c.model);
    auto const       in = fixture_model(c.model);
    RingOracle const oracle(in.model);
    auto const&      s = *in.expected;
    for_each_in_box(in.model.truncation - in.model.conductor, [&](ValueVec const& n) {
      CHECK(oracle.h_dim(n) == s.h_dim(n));
    });
    CHECK(in.model.conductor.norm() - oracle.h_dim(in.model.conductor) == s.delta());
  }
}

TEST_CASE("principal ideal counts") {
  for (auto const& c : matching_models()) {
    CAPTURE(c.model);
    auto const       in = fixture_model(c.model);
    RingOracle const oracle(in.model);
    auto const&      s   = *in.expected;
    auto const       zca = series_expand(counting_ca(s, c.p), 6);
    for (int m = 0; m <= 6; ++m) {
      mpq_class total = 0;
      for (auto const& n : compositions(s.dimension(), m)) {
        if (!s.contains(n)) {
          continue;
        }
        CAPTURE(to_string(n));
        auto const count = oracle.count_principal_ideals(n);
        CHECK(mpq_class(count) == ideal_class_poly(s, n).evaluate(c.p));
        total += count;
      }
      CHECK(total == zca[m]);
    }
  }
}

TEST_CASE("lift enumeration agrees with full enumeration") {
  for (auto const& name :
       {"cusp_model_p2", "cusp_model_p3", "node_model_p3", "tacnode_model_p2"}) {
    CAPTURE(name);
    auto const       in = fixture_model(name);
    RingOracle const oracle(in.model);
    for (int m = 0; m <= 3; ++m) {
      for (auto const& n : compositions(in.model.d, m)) {
        if (in.expected->contains(n)) {
          CHECK(oracle.count_principal_ideals(n) == brute_count(oracle, n));
        }
      }
    }
  }
}
