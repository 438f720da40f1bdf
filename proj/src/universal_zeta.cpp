#include "singzeta/universal_zeta.hpp"

#include <algorithm>  // for max_element
#include <bit>        // for popcount

#include "singzeta/errors.hpp"

namespace singzeta {

  namespace {
    std::vector<std::uint32_t> t_exponents(ValueVec const& n) {
      std::vector<std::uint32_t> e(n.size());
      for (std::size_t i = 0; i < n.size(); ++i) {
        e[i] = static_cast<std::uint32_t>(n[i]);
      }
      return e;
    }

    // h(n + 1_I) for every I ⊆ [d], indexed by bitmask.
    std::vector<int> h_corners(GoodSemigroup const& s, ValueVec const& n) {
      std::size_t const d = s.dimension();
      std::vector<int>  h(std::size_t(1) << d);
      for (unsigned mask = 0; mask < h.size(); ++mask) {
        h[mask] = s.h_dim(n + ValueVec::indicator(d, mask));
      }
      return h;
    }

    void require_member(GoodSemigroup const& s, ValueVec const& n) {
      if (!s.contains(n)) {
        throw InvalidInput(to_string(n) + " is not in the semigroup");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // I_n(U)
  ////////////////////////////////////////////////////////////////////////

  mpq_class IdealClassPoly::evaluate(mpq_class const& u) const {
    mpq_class sum = 0;
    for (auto const& [e, c] : poly.terms()) {
      long      k = static_cast<long>(e[0]) + u_offset;
      mpq_class p = 1;
      for (long i = 0; i < std::abs(k); ++i) {
        p *= u;
      }
      sum += mpq_class(c) * (k >= 0 ? p : 1 / p);
    }
    return sum;
  }

  ZetaRatFun IdealClassPoly::to_ratfun(std::size_t d) const {
    MultiPoly p(d);
    for (auto const& [e, c] : poly.terms()) {
      Exponents x(d + 1, 0);
      x[0] = e[0];
      p.add_term(x, c);
    }
    return ZetaRatFun(p, 0, 0, std::vector<std::uint32_t>(d, 0))
           * ZetaRatFun::monomial(d, u_offset, std::vector<std::uint32_t>(d, 0));
  }

  std::string IdealClassPoly::to_string() const {
    std::string out;
    bool        first = true;
    for (auto const& [e, c] : poly.terms()) {
      long k = static_cast<long>(e[0]) + u_offset;
      if (first) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      mpz_class a = abs(c);
      std::string mono
          = k == 0 ? "" : (k == 1 ? "U" : "U^" + std::to_string(k));
      if (mono.empty()) {
        out += a.get_str();
      } else if (a == 1) {
        out += mono;
      } else {
        out += a.get_str() + "*" + mono;
      }
      first = false;
    }
    return first ? "0" : out;
  }

  IdealClassPoly ideal_class_poly(GoodSemigroup const& s, ValueVec const& n) {
    require_member(s, n);
    auto const h    = h_corners(s, n);
    int const  hmax = *std::max_element(h.begin(), h.end());

    MultiPoly alt(1);
    for (unsigned mask = 0; mask < h.size(); ++mask) {
      int const sign = std::popcount(mask) % 2 == 0 ? 1 : -1;
      alt.add_term(Exponents{static_cast<std::uint32_t>(hmax - h[mask]), 0},
                   sign);
    }
    IdealClassPoly out;
    out.poly     = divide_exact(alt, Factor::u_minus_one());
    out.u_offset = n.norm() + 1 - hmax;
    while (!out.poly.is_zero()) {
      auto q = try_divide(out.poly, Factor::u());
      if (!q) {
        break;
      }
      out.poly = std::move(*q);
      ++out.u_offset;
    }
    return out;
  }

  mpz_class ideal_class_at_one(GoodSemigroup const& s, ValueVec const& n) {
    require_member(s, n);
    auto const h   = h_corners(s, n);
    mpz_class  sum = 0;
    for (unsigned mask = 0; mask < h.size(); ++mask) {
      int const sign = std::popcount(mask) % 2 == 0 ? -1 : 1;
      sum += sign * h[mask];
    }
    return sum;
  }

  ////////////////////////////////////////////////////////////////////////
  // Boundary sets
  ////////////////////////////////////////////////////////////////////////

  std::vector<BranchSet> proper_subsets(std::size_t d) {
    std::vector<BranchSet> out;
    unsigned const         full = (1u << d) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
      BranchSet J;
      for (std::size_t i = 0; i < d; ++i) {
        if ((mask >> i) & 1u) {
          J.push_back(i);
        }
      }
      out.push_back(std::move(J));
    }
    return out;
  }

  namespace {
    std::vector<bool> membership_mask(std::size_t d, BranchSet const& J) {
      std::vector<bool> in(d, false);
      for (auto j : J) {
        if (j >= d) {
          throw DimensionMismatch("branch index out of range");
        }
        in[j] = true;
      }
      std::size_t count = 0;
      for (bool b : in) {
        count += b;
      }
      if (count == 0 || count == d) {
        throw InvalidInput("J must be a proper nonempty subset of [d]");
      }
      return in;
    }
  }  // namespace

  ValueVec boundary_point(GoodSemigroup const& s,
                          BranchSet const&     J,
                          ValueVec const&      m) {
    std::size_t const d  = s.dimension();
    auto const        in = membership_mask(d, J);
    if (m.size() != d - J.size()) {
      throw DimensionMismatch("m must be indexed by the complement of J");
    }
    std::vector<int> f(d);
    std::size_t      k = 0;
    for (std::size_t i = 0; i < d; ++i) {
      f[i] = in[i] ? s.conductor()[i] : m[k++];
    }
    return ValueVec(std::move(f));
  }

  std::vector<ValueVec> b_j_members(GoodSemigroup const& s, BranchSet const& J) {
    std::size_t const d  = s.dimension();
    auto const        in = membership_mask(d, J);
    std::vector<int>  bound;
    for (std::size_t i = 0; i < d; ++i) {
      if (!in[i]) {
        if (s.conductor()[i] == 0) {
          return {};
        }
        bound.push_back(s.conductor()[i] - 1);
      }
    }
    std::vector<ValueVec> out;
    for_each_in_box(ValueVec(bound), [&](ValueVec const& m) {
      if (s.contains(boundary_point(s, J, m))) {
        out.push_back(m);
      }
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Assembly and specializations
  ////////////////////////////////////////////////////////////////////////

  UniversalZeta assemble_universal(GoodSemigroup const& s) {
    std::size_t const d     = s.dimension();
    ValueVec const&   c     = s.conductor();
    auto const        zeros = std::vector<std::uint32_t>(d, 0);

    ZetaRatFun z(d);
    for (auto const& n : s.small()) {
      if (lt_all(n, c)) {
        z += ideal_class_poly(s, n).to_ratfun(d)
             * ZetaRatFun::monomial(d, -n.norm(), t_exponents(n));
      }
    }
    // Points with n_j >= c_j exactly on J: I_n is constant along those
    // directions, so each ray sums to a geometric series in U^{-1} T_j.
    for (auto const& J : proper_subsets(d)) {
      for (auto const& m : b_j_members(s, J)) {
        auto const f    = boundary_point(s, J, m);
        ZetaRatFun term = ideal_class_poly(s, f).to_ratfun(d)
                          * ZetaRatFun::monomial(d, -f.norm(), t_exponents(f));
        for (auto j : J) {
          term *= ZetaRatFun::geometric(d, j);
        }
        z += term;
      }
    }
    ZetaRatFun tail
        = ZetaRatFun(MultiPoly::u_minus_one(d).pow(d - 1), 0, 0, zeros)
          * ZetaRatFun::monomial(
              d, s.delta() - static_cast<int>(d) + 1 - c.norm(), t_exponents(c));
    for (std::size_t i = 0; i < d; ++i) {
      tail *= ZetaRatFun::geometric(d, i);
    }
    z += tail;
    if (z.den_u1() != 0) {
      throw NotDivisible("(U-1) survived in the universal zeta denominator");
    }
    return {s, std::move(z)};
  }

  ZetaRatFun generalized_poincare(GoodSemigroup const& s) {
    std::size_t const d = s.dimension();
    return ZetaRatFun::monomial(
               d, -(s.delta() + 1), std::vector<std::uint32_t>(d, 0))
           * assemble_universal(s).value;
  }

  RatFunQ specialize_monodromy(UniversalZeta const& z) {
    return substitute(z.value, 1);
  }

  RatFunQ specialize_counting(UniversalZeta const& z, mpq_class const& q) {
    if (q < 2) {
      throw InvalidInput("the counting specialization needs q >= 2");
    }
    return substitute(z.value, q);
  }

  RatFunQ counting_ca(GoodSemigroup const& s, mpq_class const& q) {
    return specialize_counting(assemble_universal(s), q).scale_variable(q);
  }

  RatFunQ monodromy_from_limits(GoodSemigroup const& s) {
    std::size_t const d         = s.dimension();
    ValueVec const&   c         = s.conductor();
    PolyQ const       one_minus = PolyQ(std::vector<mpq_class>{1, -1});

    RatFunQ out;
    for (auto const& n : s.small()) {
      if (lt_all(n, c)) {
        out = out
              + RatFunQ(PolyQ::monomial(n.norm(),
                                        mpq_class(ideal_class_at_one(s, n))));
      }
    }
    for (auto const& J : proper_subsets(d)) {
      for (auto const& m : b_j_members(s, J)) {
        auto const f = boundary_point(s, J, m);
        out          = out
              + RatFunQ(
                  PolyQ::monomial(f.norm(), mpq_class(ideal_class_at_one(s, f))),
                  one_minus.pow(static_cast<unsigned>(J.size())));
      }
    }
    // (U-1)^{d-1} vanishes at U = 1 unless d = 1.
    if (d == 1) {
      out = out + RatFunQ(PolyQ::monomial(c.norm()), one_minus);
    }
    return out;
  }

}  // namespace singzeta
