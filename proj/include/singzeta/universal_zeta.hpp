#ifndef SINGZETA_UNIVERSAL_ZETA_HPP_
#define SINGZETA_UNIVERSAL_ZETA_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include <gmpxx.h>

#include "singzeta/ratfun.hpp"
#include "singzeta/semigroup.hpp"

namespace singzeta {

  // Laurent polynomial U^offset * poly in U alone. At U = q it counts the
  // principal ideals with a fixed value vector.
  struct IdealClassPoly {
    MultiPoly poly{1};  // no T dependence; never divisible by U
    int       u_offset = 0;

    mpq_class  evaluate(mpq_class const& u) const;
    ZetaRatFun to_ratfun(std::size_t d) const;
    // Coefficients from U^offset upwards, e.g. "U^2 - U".
    std::string to_string() const;
  };

  // I_n(U) = (U-1)^{-1} U^{|n|+1} sum_{I ⊆ [d]} (-1)^{#I} U^{-h(n + 1_I)}.
  // The (U-1) division is exact on every valid semigroup; a failure raises
  // NotDivisible. Requires n ∈ S (InvalidInput otherwise).
  IdealClassPoly ideal_class_poly(GoodSemigroup const& s, ValueVec const& n);

  // I_n(1) = sum_I (-1)^{#I+1} h(n + 1_I), the U -> 1 limit computed directly
  // from h without any division.
  mpz_class ideal_class_at_one(GoodSemigroup const& s, ValueVec const& n);

  // Index set J ⊊ [d], nonempty, as sorted 0-based branch indices.
  using BranchSet = std::vector<std::size_t>;

  // f_J(m): c_j on J, m on the complement (m is indexed by [d] \ J).
  ValueVec boundary_point(GoodSemigroup const& s,
                          BranchSet const&     J,
                          ValueVec const&      m);

  // {m < c on [d] \ J : f_J(m) ∈ S}, sorted.
  std::vector<ValueVec> b_j_members(GoodSemigroup const& s, BranchSet const& J);

  // All proper nonempty subsets of [d].
  std::vector<BranchSet> proper_subsets(std::size_t d);

  struct UniversalZeta {
    GoodSemigroup semigroup;
    ZetaRatFun    value;
  };

  UniversalZeta assemble_universal(GoodSemigroup const& s);

  // U^{-(delta+1)} times the universal zeta function. Equal to the generalized
  // Poincaré series at U = L when the residue field is big enough.
  ZetaRatFun generalized_poincare(GoodSemigroup const& s);

  // T_i = T, U = 1.
  RatFunQ specialize_monodromy(UniversalZeta const& z);

  // T_i = T, U = q: Z_Ca(q^{-1} T, q, O).
  RatFunQ specialize_counting(UniversalZeta const& z, mpq_class const& q);

  // Z_Ca(T, q, O): coefficient of T^m is the number of principal ideals of
  // codimension m.
  RatFunQ counting_ca(GoodSemigroup const& s, mpq_class const& q);

  // The U = 1 specialization assembled term by term from ideal_class_at_one,
  // without going through the symbolic function.
  RatFunQ monodromy_from_limits(GoodSemigroup const& s);

}  // namespace singzeta

#endif  // SINGZETA_UNIVERSAL_ZETA_HPP_
