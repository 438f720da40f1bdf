#ifndef SINGZETA_GLOBAL_ZETA_HPP_
#define SINGZETA_GLOBAL_ZETA_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

#include <gmpxx.h>

#include "singzeta/ratfun.hpp"
#include "singzeta/semigroup.hpp"

namespace singzeta {

  bool is_prime(long n) noexcept;

  // a_1..a_{e_max}: closed points of P^1 over F_q by degree. Needs q prime and
  // e_max <= 12.
  std::vector<std::uint64_t> p1_closed_point_counts(int q, int e_max);

  // Z(T) = P(T) / ((1 - T)(1 - qT)).
  struct SmoothCurveZeta {
    int   q = 2;
    PolyQ numerator = PolyQ::constant(1);

    RatFunQ                zeta() const;
    static SmoothCurveZeta projective_line(int q);
  };

  struct SingularPoint {
    GoodSemigroup semigroup;
    std::size_t   branches = 1;
  };

  struct SingularCurveModel {
    SmoothCurveZeta            smooth;
    std::vector<SingularPoint> singular_points;
    // Degrees of the normalization points over the singular points; empty
    // means all 1.
    std::vector<int> support_degrees;
    bool             modulus_flag        = false;
    bool             normalization_is_p1 = true;

    // More than one singular point goes beyond the single-point statement and
    // rests on the Euler product alone.
    bool multi_point_extension() const noexcept {
      return singular_points.size() > 1;
    }
    std::size_t support_size() const;
    // Throws InvalidInput or UnsupportedModel.
    void validate() const;
  };

  // Z_smooth(T) * prod_P (1 - T)^{d_P} Z_Ca(T, q, O_P).
  RatFunQ assemble_global(SingularCurveModel const& model);

  // Number of effective Cartier divisors of degree 0..N, from the Euler
  // product over closed points of P^1. N <= 10.
  std::vector<mpz_class> divisor_series_oracle(SingularCurveModel const& model,
                                               std::size_t               N);

  // Local part of the motivic identity for a P^1 normalization:
  //   Z(U^-1 T, U) = W(T, U) / (1 - T),
  //   W = U/(U - T) * prod_P ((U - T)/U)^{d_P} Z(T, O_P).
  struct GlobalIdentity {
    ZetaRatFun local_part{1};
    std::string to_string() const;
    // W(T, q)/(1 - T) == assemble_global(T/q).
    bool holds_at_q(SingularCurveModel const& model) const;
  };
  GlobalIdentity symbolic_global(SingularCurveModel const& model);

}  // namespace singzeta

#endif  // SINGZETA_GLOBAL_ZETA_HPP_
