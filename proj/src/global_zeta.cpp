#include "singzeta/global_zeta.hpp"

#include <stdexcept>  // for logic_error

#include "singzeta/errors.hpp"
#include "singzeta/universal_zeta.hpp"

namespace singzeta {

  bool is_prime(long n) noexcept {
    if (n < 2) {
      return false;
    }
    for (long k = 2; k * k <= n; ++k) {
      if (n % k == 0) {
        return false;
      }
    }
    return true;
  }

  namespace {
    int mobius(int n) {
      int mu = 1;
      for (int k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
          n /= k;
          if (n % k == 0) {
            return 0;
          }
          mu = -mu;
        }
      }
      return n > 1 ? -mu : mu;
    }

    void require_prime(int q) {
      if (!is_prime(q)) {
        throw InvalidInput("q must be prime, got " + std::to_string(q));
      }
    }

    PolyQ one_minus_t() {
      return PolyQ(std::vector<mpq_class>{1, -1});
    }
  }  // namespace

  std::vector<std::uint64_t> p1_closed_point_counts(int q, int e_max) {
    require_prime(q);
    if (e_max < 1 || e_max > 12) {
      throw InvalidInput("closed point counts need 1 <= e_max <= 12");
    }
    std::vector<std::uint64_t> a;
    a.push_back(static_cast<std::uint64_t>(q) + 1);
    for (int e = 2; e <= e_max; ++e) {
      mpz_class sum = 0;
      for (int f = 1; f <= e; ++f) {
        if (e % f == 0) {
          mpz_class power;
          mpz_ui_pow_ui(power.get_mpz_t(), q, e / f);
          sum += mobius(f) * power;
        }
      }
      a.push_back(mpz_class(sum / e).get_ui());
    }
    return a;
  }

  RatFunQ SmoothCurveZeta::zeta() const {
    if (numerator.coeff(0) != 1) {
      throw InvalidInput("the normalization numerator must satisfy P(0) = 1");
    }
    return RatFunQ(numerator,
                   one_minus_t() * PolyQ(std::vector<mpq_class>{1, -q}));
  }

  SmoothCurveZeta SmoothCurveZeta::projective_line(int q) {
    require_prime(q);
    return SmoothCurveZeta{q, PolyQ::constant(1)};
  }

  std::size_t SingularCurveModel::support_size() const {
    std::size_t n = 0;
    for (auto const& pt : singular_points) {
      n += pt.branches;
    }
    return n;
  }

  void SingularCurveModel::validate() const {
    require_prime(smooth.q);
    for (auto const& pt : singular_points) {
      if (pt.branches != pt.semigroup.dimension()) {
        throw InvalidInput("singular point declares " + std::to_string(pt.branches)
                           + " branches but its semigroup has dimension "
                           + std::to_string(pt.semigroup.dimension()));
      }
    }
    if (!support_degrees.empty()) {
      if (support_degrees.size() != support_size()) {
        throw InvalidInput("support_degrees must list one degree per branch");
      }
      for (int deg : support_degrees) {
        if (deg != 1) {
          throw UnsupportedModel("only totally rational singular points are "
                                 "supported");
        }
      }
    }
  }

  RatFunQ assemble_global(SingularCurveModel const& model) {
    model.validate();
    RatFunQ z = model.smooth.zeta();
    for (auto const& pt : model.singular_points) {
      z = z
          * RatFunQ(one_minus_t().pow(static_cast<unsigned>(pt.branches)))
          * counting_ca(pt.semigroup, model.smooth.q);
    }
    return z;
  }

  std::vector<mpz_class> divisor_series_oracle(SingularCurveModel const& model,
                                               std::size_t               N) {
    model.validate();
    if (!model.normalization_is_p1 || !model.modulus_flag) {
      throw UnsupportedModel("the divisor oracle needs a modulus curve on P^1");
    }
    if (N > 10) {
      throw InvalidInput("the divisor oracle expands to degree 10 at most");
    }
    int const q = model.smooth.q;
    std::vector<mpz_class> s(N + 1, 0);
    s[0] = 1;
    if (N > 0) {
      auto const a       = p1_closed_point_counts(q, static_cast<int>(N));
      auto const removed = model.support_size();
      if (removed > a[0]) {
        throw InvalidInput("the modulus uses more rational points than P^1 has");
      }
      for (std::size_t e = 1; e <= N; ++e) {
        std::uint64_t const count = e == 1 ? a[0] - removed : a[e - 1];
        for (std::uint64_t r = 0; r < count; ++r) {
          for (std::size_t k = e; k <= N; ++k) {
            s[k] += s[k - e];
          }
        }
      }
    }
    for (auto const& pt : model.singular_points) {
      auto const local = series_expand(counting_ca(pt.semigroup, q), N);
      std::vector<mpz_class> next(N + 1, 0);
      for (std::size_t i = 0; i <= N; ++i) {
        if (local[i].get_den() != 1) {
          throw std::logic_error("non-integral local ideal count "
                                 + to_string(local[i]));
        }
        for (std::size_t j = 0; i + j <= N; ++j) {
          next[i + j] += local[i].get_num() * s[j];
        }
      }
      s = std::move(next);
    }
    return s;
  }

  GlobalIdentity symbolic_global(SingularCurveModel const& model) {
    model.validate();
    if (!model.normalization_is_p1) {
      throw UnsupportedModel("the symbolic identity is only available for P^1");
    }
    ZetaRatFun w = ZetaRatFun::geometric(1, 0);
    for (auto const& pt : model.singular_points) {
      auto const d = static_cast<std::uint32_t>(pt.branches);
      w *= ZetaRatFun(MultiPoly::u_minus_t(1, 0).pow(d), d, 0, {0})
           * collapse_t(assemble_universal(pt.semigroup).value);
    }
    return GlobalIdentity{std::move(w)};
  }

  std::string GlobalIdentity::to_string() const {
    return "Z(U^-1*T, U) = (" + local_part.to_string({"U", "T"}) + ") / (1 - T)";
  }

  bool GlobalIdentity::holds_at_q(SingularCurveModel const& model) const {
    mpq_class const q   = model.smooth.q;
    RatFunQ const   lhs = specialize_u(local_part, q)
                        * RatFunQ(PolyQ::constant(1), one_minus_t());
    return lhs == assemble_global(model).scale_variable(1 / q);
  }

}  // namespace singzeta
