#include "singzeta/cli.hpp"

#include <cstdlib>    // for getenv, strtoull
#include <iomanip>    // for setw
#include <ostream>    // for ostream
#include <sstream>    // for ostringstream
#include <stdexcept>  // for logic_error

#include "singzeta/errors.hpp"
#include "singzeta/global_zeta.hpp"
#include "singzeta/json_io.hpp"
#include "singzeta/universal_zeta.hpp"

namespace singzeta {

  std::uint64_t work_limit_from_env(std::uint64_t fallback) {
    char const* v = std::getenv("SINGZETA_WORK_LIMIT");
    if (v == nullptr || *v == '\0') {
      return fallback;
    }
    char*              end = nullptr;
    unsigned long long n   = std::strtoull(v, &end, 10);
    if (*end != '\0' || n == 0) {
      return fallback;
    }
    return n;
  }

  namespace {
    char const* verdict(bool ok) {
      return ok ? "PASS" : "FAIL";
    }

    std::string join(std::vector<mpq_class> const& xs) {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ", ") + to_string(xs[i]);
      }
      return out;
    }

    std::string join(std::vector<ValueVec> const& xs) {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ", ") + to_string(xs[i]);
      }
      return out;
    }

    std::size_t expand_order(JobSpec const& job) {
      std::size_t n = job.expand.value_or(0);
      if (n > kMaxExpand) {
        throw InvalidInput("--expand is limited to "
                           + std::to_string(kMaxExpand));
      }
      return n;
    }

    GoodSemigroup semigroup_input(Json const& j, std::uint64_t limit) {
      switch (input_kind(j)) {
        case InputKind::semigroup:
          return semigroup_from_json(j);
        case InputKind::ring_model: {
          auto in = ring_model_from_json(j);
          return in.expected ? *in.expected
                             : semigroup_from_model(in.model, limit);
        }
        default:
          throw InvalidInput("this command needs a semigroup or ring model");
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    int cmd_semigroup(JobSpec const& job, std::ostream& out) {
      auto const j = load_json(job.input);
      GoodSemigroup s
          = input_kind(j) == InputKind::ring_model
                ? semigroup_from_model(ring_model_from_json(j).model, job.work_limit)
                : semigroup_input(j, job.work_limit);
      out << "d: " << s.dimension() << '\n'
          << "conductor: " << s.conductor() << '\n'
          << "delta: " << s.delta() << '\n'
          << "small: " << small_to_string(s) << '\n';
      if (s.dimension() == 1) {
        out << "symmetric: " << (is_symmetric(s) ? "yes" : "no") << '\n';
      }
      out << "valid: yes\n";
      return kExitOk;
    }

    int cmd_universal(JobSpec const& job, std::ostream& out) {
      auto const s = semigroup_input(load_json(job.input), job.work_limit);
      out << assemble_universal(s).value.to_string() << '\n';
      return kExitOk;
    }

    int cmd_specialize(JobSpec const& job, std::ostream& out) {
      if (!job.kind) {
        throw InvalidInput("specialize needs --monodromy, --count q or --motivic");
      }
      std::size_t const N = expand_order(job);
      auto const        s = semigroup_input(load_json(job.input), job.work_limit);
      auto const        z = assemble_universal(s);
      switch (*job.kind) {
        case Specialization::monodromy: {
          auto const m = specialize_monodromy(z);
          out << m.to_string() << '\n';
          if (job.expand) {
            out << "series: " << join(series_expand(m, N)) << '\n';
          }
          break;
        }
        case Specialization::counting: {
          if (!job.q || !is_prime(*job.q) || *job.q > 13) {
            throw InvalidInput("--count needs a prime q <= 13");
          }
          auto const ca = counting_ca(s, *job.q);
          out << specialize_counting(z, *job.q).to_string() << '\n'
              << "Z_Ca(T) = " << ca.to_string() << '\n';
          if (job.expand) {
            out << "ideal counts: " << join(series_expand(ca, N)) << '\n';
          }
          break;
        }
        case Specialization::motivic: {
          out << generalized_poincare(s).to_string() << '\n';
          if (job.expand) {
            for (int m = 0; m <= static_cast<int>(N); ++m) {
              for (auto const& n : compositions(s.dimension(), m)) {
                if (!s.contains(n)) {
                  continue;
                }
                auto p = ideal_class_poly(s, n);
                p.u_offset -= s.delta() + 1 + n.norm();
                out << n << ": " << p.to_string() << '\n';
              }
            }
          }
          break;
        }
      }
      return kExitOk;
    }

    int cmd_oracle(JobSpec const& job, std::ostream& out) {
      auto const in = ring_model_from_json(load_json(job.input));
      RingModel const& m = in.model;
      if (job.max_norm < 0) {
        throw InvalidInput("--max-norm must be non-negative");
      }
      RingOracle const oracle(m, job.work_limit);
      out << "model: p=" << m.p << " d=" << m.d << " conductor=" << m.conductor
          << " truncation=" << m.truncation << '\n'
          << "algebra dimension: " << oracle.basis().dimension() << '\n';

      auto const values = oracle.extract_values();
      std::optional<GoodSemigroup> s;
      if (in.expected) {
        auto missing = values.missing_from(*in.expected);
        auto extra   = values.extra_over(*in.expected);
        if (values.matches(*in.expected)) {
          out << "semigroup: PASS (matches the fixture)\n";
          s = in.expected;
        } else if (extra.empty()) {
          missing.insert(missing.end(),
                         values.missing_above_conductor.begin(),
                         values.missing_above_conductor.end());
          out << "semigroup: SKIP (F_" << m.p
              << " is too small; not attained: " << join(missing) << ")\n"
              << "summary: SKIP\n";
          return kExitOk;
        } else {
          out << "semigroup: FAIL (unexpected values " << join(extra) << ")\n"
              << "summary: FAIL\n";
          return kExitCheckFailed;
        }
      } else {
        s = oracle.semigroup();
        out << "semigroup: extracted " << small_to_string(*s) << '\n';
      }

      bool all = true;
      int const p = m.p;
      std::vector<mpq_class> totals(static_cast<std::size_t>(job.max_norm) + 1, 0);
      out << std::left << std::setw(16) << "n" << std::setw(10) << "count"
          << std::setw(10) << ("I_n(" + std::to_string(p) + ")") << std::setw(12)
          << "h" << "result\n";
      for (int k = 0; k <= job.max_norm; ++k) {
        for (auto const& n : compositions(m.d, k)) {
          if (!s->contains(n)) {
            continue;
          }
          auto const count    = oracle.count_principal_ideals(n);
          auto const expected = ideal_class_poly(*s, n).evaluate(p);
          bool ok             = expected == count;
          std::string h       = std::to_string(s->h_dim(n));
          if (le(n + m.conductor, m.truncation)) {
            int const ho = oracle.h_dim(n);
            ok           = ok && ho == s->h_dim(n);
            h += "/" + std::to_string(ho);
          }
          totals[k] += count;
          all = all && ok;
          out << std::setw(16) << to_string(n) << std::setw(10) << count
              << std::setw(10) << to_string(expected) << std::setw(12) << h
              << verdict(ok) << '\n';
        }
      }
      auto const series = series_expand(counting_ca(*s, p), totals.size() - 1);
      out << std::setw(16) << "degree" << std::setw(10) << "total"
          << std::setw(22) << "Z_Ca" << "result\n";
      for (std::size_t k = 0; k < totals.size(); ++k) {
        bool const ok = totals[k] == series[k];
        all           = all && ok;
        out << std::setw(16) << k << std::setw(10) << to_string(totals[k])
            << std::setw(22) << to_string(series[k]) << verdict(ok) << '\n';
      }
      int const hc = oracle.h_dim(m.conductor);
      bool const delta_ok = m.conductor.norm() - hc == s->delta();
      all = all && delta_ok;
      out << std::right << "delta: semigroup=" << s->delta()
          << " oracle=" << m.conductor.norm() - hc << ' ' << verdict(delta_ok)
          << '\n'
          << "summary: " << verdict(all) << '\n';
      return all ? kExitOk : kExitCheckFailed;
    }

    int cmd_global(JobSpec const& job, std::ostream& out) {
      auto const model = curve_from_json(load_json(job.input));
      std::size_t const N = job.expand.value_or(10);
      if (N > 10) {
        throw InvalidInput("global expands to degree 10 at most");
      }
      bool all = true;
      auto const z = assemble_global(model);
      out << "Z_glob(T) = " << z.to_string() << '\n';
      if (model.multi_point_extension()) {
        out << "note: several singular points; the factorization is the Euler "
               "product extension\n";
      }
      if (model.normalization_is_p1) {
        auto const id = symbolic_global(model);
        bool const ok = id.holds_at_q(model);
        all           = all && ok;
        out << "identity: " << id.to_string() << '\n'
            << "identity at U=" << model.smooth.q << ": " << verdict(ok) << '\n';
      }
      auto const series = series_expand(z, N);
      if (!model.modulus_flag || !model.normalization_is_p1) {
        out << "assembled: " << join(series) << '\n'
            << "oracle: unsupported for this curve\n"
            << "summary: " << verdict(all) << '\n';
        return all ? kExitOk : kExitCheckFailed;
      }
      auto const oracle = divisor_series_oracle(model, N);
      out << std::left << std::setw(8) << "degree" << std::setw(14)
          << "assembled" << std::setw(14) << "oracle" << "result\n";
      for (std::size_t k = 0; k <= N; ++k) {
        bool const ok = series[k] == mpq_class(oracle[k]);
        all           = all && ok;
        out << std::setw(8) << k << std::setw(14) << to_string(series[k])
            << std::setw(14) << oracle[k].get_str() << verdict(ok) << '\n';
      }
      out << std::right << "summary: " << verdict(all) << '\n';
      return all ? kExitOk : kExitCheckFailed;
    }
  }  // namespace

  int run(JobSpec const& job, std::ostream& out, std::ostream& err) {
    try {
      switch (job.command) {
        case Command::semigroup:
          return cmd_semigroup(job, out);
        case Command::universal:
          return cmd_universal(job, out);
        case Command::specialize:
          return cmd_specialize(job, out);
        case Command::oracle:
          return cmd_oracle(job, out);
        case Command::global:
          return cmd_global(job, out);
      }
    } catch (WorkLimitExceeded const& e) {
      err << "work limit exceeded: " << e.what() << '\n';
      return kExitWorkLimit;
    } catch (InvalidSemigroup const& e) {
      err << "invalid semigroup:\n";
      for (auto const& v : e.violations()) {
        err << "  " << v << '\n';
      }
      return kExitInvalidInput;
    } catch (NotDivisible const& e) {
      err << "verification failed: " << e.what() << '\n';
      return kExitCheckFailed;
    } catch (Error const& e) {
      err << "invalid input: " << e.what() << '\n';
      return kExitInvalidInput;
    } catch (std::logic_error const& e) {
      err << "verification failed: " << e.what() << '\n';
      return kExitCheckFailed;
    }
    return kExitInvalidInput;
  }

}  // namespace singzeta
