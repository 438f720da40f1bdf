#ifndef SINGZETA_ERRORS_HPP_
#define SINGZETA_ERRORS_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

namespace singzeta {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised by exact division when a claimed factor does not divide.
  class NotDivisible : public Error {
   public:
    using Error::Error;
  };

  class PoleAtOne : public Error {
   public:
    using Error::Error;
  };

  class DivisionByZero : public Error {
   public:
    using Error::Error;
  };

  class NotExpandable : public Error {
   public:
    using Error::Error;
  };

  class NotCoprime : public Error {
   public:
    using Error::Error;
  };

  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  class NotUnibranch : public Error {
   public:
    using Error::Error;
  };

  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  // Carries one human-readable witness per failed invariant.
  class InvalidSemigroup : public Error {
   public:
    explicit InvalidSemigroup(std::vector<std::string> violations)
        : Error(join(violations)), _violations(std::move(violations)) {}

    std::vector<std::string> const& violations() const noexcept {
      return _violations;
    }

   private:
    static std::string join(std::vector<std::string> const& v) {
      std::string out = "invalid semigroup";
      for (auto const& s : v) {
        out += "; " + s;
      }
      return out;
    }

    std::vector<std::string> _violations;
  };

  class WorkLimitExceeded : public Error {
   public:
    using Error::Error;
  };

  class TruncationTooSmall : public Error {
   public:
    using Error::Error;
  };

  class UnsupportedModel : public Error {
   public:
    using Error::Error;
  };

}  // namespace singzeta

#endif  // SINGZETA_ERRORS_HPP_
