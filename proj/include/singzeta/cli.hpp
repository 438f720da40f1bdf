#ifndef SINGZETA_CLI_HPP_
#define SINGZETA_CLI_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <iosfwd>    // for ostream
#include <optional>  // for optional
#include <string>    // for string

#include "singzeta/ffield_oracle.hpp"

namespace singzeta {

  enum class Command { semigroup, universal, specialize, oracle, global };
  enum class Specialization { monodromy, counting, motivic };

  inline constexpr int kExitOk            = 0;
  inline constexpr int kExitCheckFailed   = 1;
  inline constexpr int kExitInvalidInput  = 2;
  inline constexpr int kExitWorkLimit     = 3;
  inline constexpr std::size_t kMaxExpand = 64;

  struct JobSpec {
    Command                       command = Command::semigroup;
    std::string                   input;  // path or inline JSON
    std::optional<Specialization> kind;   // specialize only
    std::optional<int>            q;      // --count q
    std::optional<std::size_t>    expand;
    int                           max_norm   = 6;
    std::uint64_t                 work_limit = kDefaultWorkLimit;
  };

  // SINGZETA_WORK_LIMIT if set to a positive integer, else `fallback`.
  std::uint64_t work_limit_from_env(std::uint64_t fallback = kDefaultWorkLimit);

  // Runs one job; returns the process exit status.
  int run(JobSpec const& job, std::ostream& out, std::ostream& err);

}  // namespace singzeta

#endif  // SINGZETA_CLI_HPP_
