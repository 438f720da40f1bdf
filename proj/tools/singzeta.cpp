#include <iostream>  // for cout, cerr

#include <CLI11.hpp>

#include "singzeta/cli.hpp"

int main(int argc, char** argv) {
  using singzeta::Command;
  using singzeta::Specialization;

  CLI::App app{"Universal zeta functions of curve singularities"};
  app.require_subcommand(1);

  singzeta::JobSpec job;
  job.work_limit = singzeta::work_limit_from_env();
  std::uint64_t work_limit = 0;

  auto add = [&](char const* name, char const* help, Command cmd) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("-i,--input", job.input, "JSON file or inline JSON")
        ->required();
    sub->add_option("--work-limit",
                    work_limit,
                    "enumeration bound (default from SINGZETA_WORK_LIMIT)");
    sub->callback([&job, cmd] { job.command = cmd; });
    return sub;
  };

  add("semigroup", "validate and describe a semigroup", Command::semigroup);
  add("universal", "print the universal zeta function", Command::universal);

  auto* spec = add("specialize", "specialize the universal zeta function",
                   Command::specialize);
  bool monodromy = false, motivic = false;
  int  count_q   = 0;
  std::size_t expand = 0;
  auto* m_opt = spec->add_flag("--monodromy", monodromy, "U = 1");
  auto* c_opt = spec->add_option("--count", count_q, "U = q");
  auto* v_opt = spec->add_flag("--motivic", motivic, "U = L, generalized Poincare");
  m_opt->excludes(c_opt)->excludes(v_opt);
  c_opt->excludes(v_opt);
  auto* e_opt = spec->add_option("--expand", expand, "print N+1 coefficients")
                    ->check(CLI::Range(std::size_t(0), singzeta::kMaxExpand));

  auto* orc = add("oracle", "compare against the finite-field oracle",
                  Command::oracle);
  orc->add_option("--max-norm", job.max_norm, "largest |n| in the table")
      ->check(CLI::NonNegativeNumber);

  auto* glob = add("global", "assemble and check a global zeta function",
                   Command::global);
  auto* g_opt = glob->add_option("--expand", expand, "series order, at most 10")
                    ->check(CLI::Range(std::size_t(0), std::size_t(10)));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : singzeta::kExitInvalidInput;
  }

  if (work_limit > 0) {
    job.work_limit = work_limit;
  }
  if (monodromy) {
    job.kind = Specialization::monodromy;
  } else if (c_opt->count() > 0) {
    job.kind = Specialization::counting;
    job.q    = count_q;
  } else if (motivic) {
    job.kind = Specialization::motivic;
  }
  if (e_opt->count() > 0 || g_opt->count() > 0) {
    job.expand = expand;
  }
  return singzeta::run(job, std::cout, std::cerr);
}
