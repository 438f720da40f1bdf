#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "fixtures.hpp"
#include "singzeta/cli.hpp"

using namespace singzeta;
using namespace singzeta::testing;

namespace {
  struct Result {
    int         rc;
    std::string out;
    std::string err;
  };

  Result run_job(JobSpec const& job) {
    std::ostringstream out, err;
    int                rc = run(job, out, err);
    return {rc, out.str(), err.str()};
  }

  JobSpec job(Command cmd, std::string const& input) {
    JobSpec j;
    j.command = cmd;
    j.input   = input;
    return j;
  }

  std::string first_line(std::string const& s) {
    return s.substr(0, s.find('\n'));
  }
}  // namespace

TEST_CASE("semigroup command") {
  auto r = run_job(job(Command::semigroup, fixture_path("cusp")));
  CHECK(r.rc == kExitOk);
  CHECK(r.out
        == "d: 1\nconductor: (2)\ndelta: 1\nsmall: {(0), (2)}\n"
           "symmetric: yes\nvalid: yes\n");

  r = run_job(job(Command::semigroup, fixture_path("triple_model_p3")));
  CHECK(r.rc == kExitOk);
  CHECK(r.out.find("delta: 3") != std::string::npos);

  r = run_job(job(Command::semigroup,
                  R"({"kind":"semigroup","d":1,"conductor":[2],"small":[[2]]})"));
  CHECK(r.rc == kExitInvalidInput);
  CHECK(r.err.find("0 is not a small element") != std::string::npos);

  r = run_job(job(Command::semigroup, fixture_path("triple_model_p2")));
  CHECK(r.rc == kExitInvalidInput);
  CHECK(r.err.find("not closed under min") != std::string::npos);
}

TEST_CASE("universal command") {
  auto r = run_job(job(Command::universal, fixture_path("cusp")));
  CHECK(r.rc == kExitOk);
  CHECK(r.out == "(-T1 + U + T1^2) / (U-T1)\n");
  r = run_job(job(Command::universal, R"({"kind":"numerical","generators":[1]})"));
  CHECK(r.out == "U / (U-T1)\n");
  r = run_job(job(Command::universal, fixture_path("nodal_curve_q2")));
  CHECK(r.rc == kExitInvalidInput);
  r = run_job(job(Command::universal, "/nonexistent.json"));
  CHECK(r.rc == kExitInvalidInput);
  r = run_job(job(Command::universal, "{not json"));
  CHECK(r.rc == kExitInvalidInput);
}

TEST_CASE("specialize command") {
  auto j = job(Command::specialize, fixture_path("triple"));
  j.kind = Specialization::monodromy;
  auto r = run_job(j);
  CHECK(r.rc == kExitOk);
  CHECK(first_line(r.out) == "1 - T^3");

  j        = job(Command::specialize, fixture_path("cusp"));
  j.kind   = Specialization::counting;
  j.q      = 3;
  j.expand = 4;
  r        = run_job(j);
  CHECK(r.rc == kExitOk);
  CHECK(r.out.find("Z_Ca(T) = (1 - T + 3*T^2) / (1 - T)") != std::string::npos);
  CHECK(r.out.find("ideal counts: 1, 0, 3, 3, 3") != std::string::npos);

  j.q = 4;
  CHECK(run_job(j).rc == kExitInvalidInput);
  j.q      = 3;
  j.expand = 65;
  CHECK(run_job(j).rc == kExitInvalidInput);

  j        = job(Command::specialize, fixture_path("node"));
  j.kind   = Specialization::motivic;
  j.expand = 2;
  r        = run_job(j);
  CHECK(r.rc == kExitOk);
  CHECK(r.out.find("(1,1): -U^-4 + U^-3") != std::string::npos);

  CHECK(run_job(job(Command::specialize, fixture_path("node"))).rc
        == kExitInvalidInput);
}

TEST_CASE("oracle command") {
  auto j     = job(Command::oracle, fixture_path("cusp_model_p3"));
  j.max_norm = 6;
  auto r     = run_job(j);
  CHECK(r.rc == kExitOk);
  CHECK(r.out.find("(2)             3         3") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("summary: PASS") != std::string::npos);

  r = run_job(job(Command::oracle, fixture_path("triple_model_p2")));
  CHECK(r.rc == kExitOk);
  CHECK(r.out.find("SKIP") != std::string::npos);
  CHECK(r.out.find("(1,1,1)") != std::string::npos);

  j            = job(Command::oracle, fixture_path("triple_model_p3"));
  j.work_limit = 100;
  CHECK(run_job(j).rc == kExitWorkLimit);

  // a fixture semigroup that the model does not have
  auto const wrong = R"({"kind":"ring_model","p":3,"d":1,"truncation":[8],)"
                     R"("conductor":[2],"generators":[[[0,0,1]],[[0,0,0,1]]],)"
                     R"("semigroup":{"kind":"numerical","generators":[2,5]}})";
  CHECK(run_job(job(Command::oracle, wrong)).rc == kExitInvalidInput);

  // a model whose declared conductor is too small to hold
  auto const lying = R"({"kind":"ring_model","p":3,"d":1,"truncation":[8],)"
                     R"("conductor":[2],"generators":[[[0,0,1]]]})";
  CHECK(run_job(job(Command::oracle, lying)).rc == kExitInvalidInput);
}

TEST_CASE("global command") {
  auto r = run_job(job(Command::global, fixture_path("nodal_curve_q2")));
  CHECK(r.rc == kExitOk);
  CHECK(first_line(r.out) == "Z_glob(T) = (1 - 2*T + 2*T^2) / (1 - 3*T + 2*T^2)");
  CHECK(r.out.find("summary: PASS") != std::string::npos);

  auto j   = job(Command::global, fixture_path("nodal_curve_q2"));
  j.expand = 11;
  CHECK(run_job(j).rc == kExitInvalidInput);

  r = run_job(job(Command::global,
                  R"({"kind":"curve","q":3,"normalization":{"numerator":[1,-1,3]},)"
                  R"("singular_points":[]})"));
  CHECK(r.rc == kExitOk);
  CHECK(r.out.find("oracle: unsupported") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  auto j     = job(Command::oracle, fixture_path("tacnode_model_p3"));
  auto a     = run_job(j);
  auto b     = run_job(j);
  CHECK(a.out == b.out);
  auto u1 = run_job(job(Command::universal, fixture_path("triple")));
  auto u2 = run_job(job(Command::universal, fixture_path("triple")));
  CHECK(u1.out == u2.out);
}

TEST_CASE("work limit from the environment") {
  ::setenv("SINGZETA_WORK_LIMIT", "1234", 1);
  CHECK(work_limit_from_env() == 1234);
  ::setenv("SINGZETA_WORK_LIMIT", "abc", 1);
  CHECK(work_limit_from_env(7) == 7);
  ::unsetenv("SINGZETA_WORK_LIMIT");
  CHECK(work_limit_from_env() == kDefaultWorkLimit);
}
