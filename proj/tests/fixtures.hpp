#ifndef SINGZETA_TESTS_FIXTURES_HPP_
#define SINGZETA_TESTS_FIXTURES_HPP_

#include <algorithm>  // for shuffle
#include <random>     // for mt19937
#include <string>     // for string
#include <vector>     // for vector

#include "singzeta/json_io.hpp"

namespace singzeta::testing {

  inline std::string fixture_path(std::string const& name) {
    return std::string(SINGZETA_FIXTURE_DIR) + "/" + name + ".json";
  }

  inline GoodSemigroup fixture_semigroup(std::string const& name) {
    return semigroup_from_json(load_json(fixture_path(name)));
  }

  inline RingModelInput fixture_model(std::string const& name) {
    return ring_model_from_json(load_json(fixture_path(name)));
  }

  inline SingularCurveModel fixture_curve(std::string const& name) {
    return curve_from_json(load_json(fixture_path(name)));
  }

  inline std::vector<std::string> const& singular_fixtures() {
    static std::vector<std::string> const names{
        "cusp", "cusp25", "node", "tacnode", "triple"};
    return names;
  }

  // Model fixtures whose semigroup over F_p is the fixture semigroup.
  struct ModelCase {
    std::string semigroup;
    std::string model;
    int         p;
  };
  inline std::vector<ModelCase> const& matching_models() {
    static std::vector<ModelCase> const cases{
        {"cusp", "cusp_model_p2", 2},
        {"cusp", "cusp_model_p3", 3},
        {"cusp25", "cusp25_model_p3", 3},
        {"node", "node_model_p2", 2},
        {"node", "node_model_p3", 3},
        {"tacnode", "tacnode_model_p2", 2},
        {"tacnode", "tacnode_model_p3", 3},
        {"triple", "triple_model_p3", 3}};
    return cases;
  }

  // h(target) summed over a random monotone lattice path from 0.
  inline int h_along_random_path(GoodSemigroup const& s,
                                 ValueVec const&      target,
                                 std::mt19937&        rng,
                                 bool*                steps_binary = nullptr) {
    std::vector<std::size_t> steps;
    for (std::size_t i = 0; i < target.size(); ++i) {
      steps.insert(steps.end(), static_cast<std::size_t>(target[i]), i);
    }
    std::shuffle(steps.begin(), steps.end(), rng);
    ValueVec m = ValueVec::zero(target.size());
    int      h = 0;
    for (auto i : steps) {
      auto const next = m + ValueVec::unit(target.size(), i);
      int const  step = s.h_dim(next) - s.h_dim(m);
      if (steps_binary != nullptr && step != 0 && step != 1) {
        *steps_binary = false;
      }
      h += s.fiber_step(m, i) ? 1 : 0;
      m = next;
    }
    return h;
  }

}  // namespace singzeta::testing

#endif  // SINGZETA_TESTS_FIXTURES_HPP_
