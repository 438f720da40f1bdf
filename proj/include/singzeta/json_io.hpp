#ifndef SINGZETA_JSON_IO_HPP_
#define SINGZETA_JSON_IO_HPP_

#include <optional>  // for optional
#include <string>    // for string

#include <json.hpp>

#include "singzeta/ffield_oracle.hpp"
#include "singzeta/global_zeta.hpp"
#include "singzeta/semigroup.hpp"

namespace singzeta {

  using Json = nlohmann::json;

  enum class InputKind { semigroup, ring_model, curve };

  // `source` is a file path, or inline JSON when it starts with '{'.
  // Throws InvalidInput on unreadable or malformed input.
  Json load_json(std::string const& source);

  // "numerical" and "modulus" map to semigroups; so does "semigroup".
  InputKind input_kind(Json const& j);

  // {"kind":"numerical","generators":[...]},
  // {"kind":"modulus","multiplicities":[...]},
  // {"kind":"semigroup","d":..,"conductor":[..],"small":[[..],..]}.
  GoodSemigroup semigroup_from_json(Json const& j);

  struct RingModelInput {
    RingModel                    model;
    std::optional<GoodSemigroup> expected;  // the optional "semigroup" field
  };
  RingModelInput ring_model_from_json(Json const& j);

  // "normalization" is "P1" or {"numerator":[1, ...]}; "modulus" overrides
  // the default modulus flag (P1 with only modulus-kind singular points).
  SingularCurveModel curve_from_json(Json const& j);

}  // namespace singzeta

#endif  // SINGZETA_JSON_IO_HPP_
