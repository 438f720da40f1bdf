#include "singzeta/json_io.hpp"

#include <fstream>  // for ifstream
#include <sstream>  // for stringstream

#include "singzeta/errors.hpp"

namespace singzeta {

  namespace {
    Json const& field(Json const& j, char const* name) {
      if (!j.is_object() || !j.contains(name)) {
        throw InvalidInput(std::string("missing field \"") + name + "\"");
      }
      return j.at(name);
    }

    template <typename T>
    T get(Json const& j, char const* name) {
      try {
        return field(j, name).get<T>();
      } catch (nlohmann::json::exception const& e) {
        throw InvalidInput(std::string("field \"") + name + "\": " + e.what());
      }
    }

    ValueVec value_vec(Json const& j, char const* what) {
      try {
        return ValueVec(j.get<std::vector<int>>());
      } catch (nlohmann::json::exception const&) {
        throw InvalidInput(std::string(what) + " must be an array of integers");
      }
    }

    std::string kind_of(Json const& j) {
      return get<std::string>(j, "kind");
    }
  }  // namespace

  Json load_json(std::string const& source) {
    std::string text;
    auto        first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{') {
      text = source;
    } else {
      std::ifstream in(source);
      if (!in) {
        throw InvalidInput("cannot read " + source);
      }
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
  }

  InputKind input_kind(Json const& j) {
    auto const k = kind_of(j);
    if (k == "numerical" || k == "modulus" || k == "semigroup") {
      return InputKind::semigroup;
    }
    if (k == "ring_model") {
      return InputKind::ring_model;
    }
    if (k == "curve") {
      return InputKind::curve;
    }
    throw InvalidInput("unknown input kind \"" + k + "\"");
  }

  GoodSemigroup semigroup_from_json(Json const& j) {
    auto const k = kind_of(j);
    if (k == "numerical") {
      return numerical_from_generators(get<std::vector<int>>(j, "generators"));
    }
    if (k == "modulus") {
      return from_modulus(get<std::vector<int>>(j, "multiplicities"));
    }
    if (k == "semigroup") {
      auto const d = get<std::size_t>(j, "d");
      auto const c = value_vec(field(j, "conductor"), "conductor");
      std::vector<ValueVec> small;
      auto const&           arr = field(j, "small");
      if (!arr.is_array()) {
        throw InvalidInput("\"small\" must be an array");
      }
      for (auto const& s : arr) {
        small.push_back(value_vec(s, "small element"));
      }
      return from_small_elements(d, c, std::move(small));
    }
    throw InvalidInput("\"" + k + "\" does not describe a semigroup");
  }

  RingModelInput ring_model_from_json(Json const& j) {
    if (kind_of(j) != "ring_model") {
      throw InvalidInput("expected a ring_model");
    }
    RingModelInput out;
    RingModel&     m = out.model;
    m.p              = get<int>(j, "p");
    m.d              = get<std::size_t>(j, "d");
    m.conductor      = value_vec(field(j, "conductor"), "conductor");
    m.truncation     = value_vec(field(j, "truncation"), "truncation");
    if (!is_oracle_prime(m.p)) {
      throw InvalidInput("ring models need p in {2, 3, 5, 7, 11, 13}");
    }
    auto const& gens = field(j, "generators");
    if (!gens.is_array()) {
      throw InvalidInput("\"generators\" must be an array");
    }
    for (auto const& g : gens) {
      std::vector<std::vector<long>> raw;
      try {
        raw = g.get<std::vector<std::vector<long>>>();
      } catch (nlohmann::json::exception const&) {
        throw InvalidInput("each generator is an array of coefficient arrays");
      }
      TruncSeriesVec z;
      for (auto const& branch : raw) {
        Row r;
        for (long x : branch) {
          r.push_back(static_cast<std::uint8_t>(FpElem(x, m.p).value()));
        }
        z.branches.push_back(std::move(r));
      }
      m.generators.push_back(std::move(z));
    }
    m.normalize();
    if (j.contains("semigroup")) {
      out.expected = semigroup_from_json(j.at("semigroup"));
      if (out.expected->conductor() != m.conductor) {
        throw InvalidInput("the model conductor " + to_string(m.conductor)
                           + " differs from the semigroup conductor "
                           + to_string(out.expected->conductor()));
      }
    }
    return out;
  }

  SingularCurveModel curve_from_json(Json const& j) {
    if (kind_of(j) != "curve") {
      throw InvalidInput("expected a curve");
    }
    SingularCurveModel m;
    int const          q    = get<int>(j, "q");
    auto const&        norm = field(j, "normalization");
    if (norm.is_string() && norm.get<std::string>() == "P1") {
      m.smooth = SmoothCurveZeta::projective_line(q);
    } else if (norm.is_object()) {
      auto coeffs = get<std::vector<long>>(norm, "numerator");
      std::vector<mpq_class> c(coeffs.begin(), coeffs.end());
      if (!is_prime(q)) {
        throw InvalidInput("q must be prime");
      }
      m.smooth              = SmoothCurveZeta{q, PolyQ(std::move(c))};
      m.normalization_is_p1 = false;
      if (m.smooth.numerator.coeff(0) != 1) {
        throw InvalidInput("the normalization numerator must have P(0) = 1");
      }
    } else {
      throw InvalidInput("normalization is \"P1\" or {\"numerator\": [...]}");
    }
    bool all_modulus = true;
    auto const& pts  = field(j, "singular_points");
    if (!pts.is_array()) {
      throw InvalidInput("\"singular_points\" must be an array");
    }
    for (auto const& pt : pts) {
      auto const& sj = field(pt, "semigroup");
      all_modulus    = all_modulus && kind_of(sj) == "modulus";
      auto s         = semigroup_from_json(sj);
      std::size_t b  = pt.contains("branches") ? get<std::size_t>(pt, "branches")
                                               : s.dimension();
      m.singular_points.push_back(SingularPoint{std::move(s), b});
    }
    if (j.contains("support_degrees")) {
      m.support_degrees = get<std::vector<int>>(j, "support_degrees");
    }
    m.modulus_flag = j.contains("modulus") ? get<bool>(j, "modulus")
                                           : m.normalization_is_p1 && all_modulus;
    m.validate();
    return m;
  }

}  // namespace singzeta
