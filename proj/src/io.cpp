#include "spherical/io.hpp"

#include <fstream>
#include <limits>

namespace spherical {

template <class T>
Json scalar_to_json(const T& v) {
  if constexpr (is_exact_v<T>) {
    if (v.get_den() == 1 && v.get_num().fits_slong_p()) return Json(v.get_num().get_si());
    return Json(to_string(v));
  } else {
    if (!std::isfinite(v)) throw std::invalid_argument("cannot serialise a non-finite value");
    return Json(v);
  }
}

template <class T>
T scalar_from_json(const Json& j) {
  try {
    if (j.is_string()) {
      const Rational q = parse_rational(j.get<std::string>());
      if constexpr (is_exact_v<T>) return q;
      else return q.get_d();
    }
    if (j.is_number_integer() || j.is_number_unsigned()) {
      if constexpr (is_exact_v<T>) return Rational(mpz_class(j.dump(), 10));
      else return j.get<double>();
    }
    if (j.is_number_float()) {
      if constexpr (is_exact_v<T>) return rational_from_double(j.get<double>());
      else return j.get<double>();
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad number: ") + e.what());
  }
  throw ParseError("expected a number or \"p/q\" string, got " + j.dump());
}

template <class T>
Json vec_to_json(const Vec<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

template <class T>
Vec<T> vec_from_json(const Json& j, std::size_t expected_dimension) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of numbers, got " + j.dump());
  if (expected_dimension != 0 && j.size() != expected_dimension)
    throw ParseError("expected " + std::to_string(expected_dimension) + " coordinates, got " + std::to_string(j.size()));
  std::vector<T> coords;
  for (const auto& x : j) coords.push_back(scalar_from_json<T>(x));
  return Vec<T>(std::move(coords));
}

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

template <class T>
Json params_to_json(const SphericalParams<T>& p) {
  return Json{{"c", scalar_to_json(p.c)}, {"d", vec_to_json(p.d)}};
}

template <class T>
SphericalParams<T> params_from_json(const Json& j) {
  return {scalar_from_json<T>(member(j, "c")), vec_from_json<T>(member(j, "d"))};
}

template <class T>
Json class_to_json(const PreferenceClass<T>& c) {
  Json out{{"class", to_string(c.tag)}};
  if (c.tag == PreferenceTag::Linear) out["u"] = vec_to_json(c.point);
  else if (c.tag != PreferenceTag::Indifference) out["center"] = vec_to_json(c.point);
  return out;
}

template <class T>
Json report_to_json(const AxiomReport<T>& r) {
  Json out{{"axiom", r.axiom}, {"trials", r.trials}, {"violations", r.violations}};
  if (r.counterexample) {
    Json ce = Json::object();
    for (const auto& [key, v] : r.counterexample->vectors) ce[key] = vec_to_json(v);
    for (const auto& [key, v] : r.counterexample->scalars) ce[key] = scalar_to_json(v);
    out["counterexample"] = std::move(ce);
  } else {
    out["counterexample"] = nullptr;
  }
  if (r.max_spread) out["max_spread"] = *r.max_spread;
  return out;
}

template <class T>
Json dataset_to_json(const ObservationSet<T>& data) {
  auto list = [](const std::vector<Comparison<T>>& pairs) {
    Json out = Json::array();
    for (const auto& cmp : pairs) out.push_back(Json{{"better", vec_to_json(cmp.better)}, {"worse", vec_to_json(cmp.worse)}});
    return out;
  };
  return Json{{"dimension", data.dimension}, {"weak", list(data.weak)}, {"strict", list(data.strict)}};
}

template <class T>
ObservationSet<T> dataset_from_json(const Json& j) {
  const Json& dim = member(j, "dimension");
  if (!dim.is_number_unsigned() && !(dim.is_number_integer() && dim.get<long long>() > 0))
    throw ParseError("\"dimension\" must be a positive integer");
  ObservationSet<T> data;
  data.dimension = dim.get<std::size_t>();
  if (data.dimension == 0) throw ParseError("\"dimension\" must be a positive integer");
  auto read = [&](const char* key, std::vector<Comparison<T>>& out) {
    if (!j.contains(key)) return;
    const Json& list = j.at(key);
    if (!list.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    for (const auto& item : list)
      out.push_back({vec_from_json<T>(member(item, "better"), data.dimension),
                     vec_from_json<T>(member(item, "worse"), data.dimension)});
  };
  read("weak", data.weak);
  read("strict", data.strict);
  return data;
}

template <class T>
Json verdict_to_json(const RationalizabilityVerdict<T>& v) {
  Json out{{"rationalizable", v.rationalizable},
           {"restriction", to_string(v.restriction)},
           {"epsilon", scalar_to_json(v.epsilon)}};
  if (v.sign_margin) out["sign_margin"] = scalar_to_json(*v.sign_margin);
  if (v.witness) {
    out["witness"] = params_to_json(*v.witness);
    out["witness_class"] = class_to_json(classify(*v.witness));
  } else {
    out["witness"] = nullptr;
  }
  if (v.certificate) {
    Json weights = Json::object();
    for (std::size_t i = 0; i < v.certificate->weak_weights.size(); ++i)
      weights["weak:" + std::to_string(i)] = scalar_to_json(v.certificate->weak_weights[i]);
    for (std::size_t i = 0; i < v.certificate->strict_weights.size(); ++i)
      weights["strict:" + std::to_string(i)] = scalar_to_json(v.certificate->strict_weights[i]);
    if (v.restriction == Restriction::Euclidean || v.restriction == Restriction::AntiEuclidean)
      weights["sign"] = scalar_to_json(v.certificate->sign_weight);
    out["certificate"] = std::move(weights);
    out["certificate_pmass"] = scalar_to_json(v.certificate->pmass);
  } else {
    out["certificate"] = nullptr;
  }
  if (v.note) out["note"] = *v.note;
  return out;
}

template <class T>
Json decomposition_to_json(const QuadLinDecomposition<T>& d) {
  Json s = Json::array();
  for (const auto& row : d.s) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(scalar_to_json(v));
    s.push_back(std::move(r));
  }
  return Json{{"S", std::move(s)}, {"g", vec_to_json(d.g)}, {"residual", scalar_to_json(d.residual)}};
}

template <class T>
UtilityOracle<T> OracleSpec<T>::make() const {
  if (const auto* c = std::get_if<Coefficients>(&form)) return coefficient_oracle(c->a, c->b);
  const auto& named = std::get<Named>(form);
  return named_oracle<T>(named.name, named.dimension);
}

template <class T>
OracleSpec<T> oracle_spec_from_json(const Json& j) {
  if (j.is_string()) return {typename OracleSpec<T>::Named{j.get<std::string>(), 3}};
  if (j.is_object() && j.contains("oracle")) {
    typename OracleSpec<T>::Named named{member(j, "oracle").get<std::string>(), 3};
    if (j.contains("dimension")) named.dimension = j.at("dimension").get<std::size_t>();
    return {named};
  }
  typename OracleSpec<T>::Coefficients coef{{}, vec_from_json<T>(member(j, "b"))};
  const Json& a = member(j, "A");
  if (!a.is_array() || a.size() != coef.b.size()) throw ParseError("\"A\" must be a square matrix matching \"b\"");
  for (const auto& row : a) coef.a.push_back(vec_from_json<T>(row, coef.b.size()).coords());
  return {coef};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

#define SPHERICAL_INSTANTIATE(T)                                                   \
  template Json scalar_to_json(const T&);                                          \
  template T scalar_from_json(const Json&);                                        \
  template Json vec_to_json(const Vec<T>&);                                        \
  template Vec<T> vec_from_json(const Json&, std::size_t);                         \
  template Json params_to_json(const SphericalParams<T>&);                         \
  template SphericalParams<T> params_from_json(const Json&);                       \
  template Json class_to_json(const PreferenceClass<T>&);                          \
  template Json report_to_json(const AxiomReport<T>&);                             \
  template Json dataset_to_json(const ObservationSet<T>&);                         \
  template ObservationSet<T> dataset_from_json(const Json&);                       \
  template Json verdict_to_json(const RationalizabilityVerdict<T>&);               \
  template Json decomposition_to_json(const QuadLinDecomposition<T>&);             \
  template struct OracleSpec<T>;                                                   \
  template OracleSpec<T> oracle_spec_from_json(const Json&);

SPHERICAL_INSTANTIATE(double)
SPHERICAL_INSTANTIATE(Rational)
#undef SPHERICAL_INSTANTIATE

}  // namespace spherical
