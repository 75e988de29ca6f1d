#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

#include "spherical/axioms.hpp"
#include "spherical/cardinal.hpp"
#include "spherical/rationalize.hpp"

namespace spherical {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rationals: integers that fit in 64 bits as JSON numbers, everything else as "p/q".
/// Doubles: JSON numbers (shortest round-trip form).
template <class T>
Json scalar_to_json(const T& v);

/// Accepts JSON numbers and "p/q" / decimal strings. JSON floats become their exact
/// binary value in rational mode.
template <class T>
T scalar_from_json(const Json& j);

template <class T>
Json vec_to_json(const Vec<T>& v);

/// expected_dimension = 0 accepts any nonempty length.
template <class T>
Vec<T> vec_from_json(const Json& j, std::size_t expected_dimension = 0);

template <class T>
Json params_to_json(const SphericalParams<T>& p);
template <class T>
SphericalParams<T> params_from_json(const Json& j);

template <class T>
Json class_to_json(const PreferenceClass<T>& c);

template <class T>
Json report_to_json(const AxiomReport<T>& r);

template <class T>
Json dataset_to_json(const ObservationSet<T>& data);
template <class T>
ObservationSet<T> dataset_from_json(const Json& j);

template <class T>
Json verdict_to_json(const RationalizabilityVerdict<T>& v);

template <class T>
Json decomposition_to_json(const QuadLinDecomposition<T>& d);

/// Either coefficient form {"A": [[...]], "b": [...]} or a built-in
/// {"oracle": "cubic1", "dimension": n}.
template <class T>
struct OracleSpec {
  struct Coefficients {
    Matrix<T> a;
    Vec<T> b;
  };
  struct Named {
    std::string name;
    std::size_t dimension = 3;
  };
  std::variant<Coefficients, Named> form;

  UtilityOracle<T> make() const;
};

template <class T>
OracleSpec<T> oracle_spec_from_json(const Json& j);

/// Reads and parses a JSON file; throws ParseError with the path on failure.
Json read_json_file(const std::string& path);

}  // namespace spherical
