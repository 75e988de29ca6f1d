#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spherical/execution.hpp"
#include "spherical/preference.hpp"

namespace spherical {

/// A black-box weak order on R^n. The tolerance argument is the relative tie band a
/// float oracle should apply; exact oracles ignore it. Must be deterministic, and safe
/// for concurrent calls when used with Execution::Parallel.
template <class T>
struct ComparisonOracle {
  std::size_t dimension = 0;
  std::function<Ordering(const Vec<T>&, const Vec<T>&, double)> order;

  Ordering operator()(const Vec<T>& x, const Vec<T>& y, double tolerance = kDefaultTieTolerance) const {
    return order(x, y, tolerance);
  }
};

template <class T>
ComparisonOracle<T> spherical_oracle(SphericalParams<T> params) {
  const std::size_t n = params.dimension();
  return {n, [p = std::move(params)](const Vec<T>& x, const Vec<T>& y, double tol) { return compare(p, x, y, tol); }};
}

/// Orders points by an arbitrary utility function.
template <class T>
ComparisonOracle<T> utility_comparison_oracle(std::size_t n, std::function<T(const Vec<T>&)> u) {
  return {n, [u = std::move(u)](const Vec<T>& x, const Vec<T>& y, double tol) {
            return order_utilities(u(x), u(y), tol);
          }};
}

/// Named vectors and scalars that exhibit a violation. Axioms of the form
/// w + x vs w + y shifted by z use exactly the keys w, x, y, z.
template <class T>
struct Counterexample {
  std::vector<std::pair<std::string, Vec<T>>> vectors;
  std::vector<std::pair<std::string, T>> scalars;

  const Vec<T>* find(const std::string& key) const {
    for (const auto& [k, v] : vectors)
      if (k == key) return &v;
    return nullptr;
  }
};

template <class T>
struct AxiomReport {
  std::string axiom;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::optional<Counterexample<T>> counterexample;  // first violation by trial index
  std::optional<double> max_spread;                 // status quo independence only

  bool clean() const { return violations == 0; }
};

struct CheckOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  Execution execution = Execution::Serial;
  double sample_radius = 5.0;
  double tie_tolerance = kDefaultTieTolerance;
  /// Float-mode strict judgements require a gap beyond this relative margin.
  double strict_margin = 1e-7;
  /// Forces the orthogonal shift (z for OIOI, d for the perpendicular-difference axiom,
  /// every marginal change for SOIOI) to zero. Such instances are vacuous.
  bool zero_shift = false;
};

/// w + x vs w + y is unchanged by adding z with z orthogonal to x and y.
template <class T>
AxiomReport<T> check_oioi(const ComparisonOracle<T>& oracle, const CheckOptions& options);

/// x vs y is unchanged by adding d orthogonal to x - y.
template <class T>
AxiomReport<T> check_perp_diff(const ComparisonOracle<T>& oracle, const CheckOptions& options);

/// x perp y, a perp b, w+x >= w+a and w+y >= w+b imply w+x+y >= w+a+b, strictly if either
/// antecedent is strict. The mirrored instance (both antecedents <=) is checked as well.
template <class T>
AxiomReport<T> check_soioi(const ComparisonOracle<T>& oracle, const CheckOptions& options);

/// For |x| = |y| and beta > 0: w + x vs w + y agrees with w + beta x vs w + beta y.
template <class T>
AxiomReport<T> check_homotheticity(const ComparisonOracle<T>& oracle, const CheckOptions& options);

/// Samples x >= y with x != y and requires the midpoint to be strictly better than y.
/// About half the trials draw an indifferent pair, which is where non-Euclidean
/// preferences fail. Clean only for Euclidean preferences (n >= 2).
template <class T>
AxiomReport<T> check_strict_convexity(const SphericalParams<T>& params, const CheckOptions& options);

/// A direction z with x + z >= x everywhere: d when c = 0, none otherwise.
template <class T>
std::optional<Vec<T>> find_monotone_direction(const SphericalParams<T>& params);

struct AntipodalPair {
  Vec<double> x;
  Vec<double> y;
  double theta = 0;
};

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finds antipodal x, y on the circle w + r (cos t e1 + sin t e2) with u(x) = u(y), by
/// bisection of g(t) = U(t) - U(t + pi) on [0, pi] (g(pi) = -g(0)).
AntipodalPair antipodal_indifference(const SphericalParams<double>& params, const Vec<double>& w, double r,
                                     const Vec<double>& e1, const Vec<double>& e2);

}  // namespace spherical
