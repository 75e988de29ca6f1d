#pragma once

#include <stdexcept>

#include "spherical/geometry.hpp"

namespace spherical {

enum class Ordering { Worse = -1, Indifferent = 0, Better = 1 };

constexpr Ordering reverse(Ordering o) { return static_cast<Ordering>(-static_cast<int>(o)); }
const char* to_string(Ordering o);

/// Relative tie band used by float-mode comparisons: |u(x) - u(y)| <= tol * (1 + |u(x)| + |u(y)|).
inline constexpr double kDefaultTieTolerance = 1e-9;

/// Orders two utility values. Exact scalars use the true sign; doubles use the relative tie band.
template <class T>
Ordering order_utilities(const T& ux, const T& uy, double tie_tolerance = kDefaultTieTolerance) {
  if constexpr (is_exact_v<T>) {
    return static_cast<Ordering>(sgn(ux - uy));
  } else {
    const double gap = ux - uy;
    if (std::fabs(gap) <= tie_tolerance * (1.0 + std::fabs(ux) + std::fabs(uy))) return Ordering::Indifferent;
    return gap > 0 ? Ordering::Better : Ordering::Worse;
  }
}

/// Utility u(x) = c (x.x) + d.x. (c, d) = 0 is the total-indifference preference.
template <class T>
struct SphericalParams {
  T c{0};
  Vec<T> d;

  std::size_t dimension() const { return d.size(); }
  bool is_zero() const { return c == 0 && d.is_zero(); }

  SphericalParams scaled(const T& s) const { return {T(c * s), d * s}; }
  SphericalParams operator-() const { return {T(-c), -d}; }
  friend bool operator==(const SphericalParams&, const SphericalParams&) = default;
};

enum class PreferenceTag { Linear, Euclidean, AntiEuclidean, Indifference };
const char* to_string(PreferenceTag tag);

/// `point` holds u for Linear, the ideal (or worst) point x* for (Anti)Euclidean,
/// and is empty for Indifference.
template <class T>
struct PreferenceClass {
  PreferenceTag tag = PreferenceTag::Indifference;
  Vec<T> point;
  friend bool operator==(const PreferenceClass&, const PreferenceClass&) = default;
};

class ZeroParameters : public std::invalid_argument {
 public:
  ZeroParameters() : std::invalid_argument("the indifference preference (c = 0, d = 0) has no canonical form") {}
};

template <class T>
T utility(const SphericalParams<T>& p, const Vec<T>& x) {
  require_same_dimension(p.dimension(), x.size());
  return T(p.c * sq_norm(x) + dot(p.d, x));
}

template <class T>
Ordering compare(const SphericalParams<T>& p, const Vec<T>& x, const Vec<T>& y,
                 double tie_tolerance = kDefaultTieTolerance) {
  require_same_dimension(x.size(), y.size());
  return order_utilities(utility(p, x), utility(p, y), tie_tolerance);
}

template <class T>
PreferenceClass<T> classify(const SphericalParams<T>& p);

/// Positive rescaling onto the canonical representative: unit Euclidean norm of (c, d)
/// for doubles, max-abs entry one for rationals. Throws ZeroParameters for (0, 0).
template <class T>
SphericalParams<T> canonicalize(const SphericalParams<T>& p);

/// Gradient 2c w + d. On any sphere centred at w, two points are indifferent iff their
/// inner products with this vector agree.
template <class T>
Vec<T> sphere_normal(const SphericalParams<T>& p, const Vec<T>& w) {
  require_same_dimension(p.dimension(), w.size());
  return T(2 * p.c) * w + p.d;
}

/// Geodesic distance in [0, pi] between the unit-sphere representatives of p1 and p2.
template <class T>
double preference_distance(const SphericalParams<T>& p1, const SphericalParams<T>& p2);

}  // namespace spherical
