#include "spherical/preference.hpp"

#include <cmath>

namespace spherical {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Better: return "better";
    case Ordering::Worse: return "worse";
    case Ordering::Indifferent: return "indifferent";
  }
  return "?";
}

const char* to_string(PreferenceTag tag) {
  switch (tag) {
    case PreferenceTag::Linear: return "linear";
    case PreferenceTag::Euclidean: return "euclidean";
    case PreferenceTag::AntiEuclidean: return "anti_euclidean";
    case PreferenceTag::Indifference: return "indifference";
  }
  return "?";
}

template <class T>
PreferenceClass<T> classify(const SphericalParams<T>& p) {
  const int s = sign_of(p.c);
  if (s == 0) {
    if (p.d.is_zero()) return {PreferenceTag::Indifference, {}};
    return {PreferenceTag::Linear, p.d};
  }
  // Completing the square: c|x|^2 + d.x = c|x - x*|^2 - c|x*|^2 with x* = -d / (2c).
  T scale = T(-1) / T(2 * p.c);
  return {s < 0 ? PreferenceTag::Euclidean : PreferenceTag::AntiEuclidean, scale * p.d};
}

template <class T>
SphericalParams<T> canonicalize(const SphericalParams<T>& p) {
  if (p.is_zero()) throw ZeroParameters();
  if constexpr (is_exact_v<T>) {
    Rational max_abs = abs_value(p.c);
    for (const auto& v : p.d) max_abs = std::max(max_abs, abs_value(v));
    return p.scaled(Rational(1 / max_abs));
  } else {
    const double norm = std::sqrt(p.c * p.c + sq_norm(p.d));
    return p.scaled(1.0 / norm);
  }
}

template <class T>
double preference_distance(const SphericalParams<T>& p1, const SphericalParams<T>& p2) {
  require_same_dimension(p1.dimension(), p2.dimension());
  if (p1.is_zero() || p2.is_zero()) throw ZeroParameters();
  auto unit = [](const SphericalParams<T>& p) {
    std::vector<double> v;
    v.push_back(to_double(p.c));
    for (const auto& x : p.d) v.push_back(to_double(x));
    double n = 0;
    for (double x : v) n += x * x;
    n = std::sqrt(n);
    for (double& x : v) x /= n;
    return v;
  };
  const auto a = unit(p1);
  const auto b = unit(p2);
  // Same angle as acos(<a, b>) for unit vectors, without the loss of precision near 0 and pi.
  double diff = 0, sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff += (a[i] - b[i]) * (a[i] - b[i]);
    sum += (a[i] + b[i]) * (a[i] + b[i]);
  }
  return 2.0 * std::atan2(std::sqrt(diff), std::sqrt(sum));
}

template PreferenceClass<double> classify(const SphericalParams<double>&);
template PreferenceClass<Rational> classify(const SphericalParams<Rational>&);
template SphericalParams<double> canonicalize(const SphericalParams<double>&);
template SphericalParams<Rational> canonicalize(const SphericalParams<Rational>&);
template double preference_distance(const SphericalParams<double>&, const SphericalParams<double>&);
template double preference_distance(const SphericalParams<Rational>&, const SphericalParams<Rational>&);

}  // namespace spherical
