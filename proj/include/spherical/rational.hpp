#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

namespace spherical {

/// Arbitrary-precision rational backed by GMP. Always kept in canonical form.
using Rational = mpq_class;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

/// Parses "p/q", "p", or a decimal literal such as "0.25" into an exact rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is one).
std::string to_string(const Rational& q);

/// num/den in lowest terms. GMP arithmetic requires canonical operands.
inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Exact binary expansion of a finite double.
Rational rational_from_double(double v);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double v) { return v; }

template <class T>
T from_double(double v) {
  if constexpr (is_exact_v<T>) {
    return rational_from_double(v);
  } else {
    return v;
  }
}

template <class T>
T abs_value(const T& v) {
  if constexpr (is_exact_v<T>) {
    return Rational(abs(v));
  } else {
    return std::fabs(v);
  }
}

template <class T>
int sign_of(const T& v) {
  if constexpr (is_exact_v<T>) {
    return sgn(v);
  } else {
    return (v > 0) - (v < 0);
  }
}

}  // namespace spherical
