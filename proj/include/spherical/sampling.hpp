#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>

#include "spherical/geometry.hpp"

namespace spherical {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent generator for item `stream` of a run seeded with `seed`; lets serial and
/// parallel paths draw identical samples per trial.
inline Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

/// Uniform on [-radius, radius]. Rationals are drawn as num / (6 den) * radius with
/// den in 1..6, which keeps numerators and denominators small.
template <class T>
T sample_scalar(Rng& rng, double radius) {
  if constexpr (is_exact_v<T>) {
    const long den = std::uniform_int_distribution<long>(1, 6)(rng);
    const long num = std::uniform_int_distribution<long>(-6 * den, 6 * den)(rng);
    return Rational(rational_from_double(radius) * make_rational(num, 6 * den));
  } else {
    return std::uniform_real_distribution<double>(-radius, radius)(rng);
  }
}

/// Uniform on (0, upper].
template <class T>
T sample_positive(Rng& rng, double upper) {
  if constexpr (is_exact_v<T>) {
    const long num = std::uniform_int_distribution<long>(1, 60)(rng);
    return Rational(rational_from_double(upper) * make_rational(num, 60));
  } else {
    double v = 0;
    while (v == 0) v = std::uniform_real_distribution<double>(0.0, upper)(rng);
    return v;
  }
}

template <class T>
Vec<T> sample_vec(Rng& rng, std::size_t n, double radius) {
  std::vector<T> coords;
  coords.reserve(n);
  for (std::size_t i = 0; i < n; ++i) coords.push_back(sample_scalar<T>(rng, radius));
  return Vec<T>(std::move(coords));
}

/// A random vector with the same norm as x. Doubles: a chain of random Givens rotations.
/// Rationals: a random signed coordinate permutation, which preserves the norm exactly.
template <class T>
Vec<T> equal_norm_image(Rng& rng, const Vec<T>& x) {
  const std::size_t n = x.size();
  if constexpr (is_exact_v<T>) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Vec<T> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      const bool flip = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
      out[i] = flip ? Rational(-x[perm[i]]) : x[perm[i]];
    }
    return out;
  } else {
    Vec<T> out = x;
    if (n < 2) {
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) out = -out;
      return out;
    }
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (std::size_t r = 0; r < 2 * n; ++r) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) j = (i + 1) % n;
      const double t = angle(rng), c = std::cos(t), s = std::sin(t);
      const double xi = out[i], xj = out[j];
      out[i] = c * xi - s * xj;
      out[j] = s * xi + c * xj;
    }
    return out;
  }
}

}  // namespace spherical
