#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spherical/rational.hpp"

namespace spherical {

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                              std::to_string(actual)) {}
};

inline void require_same_dimension(std::size_t expected, std::size_t actual) {
  if (expected != actual) throw DimensionMismatch(expected, actual);
}

/// A point (or direction) in R^n with scalar type T (double or Rational).
template <class T>
class Vec {
 public:
  using value_type = T;

  Vec() = default;
  explicit Vec(std::size_t n) : coords_(n, T(0)) { check_nonempty(); }
  Vec(std::initializer_list<T> coords) : coords_(coords) { check_nonempty(); }
  explicit Vec(std::vector<T> coords) : coords_(std::move(coords)) { check_nonempty(); }

  static Vec zeros(std::size_t n) { return Vec(n); }
  static Vec unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v.coords_.at(i) = T(1);
    return v;
  }

  std::size_t size() const { return coords_.size(); }
  const T& operator[](std::size_t i) const { return coords_[i]; }
  T& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<T>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const T& v) { return v == 0; });
  }

  Vec& operator+=(const Vec& o) {
    require_same_dimension(size(), o.size());
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    require_same_dimension(size(), o.size());
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Vec& operator*=(const T& s) {
    for (auto& v : coords_) v *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const T& s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, const T& s) { return a *= s; }
  friend Vec operator-(Vec a) {
    for (auto& v : a.coords_) v = -v;
    return a;
  }
  friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }

 private:
  void check_nonempty() const {
    if (coords_.empty()) throw std::invalid_argument("vectors must have dimension >= 1");
  }

  std::vector<T> coords_;
};

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  require_same_dimension(a.size(), b.size());
  T acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class T>
T sq_norm(const Vec<T>& a) {
  return dot(a, a);
}

/// v minus its orthogonal projection onto span(basis). Zero basis entries are skipped.
/// Exact mode runs unnormalized classical Gram-Schmidt, so the result is orthogonal to
/// every basis vector exactly. Float mode uses modified Gram-Schmidt with one
/// re-orthogonalization pass.
template <class T>
Vec<T> project_out(const Vec<T>& v, std::span<const Vec<T>> basis);
template <>
Vec<Rational> project_out(const Vec<Rational>& v, std::span<const Vec<Rational>> basis);
template <>
Vec<double> project_out(const Vec<double>& v, std::span<const Vec<double>> basis);

template <class T>
Vec<T> project_out(const Vec<T>& v, std::initializer_list<Vec<T>> basis) {
  return project_out(v, std::span<const Vec<T>>(basis.begin(), basis.size()));
}

template <class To, class From>
Vec<To> convert(const Vec<From>& v) {
  std::vector<To> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if constexpr (std::is_same_v<To, From>) {
      out.push_back(x);
    } else if constexpr (is_exact_v<To>) {
      out.push_back(rational_from_double(x));
    } else {
      out.push_back(to_double(x));
    }
  }
  return Vec<To>(std::move(out));
}

}  // namespace spherical
