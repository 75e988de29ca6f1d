#include "spherical/geometry.hpp"

#include <cmath>

namespace spherical {

namespace {

Vec<Rational> project_out_exact(const Vec<Rational>& v, std::span<const Vec<Rational>> basis) {
  std::vector<Vec<Rational>> ortho;
  std::vector<Rational> ortho_sq;
  for (const auto& b : basis) {
    require_same_dimension(v.size(), b.size());
    if (b.is_zero()) continue;
    Vec<Rational> q = b;
    for (std::size_t k = 0; k < ortho.size(); ++k) {
      Rational coef = dot(b, ortho[k]) / ortho_sq[k];
      q -= coef * ortho[k];
    }
    if (q.is_zero()) continue;  // dependent on earlier entries
    ortho_sq.push_back(sq_norm(q));
    ortho.push_back(std::move(q));
  }
  Vec<Rational> out = v;
  for (std::size_t k = 0; k < ortho.size(); ++k) {
    Rational coef = dot(v, ortho[k]) / ortho_sq[k];
    out -= coef * ortho[k];
  }
  return out;
}

Vec<double> project_out_float(const Vec<double>& v, std::span<const Vec<double>> basis) {
  std::vector<Vec<double>> ortho;  // orthonormal
  for (const auto& b : basis) {
    require_same_dimension(v.size(), b.size());
    if (b.is_zero()) continue;
    const double b_norm = std::sqrt(sq_norm(b));
    Vec<double> q = b;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& o : ortho) q -= dot(q, o) * o;
    const double q_norm = std::sqrt(sq_norm(q));
    if (q_norm <= 1e-12 * b_norm) continue;
    q *= 1.0 / q_norm;
    ortho.push_back(std::move(q));
  }
  Vec<double> out = v;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& o : ortho) out -= dot(out, o) * o;
  return out;
}

}  // namespace

template <>
Vec<Rational> project_out(const Vec<Rational>& v, std::span<const Vec<Rational>> basis) {
  return project_out_exact(v, basis);
}

template <>
Vec<double> project_out(const Vec<double>& v, std::span<const Vec<double>> basis) {
  return project_out_float(v, basis);
}

}  // namespace spherical
