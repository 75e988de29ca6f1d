#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spherical/axioms.hpp"

namespace spherical {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Bilinear form x^T S z.
template <class T>
T bilinear(const Matrix<T>& s, const Vec<T>& x, const Vec<T>& z) {
  require_same_dimension(s.size(), x.size());
  require_same_dimension(s.size(), z.size());
  T acc(0);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) acc += x[i] * s[i][j] * z[j];
  return acc;
}

/// A cardinal utility U : R^n -> R normalised so that U(0) = 0.
template <class T>
class UtilityOracle {
 public:
  enum class ZeroPolicy { Require, Shift };

  /// Throws std::invalid_argument if U(0) != 0 under ZeroPolicy::Require (|U(0)| > 1e-12
  /// for doubles); ZeroPolicy::Shift evaluates U - U(0) instead.
  UtilityOracle(std::size_t n, std::function<T(const Vec<T>&)> fn, ZeroPolicy policy = ZeroPolicy::Require);

  std::size_t dimension() const { return n_; }
  T operator()(const Vec<T>& x) const {
    require_same_dimension(n_, x.size());
    return T(fn_(x) - shift_);
  }

 private:
  std::size_t n_;
  std::function<T(const Vec<T>&)> fn_;
  T shift_{0};
};

/// U(x) = x^T A x + b.x.
template <class T>
UtilityOracle<T> coefficient_oracle(Matrix<T> a, Vec<T> b);

/// Built-in oracles by name. "cubic1": U(x) = x1^3 + x2 (n >= 2). Throws on unknown names.
template <class T>
UtilityOracle<T> named_oracle(const std::string& name, std::size_t n);

/// Comparison oracle ordering points by U.
template <class T>
ComparisonOracle<T> comparison_from(const UtilityOracle<T>& u) {
  return utility_comparison_oracle<T>(u.dimension(), [u](const Vec<T>& x) { return u(x); });
}

template <class T>
struct QuadLinDecomposition {
  Matrix<T> s;      // symmetric
  Vec<T> g;
  T residual{0};    // max |U(x) - (x^T S x + g.x)| over the probe grid
  T max_abs_u{0};   // max |U| over the same grid
};

template <class T>
class NotQuadLin : public std::runtime_error {
 public:
  explicit NotQuadLin(QuadLinDecomposition<T> fit)
      : std::runtime_error("utility is not quadratic plus linear (residual " + std::to_string(to_double(fit.residual)) +
                           ")"),
        fit_(std::move(fit)) {}
  const QuadLinDecomposition<T>& fit() const { return fit_; }

 private:
  QuadLinDecomposition<T> fit_;
};

/// Symmetric average 1/2[U(z+x) - U(z)] + 1/2[U(z-x) - U(z)].
template <class T>
T extract_f(const UtilityOracle<T>& u, const Vec<T>& x, const Vec<T>& z) {
  const T uz = u(z);
  return T((u(z + x) - uz) / 2 + (u(z - x) - uz) / 2);
}

struct DecomposeOptions {
  /// Float fits are rejected when residual > tolerance * (1 + max |U|). Ignored for
  /// rationals, which require a zero residual.
  double tolerance = 1e-6;
};

/// Recovers S by polarization of f(x) = extract_f(U, x, probe_z[0]) on the standard basis
/// and g_i = U(e_i) - f(e_i), then measures the fit on a probe grid. Throws NotQuadLin
/// when the residual is out of tolerance.
template <class T>
QuadLinDecomposition<T> decompose(const UtilityOracle<T>& u, std::span<const Vec<T>> probe_z,
                                  const DecomposeOptions& options = {});

/// f(x+y) + f(x-y) - 2 f(x) - 2 f(y), with f taken at status quo z.
template <class T>
T parallelogram_residual(const UtilityOracle<T>& u, const Vec<T>& x, const Vec<T>& y, const Vec<T>& z);

/// g(x+y) - g(x) - g(y) where g = U - f, with f taken at status quo z.
template <class T>
T additivity_residual(const UtilityOracle<T>& u, const Vec<T>& x, const Vec<T>& y, const Vec<T>& z);

/// For each trial, draws x and four status quos (the origin and three random points) and
/// flags a violation when extract_f spreads by more than tol * (1 + max |f|).
template <class T>
AxiomReport<T> check_status_quo_independence(const UtilityOracle<T>& u, const CheckOptions& options, double tol);

struct LineSearch {
  std::size_t directions = 16;
  int max_doublings = 10;  // bracket radius up to 2^10
  int bisection_steps = 80;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;  // relative to 1 + the magnitude of the terms in h
};

/// h(w) = U(w+(x+y)) - U(w-(x+y)) - [U(w+x) - U(w-x) + U(w+y) - U(w-y)].
double eventual_linearity_gap(const UtilityOracle<double>& u, const Vec<double>& x, const Vec<double>& y,
                              const Vec<double>& w);

/// Looks for w with h(w) ~ 0: tries w = 0, then brackets sign changes along random lines
/// through the origin and bisects. nullopt means none was found within the budget.
std::optional<Vec<double>> check_eventual_linearity(const UtilityOracle<double>& u, const Vec<double>& x,
                                                    const Vec<double>& y, const LineSearch& search = {});

/// |x^T S z| <= tol.
template <class T>
bool u_orthogonal(const QuadLinDecomposition<T>& dec, const Vec<T>& x, const Vec<T>& z, double tol = 1e-9) {
  const T v = bilinear(dec.s, x, z);
  if constexpr (is_exact_v<T>) {
    if (tol == 0) return v == 0;
  }
  return std::fabs(to_double(v)) <= tol;
}

}  // namespace spherical
