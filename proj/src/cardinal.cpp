#include "spherical/cardinal.hpp"

#include <algorithm>
#include <cmath>

#include "trials.hpp"

namespace spherical {

template <class T>
UtilityOracle<T>::UtilityOracle(std::size_t n, std::function<T(const Vec<T>&)> fn, ZeroPolicy policy)
    : n_(n), fn_(std::move(fn)) {
  if (n_ == 0) throw std::invalid_argument("utility oracle dimension must be >= 1");
  if (!fn_) throw std::invalid_argument("utility oracle has no function");
  const T at_origin = fn_(Vec<T>::zeros(n_));
  if (policy == ZeroPolicy::Shift) {
    shift_ = at_origin;
    return;
  }
  const bool zero = is_exact_v<T> ? at_origin == 0 : std::fabs(to_double(at_origin)) <= 1e-12;
  if (!zero) throw std::invalid_argument("utility oracle must satisfy U(0) = 0");
}

template <class T>
UtilityOracle<T> coefficient_oracle(Matrix<T> a, Vec<T> b) {
  const std::size_t n = b.size();
  require_same_dimension(n, a.size());
  for (const auto& row : a) require_same_dimension(n, row.size());
  return UtilityOracle<T>(n, [a = std::move(a), b = std::move(b)](const Vec<T>& x) {
    return T(bilinear(a, x, x) + dot(b, x));
  });
}

template <class T>
UtilityOracle<T> named_oracle(const std::string& name, std::size_t n) {
  if (name == "cubic1") {
    if (n < 2) throw std::invalid_argument("cubic1 needs dimension >= 2");
    return UtilityOracle<T>(n, [](const Vec<T>& x) { return T(x[0] * x[0] * x[0] + x[1]); });
  }
  throw std::invalid_argument("unknown built-in oracle '" + name + "'");
}

namespace {

template <class T>
std::vector<Vec<T>> probe_grid(std::size_t n, std::span<const Vec<T>> probe_z) {
  std::vector<Vec<T>> grid;
  for (int r : {1, 3, 10}) {
    const T radius(r);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec<T> ei = Vec<T>::unit(n, i);
      grid.push_back(radius * ei);
      grid.push_back(-radius * ei);
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vec<T> ej = Vec<T>::unit(n, j);
        grid.push_back(radius * (ei + ej));
        grid.push_back(radius * (ei - ej));
      }
    }
  }
  for (const auto& z : probe_z) {
    grid.push_back(z);
    grid.push_back(-z);
  }
  Rng rng(splitmix64(0x9d0be2f1a4c5ULL));
  for (int k = 0; k < 8; ++k) grid.push_back(sample_vec<T>(rng, n, 5.0));
  return grid;
}

}  // namespace

template <class T>
QuadLinDecomposition<T> decompose(const UtilityOracle<T>& u, std::span<const Vec<T>> probe_z,
                                  const DecomposeOptions& options) {
  if (probe_z.empty()) throw std::invalid_argument("decompose needs at least one status quo probe");
  const std::size_t n = u.dimension();
  for (const auto& z : probe_z) require_same_dimension(n, z.size());
  const Vec<T>& z0 = probe_z.front();
  auto f = [&](const Vec<T>& x) { return extract_f(u, x, z0); };

  QuadLinDecomposition<T> dec;
  dec.s.assign(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Vec<T> ei = Vec<T>::unit(n, i), ej = Vec<T>::unit(n, j);
      // Polarization: S(x, y) = 1/4 [f(x + y) - f(x - y)].
      const T v = T((f(ei + ej) - f(ei - ej)) / 4);
      dec.s[i][j] = v;
      dec.s[j][i] = v;
    }
  }
  std::vector<T> g(n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    const Vec<T> ei = Vec<T>::unit(n, i);
    g[i] = T(u(ei) - f(ei));
  }
  dec.g = Vec<T>(std::move(g));

  for (const auto& x : probe_grid(n, probe_z)) {
    const T ux = u(x);
    const T model = T(bilinear(dec.s, x, x) + dot(dec.g, x));
    dec.residual = std::max(dec.residual, abs_value(T(ux - model)));
    dec.max_abs_u = std::max(dec.max_abs_u, abs_value(ux));
  }
  bool reject;
  if constexpr (is_exact_v<T>) {
    reject = dec.residual != 0;
  } else {
    reject = dec.residual > options.tolerance * (1 + dec.max_abs_u);
  }
  if (reject) throw NotQuadLin<T>(std::move(dec));
  return dec;
}

template <class T>
T parallelogram_residual(const UtilityOracle<T>& u, const Vec<T>& x, const Vec<T>& y, const Vec<T>& z) {
  return T(extract_f(u, Vec<T>(x + y), z) + extract_f(u, Vec<T>(x - y), z) - 2 * extract_f(u, x, z) -
           2 * extract_f(u, y, z));
}

template <class T>
T additivity_residual(const UtilityOracle<T>& u, const Vec<T>& x, const Vec<T>& y, const Vec<T>& z) {
  auto g = [&](const Vec<T>& v) { return T(u(v) - extract_f(u, v, z)); };
  return T(g(x + y) - g(x) - g(y));
}

template <class T>
AxiomReport<T> check_status_quo_independence(const UtilityOracle<T>& u, const CheckOptions& options, double tol) {
  if (options.trials < 2) throw std::invalid_argument("status quo independence needs trials >= 2");
  const std::size_t n = u.dimension();
  std::vector<double> spreads(options.trials, 0.0);
  auto report = detail::run_trials<T>(
      "status_quo_independence", options, [&](std::size_t index, Rng& rng) -> detail::TrialOutcome<T> {
        const Vec<T> x = sample_vec<T>(rng, n, options.sample_radius);
        std::vector<Vec<T>> quos{Vec<T>::zeros(n)};
        for (int k = 0; k < 3; ++k) quos.push_back(sample_vec<T>(rng, n, options.sample_radius));
        std::vector<T> values;
        for (const auto& w : quos) values.push_back(extract_f(u, x, w));
        const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        const double spread = to_double(T(*hi - *lo));
        spreads[index] = spread;
        double scale = 1;
        for (const auto& v : values) scale = std::max(scale, 1 + std::fabs(to_double(v)));
        const bool violated = is_exact_v<T> && tol == 0 ? *hi != *lo : spread > tol * scale;
        if (!violated) return std::nullopt;
        const auto lo_idx = static_cast<std::size_t>(lo - values.begin());
        const auto hi_idx = static_cast<std::size_t>(hi - values.begin());
        return Counterexample<T>{{{"x", x}, {"w", quos[lo_idx]}, {"w_alt", quos[hi_idx]}}, {{"spread", T(*hi - *lo)}}};
      });
  report.max_spread = *std::max_element(spreads.begin(), spreads.end());
  return report;
}

double eventual_linearity_gap(const UtilityOracle<double>& u, const Vec<double>& x, const Vec<double>& y,
                              const Vec<double>& w) {
  const Vec<double> s = x + y;
  return (u(w + s) - u(w - s)) - (u(w + x) - u(w - x) + u(w + y) - u(w - y));
}

namespace {

double gap_scale(const UtilityOracle<double>& u, const Vec<double>& x, const Vec<double>& y, const Vec<double>& w) {
  const Vec<double> s = x + y;
  return 1 + std::fabs(u(w + s)) + std::fabs(u(w - s)) + std::fabs(u(w + x)) + std::fabs(u(w - x)) +
         std::fabs(u(w + y)) + std::fabs(u(w - y));
}

}  // namespace

std::optional<Vec<double>> check_eventual_linearity(const UtilityOracle<double>& u, const Vec<double>& x,
                                                    const Vec<double>& y, const LineSearch& search) {
  const std::size_t n = u.dimension();
  require_same_dimension(n, x.size());
  require_same_dimension(n, y.size());
  auto h = [&](const Vec<double>& w) { return eventual_linearity_gap(u, x, y, w); };
  auto small = [&](const Vec<double>& w, double value) {
    return std::fabs(value) <= search.tolerance * gap_scale(u, x, y, w);
  };

  const Vec<double> origin = Vec<double>::zeros(n);
  const double h0 = h(origin);
  if (small(origin, h0)) return origin;

  Rng rng(splitmix64(search.seed));
  std::normal_distribution<double> normal;
  for (std::size_t k = 0; k < search.directions; ++k) {
    Vec<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = normal(rng);
    const double norm = std::sqrt(sq_norm(v));
    if (norm == 0) continue;
    v *= 1.0 / norm;
    for (double side : {1.0, -1.0}) {
      double lo = 0, h_lo = h0;
      for (int d = 0; d <= search.max_doublings; ++d) {
        const double t = std::ldexp(1.0, d);
        const Vec<double> w = (side * t) * v;
        const double ht = h(w);
        if (small(w, ht)) return w;
        if ((ht > 0) != (h_lo > 0)) {
          double a = lo, b = t;
          for (int step = 0; step < search.bisection_steps; ++step) {
            const double mid = 0.5 * (a + b);
            const double hm = h((side * mid) * v);
            if ((hm > 0) == (h_lo > 0)) a = mid;
            else b = mid;
          }
          const Vec<double> root = (side * 0.5 * (a + b)) * v;
          if (small(root, h(root))) return root;
        }
        lo = t;
        h_lo = ht;
      }
    }
  }
  return std::nullopt;
}

#define SPHERICAL_INSTANTIATE(T)                                                                                  \
  template class UtilityOracle<T>;                                                                                \
  template UtilityOracle<T> coefficient_oracle(Matrix<T>, Vec<T>);                                               \
  template UtilityOracle<T> named_oracle(const std::string&, std::size_t);                                       \
  template QuadLinDecomposition<T> decompose(const UtilityOracle<T>&, std::span<const Vec<T>>,                    \
                                             const DecomposeOptions&);                                            \
  template T parallelogram_residual(const UtilityOracle<T>&, const Vec<T>&, const Vec<T>&, const Vec<T>&);        \
  template T additivity_residual(const UtilityOracle<T>&, const Vec<T>&, const Vec<T>&, const Vec<T>&);           \
  template AxiomReport<T> check_status_quo_independence(const UtilityOracle<T>&, const CheckOptions&, double);

SPHERICAL_INSTANTIATE(double)
SPHERICAL_INSTANTIATE(Rational)
#undef SPHERICAL_INSTANTIATE

}  // namespace spherical
