#include "spherical/axioms.hpp"

#include <cmath>
#include <numbers>

#include "trials.hpp"

namespace spherical {

namespace {

using detail::run_trials;
using detail::TrialOutcome;

/// Two judgements that should agree, disagree decisively: they differ at the tie band and
/// at least one of them is strict beyond the strictness margin. Exact oracles ignore both
/// tolerances, so this reduces to plain inequality.
template <class T>
bool disagree(const ComparisonOracle<T>& o, const Vec<T>& x1, const Vec<T>& y1, const Vec<T>& x2, const Vec<T>& y2,
              const CheckOptions& options) {
  if (o(x1, y1, options.tie_tolerance) == o(x2, y2, options.tie_tolerance)) return false;
  return o(x1, y1, options.strict_margin) != Ordering::Indifferent ||
         o(x2, y2, options.strict_margin) != Ordering::Indifferent;
}

template <class T>
void require_oracle_dimension(const ComparisonOracle<T>& o) {
  if (o.dimension == 0) throw std::invalid_argument("oracle dimension must be >= 1");
  if (!o.order) throw std::invalid_argument("oracle has no comparison function");
}

}  // namespace

template <class T>
AxiomReport<T> check_oioi(const ComparisonOracle<T>& o, const CheckOptions& options) {
  require_oracle_dimension(o);
  const std::size_t n = o.dimension;
  return run_trials<T>("oioi", options, [&](std::size_t, Rng& rng) -> TrialOutcome<T> {
    Vec<T> w = sample_vec<T>(rng, n, options.sample_radius);
    Vec<T> x = sample_vec<T>(rng, n, options.sample_radius);
    Vec<T> y = sample_vec<T>(rng, n, options.sample_radius);
    Vec<T> z = sample_vec<T>(rng, n, options.sample_radius);
    z = options.zero_shift ? Vec<T>::zeros(n) : project_out(z, {x, y});
    if (!disagree(o, w + x, w + y, w + x + z, w + y + z, options)) return std::nullopt;
    return Counterexample<T>{{{"w", w}, {"x", x}, {"y", y}, {"z", z}}, {}};
  });
}

template <class T>
AxiomReport<T> check_perp_diff(const ComparisonOracle<T>& o, const CheckOptions& options) {
  require_oracle_dimension(o);
  const std::size_t n = o.dimension;
  return run_trials<T>("perp_diff", options, [&](std::size_t, Rng& rng) -> TrialOutcome<T> {
    Vec<T> x = sample_vec<T>(rng, n, options.sample_radius);
    Vec<T> y = sample_vec<T>(rng, n, options.sample_radius);
    Vec<T> d = sample_vec<T>(rng, n, options.sample_radius);
    d = options.zero_shift ? Vec<T>::zeros(n) : project_out(d, {x - y});
    if (!disagree(o, x, y, x + d, y + d, options)) return std::nullopt;
    return Counterexample<T>{{{"w", Vec<T>::zeros(n)}, {"x", x}, {"y", y}, {"z", d}}, {}};
  });
}

template <class T>
AxiomReport<T> check_soioi(const ComparisonOracle<T>& o, const CheckOptions& options) {
  require_oracle_dimension(o);
  const std::size_t n = o.dimension;
  return run_trials<T>("soioi", options, [&](std::size_t, Rng& rng) -> TrialOutcome<T> {
    Vec<T> w = sample_vec<T>(rng, n, options.sample_radius);
    Vec<T> x = sample_vec<T>(rng, n, options.sample_radius);
    Vec<T> y = sample_vec<T>(rng, n, options.sample_radius);
    Vec<T> a = sample_vec<T>(rng, n, options.sample_radius);
    Vec<T> b = sample_vec<T>(rng, n, options.sample_radius);
    if (options.zero_shift) {
      x = y = a = b = Vec<T>::zeros(n);
    } else {
      y = project_out(y, {x});
      b = project_out(b, {a});
    }
    const Vec<T> lx = w + x, la = w + a, ly = w + y, lb = w + b, sum_xy = w + x + y, sum_ab = w + a + b;
    const Ordering first = o(lx, la, options.tie_tolerance);
    const Ordering second = o(ly, lb, options.tie_tolerance);
    const Ordering combined = o(sum_xy, sum_ab, options.tie_tolerance);

    bool violated = false;
    // `dir` = Better checks the stated form; Worse checks the mirrored instance.
    for (Ordering dir : {Ordering::Better, Ordering::Worse}) {
      const Ordering against = reverse(dir);
      if (first == against || second == against) continue;
      const bool strict_antecedent =
          o(lx, la, options.strict_margin) == dir || o(ly, lb, options.strict_margin) == dir;
      if (strict_antecedent ? combined != dir : o(sum_xy, sum_ab, options.strict_margin) == against) violated = true;
    }
    if (!violated) return std::nullopt;
    return Counterexample<T>{{{"w", w}, {"x", x}, {"y", y}, {"a", a}, {"b", b}}, {}};
  });
}

template <class T>
AxiomReport<T> check_homotheticity(const ComparisonOracle<T>& o, const CheckOptions& options) {
  require_oracle_dimension(o);
  const std::size_t n = o.dimension;
  return run_trials<T>("homotheticity", options, [&](std::size_t, Rng& rng) -> TrialOutcome<T> {
    Vec<T> w = sample_vec<T>(rng, n, options.sample_radius);
    Vec<T> x = sample_vec<T>(rng, n, options.sample_radius);
    Vec<T> y = equal_norm_image(rng, x);
    T beta = sample_positive<T>(rng, 10.0);
    if (!disagree(o, w + x, w + y, w + beta * x, w + beta * y, options)) return std::nullopt;
    return Counterexample<T>{{{"w", w}, {"x", x}, {"y", y}}, {{"beta", beta}}};
  });
}

namespace {

/// A point distinct from y on y's indifference surface, if the sampler finds one.
template <class T>
std::optional<Vec<T>> indifferent_partner(const SphericalParams<T>& p, const Vec<T>& y, Rng& rng, double radius) {
  const std::size_t n = y.size();
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vec<T> x;
    if (p.c != 0) {
      const Vec<T> center = classify(p).point;
      x = center + equal_norm_image(rng, Vec<T>(y - center));
    } else {
      Vec<T> t = sample_vec<T>(rng, n, radius);
      if (!p.d.is_zero()) t = project_out(t, {p.d});
      x = y + t;
    }
    if (!(x == y)) return x;
  }
  return std::nullopt;
}

}  // namespace

template <class T>
AxiomReport<T> check_strict_convexity(const SphericalParams<T>& p, const CheckOptions& options) {
  const std::size_t n = p.dimension();
  if (n == 0) throw std::invalid_argument("parameters have no dimension");
  return run_trials<T>("strict_convexity", options, [&](std::size_t, Rng& rng) -> TrialOutcome<T> {
    // About half the trials draw an indifferent pair.
    const bool want_tie = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    Vec<T> y = sample_vec<T>(rng, n, options.sample_radius);
    std::optional<Vec<T>> partner = want_tie ? indifferent_partner(p, y, rng, options.sample_radius) : std::nullopt;
    Vec<T> x = partner ? *partner : sample_vec<T>(rng, n, options.sample_radius);
    if (x == y) return std::nullopt;
    if (compare(p, x, y, options.tie_tolerance) == Ordering::Worse) std::swap(x, y);
    const Vec<T> mid = T(1) / T(2) * (x + y);
    if (compare(p, mid, y, options.strict_margin) == Ordering::Better) return std::nullopt;
    return Counterexample<T>{{{"x", x}, {"y", y}, {"midpoint", mid}}, {}};
  });
}

template <class T>
std::optional<Vec<T>> find_monotone_direction(const SphericalParams<T>& p) {
  if (p.c != 0) return std::nullopt;
  return p.d;
}

AntipodalPair antipodal_indifference(const SphericalParams<double>& p, const Vec<double>& w, double r,
                                     const Vec<double>& e1, const Vec<double>& e2) {
  require_same_dimension(p.dimension(), w.size());
  require_same_dimension(w.size(), e1.size());
  require_same_dimension(w.size(), e2.size());
  if (!(r > 0)) throw std::invalid_argument("radius must be positive");
  constexpr double kOrthoTol = 1e-9;
  if (std::fabs(sq_norm(e1) - 1) > kOrthoTol || std::fabs(sq_norm(e2) - 1) > kOrthoTol ||
      std::fabs(dot(e1, e2)) > kOrthoTol)
    throw std::invalid_argument("plane vectors must be orthonormal");

  auto point = [&](double theta) { return w + (r * std::cos(theta)) * e1 + (r * std::sin(theta)) * e2; };
  auto gap = [&](double theta) { return utility(p, point(theta)) - utility(p, point(theta + std::numbers::pi)); };
  auto make = [&](double theta) { return AntipodalPair{point(theta), point(theta + std::numbers::pi), theta}; };
  auto settled = [&](double theta) {
    const double a = utility(p, point(theta)), b = utility(p, point(theta + std::numbers::pi));
    return std::fabs(a - b) <= 1e-13 * (1 + std::fabs(a) + std::fabs(b));
  };

  double lo = 0, hi = std::numbers::pi;
  double g_lo = gap(lo), g_hi = gap(hi);
  if (settled(lo)) return make(lo);
  if (settled(hi)) return make(hi);
  if ((g_lo > 0) == (g_hi > 0)) throw NumericalFailure("antipodal gap has no sign change on [0, pi]");
  // Bisect to machine resolution in theta.
  double mid = 0.5 * (lo + hi);
  for (int step = 0; step < 200; ++step) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double g_mid = gap(mid);
    if (g_mid == 0) break;
    if ((g_mid > 0) == (g_lo > 0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return make(mid);
}

#define SPHERICAL_INSTANTIATE(T)                                                                   \
  template AxiomReport<T> check_oioi(const ComparisonOracle<T>&, const CheckOptions&);            \
  template AxiomReport<T> check_perp_diff(const ComparisonOracle<T>&, const CheckOptions&);       \
  template AxiomReport<T> check_soioi(const ComparisonOracle<T>&, const CheckOptions&);           \
  template AxiomReport<T> check_homotheticity(const ComparisonOracle<T>&, const CheckOptions&);   \
  template AxiomReport<T> check_strict_convexity(const SphericalParams<T>&, const CheckOptions&); \
  template std::optional<Vec<T>> find_monotone_direction(const SphericalParams<T>&);

SPHERICAL_INSTANTIATE(double)
SPHERICAL_INSTANTIATE(Rational)
#undef SPHERICAL_INSTANTIATE

}  // namespace spherical
