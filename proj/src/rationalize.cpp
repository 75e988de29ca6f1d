#include "spherical/rationalize.hpp"

#include <algorithm>
#include <stdexcept>

#include "spherical/lp.hpp"
#include "spherical/sampling.hpp"

namespace spherical {

const char* to_string(Restriction r) {
  switch (r) {
    case Restriction::None: return "none";
    case Restriction::Linear: return "linear";
    case Restriction::Euclidean: return "euclidean";
    case Restriction::AntiEuclidean: return "anti_euclidean";
  }
  return "?";
}

template <class T>
void ObservationSet<T>::validate() const {
  if (dimension == 0) throw std::invalid_argument("dataset dimension must be >= 1");
  for (const auto* list : {&weak, &strict})
    for (const auto& cmp : *list) {
      require_same_dimension(dimension, cmp.better.size());
      require_same_dimension(dimension, cmp.worse.size());
    }
}

namespace {

// Float verdicts: margins at or below this count as zero.
constexpr double kFloatVerdictEps = 1e-9;

template <class T>
bool strictly_positive(const T& v) {
  if constexpr (is_exact_v<T>) return sgn(v) > 0;
  else return v > kFloatVerdictEps;
}

template <class T>
bool is_zero_within(const T& v) {
  if constexpr (is_exact_v<T>) return v == 0;
  else return std::fabs(v) <= kFloatVerdictEps;
}

/// Row data for one observation: q = x.x - y.y and v = x - y.
template <class T>
struct Difference {
  T q;
  Vec<T> v;
};

template <class T>
Difference<T> difference(const Comparison<T>& cmp) {
  return {T(sq_norm(cmp.better) - sq_norm(cmp.worse)), cmp.better - cmp.worse};
}

template <class T>
std::optional<std::string> dimension_note(std::size_t n) {
  if (n >= 3) return std::nullopt;
  return "dimension " + std::to_string(n) +
         " < 3: the data are decided against the spherical family, but the behavioural "
         "characterization of that family needs n >= 3";
}

/// Variables: c, u_1..u_n, epsilon, and delta for signed restrictions.
template <class T>
struct MarginProgram {
  LinearProgram<T> lp;
  std::size_t epsilon = 0;
  std::optional<std::size_t> delta;
};

template <class T>
MarginProgram<T> margin_program(const ObservationSet<T>& data, Restriction restriction) {
  const std::size_t n = data.dimension;
  MarginProgram<T> mp;
  auto& lp = mp.lp;
  if (restriction == Restriction::Linear) lp.add_variable(T(0), T(0), T(0));
  else lp.add_variable(T(0), T(-1), T(1));
  for (std::size_t i = 0; i < n; ++i) lp.add_variable(T(0), T(-1), T(1));
  mp.epsilon = lp.add_variable(T(1), T(0), T(1));
  if (restriction == Restriction::Euclidean || restriction == Restriction::AntiEuclidean)
    mp.delta = lp.add_variable(T(0), T(0), T(1));

  auto add_row = [&](const Comparison<T>& cmp, bool strict) {
    const auto diff = difference(cmp);
    std::vector<T> row(lp.num_variables(), T(0));
    row[0] = diff.q;
    for (std::size_t i = 0; i < n; ++i) row[1 + i] = diff.v[i];
    if (strict) row[mp.epsilon] = T(-1);
    lp.add_constraint(std::move(row), Relation::GreaterEqual, T(0));
  };
  for (const auto& cmp : data.weak) add_row(cmp, false);
  for (const auto& cmp : data.strict) add_row(cmp, true);

  if (mp.delta) {
    std::vector<T> row(lp.num_variables(), T(0));
    row[0] = T(1);
    if (restriction == Restriction::Euclidean) {
      row[*mp.delta] = T(1);  // c + delta <= 0
      lp.add_constraint(std::move(row), Relation::LessEqual, T(0));
    } else {
      row[*mp.delta] = T(-1);  // c - delta >= 0
      lp.add_constraint(std::move(row), Relation::GreaterEqual, T(0));
    }
  }
  return mp;
}

template <class T>
SphericalParams<T> witness_from(const std::vector<T>& primal, std::size_t n) {
  std::vector<T> d(primal.begin() + 1, primal.begin() + 1 + static_cast<std::ptrdiff_t>(n));
  return {primal[0], Vec<T>(std::move(d))};
}

template <class T>
LpOutcome<T> solve_optimal(const LinearProgram<T>& lp) {
  auto out = solve(lp);
  if (out.status != LpStatus::Optimal) throw std::logic_error("margin program must have an optimum");
  return out;
}

/// How far `x` falls short of row `row` (zero or negative when satisfied).
template <class T>
T shortfall(const typename LinearProgram<T>::Row& row, const std::vector<T>& x) {
  T lhs(0);
  for (std::size_t j = 0; j < x.size(); ++j) lhs += row.coefficients[j] * x[j];
  switch (row.relation) {
    case Relation::GreaterEqual: return T(row.rhs - lhs);
    case Relation::LessEqual: return T(lhs - row.rhs);
    case Relation::Equal: return abs_value(T(lhs - row.rhs));
  }
  return T(0);
}

/// Solves `full` by row generation over its first `lazy` constraints (the remaining rows
/// are always present). The box keeps every relaxation bounded, and a relaxed optimum
/// that satisfies all rows is an optimal vertex of `full`. Only the primal and the
/// objective value of the result are meaningful.
template <class T>
LpOutcome<T> solve_lazily(const LinearProgram<T>& full, std::size_t lazy) {
  const std::size_t batch = std::max<std::size_t>(16, 2 * full.num_variables());
  if (lazy <= 2 * batch) return solve_optimal(full);
  std::vector<bool> active(lazy, false);
  for (std::size_t i = 0; i < batch; ++i) active[i] = true;
  for (;;) {
    LinearProgram<T> sub;
    sub.objective = full.objective;
    sub.lower = full.lower;
    sub.upper = full.upper;
    for (std::size_t i = 0; i < lazy; ++i)
      if (active[i]) sub.constraints.push_back(full.constraints[i]);
    for (std::size_t i = lazy; i < full.constraints.size(); ++i) sub.constraints.push_back(full.constraints[i]);
    auto out = solve_optimal(sub);

    std::vector<std::pair<T, std::size_t>> violated;
    for (std::size_t i = 0; i < lazy; ++i) {
      if (active[i]) continue;
      T gap = shortfall<T>(full.constraints[i], out.primal);
      if constexpr (is_exact_v<T>) {
        if (gap > 0) violated.emplace_back(std::move(gap), i);
      } else {
        if (gap > kFloatVerdictEps * 1e-3) violated.emplace_back(gap, i);
      }
    }
    if (violated.empty()) return out;
    std::stable_sort(violated.begin(), violated.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t k = 0; k < std::min(batch, violated.size()); ++k) active[violated[k].second] = true;
  }
}

int sign_row_coefficient(Restriction r) {
  // Dual of the sign row: sum lambda q = +mu (c < 0) or -mu (c > 0).
  return r == Restriction::Euclidean ? 1 : r == Restriction::AntiEuclidean ? -1 : 0;
}

}  // namespace

template <class T>
RationalizabilityVerdict<T> rationalize_restricted(const ObservationSet<T>& data, Restriction restriction) {
  data.validate();
  const std::size_t n = data.dimension;
  RationalizabilityVerdict<T> verdict;
  verdict.restriction = restriction;
  verdict.note = dimension_note<T>(n);

  auto mp = margin_program(data, restriction);
  const std::size_t lazy = data.size();
  auto best = solve_lazily(mp.lp, lazy);
  verdict.epsilon = best.primal[mp.epsilon];
  bool yes = strictly_positive(verdict.epsilon);

  if (yes && mp.delta) {
    // Second stage: maximise delta while keeping a strict margin at least as large.
    auto second = mp.lp;
    for (auto& v : second.objective) v = T(0);
    second.objective[*mp.delta] = T(1);
    std::vector<T> row(second.num_variables(), T(0));
    row[mp.epsilon] = T(1);
    row[*mp.delta] = T(-1);
    second.add_constraint(std::move(row), Relation::GreaterEqual, T(0));
    best = solve_lazily(second, lazy);
    verdict.sign_margin = best.primal[*mp.delta];
    yes = strictly_positive(*verdict.sign_margin);
  }

  verdict.rationalizable = yes;
  if (yes) verdict.witness = witness_from(best.primal, n);
  else verdict.certificate = certificate_lp(data, restriction);
  return verdict;
}

template <class T>
RationalizabilityVerdict<T> rationalize(const ObservationSet<T>& data) {
  return rationalize_restricted(data, Restriction::None);
}

template <class T>
Certificate<T> certificate_lp(const ObservationSet<T>& data, Restriction restriction) {
  data.validate();
  const std::size_t n = data.dimension;
  const std::size_t m = data.size();
  const int sign_coef = sign_row_coefficient(restriction);

  LinearProgram<T> lp;
  for (std::size_t k = 0; k < m; ++k) lp.add_variable(T(k < data.weak.size() ? 0 : 1), T(0), std::nullopt);
  std::optional<std::size_t> mu;
  if (sign_coef != 0) mu = lp.add_variable(T(1), T(0), std::nullopt);
  const std::size_t vars = lp.num_variables();

  std::vector<Difference<T>> diffs;
  diffs.reserve(m);
  for (const auto& cmp : data.weak) diffs.push_back(difference(cmp));
  for (const auto& cmp : data.strict) diffs.push_back(difference(cmp));

  lp.add_constraint(std::vector<T>(vars, T(1)), Relation::Equal, T(1));
  if (restriction != Restriction::Linear) {
    std::vector<T> row(vars, T(0));
    for (std::size_t k = 0; k < m; ++k) row[k] = diffs[k].q;
    if (mu) row[*mu] = T(-sign_coef);
    lp.add_constraint(std::move(row), Relation::Equal, T(0));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<T> row(vars, T(0));
    for (std::size_t k = 0; k < m; ++k) row[k] = diffs[k].v[i];
    lp.add_constraint(std::move(row), Relation::Equal, T(0));
  }

  Certificate<T> cert;
  cert.weak_weights.assign(data.weak.size(), T(0));
  cert.strict_weights.assign(data.strict.size(), T(0));
  const auto out = solve(lp);
  if (out.status != LpStatus::Optimal) return cert;  // no balanced weighting at all: pmass 0
  for (std::size_t k = 0; k < m; ++k) {
    if (k < data.weak.size()) cert.weak_weights[k] = out.primal[k];
    else cert.strict_weights[k - data.weak.size()] = out.primal[k];
  }
  if (mu) cert.sign_weight = out.primal[*mu];
  cert.pmass = out.objective_value;
  return cert;
}

template <class T>
bool witness_valid(const ObservationSet<T>& data, const SphericalParams<T>& witness, Restriction restriction) {
  require_same_dimension(data.dimension, witness.dimension());
  const int s = sign_of(witness.c);
  if (restriction == Restriction::Linear && s != 0) return false;
  if (restriction == Restriction::Euclidean && s >= 0) return false;
  if (restriction == Restriction::AntiEuclidean && s <= 0) return false;
  auto margin = [&](const Comparison<T>& cmp) { return T(utility(witness, cmp.better) - utility(witness, cmp.worse)); };
  for (const auto& cmp : data.weak) {
    const T g = margin(cmp);
    if constexpr (is_exact_v<T>) {
      if (g < 0) return false;
    } else if (g < -kFloatVerdictEps) {
      return false;
    }
  }
  for (const auto& cmp : data.strict)
    if (!(margin(cmp) > 0)) return false;
  return true;
}

template <class T>
bool certificate_valid(const ObservationSet<T>& data, const Certificate<T>& cert, Restriction restriction) {
  if (cert.weak_weights.size() != data.weak.size() || cert.strict_weights.size() != data.strict.size()) return false;
  T total = cert.sign_weight, strict_mass = cert.sign_weight, q_sum(0);
  if (cert.sign_weight < 0) return false;
  if (sign_row_coefficient(restriction) == 0 && cert.sign_weight != 0) return false;
  Vec<T> v_sum = Vec<T>::zeros(data.dimension);
  auto accumulate = [&](const Comparison<T>& cmp, const T& w) {
    const auto diff = difference(cmp);
    q_sum += w * diff.q;
    v_sum += w * diff.v;
    total += w;
  };
  for (std::size_t k = 0; k < data.weak.size(); ++k) {
    if (cert.weak_weights[k] < 0) return false;
    accumulate(data.weak[k], cert.weak_weights[k]);
  }
  for (std::size_t k = 0; k < data.strict.size(); ++k) {
    if (cert.strict_weights[k] < 0) return false;
    accumulate(data.strict[k], cert.strict_weights[k]);
    strict_mass += cert.strict_weights[k];
  }
  if (!is_zero_within(T(total - 1))) return false;
  if (!strictly_positive(strict_mass)) return false;
  if (restriction != Restriction::Linear &&
      !is_zero_within(T(q_sum - sign_row_coefficient(restriction) * cert.sign_weight)))
    return false;
  for (const auto& v : v_sum)
    if (!is_zero_within(v)) return false;
  return true;
}

template <class T>
ObservationSet<T> generate_dataset(const SphericalParams<T>& params, std::size_t count, std::uint64_t seed,
                                   double radius) {
  if (count == 0) throw std::invalid_argument("count must be >= 1");
  if (!(radius > 0)) throw std::invalid_argument("radius must be positive");
  const std::size_t n = params.dimension();
  ObservationSet<T> data;
  data.dimension = n;
  Rng rng(splitmix64(seed));
  auto draw = [&]() {
    std::vector<T> coords;
    for (std::size_t i = 0; i < n; ++i) {
      if constexpr (is_exact_v<T>) {
        // Grid of spacing radius / 1024 keeps the rationals short.
        const long k = std::uniform_int_distribution<long>(-1024, 1024)(rng);
        coords.push_back(Rational(rational_from_double(radius) * make_rational(k, 1024)));
      } else {
        coords.push_back(std::uniform_real_distribution<double>(-radius, radius)(rng));
      }
    }
    return Vec<T>(std::move(coords));
  };
  for (std::size_t k = 0; k < count; ++k) {
    Vec<T> x = draw();
    Vec<T> y = draw();
    switch (compare(params, x, y)) {
      case Ordering::Better: data.strict.push_back({x, y}); break;
      case Ordering::Worse: data.strict.push_back({y, x}); break;
      case Ordering::Indifferent:
        data.weak.push_back({x, y});
        data.weak.push_back({y, x});
        break;
    }
  }
  return data;
}

template <class T>
std::vector<RationalizabilityVerdict<T>> rationalize_all(std::span<const ObservationSet<T>> datasets,
                                                         Restriction restriction, Execution execution) {
  std::vector<RationalizabilityVerdict<T>> out(datasets.size());
  for_each_index(datasets.size(), execution,
                 [&](std::size_t i) { out[i] = rationalize_restricted(datasets[i], restriction); });
  return out;
}

#define SPHERICAL_INSTANTIATE(T)                                                                                   \
  template struct ObservationSet<T>;                                                                               \
  template RationalizabilityVerdict<T> rationalize(const ObservationSet<T>&);                                      \
  template RationalizabilityVerdict<T> rationalize_restricted(const ObservationSet<T>&, Restriction);              \
  template Certificate<T> certificate_lp(const ObservationSet<T>&, Restriction);                                   \
  template bool witness_valid(const ObservationSet<T>&, const SphericalParams<T>&, Restriction);                   \
  template bool certificate_valid(const ObservationSet<T>&, const Certificate<T>&, Restriction);                   \
  template ObservationSet<T> generate_dataset(const SphericalParams<T>&, std::size_t, std::uint64_t, double);      \
  template std::vector<RationalizabilityVerdict<T>> rationalize_all(std::span<const ObservationSet<T>>, Restriction, \
                                                                    Execution);

SPHERICAL_INSTANTIATE(double)
SPHERICAL_INSTANTIATE(Rational)
#undef SPHERICAL_INSTANTIATE

}  // namespace spherical
