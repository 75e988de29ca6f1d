#include "spherical/lp.hpp"

#include <cmath>
#include <ostream>

namespace spherical {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

// Float pivots treat anything within this of zero as zero.
constexpr double kFloatEps = 1e-9;

template <class T>
bool positive(const T& v) {
  if constexpr (is_exact_v<T>) return sgn(v) > 0;
  else return v > kFloatEps;
}

template <class T>
bool negative(const T& v) {
  return positive(T(-v));
}

template <class T>
bool nonzero(const T& v) {
  return positive(v) || negative(v);
}

Relation flip(Relation r) {
  switch (r) {
    case Relation::LessEqual: return Relation::GreaterEqual;
    case Relation::GreaterEqual: return Relation::LessEqual;
    case Relation::Equal: return Relation::Equal;
  }
  return r;
}

template <class T>
void validate(const LinearProgram<T>& lp) {
  const std::size_t n = lp.num_variables();
  if (lp.lower.size() != n || lp.upper.size() != n) throw MalformedProgram("bound vectors must match objective length");
  for (std::size_t i = 0; i < lp.constraints.size(); ++i)
    if (lp.constraints[i].coefficients.size() != n)
      throw MalformedProgram("constraint " + std::to_string(i) + " has the wrong number of coefficients");
  for (std::size_t j = 0; j < n; ++j)
    if (lp.lower[j] && lp.upper[j] && *lp.lower[j] > *lp.upper[j])
      throw MalformedProgram("variable " + std::to_string(j) + " has lower bound above upper bound");
}

/// Standard-form tableau: rows are equalities over nonnegative columns, rhs >= 0, and
/// every row owns one identity column (its slack or artificial) so B^-1 can be read off.
template <class T>
class Tableau {
 public:
  struct Column {
    std::size_t variable;
    int sign;
  };

  explicit Tableau(const LinearProgram<T>& lp, std::ostream* trace) : lp_(lp), trace_(trace) {
    const std::size_t n = lp.num_variables();
    offset_.assign(n, T(0));
    std::vector<std::pair<std::size_t, T>> bound_rows;  // column, width
    for (std::size_t j = 0; j < n; ++j) {
      const auto& lo = lp.lower[j];
      const auto& hi = lp.upper[j];
      if (lo && hi && *lo < 0 && *hi > 0) {
        // Split around zero so a nonbasic variable sits at 0 rather than at a bound.
        columns_.push_back({j, +1});
        bound_rows.emplace_back(columns_.size() - 1, *hi);
        columns_.push_back({j, -1});
        bound_rows.emplace_back(columns_.size() - 1, T(-*lo));
      } else if (lo) {
        offset_[j] = *lo;
        columns_.push_back({j, +1});
        if (hi) bound_rows.emplace_back(columns_.size() - 1, T(*hi - *lo));
      } else if (hi) {
        offset_[j] = *hi;
        columns_.push_back({j, -1});
      } else {
        columns_.push_back({j, +1});
        columns_.push_back({j, -1});
      }
    }
    structural_ = columns_.size();
    original_rows_ = lp.constraints.size();

    std::vector<std::vector<T>> rows;
    std::vector<Relation> relations;
    std::vector<T> rhs;
    for (const auto& c : lp.constraints) {
      std::vector<T> row(structural_, T(0));
      T b = c.rhs;
      for (std::size_t k = 0; k < structural_; ++k) row[k] = c.coefficients[columns_[k].variable] * columns_[k].sign;
      for (std::size_t j = 0; j < n; ++j) b -= c.coefficients[j] * offset_[j];
      rows.push_back(std::move(row));
      relations.push_back(c.relation);
      rhs.push_back(std::move(b));
    }
    for (auto& [col, width] : bound_rows) {
      std::vector<T> row(structural_, T(0));
      row[col] = T(1);
      rows.push_back(std::move(row));
      relations.push_back(Relation::LessEqual);
      rhs.push_back(width);
    }
    const std::size_t m = rows.size();
    flipped_.assign(m, false);
    for (std::size_t r = 0; r < m; ++r) {
      // Zero-rhs >= rows flip too, so their slack can start in the basis.
      if (rhs[r] < 0 || (rhs[r] == 0 && relations[r] == Relation::GreaterEqual)) {
        for (auto& v : rows[r]) v = -v;
        rhs[r] = -rhs[r];
        relations[r] = flip(relations[r]);
        flipped_[r] = true;
      }
    }

    // Auxiliary columns, then the tableau proper.
    std::size_t next = structural_;
    identity_.resize(m);
    basis_.resize(m);
    std::vector<std::pair<std::size_t, T>> surplus(m, {SIZE_MAX, T(0)});
    for (std::size_t r = 0; r < m; ++r) {
      if (relations[r] == Relation::LessEqual) {
        identity_[r] = next++;
      } else {
        if (relations[r] == Relation::GreaterEqual) surplus[r] = {next++, T(-1)};
        identity_[r] = next++;
        artificial_.push_back(identity_[r]);
      }
      basis_[r] = identity_[r];
    }
    width_ = next;
    is_artificial_.assign(width_, false);
    for (auto a : artificial_) is_artificial_[a] = true;
    tab_.assign(m, std::vector<T>(width_ + 1, T(0)));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t k = 0; k < structural_; ++k) tab_[r][k] = rows[r][k];
      if (surplus[r].first != SIZE_MAX) tab_[r][surplus[r].first] = surplus[r].second;
      tab_[r][identity_[r]] = T(1);
      tab_[r][width_] = rhs[r];
    }
  }

  bool has_artificials() const { return !artificial_.empty(); }

  /// Maximises cost.x from the current basis. Returns false if unbounded.
  bool optimise(const std::vector<T>& cost, bool allow_artificial) {
    std::vector<T> reduced(width_ + 1, T(0));
    for (std::size_t j = 0; j < width_; ++j) reduced[j] = cost[j];
    for (std::size_t r = 0; r < tab_.size(); ++r) {
      const T& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j) reduced[j] -= cb * tab_[r][j];
    }
    dump("start");
    for (;;) {
      std::size_t enter = SIZE_MAX;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!allow_artificial && is_artificial_[j]) continue;
        if (positive(reduced[j])) {
          enter = j;
          break;
        }
      }
      if (enter == SIZE_MAX) return true;
      std::size_t leave = SIZE_MAX;
      T best_ratio(0);
      for (std::size_t r = 0; r < tab_.size(); ++r) {
        if (!positive(tab_[r][enter])) continue;
        T ratio = tab_[r][width_] / tab_[r][enter];
        if (leave == SIZE_MAX || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == SIZE_MAX) return false;
      pivot(leave, enter, &reduced);
    }
  }

  /// Pivots zero-level artificials out of the basis where a non-artificial column allows it.
  void expel_artificials() {
    for (std::size_t r = 0; r < tab_.size(); ++r) {
      if (!is_artificial_[basis_[r]]) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!is_artificial_[j] && nonzero(tab_[r][j])) {
          pivot(r, j, nullptr);
          break;
        }
      }
    }
  }

  std::vector<T> phase_one_cost() const {
    std::vector<T> cost(width_, T(0));
    for (auto a : artificial_) cost[a] = T(-1);
    return cost;
  }

  std::vector<T> phase_two_cost() const {
    std::vector<T> cost(width_, T(0));
    for (std::size_t k = 0; k < structural_; ++k) cost[k] = lp_.objective[columns_[k].variable] * columns_[k].sign;
    return cost;
  }

  T value(const std::vector<T>& cost) const {
    T v(0);
    for (std::size_t r = 0; r < tab_.size(); ++r) v += cost[basis_[r]] * tab_[r][width_];
    return v;
  }

  /// y = c_B B^-1, mapped back to the caller's constraint orientation.
  std::vector<T> row_duals(const std::vector<T>& cost) const {
    std::vector<T> y(original_rows_, T(0));
    for (std::size_t i = 0; i < original_rows_; ++i) {
      T acc(0);
      for (std::size_t r = 0; r < tab_.size(); ++r) acc += cost[basis_[r]] * tab_[r][identity_[i]];
      y[i] = flipped_[i] ? T(-acc) : acc;
    }
    return y;
  }

  std::vector<T> primal() const {
    std::vector<T> x = offset_;
    for (std::size_t r = 0; r < tab_.size(); ++r) {
      const std::size_t col = basis_[r];
      if (col < structural_) x[columns_[col].variable] += tab_[r][width_] * columns_[col].sign;
    }
    return x;
  }

 private:
  void pivot(std::size_t row, std::size_t col, std::vector<T>* reduced) {
    auto& pr = tab_[row];
    const T p = pr[col];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (pr[j] == 0) continue;
      pr[j] /= p;
      support.push_back(j);
    }
    auto eliminate = [&](std::vector<T>& target) {
      const T f = target[col];
      if (f == 0) return;
      for (std::size_t j : support) {
        target[j] -= f * pr[j];
        if constexpr (!is_exact_v<T>) {
          if (std::fabs(target[j]) < 1e-13) target[j] = 0;
        }
      }
    };
    for (std::size_t r = 0; r < tab_.size(); ++r)
      if (r != row) eliminate(tab_[r]);
    if (reduced) eliminate(*reduced);
    basis_[row] = col;
    dump("pivot");
  }

  void dump(const char* label) const {
    if (!trace_) return;
    std::ostream& os = *trace_;
    os << "# " << label << "\tbasis";
    for (auto b : basis_) os << '\t' << b;
    os << '\n';
    for (const auto& row : tab_) {
      for (std::size_t j = 0; j <= width_; ++j) os << (j ? "\t" : "") << row[j];
      os << '\n';
    }
  }

  const LinearProgram<T>& lp_;
  std::ostream* trace_;
  std::vector<Column> columns_;
  std::vector<T> offset_;
  std::size_t structural_ = 0;
  std::size_t original_rows_ = 0;
  std::size_t width_ = 0;
  std::vector<bool> flipped_;
  std::vector<std::size_t> identity_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> artificial_;
  std::vector<bool> is_artificial_;
  std::vector<std::vector<T>> tab_;
};

}  // namespace

template <class T>
LpOutcome<T> solve(const LinearProgram<T>& lp, const LpOptions& options) {
  validate(lp);
  Tableau<T> tableau(lp, options.trace);
  LpOutcome<T> out;
  if (tableau.has_artificials()) {
    const auto cost = tableau.phase_one_cost();
    tableau.optimise(cost, true);  // bounded above by 0
    if (negative(tableau.value(cost))) {
      out.status = LpStatus::Infeasible;
      out.farkas = tableau.row_duals(cost);
      return out;
    }
    tableau.expel_artificials();
  }
  const auto cost = tableau.phase_two_cost();
  if (!tableau.optimise(cost, false)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.primal = tableau.primal();
  out.objective_value = T(0);
  for (std::size_t j = 0; j < lp.num_variables(); ++j) out.objective_value += lp.objective[j] * out.primal[j];
  out.duals = tableau.row_duals(cost);
  out.reduced_costs = lp.objective;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i)
    for (std::size_t j = 0; j < lp.num_variables(); ++j)
      out.reduced_costs[j] -= out.duals[i] * lp.constraints[i].coefficients[j];
  return out;
}

template <class T>
std::optional<T> dual_objective(const LinearProgram<T>& lp, const LpOutcome<T>& outcome) {
  if (outcome.status != LpStatus::Optimal) return std::nullopt;
  T value(0);
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) value += outcome.duals[i] * lp.constraints[i].rhs;
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    const T& r = outcome.reduced_costs[j];
    if (positive(r)) {
      if (!lp.upper[j]) return std::nullopt;
      value += r * *lp.upper[j];
    } else if (negative(r)) {
      if (!lp.lower[j]) return std::nullopt;
      value += r * *lp.lower[j];
    }
  }
  return value;
}

template <class T>
bool certifies_infeasibility(const LinearProgram<T>& lp, const std::vector<T>& y) {
  if (y.size() != lp.constraints.size()) return false;
  std::vector<T> combined(lp.num_variables(), T(0));
  T rhs(0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto& row = lp.constraints[i];
    if (row.relation == Relation::LessEqual && negative(y[i])) return false;
    if (row.relation == Relation::GreaterEqual && positive(y[i])) return false;
    for (std::size_t j = 0; j < combined.size(); ++j) combined[j] += y[i] * row.coefficients[j];
    rhs += y[i] * row.rhs;
  }
  T box_min(0);
  for (std::size_t j = 0; j < combined.size(); ++j) {
    if (positive(combined[j])) {
      if (!lp.lower[j]) return false;
      box_min += combined[j] * *lp.lower[j];
    } else if (negative(combined[j])) {
      if (!lp.upper[j]) return false;
      box_min += combined[j] * *lp.upper[j];
    }
  }
  return positive(T(box_min - rhs));
}

#define SPHERICAL_INSTANTIATE(T)                                                                      \
  template LpOutcome<T> solve(const LinearProgram<T>&, const LpOptions&);                            \
  template std::optional<T> dual_objective(const LinearProgram<T>&, const LpOutcome<T>&);            \
  template bool certifies_infeasibility(const LinearProgram<T>&, const std::vector<T>&);

SPHERICAL_INSTANTIATE(double)
SPHERICAL_INSTANTIATE(Rational)
#undef SPHERICAL_INSTANTIATE

}  // namespace spherical
