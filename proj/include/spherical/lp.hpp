#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spherical/rational.hpp"

namespace spherical {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class LpStatus { Optimal, Infeasible, Unbounded };
const char* to_string(LpStatus status);

class MalformedProgram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// maximize objective.x subject to rows and per-variable bounds (nullopt = unbounded side).
template <class T>
struct LinearProgram {
  struct Row {
    std::vector<T> coefficients;
    Relation relation = Relation::LessEqual;
    T rhs{0};
  };

  std::vector<T> objective;
  std::vector<Row> constraints;
  std::vector<std::optional<T>> lower;
  std::vector<std::optional<T>> upper;

  std::size_t num_variables() const { return objective.size(); }

  std::size_t add_variable(T cost, std::optional<T> lo = T(0), std::optional<T> hi = std::nullopt) {
    objective.push_back(std::move(cost));
    lower.push_back(std::move(lo));
    upper.push_back(std::move(hi));
    for (auto& row : constraints) row.coefficients.resize(objective.size(), T(0));
    return objective.size() - 1;
  }

  std::size_t add_constraint(std::vector<T> coefficients, Relation relation, T rhs) {
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
    return constraints.size() - 1;
  }
};

template <class T>
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<T> primal;         // Optimal only
  T objective_value{0};          // Optimal only
  std::vector<T> duals;          // per constraint, Optimal only; >= 0 on <= rows, <= 0 on >= rows
  std::vector<T> reduced_costs;  // objective_j - duals . column_j, Optimal only
  /// Infeasible only: per-constraint multipliers y with the sign pattern of `duals` such
  /// that the implied row y.A x <= y.b cannot hold anywhere in the bound box.
  std::vector<T> farkas;
};

struct LpOptions {
  /// When set, every tableau (after setup and after each pivot) is written here as TSV.
  std::ostream* trace = nullptr;
};

/// Two-phase primal simplex with Bland's rule. Deterministic; exact for Rational.
template <class T>
LpOutcome<T> solve(const LinearProgram<T>& lp, const LpOptions& options = {});

/// y.b plus the bound terms picked out by the reduced-cost signs. Equals the primal
/// objective at an optimal, dual-feasible pair. nullopt if a needed bound is missing.
template <class T>
std::optional<T> dual_objective(const LinearProgram<T>& lp, const LpOutcome<T>& outcome);

/// Checks that `multipliers` prove infeasibility: sign-correct per relation, and the
/// minimum of (y.A).x over the bound box strictly exceeds y.b.
template <class T>
bool certifies_infeasibility(const LinearProgram<T>& lp, const std::vector<T>& multipliers);

}  // namespace spherical
