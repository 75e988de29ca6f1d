#include <gtest/gtest.h>

#include <sstream>

#include "spherical/lp.hpp"
#include "spherical/sampling.hpp"

using namespace spherical;
using Q = Rational;

namespace {

struct Half {
  Q a, b, rhs;  // a x + b y <= rhs
};

// Optimum of max cx x + cy y over a bounded 2-D polygon by enumerating every pairwise
// intersection of boundary lines. nullopt if the polygon is empty.
std::optional<Q> brute_force_max(const std::vector<Half>& hs, const Q& cx, const Q& cy) {
  std::optional<Q> best;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const Q det = hs[i].a * hs[j].b - hs[i].b * hs[j].a;
      if (det == 0) continue;
      const Q x = (hs[i].rhs * hs[j].b - hs[i].b * hs[j].rhs) / det;
      const Q y = (hs[i].a * hs[j].rhs - hs[i].rhs * hs[j].a) / det;
      bool ok = true;
      for (const auto& h : hs) ok = ok && h.a * x + h.b * y <= h.rhs;
      if (!ok) continue;
      const Q v = cx * x + cy * y;
      if (!best || v > *best) best = v;
    }
  return best;
}

LinearProgram<Q> two_var(const std::vector<Half>& rows, const Q& cx, const Q& cy) {
  LinearProgram<Q> lp;
  lp.add_variable(cx);
  lp.add_variable(cy);
  for (const auto& h : rows) lp.add_constraint({h.a, h.b}, Relation::LessEqual, h.rhs);
  return lp;
}

template <class T>
void expect_primal_feasible_exact(const LinearProgram<T>& lp, const LpOutcome<T>& out) {
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    if (lp.lower[j]) EXPECT_GE(out.primal[j], *lp.lower[j]);
    if (lp.upper[j]) EXPECT_LE(out.primal[j], *lp.upper[j]);
  }
  for (const auto& row : lp.constraints) {
    T lhs(0);
    for (std::size_t j = 0; j < lp.num_variables(); ++j) lhs += row.coefficients[j] * out.primal[j];
    switch (row.relation) {
      case Relation::LessEqual: EXPECT_LE(lhs, row.rhs); break;
      case Relation::GreaterEqual: EXPECT_GE(lhs, row.rhs); break;
      case Relation::Equal: EXPECT_EQ(lhs, row.rhs); break;
    }
  }
}

void expect_complementary_slackness(const LinearProgram<Q>& lp, const LpOutcome<Q>& out) {
  ASSERT_EQ(out.duals.size(), lp.constraints.size());
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& row = lp.constraints[i];
    Q lhs = 0;
    for (std::size_t j = 0; j < lp.num_variables(); ++j) lhs += row.coefficients[j] * out.primal[j];
    EXPECT_EQ(out.duals[i] * (row.rhs - lhs), 0);
    if (row.relation == Relation::LessEqual) EXPECT_GE(out.duals[i], 0);
    if (row.relation == Relation::GreaterEqual) EXPECT_LE(out.duals[i], 0);
  }
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    const Q& r = out.reduced_costs[j];
    if (r > 0) {
      ASSERT_TRUE(lp.upper[j].has_value());
      EXPECT_EQ(out.primal[j], *lp.upper[j]);
    } else if (r < 0) {
      ASSERT_TRUE(lp.lower[j].has_value());
      EXPECT_EQ(out.primal[j], *lp.lower[j]);
    }
  }
  const auto dual = dual_objective(lp, out);
  ASSERT_TRUE(dual.has_value());
  EXPECT_EQ(*dual, out.objective_value);
}

}  // namespace

TEST(Lp, SingleBoundedVariable) {
  LinearProgram<Q> lp;
  lp.add_variable(1);
  lp.add_constraint({1}, Relation::LessEqual, 1);
  lp.add_constraint({1}, Relation::GreaterEqual, 0);
  const auto out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.primal[0], 1);
  EXPECT_EQ(out.objective_value, 1);
  expect_complementary_slackness(lp, out);
}

TEST(Lp, ContradictoryRowsGiveFarkasCertificate) {
  LinearProgram<Q> lp;
  lp.add_variable(1, std::nullopt);
  lp.add_constraint({1}, Relation::LessEqual, 1);
  lp.add_constraint({1}, Relation::GreaterEqual, 2);
  const auto out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::Infeasible);
  ASSERT_EQ(out.farkas.size(), 2u);
  EXPECT_GT(out.farkas[0], 0);
  EXPECT_LT(out.farkas[1], 0);
  EXPECT_TRUE(certifies_infeasibility(lp, out.farkas));
  EXPECT_FALSE(certifies_infeasibility(lp, std::vector<Q>{0, 0}));
}

TEST(Lp, SmallPolytopeMatchesVertexEnumeration) {
  const std::vector<Half> rows{{1, 1, 3}, {1, 0, 2}, {0, 1, 2}};
  std::vector<Half> all = rows;
  all.push_back({-1, 0, 0});
  all.push_back({0, -1, 0});
  const auto expected = brute_force_max(all, 1, 1);
  ASSERT_TRUE(expected.has_value());
  EXPECT_EQ(*expected, 3);
  const auto lp = two_var(rows, 1, 1);
  const auto out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.objective_value, 3);
  expect_primal_feasible_exact(lp, out);
  expect_complementary_slackness(lp, out);
}

TEST(Lp, UnboundedDetected) {
  LinearProgram<Q> lp;
  lp.add_variable(1);
  lp.add_variable(0);
  lp.add_constraint({1, -1}, Relation::LessEqual, 1);
  EXPECT_EQ(solve(lp).status, LpStatus::Unbounded);
}

TEST(Lp, EqualityAndFreeVariables) {
  // max x - y, x + y = 1, -5 <= x <= 5, y free, y >= x - 3.
  LinearProgram<Q> lp;
  lp.add_variable(1, Q(-5), Q(5));
  lp.add_variable(-1, std::nullopt);
  lp.add_constraint({1, 1}, Relation::Equal, 1);
  lp.add_constraint({-1, 1}, Relation::GreaterEqual, -3);
  const auto out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.primal[0], 2);
  EXPECT_EQ(out.primal[1], -1);
  EXPECT_EQ(out.objective_value, 3);
  expect_primal_feasible_exact(lp, out);
  expect_complementary_slackness(lp, out);
}

TEST(Lp, UpperOnlyBound) {
  LinearProgram<Q> lp;
  lp.add_variable(-1, std::nullopt, Q(4));
  lp.add_constraint({1}, Relation::GreaterEqual, Q(-7, 2));
  const auto out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::Optimal);
  EXPECT_EQ(out.primal[0], Q(-7, 2));
  expect_complementary_slackness(lp, out);
}

TEST(Lp, MalformedRejected) {
  LinearProgram<Q> lp;
  lp.add_variable(1);
  lp.constraints.push_back({{1, 2}, Relation::LessEqual, 1});
  EXPECT_THROW(solve(lp), MalformedProgram);
  LinearProgram<Q> bad_bounds;
  bad_bounds.add_variable(1, Q(2), Q(1));
  EXPECT_THROW(solve(bad_bounds), MalformedProgram);
}

TEST(LpProperty, RandomTwoVariableProgramsMatchBruteForce) {
  Rng rng(101);
  int optimal = 0, infeasible = 0;
  for (int t = 0; t < 400; ++t) {
    std::vector<Half> rows;
    const int m = 2 + t % 4;
    for (int k = 0; k < m; ++k) rows.push_back({sample_scalar<Q>(rng, 3), sample_scalar<Q>(rng, 3), sample_scalar<Q>(rng, 4)});
    rows.push_back({1, 0, 10});
    rows.push_back({0, 1, 10});
    const Q cx = sample_scalar<Q>(rng, 2), cy = sample_scalar<Q>(rng, 2);
    std::vector<Half> all = rows;
    all.push_back({-1, 0, 0});
    all.push_back({0, -1, 0});
    const auto expected = brute_force_max(all, cx, cy);
    const auto lp = two_var(rows, cx, cy);
    const auto out = solve(lp);
    if (!expected) {
      ++infeasible;
      ASSERT_EQ(out.status, LpStatus::Infeasible);
      EXPECT_TRUE(certifies_infeasibility(lp, out.farkas));
    } else {
      ++optimal;
      ASSERT_EQ(out.status, LpStatus::Optimal);
      EXPECT_EQ(out.objective_value, *expected);
      expect_primal_feasible_exact(lp, out);
      expect_complementary_slackness(lp, out);
    }
  }
  EXPECT_GT(optimal, 50);
  EXPECT_GT(infeasible, 20);
}

TEST(LpProperty, RandomMixedProgramsSatisfyDuality) {
  Rng rng(102);
  for (int t = 0; t < 200; ++t) {
    LinearProgram<Q> lp;
    const int nv = 2 + t % 4;
    for (int j = 0; j < nv; ++j) {
      switch ((t + j) % 4) {
        case 0: lp.add_variable(sample_scalar<Q>(rng, 2)); break;
        case 1: lp.add_variable(sample_scalar<Q>(rng, 2), Q(-1), Q(1)); break;
        case 2: lp.add_variable(sample_scalar<Q>(rng, 2), Q(1, 2), Q(3)); break;
        default: lp.add_variable(sample_scalar<Q>(rng, 2), Q(-2), Q(-1, 3)); break;
      }
    }
    const int m = 1 + t % 5;
    for (int i = 0; i < m; ++i) {
      std::vector<Q> row;
      for (int j = 0; j < nv; ++j) row.push_back(sample_scalar<Q>(rng, 2));
      lp.add_constraint(row, static_cast<Relation>(i % 3), sample_scalar<Q>(rng, 3));
    }
    for (int j = 0; j < nv; ++j) {
      std::vector<Q> row(nv, Q(0));
      row[j] = 1;
      lp.add_constraint(row, Relation::LessEqual, 8);
    }
    const auto out = solve(lp);
    ASSERT_NE(out.status, LpStatus::Unbounded);
    if (out.status == LpStatus::Optimal) {
      expect_primal_feasible_exact(lp, out);
      expect_complementary_slackness(lp, out);
    } else {
      EXPECT_TRUE(certifies_infeasibility(lp, out.farkas));
    }
  }
}

TEST(LpProperty, DeterministicOutcome) {
  const auto lp = two_var({{1, 1, 3}, {1, 0, 2}, {0, 1, 2}, {1, -1, 0}}, 1, 1);
  const auto a = solve(lp), b = solve(lp);
  EXPECT_EQ(a.primal, b.primal);
  EXPECT_EQ(a.duals, b.duals);
  EXPECT_EQ(a.objective_value, b.objective_value);
}

TEST(LpProperty, FloatAgreesWithExactOnWellSeparatedPrograms) {
  Rng rng(103);
  for (int t = 0; t < 200; ++t) {
    std::vector<Half> rows;
    for (int k = 0; k < 3; ++k) rows.push_back({sample_scalar<Q>(rng, 3), sample_scalar<Q>(rng, 3), sample_scalar<Q>(rng, 4)});
    rows.push_back({1, 0, 10});
    rows.push_back({0, 1, 10});
    const Q cx = sample_scalar<Q>(rng, 2), cy = sample_scalar<Q>(rng, 2);
    const auto exact = solve(two_var(rows, cx, cy));
    LinearProgram<double> lpf;
    lpf.add_variable(to_double(cx));
    lpf.add_variable(to_double(cy));
    for (const auto& h : rows) lpf.add_constraint({to_double(h.a), to_double(h.b)}, Relation::LessEqual, to_double(h.rhs));
    const auto approx = solve(lpf);
    EXPECT_EQ(approx.status, exact.status);
    if (exact.status == LpStatus::Optimal)
      EXPECT_NEAR(approx.objective_value, to_double(exact.objective_value), 1e-9 * (1 + abs_value(approx.objective_value)));
  }
}

TEST(Lp, TraceWritesTsvTableaus) {
  std::ostringstream trace;
  LpOptions options;
  options.trace = &trace;
  solve(two_var({{1, 1, 3}, {1, 0, 2}, {0, 1, 2}}, 1, 1), options);
  const std::string text = trace.str();
  ASSERT_FALSE(text.empty());
  EXPECT_NE(text.find('\t'), std::string::npos);
  std::istringstream lines(text);
  std::string line;
  std::size_t tabbed = 0;
  while (std::getline(lines, line)) tabbed += line.find('\t') != std::string::npos;
  EXPECT_GE(tabbed, 4u);
}
