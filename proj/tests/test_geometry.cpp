#include <gtest/gtest.h>

#include "spherical/geometry.hpp"
#include "spherical/sampling.hpp"

using namespace spherical;

using Q = Rational;

TEST(Geometry, DotExamples) {
  EXPECT_EQ(dot(Vec<Q>{1, 0, 0}, Vec<Q>{0, 1, 0}), 0);
  EXPECT_EQ(dot(Vec<Q>{1, 1, 1}, Vec<Q>{1, 1, 1}), 3);
  EXPECT_EQ(dot(Vec<Q>{2, -1, 3}, Vec<Q>{1, 4, -2}), -8);
  EXPECT_DOUBLE_EQ(dot(Vec<double>{2, -1, 3}, Vec<double>{1, 4, -2}), -8.0);
}

TEST(Geometry, DotRejectsDimensionMismatch) {
  EXPECT_THROW(dot(Vec<Q>{1, 2}, Vec<Q>{1, 2, 3}), DimensionMismatch);
}

TEST(Geometry, EmptyVectorRejected) { EXPECT_THROW(Vec<double>(std::vector<double>{}), std::invalid_argument); }

TEST(Geometry, SqNormExamples) {
  EXPECT_EQ(sq_norm(Vec<Q>{0, 0, 0}), 0);
  EXPECT_EQ(sq_norm(Vec<Q>{3, 4, 0}), 25);
  EXPECT_EQ(sq_norm(Vec<Q>{Q(1, 2), Q(1, 3), 0}), Q(13, 36));
}

TEST(Geometry, ProjectOutExamples) {
  EXPECT_EQ(project_out(Vec<Q>{1, 1, 0}, {Vec<Q>{1, 0, 0}}), (Vec<Q>{0, 1, 0}));
  EXPECT_EQ(project_out(Vec<Q>{1, 0, 0}, {Vec<Q>{1, 0, 0}}), (Vec<Q>{0, 0, 0}));
  EXPECT_EQ(project_out(Vec<Q>{1, 2, 3}, {Vec<Q>{1, 0, 0}, Vec<Q>{0, 1, 0}}), (Vec<Q>{0, 0, 3}));
}

TEST(Geometry, ProjectOutSkipsZeroAndDependentBasis) {
  const Vec<Q> v{1, 2, 3};
  EXPECT_EQ(project_out(v, {Vec<Q>{0, 0, 0}}), v);
  EXPECT_EQ(project_out(v, {Vec<Q>{1, 1, 0}, Vec<Q>{2, 2, 0}}), (Vec<Q>{Q(-1, 2), Q(1, 2), 3}));
  const auto f = project_out(Vec<double>{1, 2, 3}, {Vec<double>{0, 0, 0}, Vec<double>{1, 1, 0}, Vec<double>{2, 2, 0}});
  EXPECT_NEAR(f[0], -0.5, 1e-15);
  EXPECT_NEAR(f[1], 0.5, 1e-15);
  EXPECT_NEAR(f[2], 3.0, 1e-15);
}

TEST(Geometry, ProjectOutDimensionMismatch) {
  EXPECT_THROW(project_out(Vec<Q>{1, 2, 3}, {Vec<Q>{1, 0}}), DimensionMismatch);
}

TEST(GeometryProperty, DotSymmetricAndBilinear) {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto a = sample_vec<Q>(rng, n, 4), b = sample_vec<Q>(rng, n, 4), c = sample_vec<Q>(rng, n, 4);
    const Q s = sample_scalar<Q>(rng, 3);
    EXPECT_EQ(dot(a, b), dot(b, a));
    EXPECT_EQ(dot(s * a + b, c), s * dot(a, c) + dot(b, c));
  }
}

TEST(GeometryProperty, ProjectionIsOrthogonalExactly) {
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 6;
    std::vector<Vec<Q>> basis;
    for (std::size_t k = 0; k < 1 + t % 4; ++k) basis.push_back(sample_vec<Q>(rng, n, 3));
    const auto v = sample_vec<Q>(rng, n, 3);
    const auto r = project_out<Q>(v, basis);
    for (const auto& b : basis) EXPECT_EQ(dot(r, b), 0);
  }
}

TEST(GeometryProperty, ProjectionIsOrthogonalInFloat) {
  Rng rng(13);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + t % 6;
    std::vector<Vec<double>> basis;
    for (std::size_t k = 0; k < 1 + t % 4; ++k) basis.push_back(sample_vec<double>(rng, n, 10));
    const auto v = sample_vec<double>(rng, n, 10);
    const auto r = project_out<double>(v, basis);
    for (const auto& b : basis)
      EXPECT_LE(std::fabs(dot(r, b)), 1e-12 * std::sqrt(sq_norm(v)) * std::sqrt(sq_norm(b)));
  }
}

TEST(GeometryProperty, Pythagoras) {
  Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 5;
    const auto a = sample_vec<Q>(rng, n, 5);
    const auto b = project_out(sample_vec<Q>(rng, n, 5), {a});
    ASSERT_EQ(dot(a, b), 0);
    EXPECT_EQ(sq_norm(Vec<Q>(a + b)), sq_norm(a) + sq_norm(b));
  }
}

TEST(GeometryProperty, EqualNormImagePreservesNorm) {
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto x = sample_vec<Q>(rng, n, 5);
    EXPECT_EQ(sq_norm(equal_norm_image(rng, x)), sq_norm(x));
    const auto xf = sample_vec<double>(rng, n, 5);
    EXPECT_NEAR(sq_norm(equal_norm_image(rng, xf)), sq_norm(xf), 1e-12 * (1 + sq_norm(xf)));
  }
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("3/6"), Q(1, 2));
  EXPECT_EQ(parse_rational("-7"), -7);
  EXPECT_EQ(parse_rational("0.25"), Q(1, 4));
  EXPECT_EQ(parse_rational("-1.5e2"), -150);
  EXPECT_EQ(parse_rational("2e-3"), Q(1, 500));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_EQ(rational_from_double(0.1), Q(3602879701896397, mpz_class("36028797018963968")));
}
