#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "spherical/io.hpp"
#include "spherical/sampling.hpp"

using namespace spherical;
using Q = Rational;

TEST(Io, ScalarForms) {
  EXPECT_EQ(scalar_to_json(Q(3)).dump(), "3");
  EXPECT_EQ(scalar_to_json(Q(-1, 2)).dump(), "\"-1/2\"");
  EXPECT_EQ(scalar_to_json(Q(mpz_class("123456789012345678901234567890"))).dump(),
            "\"123456789012345678901234567890\"");
  EXPECT_EQ(scalar_from_json<Q>(Json("6/4")), Q(3, 2));
  EXPECT_EQ(scalar_from_json<Q>(Json(0.5)), Q(1, 2));
  EXPECT_EQ(scalar_from_json<Q>(Json(7)), 7);
  EXPECT_EQ(scalar_from_json<double>(Json("1/4")), 0.25);
  EXPECT_EQ(scalar_to_json(0.1).dump(), "0.1");
  EXPECT_THROW(scalar_from_json<Q>(Json(true)), ParseError);
  EXPECT_THROW(scalar_from_json<Q>(Json("1/0")), ParseError);
}

TEST(Io, VectorDimensionChecked) {
  EXPECT_EQ(vec_from_json<Q>(Json::parse(R"([1, "2/3", 0.25])")), (Vec<Q>{1, Q(2, 3), Q(1, 4)}));
  EXPECT_THROW(vec_from_json<Q>(Json::parse("[]")), ParseError);
  EXPECT_THROW(vec_from_json<Q>(Json::parse("[1, 2]"), 3), ParseError);
  EXPECT_THROW(vec_from_json<Q>(Json::parse(R"({"a": 1})")), ParseError);
}

TEST(Io, ClassJson) {
  EXPECT_EQ(class_to_json(classify(SphericalParams<Q>{0, Vec<Q>{1, 0, 0}})).dump(), R"({"class":"linear","u":[1,0,0]})");
  EXPECT_EQ(class_to_json(classify(SphericalParams<Q>{-1, Vec<Q>{2, 0, 0}})).dump(),
            R"({"class":"euclidean","center":[1,0,0]})");
  EXPECT_EQ(class_to_json(classify(SphericalParams<Q>{1, Vec<Q>{1, 0, 0}})).dump(),
            R"({"class":"anti_euclidean","center":["-1/2",0,0]})");
  EXPECT_EQ(class_to_json(classify(SphericalParams<Q>{0, Vec<Q>{0, 0, 0}})).dump(), R"({"class":"indifference"})");
}

TEST(Io, ParamsRoundTrip) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const SphericalParams<Q> p{sample_scalar<Q>(rng, 3), sample_vec<Q>(rng, 1 + t % 5, 3)};
    EXPECT_EQ(params_from_json<Q>(Json::parse(params_to_json(p).dump())), p);
    const SphericalParams<double> f{sample_scalar<double>(rng, 3), sample_vec<double>(rng, 1 + t % 5, 3)};
    EXPECT_EQ(params_from_json<double>(Json::parse(params_to_json(f).dump())), f);
  }
  EXPECT_THROW(params_from_json<Q>(Json::parse(R"({"d": [1]})")), ParseError);
}

TEST(Io, DatasetRoundTrip) {
  const auto d = generate_dataset(SphericalParams<Q>{Q(-1, 3), Vec<Q>{1, 0, 2}}, 20, 5, 3.0);
  const auto back = dataset_from_json<Q>(Json::parse(dataset_to_json(d).dump()));
  EXPECT_EQ(back.dimension, d.dimension);
  ASSERT_EQ(back.strict.size(), d.strict.size());
  ASSERT_EQ(back.weak.size(), d.weak.size());
  for (std::size_t k = 0; k < d.strict.size(); ++k) {
    EXPECT_EQ(back.strict[k].better, d.strict[k].better);
    EXPECT_EQ(back.strict[k].worse, d.strict[k].worse);
  }
  EXPECT_THROW(dataset_from_json<Q>(Json::parse(R"({"dimension": 2, "weak": [], "strict": [{"better": [1], "worse": [0, 0]}]})")),
               ParseError);
  EXPECT_THROW(dataset_from_json<Q>(Json::parse(R"({"dimension": 0, "weak": [], "strict": []})")), ParseError);
}

TEST(Io, VerdictJson) {
  const Vec<Q> a{1, 0, 0}, b{0, 1, 0};
  const ObservationSet<Q> d{3, {}, {{a, b}, {b, a}}};
  const auto j = verdict_to_json(rationalize(d));
  EXPECT_EQ(j["rationalizable"], false);
  EXPECT_EQ(j["certificate"]["strict:0"], "1/2");
  EXPECT_EQ(j["certificate"]["strict:1"], "1/2");
  EXPECT_EQ(j["certificate_pmass"], 1);
  EXPECT_TRUE(j["witness"].is_null());

  const ObservationSet<Q> ok{3, {}, {{a, Vec<Q>{0, 0, 0}}}};
  const auto w = verdict_to_json(rationalize(ok));
  EXPECT_EQ(w["rationalizable"], true);
  EXPECT_TRUE(w["witness"].is_object());
  EXPECT_TRUE(w["certificate"].is_null());
}

TEST(Io, ReportJson) {
  AxiomReport<Q> r{"oioi", 10, 0, std::nullopt, std::nullopt};
  EXPECT_EQ(report_to_json(r).dump(), R"({"axiom":"oioi","trials":10,"violations":0,"counterexample":null})");
  r.violations = 1;
  r.counterexample = Counterexample<Q>{{{"w", Vec<Q>{0}}, {"x", Vec<Q>{1}}}, {}};
  EXPECT_EQ(report_to_json(r)["counterexample"]["x"], Json::parse("[1]"));
}

TEST(Io, DecompositionJson) {
  const QuadLinDecomposition<Q> dec{{{1, Q(1, 2)}, {Q(1, 2), 0}}, Vec<Q>{3, 4}, 0, 7};
  EXPECT_EQ(decomposition_to_json(dec).dump(), R"({"S":[[1,"1/2"],["1/2",0]],"g":[3,4],"residual":0})");
}

TEST(Io, OracleSpecs) {
  const auto coeff = oracle_spec_from_json<Q>(Json::parse(R"({"A": [[0, "1/2"], ["1/2", 0]], "b": [1, 0]})")).make();
  EXPECT_EQ(coeff(Vec<Q>{2, 3}), 8);
  const auto named = oracle_spec_from_json<Q>(Json::parse(R"({"oracle": "cubic1", "dimension": 4})")).make();
  EXPECT_EQ(named.dimension(), 4u);
  EXPECT_EQ(named(Vec<Q>{2, 3, 0, 0}), 11);
  EXPECT_EQ(oracle_spec_from_json<Q>(Json("cubic1")).make().dimension(), 3u);
  EXPECT_THROW(oracle_spec_from_json<Q>(Json::parse(R"({"A": [[1, 0]], "b": [1, 0]})")), ParseError);
  EXPECT_THROW(oracle_spec_from_json<Q>(Json::parse(R"({"x": 1})")), ParseError);
}

TEST(Io, ReadJsonFile) {
  const std::string path = ::testing::TempDir() + "io_test.json";
  {
    std::ofstream(path) << R"({"c": 1, "d": [0]})";
  }
  EXPECT_EQ(read_json_file(path)["c"], 1);
  {
    std::ofstream(path) << "{not json";
  }
  EXPECT_THROW(read_json_file(path), ParseError);
  std::remove(path.c_str());
  EXPECT_THROW(read_json_file(path), ParseError);
}
