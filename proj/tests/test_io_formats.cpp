#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lcjlab/experiments.hpp"
#include "lcjlab/generators.hpp"
#include "lcjlab/io.hpp"
#include "lcjlab/lvar.hpp"

using namespace lcj;

TEST_CASE("space json round trip preserves the matrix and provenance") {
  LaaksoStage stage = laakso_stage(1);
  std::string text = io::space_to_json(stage.space);
  FiniteMetricSpace back = io::space_from_json(text);
  CHECK_EQ(back.labels(), stage.space.labels());
  CHECK_EQ(back.flat(), stage.space.flat());
  REQUIRE(back.graph.has_value());
  CHECK_EQ(back.graph->scale, 0.25);
  CHECK_EQ(back.graph->edges.size(), stage.space.graph->edges.size());

  FiniteMetricSpace euclid = from_euclidean({{0.0, 1.0}, {2.0, 0.5}});
  FiniteMetricSpace e_back = io::space_from_json(io::space_to_json(euclid));
  REQUIRE(e_back.coords.has_value());
  CHECK_EQ(*e_back.coords, *euclid.coords);
}

TEST_CASE("space reader re-validates") {
  // triangle violation must be rejected on read
  std::string bad = R"({"version":1,"labels":["a","b","c"],
                        "dist":[[0,1,9],[1,0,1],[9,1,0]]})";
  CHECK_THROWS_AS(io::space_from_json(bad), ValidationError);
  CHECK_THROWS_AS(io::space_from_json("{not json"), ValidationError);
  CHECK_THROWS_AS(io::space_from_json(R"({"labels":["a"]})"), ValidationError);
}

TEST_CASE("pair measure and curve round trips by label") {
  CantorSpace c = cantor_space(2, 2, 0.2);
  PairMeasure mu{{{0, 3, 1.5}, {1, 2, 0.25}}};
  PairMeasure back = io::pair_measure_from_json(c.space, io::pair_measure_to_json(c.space, mu));
  REQUIRE_EQ(back.atoms.size(), 2);
  CHECK_EQ(back.atoms[0].x, 0);
  CHECK_EQ(back.atoms[0].y, 3);
  CHECK_EQ(back.atoms[0].weight, 1.5);

  StepCurve curve{{0, 2, 1, 3}};
  StepCurve cback = io::curve_from_json(c.space, io::curve_to_json(c.space, curve));
  CHECK_EQ(cback.points, curve.points);

  CHECK_THROWS_AS(io::pair_measure_from_json(c.space, R"({"atoms":[["00","zz",1.0]]})"),
                  ValidationError);
  CHECK_THROWS_AS(io::pair_measure_from_json(c.space, R"({"atoms":[["00","00",1.0]]})"),
                  ValidationError);
}

TEST_CASE("lvar result json carries value, ratio, signs and witness") {
  FiniteMetricSpace s = from_euclidean({{0.0}, {1.0}, {2.5}});
  PairMeasure mu{{{0, 2, 1.0}}};
  LVarResult r = lvar_exact(s, mu);
  std::string text = io::lvar_result_to_json(s, r, pair_variation(s, mu), "exact", 1.5);
  CHECK(text.find("\"value\"") != std::string::npos);
  CHECK(text.find("\"ratio\"") != std::string::npos);
  CHECK(text.find("\"signs\"") != std::string::npos);
  CHECK(text.find("\"witness\"") != std::string::npos);
  CHECK(text.find("\"p2\"") != std::string::npos);
}

TEST_CASE("experiment output is deterministic byte for byte") {
  ExperimentConfig config;
  config.kind = "euclid_lower";
  config.dims = {1, 2, 3};
  config.seed = 11;
  ResultTable a = run_experiment(config);
  ResultTable b = run_experiment(config);
  CHECK_EQ(a.to_csv(), b.to_csv());
  CHECK(a.to_csv().find("runtime") == std::string::npos);

  ExperimentConfig sphere;
  sphere.kind = "sphere";
  sphere.dims = {2, 3};
  sphere.pairs = 4;
  sphere.seed = 3;
  sphere.method = "exact";
  CHECK_EQ(run_experiment(sphere).to_csv(), run_experiment(sphere).to_csv());
}

TEST_CASE("result rows keep lower bounds below exact below certified") {
  ExperimentConfig config;
  config.kind = "laakso";
  config.depths = {1, 2};
  config.function_samples = 50;
  config.seed = 5;
  ResultTable t = run_experiment(config);
  auto col = [&](const std::string& name) {
    for (std::size_t c = 0; c < t.header.size(); ++c)
      if (t.header[c] == name) return c;
    REQUIRE(false);
    return std::size_t{0};
  };
  for (const auto& row : t.rows) {
    double exact = std::stod(row[col("lvar_exact")]);
    double local = std::stod(row[col("lvar_localsearch")]);
    double cand = std::stod(row[col("lvar_candidates")]);
    double certified = std::stod(row[col("certified_lvar_bound")]);
    CHECK(local <= exact + 1e-9);
    CHECK(cand <= exact + 1e-9);
    CHECK(exact <= certified + 1e-9);
  }
}
