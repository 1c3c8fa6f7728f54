#include <gtest/gtest.h>

#include <cstdlib>

#include "dflux/problem_config.hpp"

using namespace dflux;

namespace {
nlohmann::json sample_json() {
  return nlohmann::json::parse(R"({
    "flux": "lwr",
    "xi0": -0.1,
    "segments": [[0.6, 0.4], [1.0, 0.0]],
    "initial_data": [[-1.0, 0.3, 0.6], [0.3, 1.0, 0.9]],
    "T": 0.55, "N": 8, "cfl": 0.45
  })");
}
}  // namespace

TEST(ProblemConfig, LoadsJson) {
  const auto c = load_config(sample_json());
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.N, 8);
  EXPECT_DOUBLE_EQ(c.h(), 1.0 / 256);
  EXPECT_DOUBLE_EQ(c.interface.position(0.5), 0.1);
  EXPECT_DOUBLE_EQ(c.initial.value(0.0), 0.6);
  EXPECT_DOUBLE_EQ(c.initial.value(0.5), 0.9);
  EXPECT_DOUBLE_EQ(c.initial.sup_norm(), 0.9);
}

TEST(ProblemConfig, RoundTrip) {
  const auto c = load_config(sample_json());
  const auto again = load_config(to_json(c));
  EXPECT_EQ(to_json(again), to_json(c));
}

TEST(ProblemConfig, InitialAverageIsExactForPieces) {
  const auto c = load_config(sample_json());
  EXPECT_NEAR(c.initial.average(0.2, 0.4), 0.75, 1e-15);
  // the part of a boundary cell outside [-1,1] is ignored
  EXPECT_NEAR(c.initial.average(0.99, 1.01), 0.9, 1e-15);
}

TEST(ProblemConfig, SampledInitialData) {
  auto j = sample_json();
  j["initial_data"] = {{"samples", {0.0, 0.5, 1.0}}};
  const auto c = load_config(j);
  EXPECT_NEAR(c.initial.value(-0.5), 0.25, 1e-15);
  EXPECT_NEAR(c.initial.average(-1.0, 1.0), 0.5, 1e-12);
}

TEST(ProblemConfig, Rejections) {
  auto bad_cfl = load_config(sample_json());
  bad_cfl.cfl = 0.9;
  EXPECT_THROW(bad_cfl.validate(), ConfigError);

  auto j = sample_json();
  j["initial_data"] = {{-1.0, 1.0, 1.2}};
  EXPECT_THROW(load_config(j).validate(), ConfigError);

  j = sample_json();
  j["segments"] = {{1.0, 1.0}};
  EXPECT_NO_THROW(load_config(j).validate());
  j["T"] = 1.1;
  EXPECT_THROW(load_config(j).validate(), ConfigError);

  j = sample_json();
  j.erase("xi0");
  EXPECT_THROW(load_config(j), ConfigError);
  j = sample_json();
  j["flux"] = "greenshields";
  EXPECT_THROW(load_config(j), ConfigError);
}

TEST(ProblemConfig, RefinementGuard) {
  auto c = load_config(sample_json());
  c.N = 15;
  EXPECT_THROW(c.validate(), ConfigError);
  setenv("SOLVER_MAX_N", "16", 1);
  EXPECT_NO_THROW(c.validate());
  setenv("SOLVER_MAX_N", "6", 1);
  c.N = 7;
  EXPECT_THROW(c.validate(), ConfigError);
  unsetenv("SOLVER_MAX_N");
  EXPECT_EQ(max_refinement(), 14);
}

TEST(ProblemConfig, Examples) {
  for (auto id : {ExampleId::A, ExampleId::B, ExampleId::C}) {
    const auto c = example_config(id, 8, 0.55);
    EXPECT_NO_THROW(c.validate());
    EXPECT_DOUBLE_EQ(c.interface.xi0(), -0.1);
  }
  EXPECT_NO_THROW(example_config(ExampleId::C, 8, 1.0).validate());
  EXPECT_DOUBLE_EQ(example_config(ExampleId::B, 8, 0.5).initial.value(0.0), 0.9);
  EXPECT_DOUBLE_EQ(example_config(ExampleId::B, 8, 0.5).initial.value(0.7), 0.6);
  EXPECT_EQ(parse_example_id("b"), ExampleId::B);
  EXPECT_THROW(parse_example_id("D"), ConfigError);
}
