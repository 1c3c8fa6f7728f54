#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "dflux/harness.hpp"
#include "dflux/io.hpp"

using namespace dflux;

namespace {

class ConstantOracle : public Oracle {
 public:
  explicit ConstantOracle(double v) : v_(v) {}
  double value(double, double) const override { return v_; }
  Interval trusted_region(double) const override { return {-1.0, 1.0}; }

 private:
  double v_;
};

Snapshot uniform_snapshot(int N, double value, double xi = 0.0) {
  const auto mesh = MovingMesh::create(N, xi);
  Snapshot s;
  s.t = 0.3;
  s.xi = xi;
  for (long j = -mesh.half_count(); j <= mesh.half_count(); ++j) {
    if (j == mesh.m) continue;
    s.cells.push_back({j, mesh.cell_left(j), mesh.cell_right(j), value});
  }
  return s;
}

}  // namespace

TEST(Harness, L1OfConstantOffset) {
  const double delta = 0.01;
  const auto snap = uniform_snapshot(8, 0.5 + delta, 0.25 + 0.3 / 256);
  const ConstantOracle oracle(0.5);
  const Interval sub{-0.5, 0.5};
  EXPECT_NEAR(l1_error(snap, oracle, sub), delta * 1.0, 2.0 * delta / 256);
  EXPECT_NEAR(l1_error(snap, oracle, sub, ErrorWeighting::CellLength), delta * 1.0, 2.0 * delta / 256);
  EXPECT_THROW(l1_error(snap, oracle, {2.0, 3.0}), ArgumentError);
  EXPECT_THROW(l1_error(Snapshot{}, oracle, sub), ArgumentError);
}

TEST(Harness, DefaultSubdomain) {
  const ConstantOracle oracle(0.0);
  const auto d = default_subdomain(oracle, 0.4);
  EXPECT_DOUBLE_EQ(d.lo, -0.9);
  EXPECT_DOUBLE_EQ(d.hi, 0.9);
  EXPECT_THROW(default_subdomain(oracle, 4.0), ArgumentError);
}

TEST(Harness, FittedOrder) {
  std::vector<ConvergenceRow> rows;
  for (int N = 4; N <= 9; ++N) {
    const double h = std::ldexp(1.0, -N);
    rows.push_back({N, h, 3.0 * std::pow(h, 0.8), 0.0, std::nullopt});
  }
  EXPECT_NEAR(fitted_order(rows), 0.8, 1e-12);
  rows.resize(1);
  EXPECT_THROW(fitted_order(rows), ArgumentError);
}

TEST(Harness, ConvergenceStudyRows) {
  const auto rows = convergence_study(ExampleId::A, 0.5, {7, 5, 6});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].N, 5);
  EXPECT_FALSE(rows[0].rate.has_value());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(rows[i].error, rows[i - 1].error);
    EXPECT_NEAR(*rows[i].rate, std::log2(rows[i - 1].error / rows[i].error), 1e-12);
  }
  EXPECT_NEAR(rows[0].order_estimate, std::log(rows[0].error) / std::log(1.0 / 32), 1e-15);
  EXPECT_THROW(example_oracle(ExampleId::C), ArgumentError);
  const auto j = to_json(rows);
  EXPECT_TRUE(j[0]["rate"].is_null());
  std::stringstream csv;
  write_convergence_csv(csv, rows);
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "N,h,error,order_estimate,rate");
  std::getline(csv, line);
  EXPECT_EQ(line.substr(0, 11), "5,0.03125,0");
  EXPECT_EQ(line.back(), ',');
  int count = 1;
  while (std::getline(csv, line)) ++count;
  EXPECT_EQ(count, 3);
}

TEST(Harness, SelfConvergenceOracle) {
  ConvergenceOptions opt;
  opt.oracle = OracleKind::Self;
  opt.reference_offset = 2;
  const auto self_rows = convergence_study(ExampleId::C, 1.0, {5, 6}, opt);
  EXPECT_LT(self_rows[1].error, self_rows[0].error);
}

TEST(Harness, OscillationIndicator) {
  auto snap = uniform_snapshot(8, 0.5);
  EXPECT_EQ(count_spurious_extrema(snap, 1.0 / 256).count, 0);
  // one planted overshoot next to the interface and one far away
  for (auto& c : snap.cells) {
    if (c.j == 2) c.rho = 0.53;
    if (c.j == 40) c.rho = 0.9;
  }
  const auto rep = count_spurious_extrema(snap, 1.0 / 256);
  EXPECT_EQ(rep.count, 1);
  EXPECT_NEAR(rep.largest, 0.03, 1e-12);
  // a monotone step is not an oscillation
  for (auto& c : snap.cells) c.rho = c.j < 0 ? 0.2 : 0.8;
  EXPECT_EQ(count_spurious_extrema(snap, 1.0 / 256).count, 0);
}

TEST(Harness, BaselineComparisonShape) {
  const auto rep = compare_baseline(ExampleId::A, 0.5, 7);
  EXPECT_GT(rep.error_moving, 0.0);
  EXPECT_GT(rep.error_baseline, 0.0);
  EXPECT_EQ(rep.baseline.cells.size(), static_cast<std::size_t>(2 * 128 + 1));
  const auto j = to_json(rep);
  EXPECT_TRUE(j.contains("error_moving"));
}

TEST(Harness, CheckSuite) {
  const auto cfg = example_config(ExampleId::B, 7, 0.58);
  const auto res = run_check_suite(cfg, {"entropy", "linf", "conservation", "traces"}, 11);
  ASSERT_EQ(res.size(), 4u);
  for (const auto& [name, r] : res) EXPECT_TRUE(r.pass) << name << " " << r.worst;
  EXPECT_THROW(run_check_suite(cfg, {"energy"}), ConfigError);
}

TEST(Harness, SnapshotCsvRoundTrip) {
  RunOptions opt;
  opt.snapshot_times = {0.1};
  const auto res = run(example_config(ExampleId::A, 6, 0.2), opt);
  std::stringstream ss;
  write_snapshot_csv(ss, res.snapshots);
  EXPECT_EQ(ss.str().substr(0, 20), "t,x_left,x_right,rho");
  const auto back = read_snapshot_csv(ss);
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t s = 0; s < 2; ++s) {
    EXPECT_EQ(back[s].t, res.snapshots[s].t);
    EXPECT_EQ(back[s].xi, res.snapshots[s].xi);
    ASSERT_EQ(back[s].cells.size(), res.snapshots[s].cells.size());
    for (std::size_t i = 0; i < back[s].cells.size(); ++i) {
      EXPECT_EQ(back[s].cells[i].rho, res.snapshots[s].cells[i].rho);
      EXPECT_EQ(back[s].cells[i].x_left, res.snapshots[s].cells[i].x_left);
    }
  }
}

TEST(Harness, TranscriptRoundTrip) {
  RunOptions opt;
  opt.keep_records = true;
  const auto res = run(example_config(ExampleId::C, 5, 0.2), opt);
  std::stringstream ss;
  TranscriptWriter w(ss);
  for (const auto& r : res.records) w.write(r);
  const auto back = read_transcript(ss);
  ASSERT_EQ(back.size(), res.records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].n, res.records[i].n);
    EXPECT_EQ(back[i].k, res.records[i].k);
    EXPECT_EQ(back[i].case_tag, res.records[i].case_tag);
    EXPECT_EQ(back[i].mesh_after.m, res.records[i].mesh_after.m);
    for (std::size_t j = 0; j < back[i].field_after.size(); ++j) {
      const double a = back[i].field_after[j], b = res.records[i].field_after[j];
      EXPECT_TRUE(a == b || (std::isnan(a) && std::isnan(b)));
    }
  }
  const auto f = FluxModel::lwr();
  EXPECT_LE(check_conservation(back, f).value, 1e-13);
}

TEST(Harness, SelfAndExactOraclesAgreeOnExampleA) {
  ConvergenceOptions self;
  self.oracle = OracleKind::Self;
  const auto exact_rows = convergence_study(ExampleId::A, 0.55, {6, 8});
  const auto self_rows = convergence_study(ExampleId::A, 0.55, {6, 8}, self);
  for (std::size_t i = 0; i < 2; ++i) {
    const double ratio = exact_rows[i].error / self_rows[i].error;
    EXPECT_GT(ratio, 1.0 / 3.0);
    EXPECT_LT(ratio, 3.0);
  }
}

TEST(Harness, ErrorsDecreaseForAllExamples) {
  ConvergenceOptions self;
  self.oracle = OracleKind::Self;
  const auto a = convergence_study(ExampleId::A, 0.55, {6, 8, 10});
  const auto b = convergence_study(ExampleId::B, 0.58, {6, 8, 10});
  const auto c = convergence_study(ExampleId::C, 1.0, {6, 8, 10}, self);
  for (const auto* rows : {&a, &b, &c}) {
    for (std::size_t i = 1; i < rows->size(); ++i) EXPECT_LT((*rows)[i].error, (*rows)[i - 1].error);
  }
}
