#pragma once

#include <vector>

#include "dflux/problem_config.hpp"
#include "dflux/scheme.hpp"

namespace dflux {

// Fixed uniform mesh; the flux at x_{j+1/2} is h^- left of xi(t^n), h^+ otherwise.
struct BaselineState {
  int N = 0;
  double h = 0.0;
  std::vector<double> rho;  // j in [-1/h-1, 1/h+1], index j + offset, zero ghosts
  double t = 0.0;
  long n = 0;

  long half_count() const { return 1L << N; }
  long offset() const { return half_count() + 1; }
  double operator[](long j) const { return rho[static_cast<std::size_t>(j + offset())]; }
  double center(long j) const { return static_cast<double>(j) * h; }
};

BaselineState baseline_initialize(const ProblemConfig& config);
BaselineState baseline_step(const BaselineState& state, const ProblemConfig& config, double t_next);
BaselineState baseline_run(const ProblemConfig& config);

// Cells of the baseline state as a snapshot (interface position from the config).
Snapshot baseline_snapshot(const BaselineState& state, const ProblemConfig& config);

}  // namespace dflux
