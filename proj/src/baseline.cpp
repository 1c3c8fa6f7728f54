#include "dflux/baseline.hpp"

#include <algorithm>
#include <cmath>

namespace dflux {

BaselineState baseline_initialize(const ProblemConfig& config) {
  config.validate();
  BaselineState s;
  s.N = config.N;
  s.h = config.h();
  s.rho.assign(static_cast<std::size_t>(2 * s.offset() + 1), 0.0);
  const long half = s.half_count();
  for (long j = -half; j <= half; ++j) {
    s.rho[static_cast<std::size_t>(j + s.offset())] =
        config.initial.average((static_cast<double>(j) - 0.5) * s.h, (static_cast<double>(j) + 0.5) * s.h);
  }
  return s;
}

BaselineState baseline_step(const BaselineState& state, const ProblemConfig& config, double t_next) {
  const double k = t_next - state.t;
  if (!(k > 0.0)) throw ArgumentError("step must advance time");
  const double xi = config.interface.position(state.t);
  const long half = state.half_count();
  const long off = state.offset();
  const double r = k / state.h;
  std::vector<double> flux(state.rho.size(), 0.0);
#pragma omp parallel for schedule(static)
  for (long e = -half - 1; e <= half; ++e) {
    const double a = state.rho[static_cast<std::size_t>(e + off)];
    const double b = state.rho[static_cast<std::size_t>(e + 1 + off)];
    const double x = (static_cast<double>(e) + 0.5) * state.h;
    flux[static_cast<std::size_t>(e + off)] =
        x < xi ? godunov_minus(a, b, config.flux) : godunov_plus(a, b, config.flux);
  }
  BaselineState out = state;
#pragma omp parallel for schedule(static)
  for (long j = -half; j <= half; ++j) {
    const auto i = static_cast<std::size_t>(j + off);
    out.rho[i] = state.rho[i] - r * (flux[i] - flux[i - 1]);
  }
  out.t = t_next;
  out.n = state.n + 1;
  return out;
}

BaselineState baseline_run(const ProblemConfig& config) {
  BaselineState s = baseline_initialize(config);
  const double speed = std::max(config.flux.lipschitz_bound(), config.interface.lipschitz_bound());
  const double kmax = config.cfl * s.h / speed;
  while (s.t < config.final_time) {
    const double remaining = config.final_time - s.t;
    s = baseline_step(s, config, kmax >= remaining ? config.final_time : s.t + kmax);
  }
  return s;
}

Snapshot baseline_snapshot(const BaselineState& state, const ProblemConfig& config) {
  Snapshot snap;
  snap.t = state.t;
  snap.xi = config.interface.position(state.t);
  const long half = state.half_count();
  for (long j = -half; j <= half; ++j) {
    snap.cells.push_back({j, (static_cast<double>(j) - 0.5) * state.h, (static_cast<double>(j) + 0.5) * state.h, state[j]});
  }
  return snap;
}

}  // namespace dflux
