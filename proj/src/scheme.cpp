#include "dflux/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dflux {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

DensityField::DensityField(int N, long lumped) : offset_((1L << N) + 1), lumped_(lumped) {
  values_.assign(static_cast<std::size_t>(2 * offset_ + 1), 0.0);
  (*this)[lumped_] = kNaN;
}

double DensityField::at(long j) const {
  if (j < -offset_ || j > offset_) throw IndexError("field index " + std::to_string(j));
  if (j == lumped_) throw IndexError("field index " + std::to_string(j) + " is the lumped interface cell");
  return (*this)[j];
}

void DensityField::set_lumped(long m) {
  lumped_ = m;
  (*this)[m] = kNaN;
}

SchemeState initialize(const ProblemConfig& config) {
  config.validate();
  SchemeState s;
  s.mesh = MovingMesh::create(config.N, config.interface.position(0.0));
  s.field = DensityField(config.N, s.mesh.m);
  const long half = s.mesh.half_count();
  for (long j = -half; j <= half; ++j) {
    if (j == s.mesh.m) continue;
    s.field[j] = config.initial.average(s.mesh.cell_left(j), s.mesh.cell_right(j));
  }
  return s;
}

SchemeState initialize_constant_pair(const ProblemConfig& config, double p_l, double p_r) {
  config.validate();
  check_density(p_l);
  check_density(p_r);
  SchemeState s;
  s.mesh = MovingMesh::create(config.N, config.interface.position(0.0));
  s.field = DensityField(config.N, s.mesh.m);
  const long half = s.mesh.half_count();
  for (long j = -half; j <= half; ++j) {
    if (j < s.mesh.m) s.field[j] = p_l;
    else if (j > s.mesh.m) s.field[j] = p_r;
  }
  return s;
}

double select_time_step(const ProblemConfig& config, const MovingMesh& mesh, double remaining) {
  if (!(remaining > 0.0)) throw ArgumentError("no time remaining for a step");
  const double speed = std::max(config.flux.lipschitz_bound(), config.interface.lipschitz_bound());
  return std::min(remaining, config.cfl * mesh.h / speed);
}

void step_into(const SchemeState& in, SchemeState& out, const ProblemConfig& config, double t_next,
               ExecutionPolicy policy, std::vector<double>& scratch_edges, StepRecord* record) {
  const FluxModel& f = config.flux;
  const MovingMesh& mesh = in.mesh;
  const double k = t_next - in.t;
  if (!(k > 0.0)) throw ArgumentError("step must advance time");
  const double h = mesh.h;
  const long half = mesh.half_count();
  const long m = mesh.m;
  const double alpha = config.interface.slope_average(in.t, t_next);
  const auto [next, tag] = advance(mesh, config.interface.position(t_next));

  const DensityField& rho = in.field;
  if (out.field.raw().size() != rho.raw().size()) out.field = DensityField(mesh.N, next.m);
  std::vector<double>& dst = out.field.raw();
  dst.front() = 0.0;
  dst.back() = 0.0;
  scratch_edges.resize(rho.raw().size());

  BulkRange left{-half, m - 2, FluxSide::Minus};
  BulkRange right{m + 2, half, FluxSide::Plus};
  if (tag == CaseTag::B) right.first = m + 3;
  if (tag == CaseTag::C) left.last = m - 3;

  const BulkView view{rho.raw().data(), dst.data(), scratch_edges.data(), rho.offset()};
  if (policy == ExecutionPolicy::Parallel) {
    bulk_update_parallel(f, view, left, k, h);
    bulk_update_parallel(f, view, right, k, h);
  } else {
    bulk_update_serial(f, view, left, k, h);
    bulk_update_serial(f, view, right, k, h);
  }

  const double rL = rho[m - 1];
  const double rR = rho[m + 1];
  const double dL = mesh.delta_L;
  const double dR = mesh.delta_R;
  switch (tag) {
    case CaseTag::A:
      out.field[m - 1] = kernel_left_AB(rho[m - 2], rL, rR, k, dL, alpha, f);
      out.field[m + 1] = kernel_right_AC(rL, rR, rho[m + 2], k, dR, alpha, f);
      break;
    case CaseTag::B: {
      const double bar = kernel_left_AB(rho[m - 2], rL, rR, k, dL, alpha, f);
      out.field[m - 1] = bar;
      out.field[m] = bar;
      out.field[m + 2] = kernel_right_B(rL, rR, rho[m + 2], rho[m + 3], k, h, dR, alpha, f);
      break;
    }
    case CaseTag::C: {
      out.field[m - 2] = kernel_left_C(rho[m - 3], rho[m - 2], rL, rR, k, h, dL, alpha, f);
      const double bar = kernel_right_AC(rL, rR, rho[m + 2], k, dR, alpha, f);
      out.field[m] = bar;
      out.field[m + 1] = bar;
      break;
    }
  }
  out.field.set_lumped(next.m);
  out.mesh = next;
  out.t = t_next;
  out.n = in.n + 1;

  if (record) {
    record->n = in.n;
    record->t = in.t;
    record->k = k;
    record->alpha = alpha;
    record->case_tag = tag;
    record->mesh_before = mesh;
    record->mesh_after = next;
    record->field_before = rho.raw();
    record->field_after = dst;
    record->edge_flux.assign(rho.raw().size(), kNaN);
    const long off = rho.offset();
    for (long e = -half - 1; e <= half; ++e) {
      if (e <= m - 2) record->edge_flux[e + off] = godunov_minus(rho[e], rho[e + 1], f);
      else if (e >= m + 1) record->edge_flux[e + off] = godunov_plus(rho[e], rho[e + 1], f);
    }
    record->interface_flux = interface_flux(rL, rR, alpha, f);
    record->boundary_flux_left = record->edge_flux[-half - 1 + off];
    record->boundary_flux_right = record->edge_flux[half + off];
  }
}

namespace {

// Next stop time and step, landing exactly on `stop`.
double next_time(const SchemeState& s, const ProblemConfig& config, double stop) {
  const double remaining = stop - s.t;
  const double k = select_time_step(config, s.mesh, remaining);
  return k >= remaining ? stop : s.t + k;
}

}  // namespace

std::pair<SchemeState, StepRecord> step(const SchemeState& state, const ProblemConfig& config,
                                        ExecutionPolicy policy) {
  SchemeState out;
  StepRecord rec;
  std::vector<double> edges;
  step_into(state, out, config, next_time(state, config, config.final_time), policy, edges, &rec);
  return {std::move(out), std::move(rec)};
}

Snapshot take_snapshot(const SchemeState& state) {
  Snapshot snap;
  snap.t = state.t;
  snap.xi = state.mesh.xi;
  const long half = state.mesh.half_count();
  snap.cells.reserve(static_cast<std::size_t>(2 * half));
  for (long j = -half; j <= half; ++j) {
    if (j == state.mesh.m) continue;
    snap.cells.push_back({j, state.mesh.cell_left(j), state.mesh.cell_right(j), state.field[j]});
  }
  return snap;
}

SchemeState advance_to(SchemeState state, const ProblemConfig& config, double T, const StepObserver& observer,
                       ExecutionPolicy policy, long max_steps) {
  SchemeState other;
  std::vector<double> edges;
  StepRecord rec;
  long steps = 0;
  while (state.t < T && (max_steps < 0 || steps < max_steps)) {
    step_into(state, other, config, next_time(state, config, T), policy, edges, observer ? &rec : nullptr);
    if (observer) observer(rec);
    std::swap(state, other);
    ++steps;
  }
  return state;
}

RunResult run(const ProblemConfig& config, const RunOptions& options) {
  RunResult result;
  std::vector<double> stops;
  for (double t : options.snapshot_times) {
    if (t < 0.0 || t > config.final_time) throw ArgumentError("snapshot time outside [0, T]");
    stops.push_back(t);
  }
  stops.push_back(config.final_time);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

  SchemeState state = initialize(config);
  StepObserver observer;
  if (options.keep_records || options.observer) {
    observer = [&](const StepRecord& r) {
      if (options.observer) options.observer(r);
      if (options.keep_records) result.records.push_back(r);
    };
  }
  for (double stop : stops) {
    const long before = state.n;
    state = advance_to(std::move(state), config, stop, observer, options.policy);
    result.steps += state.n - before;
    result.snapshots.push_back(take_snapshot(state));
  }
  result.final_state = std::move(state);
  return result;
}

}  // namespace dflux
