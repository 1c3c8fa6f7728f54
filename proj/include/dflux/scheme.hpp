#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dflux/kernels.hpp"
#include "dflux/mesh.hpp"
#include "dflux/problem_config.hpp"

namespace dflux {

// Cell averages for j in [-1/h, 1/h] plus zero ghosts at +-(1/h + 1).
// The entry at the lumped index m is NaN.
class DensityField {
 public:
  DensityField() = default;
  DensityField(int N, long lumped);

  double operator[](long j) const { return values_[static_cast<std::size_t>(j + offset_)]; }
  double& operator[](long j) { return values_[static_cast<std::size_t>(j + offset_)]; }
  double at(long j) const;

  long half_count() const { return offset_ - 1; }
  long offset() const { return offset_; }
  long lumped() const { return lumped_; }
  void set_lumped(long m);
  std::vector<double>& raw() { return values_; }
  const std::vector<double>& raw() const { return values_; }

 private:
  std::vector<double> values_;
  long offset_ = 1;
  long lumped_ = 0;
};

struct SchemeState {
  MovingMesh mesh;
  DensityField field;
  double t = 0.0;
  long n = 0;
};

// Everything needed to replay or audit one step.
struct StepRecord {
  long n = 0;
  double t = 0.0;
  double k = 0.0;
  double alpha = 0.0;
  CaseTag case_tag = CaseTag::A;
  MovingMesh mesh_before;
  MovingMesh mesh_after;
  std::vector<double> field_before;  // raw layout of DensityField
  std::vector<double> field_after;
  std::vector<double> edge_flux;     // flux across x_{j+1/2}, indexed j + offset; NaN where unused
  double interface_flux = 0.0;
  double boundary_flux_left = 0.0;   // h^-(0, rho_{-1/h})
  double boundary_flux_right = 0.0;  // h^+(rho_{1/h}, 0)

  long offset() const { return mesh_before.half_count() + 1; }
  double before(long j) const { return field_before[static_cast<std::size_t>(j + offset())]; }
  double after(long j) const { return field_after[static_cast<std::size_t>(j + offset())]; }
};

enum class ExecutionPolicy { Parallel, Serial };

using StepObserver = std::function<void(const StepRecord&)>;

SchemeState initialize(const ProblemConfig& config);

// k = min(remaining, cfl h / max(Lip f, Lip xi)).
double select_time_step(const ProblemConfig& config, const MovingMesh& mesh, double remaining);

// Advances `in` to time t_next into `out`. `record` is filled when non-null.
void step_into(const SchemeState& in, SchemeState& out, const ProblemConfig& config, double t_next,
               ExecutionPolicy policy, std::vector<double>& scratch_edges, StepRecord* record);

// One full step with the default time step up to T.
std::pair<SchemeState, StepRecord> step(const SchemeState& state, const ProblemConfig& config,
                                        ExecutionPolicy policy = ExecutionPolicy::Parallel);

struct SnapshotCell {
  long j;
  double x_left;
  double x_right;
  double rho;
};

struct Snapshot {
  double t = 0.0;
  double xi = 0.0;
  std::vector<SnapshotCell> cells;  // ordered by x
};

Snapshot take_snapshot(const SchemeState& state);

struct RunOptions {
  std::vector<double> snapshot_times;  // the final time is always included
  bool keep_records = false;
  StepObserver observer;
  ExecutionPolicy policy = ExecutionPolicy::Parallel;
};

struct RunResult {
  SchemeState final_state;
  std::vector<Snapshot> snapshots;
  std::vector<StepRecord> records;
  long steps = 0;
};

RunResult run(const ProblemConfig& config, const RunOptions& options = {});

// Well-balanced initial field built from a germ pair: p_l left of xi, p_r right.
SchemeState initialize_constant_pair(const ProblemConfig& config, double p_l, double p_r);

// Runs steps from `state` until T (or max_steps), without snapshots.
SchemeState advance_to(SchemeState state, const ProblemConfig& config, double T, const StepObserver& observer = {},
                       ExecutionPolicy policy = ExecutionPolicy::Parallel, long max_steps = -1);

}  // namespace dflux
