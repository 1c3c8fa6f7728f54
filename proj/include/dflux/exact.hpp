#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "dflux/flux_model.hpp"
#include "dflux/numerical_flux.hpp"
#include "dflux/problem_config.hpp"
#include "dflux/riemann.hpp"
#include "dflux/scheme.hpp"

namespace dflux {

struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return x >= lo && x <= hi; }
};

// Reference density rho(t, x).
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual double value(double t, double x) const = 0;
  virtual Interval trusted_region(double t) const = 0;
};

enum class BoundaryKind { Domain, FanEdge, Shock, Interface };
std::string to_string(BoundaryKind kind);

// Region [left_edge(t), next region's left_edge(t)) with its density.
struct WaveRegion {
  std::string label;
  BoundaryKind left_kind = BoundaryKind::FanEdge;
  FluxSide side = FluxSide::Plus;              // flux sign across a Shock edge
  std::function<double(double)> left_edge;
  std::function<double(double)> left_speed;    // d/dt left_edge
  std::function<double(double, double)> density;
};

struct WavePhase {
  double t_begin;
  double t_end;
  std::vector<WaveRegion> regions;
};

struct BoundaryCheck {
  std::string label;
  BoundaryKind kind;
  double x;
  double left;
  double right;
  double residual;  // continuity, Rankine-Hugoniot or germ residual
};

class PiecewiseWaveSolution : public Oracle {
 public:
  PiecewiseWaveSolution(std::string name, FluxModel flux, std::vector<WavePhase> phases);

  double value(double t, double x) const override;
  Interval trusted_region(double t) const override;

  const WavePhase& phase_at(double t) const;
  double t_max() const { return phases_.back().t_end; }
  std::vector<BoundaryCheck> boundary_checks(double t) const;
  nlohmann::json skeleton(double t) const;
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  FluxModel flux_;
  std::vector<WavePhase> phases_;
};

// Derived constants of the two analytic examples.
struct ExampleAConstants {
  double rho_M;        // intermediate state left of xi after the interaction
  double t_interact;   // xi meets the 0.6 | 0.9 shock
  double x_interact;
};

struct ExampleBConstants {
  double rho_M;        // intermediate state once the slope is 0.25
  double t_switch;     // slope change 0.1 -> 0.25
  double x_switch;
  double t_merge;      // left fan edge reaches the 0.6 | 0 shock
  double x_merge;
};

ExampleAConstants example_A_constants();
ExampleBConstants example_B_constants();

// Valid on [0, 0.6] over the whole of [-1, 1], boundary fans included.
const PiecewiseWaveSolution& example_A_solution();
const PiecewiseWaveSolution& example_B_solution();
double example_A_exact(double t, double x);
double example_B_exact(double t, double x);

// rho(t,x) = R[rhoL, rhoR, alpha]((x - xi0) / t).
std::unique_ptr<Oracle> riemann_oracle(double rhoL, double rhoR, double alpha, double xi0, const FluxModel& flux);

// Fine-mesh solution at time T, piecewise constant in x.
class SnapshotOracle : public Oracle {
 public:
  explicit SnapshotOracle(Snapshot snap);
  double value(double t, double x) const override;
  Interval trusted_region(double t) const override;
  const Snapshot& snapshot() const { return snap_; }

 private:
  Snapshot snap_;
};

std::unique_ptr<SnapshotOracle> self_convergence_oracle(const ProblemConfig& config, int N_ref);

}  // namespace dflux
