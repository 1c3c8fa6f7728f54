#include "dflux/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dflux {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Density = std::function<double(double, double)>;
using Path = std::function<double(double)>;

Density constant_state(double v) {
  return [v](double, double) { return v; };
}

// Rarefaction centred at (x0, t0) joining states a and b.
Density fan(const FluxModel& f, FluxSide side, double x0, double t0, double a, double b) {
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  return [f, side, x0, t0, lo, hi](double t, double x) {
    const double tau = t - t0;
    const double s = tau > 0.0 ? (x - x0) / tau : (x >= x0 ? kInf : -kInf);
    return std::clamp(f.inverse_deriv(side == FluxSide::Plus ? s : -s), lo, hi);
  };
}

Path line(double x0, double t0, double speed) {
  return [x0, t0, speed](double t) { return x0 + speed * (t - t0); };
}

Path constant_speed(double s) {
  return [s](double) { return s; };
}

WaveRegion region(std::string label, BoundaryKind kind, FluxSide side, Path edge, Path speed, Density rho) {
  return {std::move(label), kind, side, std::move(edge), std::move(speed), std::move(rho)};
}

WaveRegion left_boundary_fan(const FluxModel& f, double state) {
  return region("left boundary fan", BoundaryKind::Domain, FluxSide::Minus, [](double) { return -1.0; },
                constant_speed(0.0), fan(f, FluxSide::Minus, -1.0, 0.0, 0.0, state));
}

WaveRegion after_left_fan(const FluxModel& f, double state) {
  const double s = -f.deriv(state);
  return region("left state", BoundaryKind::FanEdge, FluxSide::Minus, line(-1.0, 0.0, s), constant_speed(s),
                constant_state(state));
}

WaveRegion right_boundary_fan(const FluxModel& f, double state) {
  const double s = f.deriv(state);
  return region("right boundary fan", BoundaryKind::FanEdge, FluxSide::Plus, line(1.0, 0.0, s), constant_speed(s),
                fan(f, FluxSide::Plus, 1.0, 0.0, state, 0.0));
}

}  // namespace

std::string to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Domain: return "domain";
    case BoundaryKind::FanEdge: return "fan_edge";
    case BoundaryKind::Shock: return "shock";
    case BoundaryKind::Interface: return "interface";
  }
  return "?";
}

PiecewiseWaveSolution::PiecewiseWaveSolution(std::string name, FluxModel flux, std::vector<WavePhase> phases)
    : name_(std::move(name)), flux_(std::move(flux)), phases_(std::move(phases)) {
  if (phases_.empty()) throw ArgumentError("wave solution needs at least one phase");
}

const WavePhase& PiecewiseWaveSolution::phase_at(double t) const {
  if (!(t >= phases_.front().t_begin && t <= phases_.back().t_end)) {
    throw OracleRangeError(name_ + ": time " + std::to_string(t) + " outside the validity window");
  }
  for (const auto& p : phases_) {
    if (t <= p.t_end) return p;
  }
  return phases_.back();
}

Interval PiecewiseWaveSolution::trusted_region(double t) const {
  phase_at(t);
  return {-1.0, 1.0};
}

double PiecewiseWaveSolution::value(double t, double x) const {
  const auto& phase = phase_at(t);
  if (!(x >= -1.0 && x <= 1.0)) throw OracleRangeError(name_ + ": x outside [-1, 1]");
  std::size_t pick = 0;
  for (std::size_t i = 0; i < phase.regions.size(); ++i) {
    if (phase.regions[i].left_edge(t) <= x) pick = i;
  }
  return phase.regions[pick].density(t, x);
}

std::vector<BoundaryCheck> PiecewiseWaveSolution::boundary_checks(double t) const {
  const auto& phase = phase_at(t);
  std::vector<BoundaryCheck> out;
  for (std::size_t i = 1; i < phase.regions.size(); ++i) {
    const auto& r = phase.regions[i];
    const double x = r.left_edge(t);
    const double l = phase.regions[i - 1].density(t, x);
    const double rr = r.density(t, x);
    double residual = 0.0;
    switch (r.left_kind) {
      case BoundaryKind::Domain:
        break;
      case BoundaryKind::FanEdge:
        residual = std::abs(l - rr);
        break;
      case BoundaryKind::Shock: {
        const double sign = r.side == FluxSide::Plus ? 1.0 : -1.0;
        residual = std::abs(r.left_speed(t) * (rr - l) - sign * (flux_.eval(rr) - flux_.eval(l)));
        break;
      }
      case BoundaryKind::Interface:
        residual = std::abs(flux_.eval(rr) + flux_.eval(l) - r.left_speed(t) * (rr - l));
        break;
    }
    out.push_back({r.label, r.left_kind, x, l, rr, residual});
  }
  return out;
}

nlohmann::json PiecewiseWaveSolution::skeleton(double t) const {
  const auto& phase = phase_at(t);
  nlohmann::json j;
  j["name"] = name_;
  j["t"] = t;
  j["regions"] = nlohmann::json::array();
  for (std::size_t i = 0; i < phase.regions.size(); ++i) {
    const auto& r = phase.regions[i];
    const double lo = r.left_edge(t);
    const double hi = i + 1 < phase.regions.size() ? phase.regions[i + 1].left_edge(t) : 1.0;
    j["regions"].push_back({{"label", r.label},
                            {"left_kind", to_string(r.left_kind)},
                            {"x_left", lo},
                            {"x_right", hi},
                            {"rho_left", r.density(t, lo)},
                            {"rho_right", r.density(t, hi)}});
  }
  return j;
}

ExampleAConstants example_A_constants() {
  const FluxModel f = FluxModel::lwr();
  const double xi0 = -0.1, a = 0.4, rl = 0.6, rr = 0.9, jump = 0.3;
  const double s1 = (f.eval(rr) - f.eval(rl)) / (rr - rl);
  ExampleAConstants c;
  c.t_interact = (jump - xi0) / (a - s1);
  c.x_interact = xi0 + a * c.t_interact;
  c.rho_M = solve_intermediate_state(rr, a, FluxSide::Plus, f, 1e-15);
  return c;
}

const PiecewiseWaveSolution& example_A_solution() {
  static const PiecewiseWaveSolution sol = [] {
    const FluxModel f = FluxModel::lwr();
    const double xi0 = -0.1, a = 0.4, rl = 0.6, rr = 0.9, jump = 0.3;
    const auto c = example_A_constants();
    const double s1 = (f.eval(rr) - f.eval(rl)) / (rr - rl);
    const double vl = f.velocity(rl);
    const Path xi = line(xi0, 0.0, a);
    const Path sigma_L = line(xi0, 0.0, -vl);

    WavePhase early{0.0, c.t_interact, {}};
    early.regions = {
        left_boundary_fan(f, rl),
        after_left_fan(f, rl),
        region("vacuum", BoundaryKind::Shock, FluxSide::Minus, sigma_L, constant_speed(-vl), constant_state(0.0)),
        region("right of interface", BoundaryKind::Interface, FluxSide::Plus, xi, constant_speed(a), constant_state(rl)),
        region("upstream", BoundaryKind::Shock, FluxSide::Plus, line(jump, 0.0, s1), constant_speed(s1),
               constant_state(rr)),
        right_boundary_fan(f, rr),
    };

    const double s_fan_lo = -f.deriv(0.0);
    const double s_fan_hi = -f.deriv(c.rho_M);
    WavePhase late{c.t_interact, 0.6, {}};
    late.regions = {
        left_boundary_fan(f, rl),
        after_left_fan(f, rl),
        region("vacuum", BoundaryKind::Shock, FluxSide::Minus, sigma_L, constant_speed(-vl), constant_state(0.0)),
        region("interface fan", BoundaryKind::FanEdge, FluxSide::Minus, line(c.x_interact, c.t_interact, s_fan_lo),
               constant_speed(s_fan_lo), fan(f, FluxSide::Minus, c.x_interact, c.t_interact, 0.0, c.rho_M)),
        region("intermediate", BoundaryKind::FanEdge, FluxSide::Minus, line(c.x_interact, c.t_interact, s_fan_hi),
               constant_speed(s_fan_hi), constant_state(c.rho_M)),
        region("right of interface", BoundaryKind::Interface, FluxSide::Plus, xi, constant_speed(a), constant_state(rr)),
        right_boundary_fan(f, rr),
    };
    return PiecewiseWaveSolution("example A", f, {early, late});
  }();
  return sol;
}

ExampleBConstants example_B_constants() {
  const FluxModel f = FluxModel::lwr();
  const auto cfg = example_config(ExampleId::B, 8, 0.6);
  const double xi0 = cfg.interface.xi0();
  const double rl = 0.6, rm = 0.9;
  ExampleBConstants c;
  c.t_switch = cfg.interface.segments()[0].duration;
  c.x_switch = cfg.interface.position(c.t_switch);
  const double a2 = cfg.interface.segments()[1].slope;
  c.rho_M = solve_intermediate_state(rm, a2, FluxSide::Plus, f, 1e-15);
  // xi0 - v(rl) t = x_switch + s0 (t - t_switch), s0 = -f'(0)
  const double v = f.velocity(rl);
  const double s0 = -f.deriv(0.0);
  c.t_merge = (c.x_switch - s0 * c.t_switch - xi0) / (-v - s0);
  c.x_merge = xi0 - v * c.t_merge;
  return c;
}

const PiecewiseWaveSolution& example_B_solution() {
  static const PiecewiseWaveSolution sol = [] {
    const FluxModel f = FluxModel::lwr();
    const auto cfg = example_config(ExampleId::B, 8, 0.6);
    const InterfacePath path = cfg.interface;
    const double xi0 = path.xi0();
    const double rl = 0.6, rm = 0.9, rr = 0.6, jump = 0.5;
    const auto c = example_B_constants();
    const double a1 = path.segments()[0].slope;
    const double a2 = path.segments()[1].slope;
    const double vl = f.velocity(rl);
    const Path xi = [path](double t) { return path.position(t); };
    const Path sigma_L = line(xi0, 0.0, -vl);
    const double s0 = -f.deriv(0.0);
    const double sM = -f.deriv(c.rho_M);

    auto jump_fan = [&] {
      const double s = f.deriv(rm);
      return region("jump fan", BoundaryKind::FanEdge, FluxSide::Plus, line(jump, 0.0, s), constant_speed(s),
                    fan(f, FluxSide::Plus, jump, 0.0, rm, rr));
    };
    auto after_jump = [&] {
      const double s = f.deriv(rr);
      return region("right state", BoundaryKind::FanEdge, FluxSide::Plus, line(jump, 0.0, s), constant_speed(s),
                    constant_state(rr));
    };
    auto interface_fan = [&](BoundaryKind kind, Path edge, Path speed) {
      return region("interface fan", kind, FluxSide::Minus, std::move(edge), std::move(speed),
                    fan(f, FluxSide::Minus, c.x_switch, c.t_switch, 0.0, c.rho_M));
    };
    auto intermediate = [&] {
      return region("intermediate", BoundaryKind::FanEdge, FluxSide::Minus, line(c.x_switch, c.t_switch, sM),
                    constant_speed(sM), constant_state(c.rho_M));
    };

    WavePhase first{0.0, c.t_switch, {}};
    first.regions = {
        left_boundary_fan(f, rl),
        after_left_fan(f, rl),
        region("vacuum", BoundaryKind::Shock, FluxSide::Minus, sigma_L, constant_speed(-vl), constant_state(0.0)),
        region("right of interface", BoundaryKind::Interface, FluxSide::Plus, xi, constant_speed(a1), constant_state(rm)),
        jump_fan(),
        after_jump(),
        right_boundary_fan(f, rr),
    };

    WavePhase second{c.t_switch, c.t_merge, {}};
    second.regions = {
        left_boundary_fan(f, rl),
        after_left_fan(f, rl),
        region("vacuum", BoundaryKind::Shock, FluxSide::Minus, sigma_L, constant_speed(-vl), constant_state(0.0)),
        interface_fan(BoundaryKind::FanEdge, line(c.x_switch, c.t_switch, s0), constant_speed(s0)),
        intermediate(),
        region("right of interface", BoundaryKind::Interface, FluxSide::Plus, xi, constant_speed(a2), constant_state(rm)),
        jump_fan(),
        after_jump(),
        right_boundary_fan(f, rr),
    };

    // Shock between rl and the interface fan: with f = rho (1 - rho) its offset
    // u(tau) from the fan centre solves u' = (rl - 1/2) + u / (2 tau).
    const double tau_c = c.t_merge - c.t_switch;
    const double drift = 2.0 * (rl - 0.5);
    const double coef = (s0 * tau_c - drift * tau_c) / std::sqrt(tau_c);
    const Path shock = [=](double t) {
      const double tau = t - c.t_switch;
      return c.x_switch + drift * tau + coef * std::sqrt(tau);
    };
    const Path shock_speed = [=](double t) { return drift + 0.5 * coef / std::sqrt(t - c.t_switch); };

    WavePhase third{c.t_merge, 0.6, {}};
    third.regions = {
        left_boundary_fan(f, rl),
        after_left_fan(f, rl),
        interface_fan(BoundaryKind::Shock, shock, shock_speed),
        intermediate(),
        region("right of interface", BoundaryKind::Interface, FluxSide::Plus, xi, constant_speed(a2), constant_state(rm)),
        jump_fan(),
        after_jump(),
        right_boundary_fan(f, rr),
    };
    return PiecewiseWaveSolution("example B", f, {first, second, third});
  }();
  return sol;
}

double example_A_exact(double t, double x) { return example_A_solution().value(t, x); }
double example_B_exact(double t, double x) { return example_B_solution().value(t, x); }

namespace {

class RiemannOracle : public Oracle {
 public:
  RiemannOracle(SelfSimilarSolution sol, double xi0) : sol_(std::move(sol)), xi0_(xi0) {}
  double value(double t, double x) const override {
    if (!(t > 0.0)) throw OracleRangeError("Riemann oracle needs t > 0");
    return sol_((x - xi0_) / t);
  }
  Interval trusted_region(double) const override { return {-kInf, kInf}; }

 private:
  SelfSimilarSolution sol_;
  double xi0_;
};

}  // namespace

std::unique_ptr<Oracle> riemann_oracle(double rhoL, double rhoR, double alpha, double xi0, const FluxModel& flux) {
  return std::make_unique<RiemannOracle>(interface_riemann(rhoL, rhoR, alpha, flux), xi0);
}

SnapshotOracle::SnapshotOracle(Snapshot snap) : snap_(std::move(snap)) {
  if (snap_.cells.empty()) throw ArgumentError("empty snapshot");
}

double SnapshotOracle::value(double t, double x) const {
  if (std::abs(t - snap_.t) > 1e-12) throw OracleRangeError("reference snapshot only available at its own time");
  if (!(x >= snap_.cells.front().x_left && x <= snap_.cells.back().x_right)) {
    throw OracleRangeError("x outside the reference mesh");
  }
  auto it = std::upper_bound(snap_.cells.begin(), snap_.cells.end(), x,
                             [](double v, const SnapshotCell& c) { return v < c.x_left; });
  if (it != snap_.cells.begin()) --it;
  return it->rho;
}

Interval SnapshotOracle::trusted_region(double t) const {
  if (std::abs(t - snap_.t) > 1e-12) throw OracleRangeError("reference snapshot only available at its own time");
  return {-1.0, 1.0};
}

std::unique_ptr<SnapshotOracle> self_convergence_oracle(const ProblemConfig& config, int N_ref) {
  ProblemConfig fine = config;
  fine.N = N_ref;
  auto result = run(fine);
  return std::make_unique<SnapshotOracle>(result.snapshots.back());
}

}  // namespace dflux
