#include "dflux/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dflux {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Sector constant(double low, double high, double value) {
  return {low, high, Sector::Kind::Constant, value, FluxSide::Plus, value, value};
}

Sector fan(double low, double high, FluxSide side, double from, double to) {
  return {low, high, Sector::Kind::Fan, 0.0, side, from, to};
}

SelfSimilarSolution plus_riemann(double rhoL, double rhoR, const FluxModel& flux) {
  if (rhoL == rhoR) return SelfSimilarSolution(flux, {constant(-kInf, kInf, rhoL)});
  if (rhoL < rhoR) {
    const double sigma = (flux.eval(rhoR) - flux.eval(rhoL)) / (rhoR - rhoL);
    return SelfSimilarSolution(flux, {constant(-kInf, sigma, rhoL), constant(sigma, kInf, rhoR)});
  }
  const double sL = flux.deriv(rhoL);
  const double sR = flux.deriv(rhoR);
  if (!(sR > sL)) {
    // linearly degenerate stretch: contact at the common speed
    return SelfSimilarSolution(flux, {constant(-kInf, sL, rhoL), constant(sL, kInf, rhoR)});
  }
  return SelfSimilarSolution(
      flux, {constant(-kInf, sL, rhoL), fan(sL, sR, FluxSide::Plus, rhoL, rhoR), constant(sR, kInf, rhoR)});
}

}  // namespace

SelfSimilarSolution::SelfSimilarSolution(FluxModel flux, std::vector<Sector> sectors)
    : flux_(std::move(flux)), sectors_(std::move(sectors)) {
  if (sectors_.empty()) throw ArgumentError("self-similar solution needs at least one sector");
}

double SelfSimilarSolution::sector_value(const Sector& sec, double s) const {
  if (sec.kind == Sector::Kind::Constant) return sec.value;
  const double lo = std::min(sec.fan_from, sec.fan_to);
  const double hi = std::max(sec.fan_from, sec.fan_to);
  const double slope = sec.side == FluxSide::Plus ? s : -s;
  return std::clamp(flux_.inverse_deriv(slope), lo, hi);
}

double SelfSimilarSolution::right_limit(double s) const {
  for (const auto& sec : sectors_) {
    if (s < sec.high) return sector_value(sec, std::max(s, sec.low));
  }
  const auto& last = sectors_.back();
  return sector_value(last, s);
}

double SelfSimilarSolution::left_limit(double s) const {
  for (const auto& sec : sectors_) {
    if (s <= sec.high && sec.high > sec.low) return sector_value(sec, std::min(s, sec.high));
  }
  return sector_value(sectors_.back(), s);
}

std::vector<double> SelfSimilarSolution::wave_speeds() const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < sectors_.size(); ++i) out.push_back(sectors_[i].high);
  return out;
}

SelfSimilarSolution classical_riemann(FluxSide side, double rhoL, double rhoR, const FluxModel& flux) {
  check_density(rhoL);
  check_density(rhoR);
  if (side == FluxSide::Plus) return plus_riemann(rhoL, rhoR, flux);
  // rho(s) for -f equals the +f solution of the swapped problem at -s
  const auto mirror = plus_riemann(rhoR, rhoL, flux);
  std::vector<Sector> out;
  const auto& secs = mirror.sectors();
  for (auto it = secs.rbegin(); it != secs.rend(); ++it) {
    Sector s = *it;
    s.low = -it->high;
    s.high = -it->low;
    if (s.kind == Sector::Kind::Fan) {
      s.side = FluxSide::Minus;
      s.fan_from = it->fan_to;
      s.fan_to = it->fan_from;
    }
    out.push_back(s);
  }
  return SelfSimilarSolution(flux, std::move(out));
}

double solve_intermediate_state(double rho_edge, double alpha, FluxSide side, const FluxModel& flux, double tol,
                                int max_iter) {
  check_density(rho_edge);
  const double a = side == FluxSide::Plus ? alpha : -alpha;
  const double v = flux.velocity(rho_edge);
  if (a < v - 1e-15) {
    throw ArgumentError("intermediate state needs |alpha| beyond v(rho_edge) on the correct side");
  }
  if (a <= v || rho_edge == 0.0) return 0.0;
  const double fe = flux.eval(rho_edge);
  auto residual = [&](double rho) { return fe + flux.eval(rho) - a * (rho_edge - rho); };
  double lo = 0.0;
  double hi = rho_edge;
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (residual(mid) < 0.0) lo = mid;
    else hi = mid;
  }
  const double root = std::abs(residual(lo)) <= std::abs(residual(hi)) ? lo : hi;
  if (!(std::abs(residual(root)) <= tol)) {
    throw NumericalError("intermediate state bisection did not reach tolerance " + std::to_string(tol));
  }
  return root;
}

SelfSimilarSolution interface_riemann(double rhoL, double rhoR, double alpha, const FluxModel& flux) {
  check_density(rhoL);
  check_density(rhoR);
  const double vL = flux.velocity(rhoL);
  const double vR = flux.velocity(rhoR);
  if (-vL <= alpha && alpha <= vR) {
    return SelfSimilarSolution(flux, {constant(-kInf, -vL, rhoL), constant(-vL, vR, 0.0), constant(vR, kInf, rhoR)});
  }
  std::vector<Sector> out;
  if (alpha > vR) {
    const double rhoM = solve_intermediate_state(rhoR, alpha, FluxSide::Plus, flux);
    const auto left = classical_riemann(FluxSide::Minus, rhoL, rhoM, flux);
    for (auto s : left.sectors()) {
      if (s.low >= alpha) {
        if (s.low > alpha + 1e-12) throw NumericalError("left wave faster than the interface");
        continue;
      }
      s.high = std::min(s.high, alpha);
      out.push_back(s);
    }
    out.push_back(constant(alpha, kInf, rhoR));
    return SelfSimilarSolution(flux, std::move(out));
  }
  const double rhoM = solve_intermediate_state(rhoL, alpha, FluxSide::Minus, flux);
  const auto right = classical_riemann(FluxSide::Plus, rhoM, rhoR, flux);
  out.push_back(constant(-kInf, alpha, rhoL));
  for (auto s : right.sectors()) {
    if (s.high <= alpha) {
      if (s.high < alpha - 1e-12) throw NumericalError("right wave slower than the interface");
      continue;
    }
    s.low = std::max(s.low, alpha);
    out.push_back(s);
  }
  return SelfSimilarSolution(flux, std::move(out));
}

double germ_residual(double p_l, double p_r, double alpha, const FluxModel& flux) {
  return flux.eval(p_r) + flux.eval(p_l) - alpha * (p_r - p_l);
}

bool germ_membership(double p_l, double p_r, double alpha, const FluxModel& flux, double tol) {
  return std::abs(germ_residual(p_l, p_r, alpha, flux)) <= tol;
}

double dissipativity_gap(double p_l, double p_r, double q_l, double q_r, double alpha, const FluxModel& flux) {
  auto sgn = [](double x) { return static_cast<double>((x > 0.0) - (x < 0.0)); };
  const double lhs = -sgn(p_l - q_l) * (flux.eval(p_l) - flux.eval(q_l)) -
                     sgn(p_r - q_r) * (flux.eval(p_r) - flux.eval(q_r));
  return lhs - alpha * (std::abs(p_l - q_l) - std::abs(p_r - q_r));
}

}  // namespace dflux
