#pragma once

#include <vector>

#include "dflux/flux_model.hpp"
#include "dflux/numerical_flux.hpp"

namespace dflux {

// One self-similar sector s in (low, high), s = (x - x0) / t.
struct Sector {
  enum class Kind { Constant, Fan };
  double low;
  double high;
  Kind kind;
  double value;       // Constant
  FluxSide side;      // Fan
  double fan_from;    // Fan: density at s = low
  double fan_to;      // Fan: density at s = high
};

class SelfSimilarSolution {
 public:
  SelfSimilarSolution(FluxModel flux, std::vector<Sector> sectors);

  // Right-continuous evaluation.
  double operator()(double s) const { return right_limit(s); }
  double left_limit(double s) const;
  double right_limit(double s) const;

  const std::vector<Sector>& sectors() const { return sectors_; }
  // Interior sector boundaries, in increasing order.
  std::vector<double> wave_speeds() const;

 private:
  double sector_value(const Sector& sec, double s) const;

  FluxModel flux_;
  std::vector<Sector> sectors_;
};

// Entropy solution of rho_t + (+-f(rho))_x = 0 with states rhoL | rhoR.
SelfSimilarSolution classical_riemann(FluxSide side, double rhoL, double rhoR, const FluxModel& flux);

// Non-vacuum state rhoM on the far side of the interface. Plus: rho_edge = rhoR,
// requires alpha >= v(rhoR). Minus: rho_edge = rhoL, requires alpha <= -v(rhoL).
double solve_intermediate_state(double rho_edge, double alpha, FluxSide side, const FluxModel& flux,
                                double tol = 1e-12, int max_iter = 200);

// Riemann problem at an interface moving with constant speed alpha.
SelfSimilarSolution interface_riemann(double rhoL, double rhoR, double alpha, const FluxModel& flux);

// f(p_r) + f(p_l) = alpha (p_r - p_l) up to tol.
bool germ_membership(double p_l, double p_r, double alpha, const FluxModel& flux, double tol = 1e-10);
double germ_residual(double p_l, double p_r, double alpha, const FluxModel& flux);

// Left-hand side minus right-hand side of the L1 dissipativity inequality.
double dissipativity_gap(double p_l, double p_r, double q_l, double q_r, double alpha, const FluxModel& flux);

}  // namespace dflux
