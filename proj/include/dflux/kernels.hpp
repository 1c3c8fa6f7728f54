#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "dflux/numerical_flux.hpp"

namespace dflux {

// Standard cell update b - (k/h) [h(b,c) - h(a,b)].
inline double kernel_H_pm(FluxSide side, double a, double b, double c, double k, double h,
                          const FluxModel& f) {
  return b - (k / h) * (godunov_flux(side, b, c, f) - godunov_flux(side, a, b, f));
}

namespace detail {
inline double checked_denominator(double d) {
  if (!(d > 0.0)) throw CflViolation("interface cell denominator is not positive");
  return d;
}
}  // namespace detail

// D_L when the interface stays or moves right: (rho_{m-2}, rho_L, rho_R).
inline double kernel_left_AB(double a, double b, double c, double k, double delta_L, double alpha,
                             const FluxModel& f) {
  const double den = detail::checked_denominator(delta_L + alpha * k);
  return (delta_L * b - k * (interface_flux(b, c, alpha, f) - godunov_minus(a, b, f))) / den;
}

// D_L after the interface moved left, lumping cell m-2: (rho_{m-3}, rho_{m-2}, rho_L, rho_R).
inline double kernel_left_C(double a, double b, double c, double d, double k, double h, double delta_L,
                            double alpha, const FluxModel& f) {
  const double den = detail::checked_denominator(delta_L + h + alpha * k);
  return (h * b + delta_L * c - k * (interface_flux(c, d, alpha, f) - godunov_minus(a, b, f))) / den;
}

// D_R when the interface stays or moves left: (rho_L, rho_R, rho_{m+2}).
inline double kernel_right_AC(double a, double b, double c, double k, double delta_R, double alpha,
                              const FluxModel& f) {
  const double den = detail::checked_denominator(delta_R - alpha * k);
  return (delta_R * b - k * (godunov_plus(b, c, f) - interface_flux(a, b, alpha, f))) / den;
}

// D_R after the interface moved right, lumping cell m+2: (rho_L, rho_R, rho_{m+2}, rho_{m+3}).
inline double kernel_right_B(double a, double b, double c, double d, double k, double h, double delta_R,
                             double alpha, const FluxModel& f) {
  const double den = detail::checked_denominator(delta_R + h - alpha * k);
  return (delta_R * b + h * c - k * (godunov_plus(c, d, f) - interface_flux(a, b, alpha, f))) / den;
}

// Cells [first, last] updated with the standard kernel of one side.
struct BulkRange {
  long first;
  long last;
  FluxSide side;
};

// `rho` and `out` are indexed by j + offset. edge_flux[j + offset] holds the flux
// across x_{j+1/2}.
struct BulkView {
  const double* rho;
  double* out;
  double* edge_flux;
  long offset;
};

// OpenMP: edge fluxes first, then the conservative update.
void bulk_update_parallel(const FluxModel& f, const BulkView& view, const BulkRange& range, double k, double h);

// Reference: kernel_H_pm per cell, no shared state.
void bulk_update_serial(const FluxModel& f, const BulkView& view, const BulkRange& range, double k, double h);

}  // namespace dflux
