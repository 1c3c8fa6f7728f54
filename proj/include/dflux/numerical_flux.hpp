#pragma once

#include <algorithm>

#include "dflux/flux_model.hpp"

namespace dflux {

// Plus: flux +f (right of the interface). Minus: flux -f (left of it).
enum class FluxSide { Minus, Plus };

// Godunov flux for +f, concave f.
inline double godunov_plus(double a, double b, const FluxModel& f) {
  check_density(a);
  check_density(b);
  if (a <= b) return std::min(f.eval(a), f.eval(b));
  const double peak = f.argmax_point();
  if (b <= peak && peak <= a) return f.max_value();
  return std::max(f.eval(a), f.eval(b));
}

// h^-(a,b) = -h^+(b,a)
inline double godunov_minus(double a, double b, const FluxModel& f) { return -godunov_plus(b, a, f); }

inline double godunov_flux(FluxSide side, double a, double b, const FluxModel& f) {
  return side == FluxSide::Plus ? godunov_plus(a, b, f) : godunov_minus(a, b, f);
}

// Flux through the moving interface, alpha = interface speed.
inline double interface_flux(double a, double b, double alpha, const FluxModel& f) {
  if (alpha >= f.velocity(b)) return f.eval(b) - alpha * b;
  if (alpha <= -f.velocity(a)) return -f.eval(a) - alpha * a;
  return 0.0;
}

// Equivalent closed form -b [v(b) - alpha]_- + a [v(a) + alpha]_-.
double interface_flux_negative_part_form(double a, double b, double alpha, const FluxModel& f);

// Entropy remainders at the interface. remainder_L + remainder_R = 2 f(k).
inline double remainder_L(double k, double alpha, const FluxModel& f) {
  const double v = f.velocity(k);
  if (alpha >= v) return 2.0 * f.eval(k);
  if (alpha <= -v) return 0.0;
  return f.eval(k) + alpha * k;
}

inline double remainder_R(double k, double alpha, const FluxModel& f) {
  return 2.0 * f.eval(k) - remainder_L(k, alpha, f);
}

}  // namespace dflux
