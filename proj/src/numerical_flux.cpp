#include "dflux/numerical_flux.hpp"

namespace dflux {

namespace {
double negative_part(double x) { return x < 0.0 ? -x : 0.0; }
}  // namespace

double interface_flux_negative_part_form(double a, double b, double alpha, const FluxModel& f) {
  return -b * negative_part(f.velocity(b) - alpha) + a * negative_part(f.velocity(a) + alpha);
}

}  // namespace dflux
