#include "dflux/kernels.hpp"

#include <exception>

namespace dflux {

void bulk_update_parallel(const FluxModel& f, const BulkView& view, const BulkRange& range, double k, double h) {
  if (range.last < range.first) return;
  const double r = k / h;
  const long off = view.offset;
  std::exception_ptr failure;
  // edges e span x_{e+1/2}, from the left face of `first` to the right face of `last`
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (long e = range.first - 1; e <= range.last; ++e) {
      try {
        view.edge_flux[e + off] = godunov_flux(range.side, view.rho[e + off], view.rho[e + 1 + off], f);
      } catch (...) {
#pragma omp critical(dflux_bulk_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp for schedule(static)
    for (long j = range.first; j <= range.last; ++j) {
      view.out[j + off] = view.rho[j + off] - r * (view.edge_flux[j + off] - view.edge_flux[j - 1 + off]);
    }
  }
  if (failure) std::rethrow_exception(failure);
}

void bulk_update_serial(const FluxModel& f, const BulkView& view, const BulkRange& range, double k, double h) {
  const long off = view.offset;
  for (long j = range.first; j <= range.last; ++j) {
    view.out[j + off] = kernel_H_pm(range.side, view.rho[j - 1 + off], view.rho[j + off], view.rho[j + 1 + off], k, h, f);
  }
}

}  // namespace dflux
