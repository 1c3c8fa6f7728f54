#include "dflux/mesh.hpp"

#include <cmath>

#include "dflux/errors.hpp"

namespace dflux {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::A: return "A";
    case CaseTag::B: return "B";
    case CaseTag::C: return "C";
  }
  return "?";
}

long locate_interface_index(double xi, double h) {
  if (!(h > 0.0)) throw ArgumentError("mesh width must be positive");
  if (!(std::abs(xi) < 1.0 - 0.5 * h)) throw ArgumentError("interface outside (-1+h/2, 1-h/2)");
  return static_cast<long>(std::floor(xi / h + 0.5));
}

MovingMesh MovingMesh::create(int N, double xi) {
  if (N < 1 || N > 30) throw ArgumentError("refinement level N out of range");
  MovingMesh mesh;
  mesh.N = N;
  mesh.h = std::ldexp(1.0, -N);
  mesh.xi = xi;
  mesh.m = locate_interface_index(xi, mesh.h);
  mesh.delta_L = xi - mesh.grid_point(mesh.m - 2);
  mesh.delta_R = mesh.grid_point(mesh.m + 1) - xi;
  mesh.check_invariants();
  return mesh;
}

void MovingMesh::check_invariants() const {
  const long half = half_count();
  if (m < -half + 2 || m > half - 2) throw ConfigError("interface cell too close to the domain boundary");
  if (!(delta_L >= h && delta_L <= 2.0 * h && delta_R >= h && delta_R <= 2.0 * h)) {
    throw NumericalError("interface cell widths outside [h, 2h]");
  }
}

double MovingMesh::cell_left(long j) const {
  if (j < -half_count() || j > half_count() || j == m) throw IndexError("cell index " + std::to_string(j));
  if (j == m + 1) return xi;
  if (j == m - 1) return grid_point(m - 2);
  return grid_point(j - 1);
}

double MovingMesh::cell_right(long j) const {
  if (j < -half_count() || j > half_count() || j == m) throw IndexError("cell index " + std::to_string(j));
  if (j == m - 1) return xi;
  if (j == m + 1) return grid_point(m + 1);
  return grid_point(j);
}

double MovingMesh::cell_length(long j) const {
  if (j < -half_count() || j > half_count() || j == m) throw IndexError("cell index " + std::to_string(j));
  if (j == m - 1) return delta_L;
  if (j == m + 1) return delta_R;
  return h;
}

std::pair<MovingMesh, CaseTag> advance(const MovingMesh& mesh, double xi_next) {
  if (std::abs(xi_next - mesh.xi) > 0.5 * mesh.h * (1.0 + 1e-12)) {
    throw CflViolation("interface moved more than h/2 in one step");
  }
  MovingMesh next = MovingMesh::create(mesh.N, xi_next);
  const long dm = next.m - mesh.m;
  if (dm == 0) return {next, CaseTag::A};
  if (dm == 1) return {next, CaseTag::B};
  if (dm == -1) return {next, CaseTag::C};
  throw CflViolation("interface index jumped by more than one cell");
}

}  // namespace dflux
