#pragma once

#include <string>
#include <utility>

namespace dflux {

// How the interface cell index changed over a step: A same, B +1, C -1.
enum class CaseTag { A, B, C };

std::string to_string(CaseTag tag);

// Uniform grid x_{j+1/2} = (j + 1/2) h, h = 2^-N, with the cell m under the
// interface replaced by the two interface cells
//   D_L = [x_{m-3/2}, xi) (index m-1) and D_R = [xi, x_{m+3/2}) (index m+1).
struct MovingMesh {
  int N = 0;
  double h = 0.0;
  long m = 0;
  double xi = 0.0;
  double delta_L = 0.0;
  double delta_R = 0.0;

  static MovingMesh create(int N, double xi);

  long half_count() const { return 1L << N; }
  double grid_point(long j) const { return (static_cast<double>(j) + 0.5) * h; }
  double cell_left(long j) const;
  double cell_right(long j) const;
  double cell_length(long j) const;
  double cell_center(long j) const { return 0.5 * (cell_left(j) + cell_right(j)); }
  bool is_interior_cell(long j) const { return j >= -half_count() && j <= half_count() && j != m; }
  // Throws if Delta bounds or index bounds fail.
  void check_invariants() const;
};

long locate_interface_index(double xi, double h);

// Mesh for the next time level; |xi_next - xi| must not exceed h/2.
std::pair<MovingMesh, CaseTag> advance(const MovingMesh& mesh, double xi_next);

}  // namespace dflux
