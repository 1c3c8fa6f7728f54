#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dflux/flux_model.hpp"
#include "dflux/interface_path.hpp"

namespace dflux {

// rho_0 on [-1,1]: either piecewise constant or an arbitrary callable.
class InitialData {
 public:
  struct Piece {
    double x_left;
    double x_right;
    double value;
  };

  InitialData() = default;
  static InitialData piecewise(std::vector<Piece> pieces);
  static InitialData function(std::function<double(double)> f);

  double value(double x) const;
  // Mean of rho_0 over [a,b] intersected with [-1,1].
  double average(double a, double b) const;
  double sup_norm() const;
  bool is_piecewise() const { return !fn_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

 private:
  std::vector<Piece> pieces_;
  std::function<double(double)> fn_;
};

struct ProblemConfig {
  FluxModel flux = FluxModel::lwr();
  InterfacePath interface;
  InitialData initial;
  double final_time = 0.0;
  int N = 6;
  double cfl = 0.45;

  double h() const;
  long half_count() const { return 1L << N; }
  // Throws ConfigError when a precondition does not hold.
  void validate() const;
};

// Upper bound on N accepted by the solver (SOLVER_MAX_N, default 14).
int max_refinement();

ProblemConfig load_config(const nlohmann::json& j);
ProblemConfig load_config_file(const std::string& path);
nlohmann::json to_json(const ProblemConfig& config);

enum class ExampleId { A, B, C };

ExampleId parse_example_id(const std::string& s);
std::string to_string(ExampleId id);
ProblemConfig example_config(ExampleId id, int N, double T, double cfl = 0.45);

}  // namespace dflux
