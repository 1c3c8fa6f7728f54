#pragma once

#include <array>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "dflux/flux_model.hpp"
#include "dflux/scheme.hpp"

namespace dflux {

// Worst value of a residual and where it occurred.
struct Worst {
  double value = -std::numeric_limits<double>::infinity();
  long n = -1;
  long j = 0;
  double k_const = 0.0;
  std::size_t count = 0;

  void update(double v, long step, long cell, double kc = 0.0) {
    ++count;
    if (v > value) {
      value = v;
      n = step;
      j = cell;
      k_const = kc;
    }
  }
};

struct CheckResult {
  bool pass = false;
  double worst = 0.0;
  long n = -1;
  long j = 0;
};

using CheckSuiteResult = std::map<std::string, CheckResult>;
nlohmann::json to_json(const CheckSuiteResult& r);

// Discrete entropy flux Q(a,b) = h(a v c, b v c) - h(a ^ c, b ^ c).
double entropy_flux(FluxSide side, double a, double b, double c, const FluxModel& f);
double interface_entropy_flux(double a, double b, double c, double alpha, const FluxModel& f);

enum class EntropyFamily { Standard, LeftAB, RightAC, LeftB, RightB, LeftC, RightC };
inline constexpr std::size_t kEntropyFamilies = 7;
std::string to_string(EntropyFamily fam);

struct EntropyReport {
  std::array<Worst, kEntropyFamilies> families;
  std::vector<double> per_step_worst;
  // Largest |residual| at c = 0 and c = 1, where each inequality is an equality.
  double extreme_constant_residual = 0.0;

  const Worst& family(EntropyFamily fam) const { return families[static_cast<std::size_t>(fam)]; }
  Worst overall() const;
  bool pass(double tol) const { return overall().value <= tol; }
};

// Residuals are (lhs - rhs) / lhs_length, in density units; positive means violation.
class EntropyChecker {
 public:
  EntropyChecker(FluxModel flux, std::vector<double> k_consts);
  void consume(const StepRecord& rec);
  const EntropyReport& report() const { return report_; }

 private:
  FluxModel flux_;
  std::vector<double> k_consts_;
  EntropyReport report_;
};

std::vector<double> uniform_constants(int count);
EntropyReport check_discrete_entropy(std::span<const StepRecord> records, const FluxModel& flux,
                                     const std::vector<double>& k_consts);

// Mass on the moving mesh with the true cell lengths (compensated sum).
double total_mass(const MovingMesh& mesh, const std::vector<double>& raw_field);

class ConservationChecker {
 public:
  explicit ConservationChecker(FluxModel flux) : flux_(std::move(flux)) {}
  void consume(const StepRecord& rec);
  const Worst& worst() const { return worst_; }
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  FluxModel flux_;
  Worst worst_;
  std::vector<double> residuals_;
  long expected_n_ = -1;
};

Worst check_conservation(std::span<const StepRecord> records, const FluxModel& flux);

class LinfChecker {
 public:
  explicit LinfChecker(double bound) : bound_(bound) {}
  void consume(const StepRecord& rec);
  const Worst& worst() const { return worst_; }

 private:
  double bound_;
  Worst worst_;
};

// Excess of the field beyond [0, bound], worst over all steps.
Worst check_linf(std::span<const StepRecord> records, double bound);

struct TraceReport {
  double rho_L = 0.0;
  double rho_R = 0.0;
  double alpha = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Rankine-Hugoniot residual of the interface cell values after the last step,
// against tolerance c_tol * sqrt(h).
TraceReport check_interface_traces(const StepRecord& last, const FluxModel& flux, double c_tol = 1.0);

}  // namespace dflux
