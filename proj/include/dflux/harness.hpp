#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dflux/baseline.hpp"
#include "dflux/exact.hpp"
#include "dflux/problem_config.hpp"
#include "dflux/scheme.hpp"
#include "dflux/verify.hpp"

namespace dflux {

enum class ErrorWeighting { Uniform, CellLength };

// Default error window [-1 + T/4, 1 - T/4] clipped to the oracle's trusted region.
Interval default_subdomain(const Oracle& oracle, double T);

// sum over live cells with centre in the subdomain of |rho_exact - rho_j| * weight.
double l1_error(const Snapshot& snap, const Oracle& oracle, const Interval& subdomain,
                ErrorWeighting weighting = ErrorWeighting::Uniform);

struct ConvergenceRow {
  int N = 0;
  double h = 0.0;
  double error = 0.0;
  double order_estimate = 0.0;  // ln(error) / ln(h)
  std::optional<double> rate;   // ln(e_prev / e) / ln(h_prev / h)
};

enum class OracleKind { Exact, Self };

struct ConvergenceOptions {
  OracleKind oracle = OracleKind::Exact;
  std::optional<Interval> subdomain;
  ErrorWeighting weighting = ErrorWeighting::Uniform;
  int reference_offset = 3;  // N_ref = max(N) + offset for the self oracle
};

std::vector<ConvergenceRow> convergence_study(ExampleId example, double T, const std::vector<int>& N_list,
                                              const ConvergenceOptions& options = {});

// Least-squares slope of ln(error) against ln(h).
double fitted_order(const std::vector<ConvergenceRow>& rows);

// Exact oracle of an analytic example; Example C has none.
const Oracle& example_oracle(ExampleId example);

struct OscillationReport {
  int count = 0;
  double largest = 0.0;
  std::vector<double> positions;
};

// Strict local extrema within +-window_cells * h of xi whose excess over the
// adjacent distinct values exceeds threshold.
OscillationReport count_spurious_extrema(const Snapshot& snap, double h, int window_cells = 10,
                                         double threshold = 0.01);

struct ComparisonReport {
  double error_moving = 0.0;
  double error_baseline = 0.0;
  OscillationReport oscillations_moving;
  OscillationReport oscillations_baseline;
  Snapshot moving;
  Snapshot baseline;
};

ComparisonReport compare_baseline(ExampleId example, double T, int N);

// Runs the configuration once, feeding every step to the named checks
// (entropy, linf, conservation, traces). Unknown names throw ConfigError.
CheckSuiteResult run_check_suite(const ProblemConfig& config, const std::vector<std::string>& checks,
                                 int entropy_constants = 21);

nlohmann::json to_json(const std::vector<ConvergenceRow>& rows);
// Header N,h,error,order_estimate,rate; rate is empty on the first row.
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);
nlohmann::json to_json(const ComparisonReport& report);

}  // namespace dflux
