#include "dflux/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>

namespace dflux {

Interval default_subdomain(const Oracle& oracle, double T) {
  const Interval trusted = oracle.trusted_region(T);
  Interval d{std::max(-1.0 + 0.25 * T, trusted.lo), std::min(1.0 - 0.25 * T, trusted.hi)};
  if (!(d.hi > d.lo)) throw ArgumentError("error subdomain is empty");
  return d;
}

double l1_error(const Snapshot& snap, const Oracle& oracle, const Interval& subdomain, ErrorWeighting weighting) {
  if (snap.cells.empty()) throw ArgumentError("empty snapshot");
  // the outermost cells are always regular
  const double h = snap.cells.front().x_right - snap.cells.front().x_left;
  double sum = 0.0;
  std::size_t used = 0;
  for (const auto& c : snap.cells) {
    const double centre = 0.5 * (c.x_left + c.x_right);
    if (!subdomain.contains(centre)) continue;
    const double w = weighting == ErrorWeighting::Uniform ? h : c.x_right - c.x_left;
    sum += std::abs(oracle.value(snap.t, centre) - c.rho) * w;
    ++used;
  }
  if (used == 0) throw ArgumentError("no cell centre inside the error subdomain");
  return sum;
}

const Oracle& example_oracle(ExampleId example) {
  switch (example) {
    case ExampleId::A: return example_A_solution();
    case ExampleId::B: return example_B_solution();
    case ExampleId::C: break;
  }
  throw ArgumentError("example C has no closed-form solution; use the self-convergence oracle");
}

std::vector<ConvergenceRow> convergence_study(ExampleId example, double T, const std::vector<int>& N_list,
                                              const ConvergenceOptions& options) {
  if (N_list.empty()) throw ArgumentError("empty refinement list");
  std::unique_ptr<SnapshotOracle> self;
  const Oracle* oracle = nullptr;
  if (options.oracle == OracleKind::Exact) {
    oracle = &example_oracle(example);
  } else {
    const int n_ref = *std::max_element(N_list.begin(), N_list.end()) + options.reference_offset;
    self = self_convergence_oracle(example_config(example, n_ref, T), n_ref);
    oracle = self.get();
  }
  const Interval sub = options.subdomain ? *options.subdomain : default_subdomain(*oracle, T);

  std::vector<ConvergenceRow> rows(N_list.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < N_list.size(); ++i) {
    try {
      const auto cfg = example_config(example, N_list[i], T);
      const auto res = run(cfg);
      rows[i].N = N_list[i];
      rows[i].h = cfg.h();
      rows[i].error = l1_error(res.snapshots.back(), *oracle, sub, options.weighting);
      rows[i].order_estimate = std::log(rows[i].error) / std::log(rows[i].h);
    } catch (...) {
#pragma omp critical(dflux_convergence_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.N < b.N; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    rows[i].rate = std::log(rows[i - 1].error / rows[i].error) / std::log(rows[i - 1].h / rows[i].h);
  }
  return rows;
}

double fitted_order(const std::vector<ConvergenceRow>& rows) {
  if (rows.size() < 2) throw ArgumentError("need at least two rows to fit an order");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(rows.size());
  for (const auto& r : rows) {
    const double x = std::log(r.h);
    const double y = std::log(r.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

OscillationReport count_spurious_extrema(const Snapshot& snap, double h, int window_cells, double threshold) {
  const double lo = snap.xi - window_cells * h;
  const double hi = snap.xi + window_cells * h;
  std::vector<std::pair<double, double>> seq;  // (centre, rho), equal neighbours merged
  for (const auto& c : snap.cells) {
    const double centre = 0.5 * (c.x_left + c.x_right);
    if (centre < lo || centre > hi) continue;
    if (!seq.empty() && std::abs(seq.back().second - c.rho) <= 1e-14) continue;
    seq.emplace_back(centre, c.rho);
  }
  OscillationReport rep;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    const double a = seq[i - 1].second;
    const double b = seq[i].second;
    const double c = seq[i + 1].second;
    double excess = 0.0;
    if (b > a && b > c) excess = b - std::max(a, c);
    else if (b < a && b < c) excess = std::min(a, c) - b;
    else continue;
    rep.largest = std::max(rep.largest, excess);
    if (excess > threshold) {
      ++rep.count;
      rep.positions.push_back(seq[i].first);
    }
  }
  return rep;
}

ComparisonReport compare_baseline(ExampleId example, double T, int N) {
  const auto cfg = example_config(example, N, T);
  ComparisonReport rep;
  rep.moving = run(cfg).snapshots.back();
  const auto base = baseline_run(cfg);
  rep.baseline = baseline_snapshot(base, cfg);

  std::unique_ptr<SnapshotOracle> self;
  const Oracle* oracle = nullptr;
  if (example == ExampleId::C) {
    self = self_convergence_oracle(example_config(example, N + 3, T), N + 3);
    oracle = self.get();
  } else {
    oracle = &example_oracle(example);
  }
  const Interval sub = default_subdomain(*oracle, T);
  rep.error_moving = l1_error(rep.moving, *oracle, sub);
  rep.error_baseline = l1_error(rep.baseline, *oracle, sub);
  rep.oscillations_moving = count_spurious_extrema(rep.moving, cfg.h());
  rep.oscillations_baseline = count_spurious_extrema(rep.baseline, cfg.h());
  return rep;
}

CheckSuiteResult run_check_suite(const ProblemConfig& config, const std::vector<std::string>& checks,
                                 int entropy_constants) {
  bool want_entropy = false, want_linf = false, want_mass = false, want_traces = false;
  for (const auto& c : checks) {
    if (c == "entropy") want_entropy = true;
    else if (c == "linf") want_linf = true;
    else if (c == "conservation") want_mass = true;
    else if (c == "traces") want_traces = true;
    else throw ConfigError("unknown check '" + c + "'");
  }
  EntropyChecker entropy(config.flux, uniform_constants(entropy_constants));
  LinfChecker linf(config.initial.sup_norm());
  ConservationChecker mass(config.flux);
  StepRecord last;
  RunOptions opts;
  opts.observer = [&](const StepRecord& r) {
    if (want_entropy) entropy.consume(r);
    if (want_linf) linf.consume(r);
    if (want_mass) mass.consume(r);
    if (want_traces) last = r;
  };
  run(config, opts);

  CheckSuiteResult out;
  if (want_entropy) {
    const Worst w = entropy.report().overall();
    out["entropy"] = {w.value <= 1e-12, w.value, w.n, w.j};
  }
  if (want_linf) {
    const Worst& w = linf.worst();
    out["linf"] = {w.value <= 1e-12, w.value, w.n, w.j};
  }
  if (want_mass) {
    const Worst& w = mass.worst();
    out["conservation"] = {w.value <= 1e-13, w.value, w.n, w.j};
  }
  if (want_traces) {
    const TraceReport t = check_interface_traces(last, config.flux);
    out["traces"] = {t.pass, t.residual, last.n, last.mesh_after.m};
  }
  return out;
}

nlohmann::json to_json(const std::vector<ConvergenceRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = {{"N", r.N}, {"h", r.h}, {"error", r.error}, {"order_estimate", r.order_estimate}};
    row["rate"] = r.rate ? nlohmann::json(*r.rate) : nlohmann::json(nullptr);
    j.push_back(row);
  }
  return j;
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  char buf[160];
  out << "N,h,error,order_estimate,rate\n";
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,", r.N, r.h, r.error, r.order_estimate);
    out << buf;
    if (r.rate) {
      std::snprintf(buf, sizeof buf, "%.17g", *r.rate);
      out << buf;
    }
    out << '\n';
  }
}

nlohmann::json to_json(const ComparisonReport& r) {
  auto osc = [](const OscillationReport& o) {
    return nlohmann::json{{"count", o.count}, {"largest", o.largest}, {"positions", o.positions}};
  };
  return {{"error_moving", r.error_moving},
          {"error_baseline", r.error_baseline},
          {"oscillations_moving", osc(r.oscillations_moving)},
          {"oscillations_baseline", osc(r.oscillations_baseline)}};
}

}  // namespace dflux
