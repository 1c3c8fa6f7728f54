#include "dflux/verify.hpp"

#include <algorithm>
#include <cmath>

#include "dflux/numerical_flux.hpp"
#include "dflux/riemann.hpp"

namespace dflux {

nlohmann::json to_json(const CheckSuiteResult& r) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, c] : r) j[name] = {{"pass", c.pass}, {"worst", c.worst}, {"n", c.n}, {"j", c.j}};
  return j;
}

double entropy_flux(FluxSide side, double a, double b, double c, const FluxModel& f) {
  return godunov_flux(side, std::max(a, c), std::max(b, c), f) - godunov_flux(side, std::min(a, c), std::min(b, c), f);
}

double interface_entropy_flux(double a, double b, double c, double alpha, const FluxModel& f) {
  return interface_flux(std::max(a, c), std::max(b, c), alpha, f) -
         interface_flux(std::min(a, c), std::min(b, c), alpha, f);
}

std::string to_string(EntropyFamily fam) {
  switch (fam) {
    case EntropyFamily::Standard: return "standard";
    case EntropyFamily::LeftAB: return "leftAB";
    case EntropyFamily::RightAC: return "rightAC";
    case EntropyFamily::LeftB: return "leftB";
    case EntropyFamily::RightB: return "rightB";
    case EntropyFamily::LeftC: return "leftC";
    case EntropyFamily::RightC: return "rightC";
  }
  return "?";
}

Worst EntropyReport::overall() const {
  Worst w;
  for (const auto& f : families) {
    w.count += f.count;
    if (f.value > w.value) {
      w.value = f.value;
      w.n = f.n;
      w.j = f.j;
      w.k_const = f.k_const;
    }
  }
  return w;
}

std::vector<double> uniform_constants(int count) {
  if (count < 2) throw ArgumentError("need at least two entropy constants");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = static_cast<double>(i) / (count - 1);
  return out;
}

EntropyChecker::EntropyChecker(FluxModel flux, std::vector<double> k_consts)
    : flux_(std::move(flux)), k_consts_(std::move(k_consts)) {
  if (k_consts_.empty()) throw ArgumentError("no entropy constants given");
}

void EntropyChecker::consume(const StepRecord& rec) {
  const auto& f = flux_;
  const MovingMesh& mb = rec.mesh_before;
  const MovingMesh& ma = rec.mesh_after;
  const long m = mb.m;
  const long half = mb.half_count();
  const double h = mb.h;
  const double k = rec.k;
  const double alpha = rec.alpha;
  auto rho = [&](long j) { return rec.before(j); };
  auto next = [&](long j) { return rec.after(j); };

  long left_last = m - 2;
  long right_first = m + 2;
  if (rec.case_tag == CaseTag::B) right_first = m + 3;
  if (rec.case_tag == CaseTag::C) left_last = m - 3;

  double step_worst = -std::numeric_limits<double>::infinity();
  auto record = [&](EntropyFamily fam, double lhs, double rhs, double len, long j, double c) {
    const double r = (lhs - rhs) / len;
    report_.families[static_cast<std::size_t>(fam)].update(r, rec.n, j, c);
    step_worst = std::max(step_worst, r);
  };

  auto evaluate = [&](double c, auto&& sink) {
    auto Qm = [&](long j) { return entropy_flux(FluxSide::Minus, rho(j - 1), rho(j), c, f); };
    auto Qp = [&](long j) { return entropy_flux(FluxSide::Plus, rho(j - 1), rho(j), c, f); };
    double q_prev = Qm(-half);
    for (long j = -half; j <= left_last; ++j) {
      const double q_next = Qm(j + 1);
      sink(EntropyFamily::Standard, h * std::abs(next(j) - c), h * std::abs(rho(j) - c) - k * (q_next - q_prev), h, j);
      q_prev = q_next;
    }
    q_prev = Qp(right_first);
    for (long j = right_first; j <= half; ++j) {
      const double q_next = Qp(j + 1);
      sink(EntropyFamily::Standard, h * std::abs(next(j) - c), h * std::abs(rho(j) - c) - k * (q_next - q_prev), h, j);
      q_prev = q_next;
    }
    const double rL = rho(m - 1);
    const double rR = rho(m + 1);
    const double q0 = interface_entropy_flux(rL, rR, c, alpha, f);
    const double kRL = k * remainder_L(c, alpha, f);
    const double kRR = k * remainder_R(c, alpha, f);
    const double etaL = mb.delta_L * std::abs(rL - c);
    const double etaR = mb.delta_R * std::abs(rR - c);
    switch (rec.case_tag) {
      case CaseTag::A:
        sink(EntropyFamily::LeftAB, ma.delta_L * std::abs(next(m - 1) - c), etaL - k * (q0 - Qm(m - 1)) + kRL,
             ma.delta_L, m - 1);
        sink(EntropyFamily::RightAC, ma.delta_R * std::abs(next(m + 1) - c), etaR - k * (Qp(m + 2) - q0) + kRR,
             ma.delta_R, m + 1);
        break;
      case CaseTag::B:
        sink(EntropyFamily::LeftB, (ma.delta_L + h) * std::abs(next(m) - c), etaL - k * (q0 - Qm(m - 1)) + kRL,
             ma.delta_L + h, m);
        sink(EntropyFamily::RightB, ma.delta_R * std::abs(next(m + 2) - c),
             etaR + h * std::abs(rho(m + 2) - c) - k * (Qp(m + 3) - q0) + kRR, ma.delta_R, m + 2);
        break;
      case CaseTag::C:
        sink(EntropyFamily::LeftC, ma.delta_L * std::abs(next(m - 2) - c),
             etaL + h * std::abs(rho(m - 2) - c) - k * (q0 - Qm(m - 2)) + kRL, ma.delta_L, m - 2);
        sink(EntropyFamily::RightC, (ma.delta_R + h) * std::abs(next(m) - c), etaR - k * (Qp(m + 2) - q0) + kRR,
             ma.delta_R + h, m);
        break;
    }
  };

  for (double c : k_consts_) {
    evaluate(c, [&](EntropyFamily fam, double lhs, double rhs, double len, long j) { record(fam, lhs, rhs, len, j, c); });
  }
  for (double c : {0.0, 1.0}) {
    evaluate(c, [&](EntropyFamily, double lhs, double rhs, double len, long) {
      report_.extreme_constant_residual = std::max(report_.extreme_constant_residual, std::abs(lhs - rhs) / len);
    });
  }
  report_.per_step_worst.push_back(step_worst);
}

EntropyReport check_discrete_entropy(std::span<const StepRecord> records, const FluxModel& flux,
                                     const std::vector<double>& k_consts) {
  EntropyChecker checker(flux, k_consts);
  for (const auto& r : records) checker.consume(r);
  return checker.report();
}

double total_mass(const MovingMesh& mesh, const std::vector<double>& raw_field) {
  const long half = mesh.half_count();
  const long off = half + 1;
  if (raw_field.size() != static_cast<std::size_t>(2 * off + 1)) throw TranscriptError("field size does not match mesh");
  // Neumaier summation
  double sum = 0.0;
  double comp = 0.0;
  for (long j = -half; j <= half; ++j) {
    if (j == mesh.m) continue;
    const double term = mesh.cell_length(j) * raw_field[static_cast<std::size_t>(j + off)];
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) comp += (sum - t) + term;
    else comp += (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

void ConservationChecker::consume(const StepRecord& rec) {
  if (expected_n_ >= 0 && rec.n != expected_n_) {
    throw TranscriptError("step records out of sequence: expected n=" + std::to_string(expected_n_) +
                          ", got n=" + std::to_string(rec.n));
  }
  expected_n_ = rec.n + 1;
  const long half = rec.mesh_before.half_count();
  const double out_right = godunov_plus(rec.before(half), 0.0, flux_);
  const double in_left = godunov_minus(0.0, rec.before(-half), flux_);
  const double residual = total_mass(rec.mesh_after, rec.field_after) - total_mass(rec.mesh_before, rec.field_before) +
                          rec.k * (out_right - in_left);
  residuals_.push_back(residual);
  worst_.update(std::abs(residual), rec.n, 0);
}

Worst check_conservation(std::span<const StepRecord> records, const FluxModel& flux) {
  ConservationChecker checker(flux);
  for (const auto& r : records) checker.consume(r);
  return checker.worst();
}

void LinfChecker::consume(const StepRecord& rec) {
  auto scan = [&](const MovingMesh& mesh, const std::vector<double>& raw, long n) {
    const long half = mesh.half_count();
    for (long j = -half; j <= half; ++j) {
      if (j == mesh.m) continue;
      const double v = raw[static_cast<std::size_t>(j + half + 1)];
      if (std::isnan(v)) throw TranscriptError("NaN density in a live cell");
      worst_.update(std::max(-v, v - bound_), n, j);
    }
  };
  if (worst_.count == 0) scan(rec.mesh_before, rec.field_before, rec.n);
  scan(rec.mesh_after, rec.field_after, rec.n + 1);
}

Worst check_linf(std::span<const StepRecord> records, double bound) {
  LinfChecker checker(bound);
  for (const auto& r : records) checker.consume(r);
  return checker.worst();
}

TraceReport check_interface_traces(const StepRecord& last, const FluxModel& flux, double c_tol) {
  TraceReport t;
  const long m = last.mesh_after.m;
  t.rho_L = last.after(m - 1);
  t.rho_R = last.after(m + 1);
  t.alpha = last.alpha;
  t.residual = std::abs(germ_residual(t.rho_L, t.rho_R, t.alpha, flux));
  t.tolerance = c_tol * std::sqrt(last.mesh_after.h);
  t.pass = t.residual <= t.tolerance;
  return t;
}

}  // namespace dflux
