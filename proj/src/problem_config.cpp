#include "dflux/problem_config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>

namespace dflux {

namespace {
constexpr int kSupSamples = 4097;
}

InitialData InitialData::piecewise(std::vector<Piece> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.x_left < b.x_left; });
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (!(p.x_left < p.x_right)) throw ConfigError("initial data interval must have x_left < x_right");
    if (p.x_left < -1.0 || p.x_right > 1.0) throw ConfigError("initial data interval outside [-1,1]");
    if (i > 0 && p.x_left < pieces[i - 1].x_right) throw ConfigError("initial data intervals overlap");
  }
  InitialData d;
  d.pieces_ = std::move(pieces);
  return d;
}

InitialData InitialData::function(std::function<double(double)> f) {
  if (!f) throw ConfigError("initial data function is empty");
  InitialData d;
  d.fn_ = std::move(f);
  return d;
}

double InitialData::value(double x) const {
  if (fn_) return fn_(x);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    const bool last = i + 1 == pieces_.size();
    if (x >= p.x_left && (x < p.x_right || (last && x == p.x_right))) return p.value;
  }
  return 0.0;
}

double InitialData::average(double a, double b) const {
  const double lo = std::max(a, -1.0);
  const double hi = std::min(b, 1.0);
  if (!(hi > lo)) return value(std::clamp(0.5 * (a + b), -1.0, 1.0));
  if (fn_) {
    constexpr int kSub = 64;
    const double w = (hi - lo) / kSub;
    double sum = 0.0;
    for (int i = 0; i < kSub; ++i) sum += fn_(lo + (i + 0.5) * w);
    return sum / kSub;
  }
  double integral = 0.0;
  for (const auto& p : pieces_) {
    const double l = std::max(lo, p.x_left);
    const double r = std::min(hi, p.x_right);
    if (r > l) integral += p.value * (r - l);
  }
  return integral / (hi - lo);
}

double InitialData::sup_norm() const {
  double s = 0.0;
  if (fn_) {
    for (int i = 0; i < kSupSamples; ++i) s = std::max(s, std::abs(fn_(-1.0 + 2.0 * i / (kSupSamples - 1))));
    return s;
  }
  for (const auto& p : pieces_) s = std::max(s, std::abs(p.value));
  return s;
}

double ProblemConfig::h() const { return std::ldexp(1.0, -N); }

int max_refinement() {
  if (const char* env = std::getenv("SOLVER_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 40) return static_cast<int>(v);
  }
  return 14;
}

void ProblemConfig::validate() const {
  if (N < 1) throw ConfigError("N must be at least 1");
  if (N > max_refinement()) {
    throw ConfigError("N=" + std::to_string(N) + " exceeds SOLVER_MAX_N=" + std::to_string(max_refinement()));
  }
  if (!(cfl > 0.0 && cfl <= 0.5)) throw ConfigError("cfl must lie in (0, 0.5]");
  if (!(final_time > 0.0) || !std::isfinite(final_time)) throw ConfigError("final time T must be positive");
  flux.validate();
  if (initial.is_piecewise()) {
    for (const auto& p : initial.pieces()) {
      if (!(p.value >= 0.0 && p.value <= 1.0)) throw ConfigError("initial density outside [0,1]");
    }
  } else {
    for (int i = 0; i < kSupSamples; ++i) {
      const double v = initial.value(-1.0 + 2.0 * i / (kSupSamples - 1));
      if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("initial density outside [0,1]");
    }
  }
  const auto [lo, hi] = interface.range(final_time);
  const double limit = 1.0 - 4.0 * h();
  if (std::max(std::abs(lo), std::abs(hi)) > limit) {
    throw ConfigError("interface leaves [-1+4h, 1-4h] before T");
  }
}

namespace {

FluxModel flux_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "lwr") return FluxModel::lwr();
    throw ConfigError("unknown flux '" + j.get<std::string>() + "'");
  }
  if (j.is_object() && j.contains("tabulated")) {
    return FluxModel::tabulated(j.at("tabulated").get<std::vector<double>>());
  }
  throw ConfigError("flux must be \"lwr\" or {\"tabulated\": [...]}");
}

InitialData initial_from_json(const nlohmann::json& j) {
  if (j.is_array()) {
    std::vector<InitialData::Piece> pieces;
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != 3) throw ConfigError("initial_data rows are [x_left, x_right, value]");
      pieces.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
    return InitialData::piecewise(std::move(pieces));
  }
  if (j.is_object() && j.contains("samples")) {
    auto samples = j.at("samples").get<std::vector<double>>();
    if (samples.size() < 2) throw ConfigError("initial_data samples need at least 2 values");
    return InitialData::function([s = std::move(samples)](double x) {
      const double pos = (std::clamp(x, -1.0, 1.0) + 1.0) * 0.5 * static_cast<double>(s.size() - 1);
      const auto i = std::min(static_cast<std::size_t>(pos), s.size() - 2);
      const double w = pos - static_cast<double>(i);
      return (1.0 - w) * s[i] + w * s[i + 1];
    });
  }
  throw ConfigError("initial_data must be a list of [x_left, x_right, value] or {\"samples\": [...]}");
}

}  // namespace

ProblemConfig load_config(const nlohmann::json& j) {
  try {
    ProblemConfig c;
    c.flux = flux_from_json(j.value("flux", nlohmann::json("lwr")));
    std::vector<SlopeSegment> segments;
    for (const auto& row : j.at("segments")) {
      if (!row.is_array() || row.size() != 2) throw ConfigError("segments rows are [duration, slope]");
      segments.push_back({row[0].get<double>(), row[1].get<double>()});
    }
    c.interface = InterfacePath(j.at("xi0").get<double>(), std::move(segments), j.value("zero_after_last", false));
    c.initial = initial_from_json(j.at("initial_data"));
    c.final_time = j.at("T").get<double>();
    c.N = j.at("N").get<int>();
    c.cfl = j.value("cfl", 0.45);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

ProblemConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  return load_config(j);
}

nlohmann::json to_json(const ProblemConfig& c) {
  nlohmann::json j;
  if (c.flux.is_lwr()) j["flux"] = "lwr";
  else if (!c.flux.table().empty()) j["flux"] = {{"tabulated", c.flux.table()}};
  else j["flux"] = c.flux.name();
  j["xi0"] = c.interface.xi0();
  j["segments"] = nlohmann::json::array();
  for (const auto& s : c.interface.segments()) j["segments"].push_back({s.duration, s.slope});
  if (c.interface.zero_after_last()) j["zero_after_last"] = true;
  j["initial_data"] = nlohmann::json::array();
  for (const auto& p : c.initial.pieces()) j["initial_data"].push_back({p.x_left, p.x_right, p.value});
  j["T"] = c.final_time;
  j["N"] = c.N;
  j["cfl"] = c.cfl;
  return j;
}

ExampleId parse_example_id(const std::string& s) {
  if (s == "A" || s == "a") return ExampleId::A;
  if (s == "B" || s == "b") return ExampleId::B;
  if (s == "C" || s == "c") return ExampleId::C;
  throw ConfigError("unknown example '" + s + "' (expected A, B or C)");
}

std::string to_string(ExampleId id) {
  switch (id) {
    case ExampleId::A: return "A";
    case ExampleId::B: return "B";
    case ExampleId::C: return "C";
  }
  return "?";
}

ProblemConfig example_config(ExampleId id, int N, double T, double cfl) {
  ProblemConfig c;
  c.flux = FluxModel::lwr();
  c.N = N;
  c.final_time = T;
  c.cfl = cfl;
  switch (id) {
    case ExampleId::A:
      c.interface = InterfacePath(-0.1, {{0.6, 0.4}, {1.0, 0.0}});
      c.initial = InitialData::piecewise({{-1.0, 0.3, 0.6}, {0.3, 1.0, 0.9}});
      break;
    case ExampleId::B:
      c.interface = InterfacePath(-0.1, {{0.3, 0.1}, {0.3, 0.25}, {1.0, 0.0}});
      c.initial = InitialData::piecewise({{-1.0, -0.1, 0.6}, {-0.1, 0.5, 0.9}, {0.5, 1.0, 0.6}});
      break;
    case ExampleId::C:
      c.interface = InterfacePath(-0.1, {{0.3, 0.1}, {0.3, 0.25}, {0.4, -1.5}, {1.0, 0.0}});
      c.initial = InitialData::piecewise({{-1.0, 0.3, 0.6}, {0.3, 1.0, 0.9}});
      break;
  }
  return c;
}

}  // namespace dflux
