#include "dflux/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace dflux {

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "NaN";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_num(const std::string& s) {
  if (s == "NaN" || s == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw ArgumentError("bad number in CSV: " + s);
  return v;
}

nlohmann::json field_to_json(const std::vector<double>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (double x : v) a.push_back(std::isnan(x) ? nlohmann::json(nullptr) : nlohmann::json(x));
  return a;
}

std::vector<double> field_from_json(const nlohmann::json& a) {
  std::vector<double> v;
  v.reserve(a.size());
  for (const auto& x : a) v.push_back(x.is_null() ? std::numeric_limits<double>::quiet_NaN() : x.get<double>());
  return v;
}

CaseTag parse_case(const std::string& s) {
  if (s == "A") return CaseTag::A;
  if (s == "B") return CaseTag::B;
  if (s == "C") return CaseTag::C;
  throw TranscriptError("unknown case tag " + s);
}

}  // namespace

void write_snapshot_csv(std::ostream& out, const std::vector<Snapshot>& snapshots) {
  out << "t,x_left,x_right,rho\n";
  for (const auto& s : snapshots) {
    for (const auto& c : s.cells) {
      out << num(s.t) << ',' << num(c.x_left) << ',' << num(c.x_right) << ',' << num(c.rho) << '\n';
    }
    out << num(s.t) << ',' << num(s.xi) << ',' << num(s.xi) << ",NaN\n";
  }
}

void write_snapshot_csv_file(const std::string& path, const std::vector<Snapshot>& snapshots) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write " + path);
  write_snapshot_csv(out, snapshots);
}

std::vector<Snapshot> read_snapshot_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "t,x_left,x_right,rho") throw ArgumentError("missing snapshot CSV header");
  std::vector<Snapshot> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string f[4];
    for (auto& s : f) {
      if (!std::getline(ss, s, ',')) throw ArgumentError("short CSV row: " + line);
    }
    const double t = parse_num(f[0]);
    if (out.empty() || out.back().t != t) {
      out.emplace_back();
      out.back().t = t;
    }
    const double xl = parse_num(f[1]);
    const double xr = parse_num(f[2]);
    const double rho = parse_num(f[3]);
    if (std::isnan(rho) && xl == xr) {
      out.back().xi = xl;
    } else {
      out.back().cells.push_back({static_cast<long>(out.back().cells.size()), xl, xr, rho});
    }
  }
  return out;
}

nlohmann::json to_json(const MovingMesh& m) {
  return {{"N", m.N}, {"h", m.h}, {"m", m.m}, {"xi", m.xi}, {"delta_L", m.delta_L}, {"delta_R", m.delta_R}};
}

MovingMesh mesh_from_json(const nlohmann::json& j) {
  MovingMesh m;
  m.N = j.at("N").get<int>();
  m.h = j.at("h").get<double>();
  m.m = j.at("m").get<long>();
  m.xi = j.at("xi").get<double>();
  m.delta_L = j.at("delta_L").get<double>();
  m.delta_R = j.at("delta_R").get<double>();
  return m;
}

nlohmann::json to_json(const StepRecord& r) {
  return {{"n", r.n},
          {"t", r.t},
          {"k", r.k},
          {"alpha", r.alpha},
          {"case", to_string(r.case_tag)},
          {"mesh_before", to_json(r.mesh_before)},
          {"mesh_after", to_json(r.mesh_after)},
          {"field_before", field_to_json(r.field_before)},
          {"field_after", field_to_json(r.field_after)},
          {"edge_flux", field_to_json(r.edge_flux)},
          {"interface_flux", r.interface_flux},
          {"boundary_flux_left", r.boundary_flux_left},
          {"boundary_flux_right", r.boundary_flux_right}};
}

StepRecord record_from_json(const nlohmann::json& j) {
  try {
    StepRecord r;
    r.n = j.at("n").get<long>();
    r.t = j.at("t").get<double>();
    r.k = j.at("k").get<double>();
    r.alpha = j.at("alpha").get<double>();
    r.case_tag = parse_case(j.at("case").get<std::string>());
    r.mesh_before = mesh_from_json(j.at("mesh_before"));
    r.mesh_after = mesh_from_json(j.at("mesh_after"));
    r.field_before = field_from_json(j.at("field_before"));
    r.field_after = field_from_json(j.at("field_after"));
    r.edge_flux = field_from_json(j.at("edge_flux"));
    r.interface_flux = j.at("interface_flux").get<double>();
    r.boundary_flux_left = j.at("boundary_flux_left").get<double>();
    r.boundary_flux_right = j.at("boundary_flux_right").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw TranscriptError(std::string("malformed step record: ") + e.what());
  }
}

void TranscriptWriter::write(const StepRecord& rec) { out_ << to_json(rec).dump() << '\n'; }

std::vector<StepRecord> read_transcript(std::istream& in) {
  std::vector<StepRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::parse_error& e) {
      throw TranscriptError(std::string("transcript line is not JSON: ") + e.what());
    }
  }
  return out;
}

}  // namespace dflux
