// Command-line front end: run, convergence, verify, compare.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "dflux/harness.hpp"
#include "dflux/io.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

struct ProblemArgs {
  std::string config_path;
  std::string example;
  std::optional<int> N;
  std::optional<double> T;
  std::optional<double> cfl;
};

void add_problem_options(CLI::App* cmd, ProblemArgs& a) {
  cmd->add_option("--config", a.config_path, "problem configuration (JSON)");
  cmd->add_option("--example", a.example, "built-in example A, B or C");
  cmd->add_option("--N", a.N, "refinement level, h = 2^-N");
  cmd->add_option("--T", a.T, "final time");
  cmd->add_option("--cfl", a.cfl, "CFL number");
}

double default_final_time(dflux::ExampleId id) {
  switch (id) {
    case dflux::ExampleId::A: return 0.55;
    case dflux::ExampleId::B: return 0.58;
    case dflux::ExampleId::C: return 1.0;
  }
  return 0.5;
}

dflux::ProblemConfig resolve(const ProblemArgs& a) {
  if (a.config_path.empty() == a.example.empty()) throw dflux::ConfigError("give exactly one of --config or --example");
  dflux::ProblemConfig c;
  if (!a.config_path.empty()) {
    c = dflux::load_config_file(a.config_path);
  } else {
    const auto id = dflux::parse_example_id(a.example);
    c = dflux::example_config(id, 8, default_final_time(id));
  }
  if (a.N) c.N = *a.N;
  if (a.T) c.final_time = *a.T;
  if (a.cfl) c.cfl = *a.cfl;
  c.validate();
  return c;
}

void emit_json(const nlohmann::json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw dflux::ArgumentError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite volume solver for conservation laws with a moving flux-sign interface"};
  app.require_subcommand(1);

  ProblemArgs run_args;
  std::string run_out, run_transcript;
  std::vector<double> run_snapshots;
  auto* run_cmd = app.add_subcommand("run", "run the moving-mesh scheme and write snapshots as CSV");
  add_problem_options(run_cmd, run_args);
  run_cmd->add_option("--out", run_out, "snapshot CSV path")->required();
  run_cmd->add_option("--snapshots", run_snapshots, "extra output times")->delimiter(',');
  run_cmd->add_option("--transcript", run_transcript, "write every StepRecord as JSON lines");

  std::string conv_example, conv_oracle = "exact", conv_out;
  double conv_T = 0.55;
  std::vector<int> conv_N;
  auto* conv_cmd = app.add_subcommand("convergence", "L1 error table over refinement levels");
  conv_cmd->add_option("--example", conv_example)->required();
  conv_cmd->add_option("--T", conv_T)->required();
  conv_cmd->add_option("--N-list", conv_N)->delimiter(',')->required();
  conv_cmd->add_option("--oracle", conv_oracle)->check(CLI::IsMember({"exact", "self"}));
  conv_cmd->add_option("--out", conv_out, "convergence table CSV path");

  ProblemArgs ver_args;
  std::vector<std::string> ver_checks = {"entropy", "linf", "conservation", "traces"};
  std::string ver_out;
  auto* ver_cmd = app.add_subcommand("verify", "run the discrete invariant checks");
  add_problem_options(ver_cmd, ver_args);
  ver_cmd->add_option("--checks", ver_checks)->delimiter(',');
  ver_cmd->add_option("--out", ver_out);

  std::string cmp_example, cmp_out;
  double cmp_T = 0.55;
  int cmp_N = 10;
  auto* cmp_cmd = app.add_subcommand("compare", "moving mesh against the fixed-mesh baseline");
  cmp_cmd->add_option("--example", cmp_example)->required();
  cmp_cmd->add_option("--T", cmp_T);
  cmp_cmd->add_option("--N", cmp_N);
  cmp_cmd->add_option("--out", cmp_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*run_cmd) {
      const auto cfg = resolve(run_args);
      std::ofstream transcript;
      std::optional<dflux::TranscriptWriter> writer;
      if (!run_transcript.empty()) {
        transcript.open(run_transcript);
        if (!transcript) throw dflux::ArgumentError("cannot write " + run_transcript);
        writer.emplace(transcript);
      }
      dflux::RunOptions opts;
      opts.snapshot_times = run_snapshots;
      if (writer) opts.observer = [&](const dflux::StepRecord& r) { writer->write(r); };
      const auto res = dflux::run(cfg, opts);
      dflux::write_snapshot_csv_file(run_out, res.snapshots);
      std::printf("%ld steps, t = %.6f, xi = %.6f\n", res.steps, res.final_state.t, res.final_state.mesh.xi);
      return 0;
    }
    if (*conv_cmd) {
      const auto id = dflux::parse_example_id(conv_example);
      dflux::ConvergenceOptions opts;
      opts.oracle = conv_oracle == "self" ? dflux::OracleKind::Self : dflux::OracleKind::Exact;
      const auto rows = dflux::convergence_study(id, conv_T, conv_N, opts);
      std::printf("%4s %14s %12s %10s\n", "N", "L1 error", "ln e/ln h", "rate");
      for (const auto& r : rows) {
        std::printf("%4d %14.6e %12.4f %10s\n", r.N, r.error, r.order_estimate,
                    r.rate ? std::to_string(*r.rate).c_str() : "-");
      }
      std::printf("fitted order %.4f\n", dflux::fitted_order(rows));
      if (!conv_out.empty()) {
        std::ofstream out(conv_out);
        if (!out) throw dflux::ArgumentError("cannot write " + conv_out);
        dflux::write_convergence_csv(out, rows);
      }
      return 0;
    }
    if (*ver_cmd) {
      const auto cfg = resolve(ver_args);
      const auto result = dflux::run_check_suite(cfg, ver_checks);
      emit_json(dflux::to_json(result), ver_out);
      for (const auto& [name, r] : result) {
        if (!r.pass) return kExitCheckFailed;
      }
      return 0;
    }
    if (*cmp_cmd) {
      const auto rep = dflux::compare_baseline(dflux::parse_example_id(cmp_example), cmp_T, cmp_N);
      emit_json(dflux::to_json(rep), cmp_out);
      return 0;
    }
  } catch (const dflux::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfig;
  } catch (const dflux::ArgumentError& e) {
    std::fprintf(stderr, "argument error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailed;
  }
  return 0;
}
