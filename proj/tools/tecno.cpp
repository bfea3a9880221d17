// Command-line driver: reconstruction accuracy, convergence tables,
// solution snapshots, entropy histories and the randomized property suite.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tecno/commands.hpp"

namespace fs = std::filesystem;
using namespace tecno;

namespace {

struct CliOptions {
  std::string problem;
  std::vector<std::string> schemes;
  std::vector<int> n_list;
  std::optional<double> cfl;
  std::optional<double> t_end;
  std::string bc;
  std::string out;
  std::vector<double> at;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1'000'000;
};

RunManifest to_manifest(const CliOptions& o) {
  RunManifest m;
  m.problem = o.problem;
  for (const auto& s : o.schemes) m.schemes.push_back(parse_scheme(s));
  m.n_list = o.n_list;
  m.cfl = o.cfl;
  m.t_end = o.t_end;
  if (!o.bc.empty()) m.bc = parse_boundary(o.bc);
  m.snapshot_times = o.at;
  m.seed = o.seed;
  m.samples = o.samples;
  return m;
}

// --out wins; otherwise $TECNO_OUT_DIR/<default_name>; otherwise stdout.
std::optional<fs::path> output_path(const CliOptions& o, const std::string& default_name) {
  if (!o.out.empty()) return fs::path(o.out);
  if (const char* dir = std::getenv("TECNO_OUT_DIR"); dir && *dir) return fs::path(dir) / default_name;
  return std::nullopt;
}

template <class Writer>
void emit(const std::optional<fs::path>& path, Writer&& write) {
  if (!path) {
    write(std::cout);
    return;
  }
  if (path->has_parent_path()) fs::create_directories(path->parent_path());
  std::ofstream os(*path);
  if (!os) throw std::runtime_error("cannot open output file " + path->string());
  write(os);
  if (!os) throw std::runtime_error("failed writing " + path->string());
  std::cerr << "wrote " << path->string() << '\n';
}

std::string time_suffix(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_t%.4f", t);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TeCNO solver with sign-preserving WENO-3 reconstruction"};
  app.require_subcommand(1);
  CliOptions o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--problem", o.problem, "registered problem name");
    sub->add_option("--scheme", o.schemes, "spweno | eno2 | eno3 | weno3 (repeatable)");
    sub->add_option("--n", o.n_list, "cell counts (repeatable)");
    sub->add_option("--cfl", o.cfl, "CFL number");
    sub->add_option("--tend", o.t_end, "final time");
    sub->add_option("--bc", o.bc, "periodic | neumann");
    sub->add_option("--out", o.out, "output CSV path (default: $TECNO_OUT_DIR or stdout)");
    sub->add_option("--seed", o.seed, "random seed");
  };

  auto* recon = app.add_subcommand("recon-accuracy", "interface reconstruction errors");
  add_common(recon);
  auto* conv = app.add_subcommand("convergence", "cell-value error table against the exact solution");
  add_common(conv);
  auto* solve_cmd = app.add_subcommand("solve", "solution snapshot (x, u)");
  add_common(solve_cmd);
  solve_cmd->add_option("--at", o.at, "extra snapshot times (repeatable, needs --out)");
  auto* ent = app.add_subcommand("entropy-history", "total entropy E(t) per step");
  add_common(ent);
  auto* prop = app.add_subcommand("proptest", "randomized sign/jump/symmetry/EC checks");
  add_common(prop);
  prop->add_option("--samples", o.samples, "stencils per scheme");

  CLI11_PARSE(app, argc, argv);

  try {
    RunManifest m = to_manifest(o);
    if (recon->parsed()) {
      if (m.n_list.empty()) m.n_list = {40, 80, 160, 320, 640, 1280, 2560};
      const auto table = run_recon_accuracy(m);
      emit(output_path(o, "recon_accuracy.csv"),
           [&](std::ostream& os) { write_table_csv(os, table, m.n_list); });
    } else if (conv->parsed()) {
      if (m.problem.empty()) throw std::invalid_argument("--problem is required");
      const auto table = run_convergence(m);
      emit(output_path(o, "convergence_" + m.problem + ".csv"),
           [&](std::ostream& os) { write_table_csv(os, table, m.n_list); });
    } else if (solve_cmd->parsed()) {
      if (m.problem.empty()) throw std::invalid_argument("--problem is required");
      const Scheme scheme = m.schemes.empty() ? Scheme::spweno : m.schemes.front();
      const RunSetup setup = resolve(m);
      const auto path = output_path(o, "solve_" + m.problem + "_" + std::string(to_string(scheme)) + ".csv");
      if (!m.snapshot_times.empty() && !path) throw std::invalid_argument("--at needs an output path");
      const auto snaps = run_solve(m);
      for (std::size_t k = 0; k + 1 < snaps.size(); ++k) {
        fs::path p = *path;
        p.replace_filename(p.stem().string() + time_suffix(snaps[k].t) + p.extension().string());
        emit(p, [&](std::ostream& os) { write_snapshot_csv(os, setup, scheme, snaps[k]); });
      }
      emit(path, [&](std::ostream& os) { write_snapshot_csv(os, setup, scheme, snaps.back()); });
    } else if (ent->parsed()) {
      if (m.problem.empty()) m.problem = "burgers1";
      if (!m.t_end) m.t_end = 0.7;
      const Scheme scheme = m.schemes.empty() ? Scheme::spweno : m.schemes.front();
      const RunSetup setup = resolve(m);
      const int n = m.n_list.empty() ? setup.problem->default_cells.value_or(100) : m.n_list.front();
      const auto history = run_entropy_history(m);
      emit(output_path(o, "entropy_" + m.problem + "_" + std::string(to_string(scheme)) + ".csv"),
           [&](std::ostream& os) { write_entropy_csv(os, setup, scheme, n, history); });
    } else if (prop->parsed()) {
      return run_proptest(m, std::cout) ? 0 : 1;
    }
  } catch (const BlowUpError& e) {
    std::cerr << "blow-up: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
