#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tecno/analysis.hpp"
#include "tecno/grid.hpp"
#include "tecno/problems.hpp"
#include "tecno/proptest.hpp"
#include "tecno/reconstruction.hpp"
#include "tecno/solver.hpp"

namespace tecno {

/// Options shared by every driver subcommand. Unset optionals fall back to
/// the problem's defaults.
struct RunManifest {
  std::string problem;
  std::vector<Scheme> schemes;
  std::vector<int> n_list;
  std::optional<double> cfl;
  std::optional<double> t_end;
  std::optional<BoundaryCondition> bc;
  std::vector<double> snapshot_times;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1'000'000;
};

inline std::string format_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", x);
  return buf;
}

inline std::string format_fixed(double x, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

inline std::string format_rate(const std::optional<double>& r) {
  return r ? format_fixed(*r) : std::string{};
}

inline std::string join_ints(const std::vector<int>& v, char sep = ';') {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? std::string(1, sep) : "") + std::to_string(v[k]);
  return s;
}

inline std::string join_schemes(const std::vector<Scheme>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ";" : "") + std::string(to_string(v[k]));
  return s;
}

namespace detail {

inline void require_increasing(const std::vector<int>& n_list) {
  if (n_list.empty()) throw std::invalid_argument("at least one --n value is required");
  for (std::size_t k = 1; k < n_list.size(); ++k)
    if (n_list[k] <= n_list[k - 1])
      throw std::invalid_argument("--n values must be strictly increasing");
}

inline std::vector<Scheme> schemes_or(const RunManifest& m, std::vector<Scheme> fallback) {
  return m.schemes.empty() ? fallback : m.schemes;
}

}  // namespace detail

/// Resolved run settings for one evolution problem.
struct RunSetup {
  const ProblemSpec* problem = nullptr;
  double cfl = 0.4;
  double t_end = 0.0;
  BoundaryCondition bc = BoundaryCondition::periodic;
};

inline RunSetup resolve(const RunManifest& m) {
  const ProblemSpec& p = lookup_problem(m.problem);
  return {&p, m.cfl.value_or(p.cfl), m.t_end.value_or(p.t_end), m.bc.value_or(p.bc)};
}

inline SolverConfig make_config(const RunSetup& s, Scheme scheme) {
  SolverConfig cfg;
  cfg.cfl = s.cfl;
  cfg.t_end = s.t_end;
  cfg.scheme = scheme;
  cfg.flux = FluxScheme{s.problem->equation};
  cfg.bc = s.bc;
  return cfg;
}

inline CellField initial_field(const RunSetup& s, int n_cells, Scheme scheme) {
  const Grid grid = build_grid(s.problem->a, s.problem->b, n_cells,
                               std::max(kDefaultGhosts, required_ghosts(scheme)));
  CellField u = CellField::sample(grid, s.problem->initial);
  fill_ghosts(u, s.bc);
  return u;
}

inline CellField solve(const RunSetup& s, Scheme scheme, int n_cells,
                       const std::vector<StepObserver>& observers = {}) {
  return evolve(initial_field(s, n_cells, scheme), make_config(s, scheme), observers);
}

struct TableBlock {
  Scheme scheme;
  std::vector<ErrorReport> rows;
};

struct ConvergenceTable {
  std::string problem;
  double cfl = 0.0;
  double t_end = 0.0;
  std::vector<TableBlock> blocks;

  const TableBlock* block(Scheme s) const {
    for (const auto& b : blocks)
      if (b.scheme == s) return &b;
    return nullptr;
  }
};

/// Interface reconstruction errors of the inclined sine on [0, 1]. Ghost cells
/// are sampled from the same function.
inline ConvergenceTable run_recon_accuracy(const RunManifest& m) {
  detail::require_increasing(m.n_list);
  const ProblemSpec& p = lookup_problem(m.problem.empty() ? "recon_accuracy" : m.problem);
  ConvergenceTable table{p.name, 0.0, 0.0, {}};
  for (Scheme scheme : detail::schemes_or(m, {kAllSchemes.begin(), kAllSchemes.end()})) {
    std::vector<ErrorReport> rows;
    for (int n : m.n_list) {
      const Grid grid = build_grid(p.a, p.b, n, 3);
      CellField u(grid);
      for (int i = -grid.n_ghost; i < n + grid.n_ghost; ++i) u[i] = p.initial(grid.cell_center(i));
      const auto err = recon_error(u, p.initial, scheme);
      rows.push_back({n, err.l1, err.linf, std::nullopt, std::nullopt});
    }
    table.blocks.push_back({scheme, with_rates(std::move(rows))});
  }
  return table;
}

/// Cell-value errors at t_end against the problem's exact solution.
inline ConvergenceTable run_convergence(const RunManifest& m) {
  detail::require_increasing(m.n_list);
  const RunSetup s = resolve(m);
  if (!s.problem->exact) {
    throw std::invalid_argument("problem '" + s.problem->name + "' has no exact solution");
  }
  const auto& exact = *s.problem->exact;
  ConvergenceTable table{s.problem->name, s.cfl, s.t_end, {}};
  for (Scheme scheme : detail::schemes_or(m, {Scheme::spweno, Scheme::eno3, Scheme::eno2})) {
    std::vector<ErrorReport> rows;
    for (int n : m.n_list) {
      const CellField u = solve(s, scheme, n);
      std::vector<double> err(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        err[static_cast<std::size_t>(i)] = u[i] - exact(u.grid().cell_center(i), s.t_end);
      rows.push_back({n, discrete_norm(err, u.grid().h, Norm::l1),
                      discrete_norm(err, u.grid().h, Norm::linf), std::nullopt, std::nullopt});
    }
    table.blocks.push_back({scheme, with_rates(std::move(rows))});
  }
  return table;
}

inline void write_table_csv(std::ostream& os, const ConvergenceTable& t,
                            const std::vector<int>& n_list) {
  std::vector<Scheme> schemes;
  for (const auto& b : t.blocks) schemes.push_back(b.scheme);
  os << "# problem=" << t.problem << " scheme=" << join_schemes(schemes)
     << " N=" << join_ints(n_list) << " cfl=" << t.cfl << " t_end=" << t.t_end << '\n';
  os << "scheme,N,error_l1,rate_l1,error_linf,rate_linf\n";
  for (const auto& b : t.blocks)
    for (const auto& r : b.rows)
      os << to_string(b.scheme) << ',' << r.n_cells << ',' << format_sci(r.l1) << ','
         << format_rate(r.rate_l1) << ',' << format_sci(r.linf) << ',' << format_rate(r.rate_linf)
         << '\n';
}

struct Snapshot {
  double t = 0.0;
  CellField field;
};

/// Final solution plus any requested intermediate snapshots (taken at the
/// first accepted step at or after each requested time).
inline std::vector<Snapshot> run_solve(const RunManifest& m) {
  const RunSetup s = resolve(m);
  const Scheme scheme = m.schemes.empty() ? Scheme::spweno : m.schemes.front();
  const int n = !m.n_list.empty() ? m.n_list.front() : s.problem->default_cells.value_or(100);
  std::vector<double> pending = m.snapshot_times;
  std::sort(pending.begin(), pending.end());
  std::vector<Snapshot> snaps;
  std::size_t next = 0;
  StepObserver grab = [&](double t, const CellField& u) {
    while (next < pending.size() && t >= pending[next]) {
      snaps.push_back({t, u});
      ++next;
    }
  };
  CellField final_field = solve(s, scheme, n, {grab});
  snaps.push_back({s.t_end, std::move(final_field)});
  return snaps;
}

inline void write_snapshot_csv(std::ostream& os, const RunSetup& s, Scheme scheme,
                               const Snapshot& snap) {
  os << "# problem=" << s.problem->name << " scheme=" << to_string(scheme)
     << " N=" << snap.field.size() << " cfl=" << s.cfl << " t_end=" << s.t_end
     << " t=" << snap.t << '\n';
  os << "x,u\n";
  const Grid& g = snap.field.grid();
  for (int i = 0; i < g.n_cells; ++i)
    os << format_sci(g.cell_center(i)) << ',' << format_sci(snap.field[i]) << '\n';
}

inline EntropyHistory run_entropy_history(const RunManifest& m, double default_t_end = 0.7) {
  RunManifest mm = m;
  if (mm.problem.empty()) mm.problem = "burgers1";
  if (!mm.t_end) mm.t_end = default_t_end;
  const RunSetup s = resolve(mm);
  const Scheme scheme = m.schemes.empty() ? Scheme::spweno : m.schemes.front();
  const int n = !m.n_list.empty() ? m.n_list.front() : s.problem->default_cells.value_or(100);
  EntropyHistory history;
  const CellField u0 = initial_field(s, n, scheme);
  history.record(0.0, u0);
  evolve(u0, make_config(s, scheme), {[&](double t, const CellField& u) { history.record(t, u); }});
  return history;
}

inline void write_entropy_csv(std::ostream& os, const RunSetup& s, Scheme scheme, int n,
                              const EntropyHistory& h) {
  os << "# problem=" << s.problem->name << " scheme=" << to_string(scheme) << " N=" << n
     << " cfl=" << s.cfl << " t_end=" << s.t_end << '\n';
  os << "t,E,rel_change\n";
  for (const auto& e : h.samples())
    os << format_sci(e.t) << ',' << format_sci(e.entropy) << ',' << format_sci(e.relative_change)
       << '\n';
}

/// Property suite for each scheme plus the entropy-conservation identity.
/// Returns true when every sign-property scheme is violation-free.
inline bool run_proptest(const RunManifest& m, std::ostream& os) {
  bool ok = true;
  for (Scheme scheme : detail::schemes_or(m, {kAllSchemes.begin(), kAllSchemes.end()})) {
    const auto report = run_property_suite(scheme, m.samples, m.seed);
    for (const auto& p : report.properties) {
      os << to_string(scheme) << ' ' << p.name << " checks=" << p.checks
         << " violations=" << p.violations << '\n';
      if (has_sign_property(scheme) && p.violations > 0) ok = false;
    }
    if (report.sign_exhibit) {
      os << to_string(scheme) << " sign counterexample (v_{i-2}..v_{i+3}):";
      for (double v : *report.sign_exhibit) os << ' ' << format_sci(v);
      os << '\n';
    }
  }
  for (const Equation& eq : {Equation::advection(1.0), Equation::burgers()}) {
    const auto c = run_ec_identity(eq, m.samples, m.seed);
    os << c.name << " checks=" << c.checks << " violations=" << c.violations << '\n';
    if (c.violations > 0) ok = false;
  }
  os << (ok ? "PASS" : "FAIL") << '\n';
  return ok;
}

}  // namespace tecno
