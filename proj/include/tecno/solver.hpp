#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tecno/entropy_flux.hpp"
#include "tecno/grid.hpp"
#include "tecno/reconstruction.hpp"

namespace tecno {

/// Raised when a stage produces non-finite values.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(double time, const std::string& what)
      : std::runtime_error(what + " at t=" + std::to_string(time)), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

struct SolverConfig {
  double cfl = 0.4;
  double t_end = 0.0;
  Scheme scheme = Scheme::spweno;
  FluxScheme flux{};
  BoundaryCondition bc = BoundaryCondition::periodic;
  std::optional<double> fixed_dt;  // overrides the CFL step when set

  void validate() const {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
    if (!(t_end >= 0.0)) throw std::invalid_argument("t_end must be non-negative");
    if (fixed_dt && !(*fixed_dt > 0.0)) throw std::invalid_argument("fixed dt must be positive");
  }
};

/// Semi-discrete right-hand side -(F_{i+1/2} - F_{i-1/2}) / h. The returned
/// field holds the rates in its interior; its ghosts are zero.
inline CellField rhs(CellField field, const SolverConfig& config, double time = 0.0) {
  const Grid& grid = field.grid();
  fill_ghosts(field, config.bc);
  if (!field.all_finite()) throw BlowUpError(time, "non-finite cell value");

  const auto traces = reconstruct_field(field, config.scheme);
  const auto padded = field.padded();
  std::vector<double> flux(traces.size());
  for (int k = 0; k <= grid.n_cells; ++k) {
    const auto left = static_cast<std::size_t>(grid.n_ghost + k - 1);
    flux[static_cast<std::size_t>(k)] =
        tecno_flux(padded.subspan(left - 1).first<4>(), traces[static_cast<std::size_t>(k)],
                   config.flux);
  }

  CellField out(grid);
  for (int i = 0; i < grid.n_cells; ++i) {
    out[i] = -(flux[static_cast<std::size_t>(i) + 1] - flux[static_cast<std::size_t>(i)]) / grid.h;
  }
  return out;
}

/// CFL step cfl*h/max|f'(u_i)|, clipped to the remaining time.
inline double cfl_dt(const CellField& field, const SolverConfig& config,
                     double t_remaining = std::numeric_limits<double>::infinity()) {
  double dt = 0.0;
  if (config.fixed_dt) {
    dt = *config.fixed_dt;
  } else {
    double speed = 0.0;
    for (double u : field.interior()) speed = std::max(speed, std::abs(config.flux.eq.flux_derivative(u)));
    const double h = field.grid().h;
    dt = speed > 0.0 ? config.cfl * h / speed : config.cfl * h;
  }
  return std::min(dt, t_remaining);
}

/// Three-stage SSP Runge-Kutta (Shu-Osher form).
inline CellField ssp_rk3_step(const CellField& u, double dt, const SolverConfig& config,
                              double time = 0.0) {
  if (!(dt > 0.0)) throw std::invalid_argument("ssp_rk3_step: dt must be positive");
  const int n = u.size();

  CellField l0 = rhs(u, config, time);
  CellField u1(u.grid());
  for (int i = 0; i < n; ++i) u1[i] = u[i] + dt * l0[i];

  CellField l1 = rhs(u1, config, time + dt);
  CellField u2(u.grid());
  for (int i = 0; i < n; ++i) u2[i] = 0.75 * u[i] + 0.25 * (u1[i] + dt * l1[i]);

  CellField l2 = rhs(u2, config, time + 0.5 * dt);
  CellField next(u.grid());
  for (int i = 0; i < n; ++i) next[i] = u[i] / 3.0 + (2.0 / 3.0) * (u2[i] + dt * l2[i]);

  for (double v : next.interior())
    if (!std::isfinite(v)) throw BlowUpError(time + dt, "non-finite solution after step");
  return next;
}

using StepObserver = std::function<void(double t, const CellField& field)>;

/// Advances to config.t_end. Observers run after every accepted step.
inline CellField evolve(const CellField& initial, const SolverConfig& config,
                        const std::vector<StepObserver>& observers = {}) {
  config.validate();
  CellField u = initial;
  double t = 0.0;
  while (t < config.t_end) {
    const double remaining = config.t_end - t;
    double dt = cfl_dt(u, config, remaining);
    // absorb a sliver that would otherwise force an extra tiny step
    if (remaining - dt <= 1e-12 * config.t_end) dt = remaining;
    u = ssp_rk3_step(u, dt, config, t);
    t = (dt == remaining) ? config.t_end : t + dt;
    for (const auto& obs : observers) obs(t, u);
  }
  fill_ghosts(u, config.bc);
  return u;
}

}  // namespace tecno
