#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "tecno/equation.hpp"
#include "tecno/grid.hpp"

namespace tecno {

using Profile = std::function<double(double)>;
using ExactSolution = std::function<double(double x, double t)>;

struct ProblemSpec {
  std::string name;
  Equation equation;
  double a = 0.0;
  double b = 1.0;
  Profile initial;
  BoundaryCondition bc = BoundaryCondition::periodic;
  double t_end = 0.0;
  double cfl = 0.4;
  std::optional<int> default_cells;
  std::optional<ExactSolution> exact;
};

/// u0 evaluated at the foot of the characteristic x - c t, wrapped into [a, b)
/// when periodic.
inline double advection_exact(double x, double t, const Profile& u0, double c, double a, double b,
                              BoundaryCondition bc) {
  double foot = x - c * t;
  if (bc == BoundaryCondition::periodic) {
    const double len = b - a;
    foot = a + std::fmod(foot - a, len);
    if (foot < a) foot += len;
  }
  return u0(foot);
}

/// Smooth Burgers solution u = u0(x - u t) before the breaking time, by damped Newton.
inline double burgers_smooth_exact(double x, double t, const Profile& u0, const Profile& du0,
                                   double tol = 1e-13, int max_iter = 100) {
  auto residual = [&](double u) { return u - u0(x - u * t); };
  double u = u0(x);
  double r = residual(u);
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(r) < tol) return u;
    const double slope = 1.0 + t * du0(x - u * t);
    double step = r / slope;
    double trial = u - step;
    double r_trial = residual(trial);
    // halve the step while the residual grows
    for (int k = 0; k < 30 && std::abs(r_trial) > std::abs(r); ++k) {
      step *= 0.5;
      trial = u - step;
      r_trial = residual(trial);
    }
    u = trial;
    r = r_trial;
  }
  if (std::abs(r) < tol) return u;
  throw std::runtime_error("burgers_smooth_exact: no convergence at x=" + std::to_string(x) +
                           ", t=" + std::to_string(t) + " (too close to breaking time?)");
}

inline Profile step_profile(double left, double right) {
  // x == 0 goes to the left state
  return [left, right](double x) { return x <= 0.0 ? left : right; };
}

inline const std::map<std::string, ProblemSpec>& registry() {
  static const std::map<std::string, ProblemSpec> problems = [] {
    using std::numbers::pi;
    std::map<std::string, ProblemSpec> m;

    Profile inclined_sine = [](double x) { return std::sin(10.0 * pi * x) + x; };
    m["recon_accuracy"] = {"recon_accuracy", Equation::advection(1.0), 0.0, 1.0, inclined_sine,
                           BoundaryCondition::neumann, 0.0, 0.4, std::nullopt,
                           [inclined_sine](double x, double) { return inclined_sine(x); }};

    auto periodic_advection = [](std::string name, Profile u0, double t_end, double cfl) {
      const double a = -pi, b = pi;
      ExactSolution exact = [u0, a, b](double x, double t) {
        return advection_exact(x, t, u0, 1.0, a, b, BoundaryCondition::periodic);
      };
      return ProblemSpec{std::move(name), Equation::advection(1.0), a, b, u0,
                         BoundaryCondition::periodic, t_end, cfl, std::nullopt, exact};
    };
    m["adv1"] = periodic_advection("adv1", [](double x) { return std::sin(x); }, 0.5, 0.4);
    m["adv2"] = periodic_advection(
        "adv2", [](double x) { return std::pow(std::sin(x), 4); }, 0.5, 0.5);

    Profile step31 = step_profile(3.0, -1.0);
    m["adv3"] = {"adv3", Equation::advection(1.0), -1.0, 1.0, step31, BoundaryCondition::neumann,
                 0.5, 0.4, 100,
                 [step31](double x, double t) {
                   return advection_exact(x, t, step31, 1.0, -1.0, 1.0, BoundaryCondition::neumann);
                 }};

    Profile b1 = [](double x) { return 1.0 + 0.5 * std::sin(pi * x); };
    Profile db1 = [](double x) { return 0.5 * pi * std::cos(pi * x); };
    m["burgers1"] = {"burgers1", Equation::burgers(), -1.0, 1.0, b1, BoundaryCondition::periodic,
                     0.3, 0.4, std::nullopt,
                     [b1, db1](double x, double t) {
                       // the profile is 2-periodic; the characteristic foot may leave [-1, 1]
                       return burgers_smooth_exact(x, t, b1, db1);
                     }};
    m["burgers2"] = {"burgers2", Equation::burgers(), -1.0, 1.0, step31,
                     BoundaryCondition::neumann, 0.45, 0.4, 100, std::nullopt};
    m["burgers3"] = {"burgers3", Equation::burgers(), -1.0, 1.0, step_profile(-2.0, 1.0),
                     BoundaryCondition::neumann, 0.2, 0.4, 100, std::nullopt};
    return m;
  }();
  return problems;
}

inline const ProblemSpec& lookup_problem(const std::string& name) {
  const auto& reg = registry();
  if (auto it = reg.find(name); it != reg.end()) return it->second;
  std::string names;
  for (const auto& [key, _] : reg) names += (names.empty() ? "" : ", ") + key;
  throw std::invalid_argument("unknown problem '" + name + "' (available: " + names + ")");
}

/// Breaking time of 1 + sin(pi x)/2 under Burgers.
inline constexpr double kBurgersBreakingTime = 2.0 / std::numbers::pi;

}  // namespace tecno
