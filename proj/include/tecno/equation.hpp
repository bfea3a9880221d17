#pragma once

#include <cmath>
#include <string>

namespace tecno {

enum class EquationKind { advection, burgers };

/// Scalar flux f(u): c*u for linear advection, u^2/2 for Burgers.
struct Equation {
  EquationKind kind = EquationKind::advection;
  double c = 1.0;  // advection speed, unused for Burgers

  static constexpr Equation advection(double speed) { return {EquationKind::advection, speed}; }
  static constexpr Equation burgers() { return {EquationKind::burgers, 0.0}; }

  constexpr double flux(double u) const {
    return kind == EquationKind::advection ? c * u : 0.5 * u * u;
  }
  constexpr double flux_derivative(double u) const {
    return kind == EquationKind::advection ? c : u;
  }

  std::string name() const {
    return kind == EquationKind::advection ? "advection(c=" + std::to_string(c) + ")" : "burgers";
  }
};

}  // namespace tecno
