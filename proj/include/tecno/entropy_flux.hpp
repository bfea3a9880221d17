#pragma once

#include <cmath>
#include <span>

#include "tecno/equation.hpp"
#include "tecno/reconstruction.hpp"

namespace tecno {

/// Square entropy eta = u^2/2 paired with the equation's flux. The entropy
/// variable equals u.
struct EntropyPair {
  Equation eq;

  constexpr double entropy(double u) const { return 0.5 * u * u; }
  constexpr double variable(double u) const { return u; }

  // q' = eta' f'
  constexpr double entropy_flux(double u) const {
    return eq.kind == EquationKind::advection ? 0.5 * eq.c * u * u : u * u * u / 3.0;
  }

  // Psi = v f - q
  constexpr double potential(double u) const {
    return variable(u) * eq.flux(u) - entropy_flux(u);
  }
};

constexpr double ec_flux_advection(double u_left, double u_right, double c) {
  return c * (u_left + u_right) / 2;
}

constexpr double ec_flux_burgers(double u_left, double u_right) {
  return (u_left * u_left + u_right * u_right + u_left * u_right) / 6;
}

/// Fourth-order entropy-conservative flux from the window (u_{i-1}, u_i, u_{i+1}, u_{i+2}).
template <class TwoPoint>
constexpr double ec_flux_4th(std::span<const double, 4> u, TwoPoint&& two_point) {
  return (4.0 / 3.0) * two_point(u[1], u[2]) -
         (1.0 / 6.0) * (two_point(u[0], u[2]) + two_point(u[1], u[3]));
}

enum class FluxOrder { ec2, ec4 };

/// Entropy-conservative flux plus the dissipation coefficient a_{i+1/2}.
struct FluxScheme {
  Equation eq;
  FluxOrder order = FluxOrder::ec4;
  bool dissipative = true;  // false: pure entropy-conservative flux

  constexpr double ec_two_point(double u_left, double u_right) const {
    return eq.kind == EquationKind::advection ? ec_flux_advection(u_left, u_right, eq.c)
                                              : ec_flux_burgers(u_left, u_right);
  }

  /// a = |c| for advection, (|u_i| + |u_{i+1}|)/2 for Burgers.
  constexpr double dissipation(double u_left, double u_right) const {
    if (!dissipative) return 0.0;
    return eq.kind == EquationKind::advection ? std::abs(eq.c)
                                              : (std::abs(u_left) + std::abs(u_right)) / 2;
  }

  constexpr double ec_flux(std::span<const double, 4> u) const {
    if (order == FluxOrder::ec2) return ec_two_point(u[1], u[2]);
    return ec_flux_4th(u, [this](double l, double r) { return ec_two_point(l, r); });
  }
};

/// TeCNO flux: F* - a/2 [[v]], with [[v]] from a reconstructed trace.
constexpr double tecno_flux(std::span<const double, 4> u, const InterfaceTrace<double>& trace,
                            const FluxScheme& scheme) {
  return scheme.ec_flux(u) - 0.5 * scheme.dissipation(u[1], u[2]) * trace.jump;
}

}  // namespace tecno
