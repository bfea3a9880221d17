#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tecno/grid.hpp"

namespace tecno {

// Interface traces at x_{i+1/2}, the boundary between cells i and i+1.
//
// Four-point kernels take the window (v_{i-1}, v_i, v_{i+1}, v_{i+2});
// the ENO-3 kernel takes (v_{i-2}, ..., v_{i+3}).

template <std::floating_point Real>
struct InterfaceTrace {
  Real v_minus{};
  Real v_plus{};
  Real jump{};  // v_plus - v_minus
};

template <std::floating_point Real>
constexpr InterfaceTrace<Real> make_trace(Real v_minus, Real v_plus) {
  return {v_minus, v_plus, v_plus - v_minus};
}

/// theta_plus = dv_{i-1/2} / dv_{i+1/2}, theta_minus_next = dv_{i+3/2} / dv_{i+1/2}.
template <std::floating_point Real>
struct JumpRatios {
  Real theta_plus{};
  Real theta_minus_next{};
  bool defined = false;
};

template <std::floating_point Real>
constexpr JumpRatios<Real> jump_ratios(std::span<const Real, 4> v) {
  const Real dl = v[1] - v[0];
  const Real dc = v[2] - v[1];
  const Real dr = v[3] - v[2];
  if (dc == Real(0)) return {};
  return {dl / dc, dr / dc, true};
}

/// SP-WENO weights written through the accuracy coefficients (C1, C2):
/// w0 = 3/4 + 2 C1, w1 = 1/4 - 2 C1, wt0 = 1/4 - 2 C2, wt1 = 3/4 + 2 C2.
template <std::floating_point Real>
struct WeightSet {
  Real c1{};
  Real c2{};

  constexpr Real w0() const { return Real(0.75) + 2 * c1; }
  constexpr Real w1() const { return Real(0.25) - 2 * c1; }
  constexpr Real wt0() const { return Real(0.25) - 2 * c2; }
  constexpr Real wt1() const { return Real(0.75) + 2 * c2; }
};

namespace detail {

// C1(theta_plus, theta_minus_next). C2 is the same map with arguments swapped.
template <std::floating_point Real>
constexpr Real spweno_c1(Real tp, Real tm) {
  constexpr Real lower = Real(-3) / 8;
  constexpr Real upper = Real(1) / 8;
  if (tp == Real(1)) return lower;
  const Real psi_plus = (Real(1) - tm) / (Real(1) - tp);
  if (psi_plus < Real(0)) {
    if (psi_plus == Real(-1)) return Real(0);
    // psi_plus < 0 implies tm != 1, so psi_minus is finite.
    const Real psi_minus = (Real(1) - tp) / (Real(1) - tm);
    const Real f_plus = Real(1) / (Real(1) + psi_plus);
    const Real f_minus = Real(1) / (Real(1) + psi_minus);
    return upper * f_plus / (f_plus * f_plus + f_minus * f_minus);
  }
  // psi_plus >= 0 (or NaN from two infinite ratios, where |tp| > 1).
  return std::abs(tp) <= Real(1) ? lower : upper;
}

template <std::floating_point Real>
constexpr Real central(Real vi, Real vip1) {
  return (vi + vip1) / 2;
}

template <std::floating_point Real>
constexpr Real one_sided(Real near, Real far) {
  return (3 * near - far) / 2;
}

}  // namespace detail

template <std::floating_point Real>
constexpr WeightSet<Real> spweno_coefficients(Real theta_plus, Real theta_minus_next) {
  return {detail::spweno_c1(theta_plus, theta_minus_next),
          detail::spweno_c1(theta_minus_next, theta_plus)};
}

/// Weights for one interface. A zero interface jump selects w1 = wt0 = 0.
template <std::floating_point Real>
constexpr WeightSet<Real> spweno_weights(std::span<const Real, 4> v) {
  const auto r = jump_ratios(v);
  if (!r.defined) return {Real(1) / 8, Real(1) / 8};
  return spweno_coefficients(r.theta_plus, r.theta_minus_next);
}

template <std::floating_point Real>
constexpr InterfaceTrace<Real> spweno_trace(std::span<const Real, 4> v) {
  const Real mid = detail::central(v[1], v[2]);
  const auto r = jump_ratios(v);
  if (!r.defined) return make_trace(mid, mid);

  const auto w = spweno_coefficients(r.theta_plus, r.theta_minus_next);
  const Real v_minus = w.w0() * mid + w.w1() * detail::one_sided(v[1], v[0]);
  const Real v_plus = w.wt0() * detail::one_sided(v[2], v[3]) + w.wt1() * mid;

  // theta_plus and theta_minus_next on opposite sides of 1: (C1, C2) lies on
  // the line where both states coincide, so the jump is exactly zero.
  const Real tp = r.theta_plus;
  const Real tm = r.theta_minus_next;
  if (tp != Real(1) && tm != Real(1) && ((tp < Real(1)) != (tm < Real(1)))) {
    const Real avg = (v_minus + v_plus) / 2;
    return make_trace(avg, avg);
  }
  return make_trace(v_minus, v_plus);
}

/// Jump in units of dv_{i+1/2}: (wt0 (1 - theta_minus_next) + w1 (1 - theta_plus)) / 2.
template <std::floating_point Real>
constexpr Real spweno_relative_jump(Real theta_plus, Real theta_minus_next) {
  const auto w = spweno_coefficients(theta_plus, theta_minus_next);
  return (w.wt0() * (Real(1) - theta_minus_next) + w.w1() * (Real(1) - theta_plus)) / 2;
}

enum class JumpRegion { omega0, omega1, omega2, omega3 };

/// Classifies (theta_plus, theta_minus_next) by the closed form of the SP-WENO jump:
///   omega0: 0
///   omega1: (dv_{i+1/2} - dv_{i-1/2}) / 2
///   omega2: (dv_{i+1/2} - dv_{i+3/2}) / 2
///   omega3: dv_{i+1/2} - (dv_{i-1/2} + dv_{i+3/2}) / 2
template <std::floating_point Real>
constexpr JumpRegion spweno_jump_region(Real tp, Real tm) {
  const Real one = 1;
  if (tm == one) return std::abs(tp) <= one ? JumpRegion::omega1 : JumpRegion::omega0;
  if (tp == one) return std::abs(tm) <= one ? JumpRegion::omega2 : JumpRegion::omega0;
  if (tp > one || tm > one) return JumpRegion::omega0;
  // both below one
  const bool left_bounded = tp >= -one;
  const bool right_bounded = tm >= -one;
  if (left_bounded && right_bounded) return JumpRegion::omega3;
  if (left_bounded) return JumpRegion::omega1;
  if (right_bounded) return JumpRegion::omega2;
  return JumpRegion::omega0;
}

template <std::floating_point Real>
constexpr Real region_jump(JumpRegion region, Real dv_left, Real dv_center, Real dv_right) {
  switch (region) {
    case JumpRegion::omega0: return Real(0);
    case JumpRegion::omega1: return (dv_center - dv_left) / 2;
    case JumpRegion::omega2: return (dv_center - dv_right) / 2;
    case JumpRegion::omega3: return dv_center - (dv_left + dv_right) / 2;
  }
  return Real(0);
}

inline std::string_view to_string(JumpRegion r) {
  switch (r) {
    case JumpRegion::omega0: return "omega0";
    case JumpRegion::omega1: return "omega1";
    case JumpRegion::omega2: return "omega2";
    case JumpRegion::omega3: return "omega3";
  }
  return "?";
}

/// ENO-2: each side picks the two-point stencil with the smaller jump.
/// Ties go to the central stencil {i, i+1}.
template <std::floating_point Real>
constexpr InterfaceTrace<Real> eno2_trace(std::span<const Real, 4> v) {
  const Real dl = v[1] - v[0];
  const Real dc = v[2] - v[1];
  const Real dr = v[3] - v[2];
  const Real mid = detail::central(v[1], v[2]);
  const Real v_minus = std::abs(dl) < std::abs(dc) ? detail::one_sided(v[1], v[0]) : mid;
  const Real v_plus = std::abs(dr) < std::abs(dc) ? detail::one_sided(v[2], v[3]) : mid;
  return make_trace(v_minus, v_plus);
}

namespace detail {

// Quadratic through window cells (s, s+1, s+2) evaluated at the interface
// between window cells 2 and 3. Both sides call this with the same start
// for a shared stencil, so shared stencils give bitwise-equal values.
template <std::floating_point Real>
constexpr Real quadratic_at_interface(std::span<const Real, 6> w, int s) {
  constexpr std::array<std::array<Real, 3>, 4> coeff{{
      {Real(3) / 8, Real(-5) / 4, Real(15) / 8},
      {Real(-1) / 8, Real(3) / 4, Real(3) / 8},
      {Real(3) / 8, Real(3) / 4, Real(-1) / 8},
      {Real(15) / 8, Real(-5) / 4, Real(3) / 8},
  }};
  const auto& c = coeff[static_cast<std::size_t>(s)];
  const auto k = static_cast<std::size_t>(s);
  return c[0] * w[k] + c[1] * w[k + 1] + c[2] * w[k + 2];
}

template <std::floating_point Real>
constexpr Real second_difference(std::span<const Real, 6> w, int s) {
  const auto k = static_cast<std::size_t>(s);
  return w[k + 2] - 2 * w[k + 1] + w[k];
}

}  // namespace detail

namespace detail {

// Extends the two-point stencil starting at window cell `base` by one cell.
// On ties a one-sided base grows toward the interface; the shared base
// {2, 3} grows left for both states, so both sides agree on it.
template <std::floating_point Real>
constexpr int eno3_extend(std::span<const Real, 6> w, int base) {
  const Real left = std::abs(second_difference(w, base - 1));
  const Real right = std::abs(second_difference(w, base));
  if (left < right) return base - 1;
  if (right < left) return base;
  return base == 1 ? base : base - 1;
}

}  // namespace detail

/// ENO-3 via hierarchical divided-difference stencil selection.
template <std::floating_point Real>
constexpr InterfaceTrace<Real> eno3_trace(std::span<const Real, 6> w) {
  const Real dl = std::abs(w[2] - w[1]);
  const Real dc = std::abs(w[3] - w[2]);
  const Real dr = std::abs(w[4] - w[3]);
  // first level ties keep the central pair {2, 3}
  const int base_minus = dl < dc ? 1 : 2;
  const int base_plus = dr < dc ? 3 : 2;
  return make_trace(detail::quadratic_at_interface(w, detail::eno3_extend(w, base_minus)),
                    detail::quadratic_at_interface(w, detail::eno3_extend(w, base_plus)));
}

inline constexpr double kWenoEpsilon = 1e-6;

/// Classical WENO-3 (Jiang-Shu weights, ideal weights 2/3 and 1/3).
template <std::floating_point Real>
constexpr InterfaceTrace<Real> weno3_js_trace(std::span<const Real, 4> v,
                                              Real eps = Real(kWenoEpsilon)) {
  const Real mid = detail::central(v[1], v[2]);
  auto combine = [eps, mid](Real one_sided_value, Real beta_central, Real beta_side) {
    const Real a_c = (Real(2) / 3) / ((eps + beta_central) * (eps + beta_central));
    const Real a_s = (Real(1) / 3) / ((eps + beta_side) * (eps + beta_side));
    return (a_c * mid + a_s * one_sided_value) / (a_c + a_s);
  };
  const Real dl = v[1] - v[0];
  const Real dc = v[2] - v[1];
  const Real dr = v[3] - v[2];
  return make_trace(combine(detail::one_sided(v[1], v[0]), dc * dc, dl * dl),
                    combine(detail::one_sided(v[2], v[3]), dc * dc, dr * dr));
}

enum class Scheme { spweno, eno2, eno3, weno3 };

inline constexpr std::array<Scheme, 4> kAllSchemes{Scheme::spweno, Scheme::eno2, Scheme::eno3,
                                                   Scheme::weno3};

inline std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::spweno: return "spweno";
    case Scheme::eno2: return "eno2";
    case Scheme::eno3: return "eno3";
    case Scheme::weno3: return "weno3";
  }
  return "?";
}

inline Scheme parse_scheme(std::string_view name) {
  for (Scheme s : kAllSchemes)
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown scheme '" + std::string(name) +
                              "' (available: spweno, eno2, eno3, weno3)");
}

/// Ghost cells a scheme needs on each side of the grid.
constexpr int required_ghosts(Scheme s) { return s == Scheme::eno3 ? 3 : 2; }

inline InterfaceTrace<double> trace_at(std::span<const double> padded, int left_cell, Scheme s) {
  // left_cell is the padded index of cell i
  const auto k = static_cast<std::size_t>(left_cell);
  switch (s) {
    case Scheme::spweno: return spweno_trace(padded.subspan(k - 1).first<4>());
    case Scheme::eno2: return eno2_trace(padded.subspan(k - 1).first<4>());
    case Scheme::eno3: return eno3_trace(padded.subspan(k - 2).first<6>());
    case Scheme::weno3: return weno3_js_trace(padded.subspan(k - 1).first<4>());
  }
  throw std::logic_error("trace_at: bad scheme");
}

/// Traces at interfaces 0..n_cells. Ghosts must already be filled.
inline std::vector<InterfaceTrace<double>> reconstruct_field(const CellField& field, Scheme s) {
  const Grid& grid = field.grid();
  if (grid.n_ghost < required_ghosts(s)) {
    throw std::invalid_argument("reconstruct_field: " + std::string(to_string(s)) + " needs " +
                                std::to_string(required_ghosts(s)) + " ghost cells");
  }
  std::vector<InterfaceTrace<double>> traces(static_cast<std::size_t>(grid.n_cells + 1));
  const auto padded = field.padded();
  for (int k = 0; k <= grid.n_cells; ++k) {
    traces[static_cast<std::size_t>(k)] = trace_at(padded, grid.n_ghost + k - 1, s);
  }
  return traces;
}

}  // namespace tecno
