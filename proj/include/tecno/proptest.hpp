#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tecno/entropy_flux.hpp"
#include "tecno/reconstruction.hpp"

namespace tecno {

/// Randomized invariant checks over single interfaces.
struct PropertyCount {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

struct PropertyReport {
  Scheme scheme = Scheme::spweno;
  std::vector<PropertyCount> properties;
  // first sign-property counterexample, window (v_{i-2}, ..., v_{i+3})
  std::optional<std::array<double, 6>> sign_exhibit;

  const PropertyCount* find(const std::string& name) const {
    for (const auto& p : properties)
      if (p.name == name) return &p;
    return nullptr;
  }
  std::uint64_t violations(const std::string& name) const {
    const auto* p = find(name);
    return p ? p->violations : 0;
  }
};

/// Schemes with a proven sign property.
constexpr bool has_sign_property(Scheme s) { return s != Scheme::weno3; }

namespace detail {

// Half of the windows are small integers, which hit zero jumps, unit ratios
// and psi = -1 exactly; the rest are continuous.
inline std::array<double, 6> random_window(std::mt19937_64& rng) {
  std::array<double, 6> w{};
  std::uniform_int_distribution<int> coin(0, 1);
  if (coin(rng) == 0) {
    std::uniform_int_distribution<int> small(-3, 3);
    for (double& x : w) x = small(rng);
  } else {
    std::uniform_real_distribution<double> real(-1.0, 1.0);
    std::uniform_real_distribution<double> log_scale(-3.0, 3.0);
    const double scale = std::pow(10.0, log_scale(rng));
    for (double& x : w) x = scale * real(rng);
  }
  return w;
}

inline InterfaceTrace<double> trace_in_window(std::span<const double, 6> w, int left_cell,
                                              Scheme s) {
  // left_cell in {1, 2}; eno3 only with left_cell == 2
  return trace_at(std::span<const double>(w.data(), w.size()), left_cell, s);
}

}  // namespace detail

inline PropertyReport run_property_suite(Scheme scheme, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyCount sign{"sign_property"}, zero{"zero_jump_when_flat"}, bound{"jump_bound"},
      consistency{"weight_consistency"}, mirror{"mirror_symmetry"}, negation{"negation_symmetry"},
      inner{"inner_jump"};
  PropertyReport report;
  report.scheme = scheme;
  const bool is_sp = scheme == Scheme::spweno;
  const bool check_inner = scheme == Scheme::spweno || scheme == Scheme::eno2;

  for (std::uint64_t n = 0; n < samples; ++n) {
    const auto w = detail::random_window(rng);
    const auto t = detail::trace_in_window(w, 2, scheme);
    const double dv = w[3] - w[2];

    ++sign.checks;
    if (t.jump * dv < 0.0) {
      ++sign.violations;
      if (!report.sign_exhibit) report.sign_exhibit = w;
    }
    if (dv == 0.0) {
      ++zero.checks;
      if (t.jump != 0.0) ++zero.violations;
    }

    if (is_sp) {
      const std::span<const double, 4> v4(w.data() + 1, 4);
      ++bound.checks;
      if (std::abs(t.jump) > 2.0 * std::abs(dv)) ++bound.violations;

      const auto ws = spweno_weights(v4);
      ++consistency.checks;
      const bool in_unit = ws.w0() >= 0 && ws.w0() <= 1 && ws.w1() >= 0 && ws.w1() <= 1 &&
                           ws.wt0() >= 0 && ws.wt0() <= 1 && ws.wt1() >= 0 && ws.wt1() <= 1;
      const bool sums = std::abs(ws.w0() + ws.w1() - 1.0) <= 1e-15 &&
                        std::abs(ws.wt0() + ws.wt1() - 1.0) <= 1e-15;
      if (!in_unit || !sums) ++consistency.violations;

      const std::array<double, 4> reversed{w[4], w[3], w[2], w[1]};
      const auto wr = spweno_weights(std::span<const double, 4>(reversed));
      const auto tr = spweno_trace(std::span<const double, 4>(reversed));
      ++mirror.checks;
      if (wr.c1 != ws.c2 || wr.c2 != ws.c1 || tr.v_minus != t.v_plus || tr.v_plus != t.v_minus)
        ++mirror.violations;

      const std::array<double, 4> negated{-w[1], -w[2], -w[3], -w[4]};
      const auto wn = spweno_weights(std::span<const double, 4>(negated));
      ++negation.checks;
      if (wn.c1 != ws.c1 || wn.c2 != ws.c2) ++negation.violations;
    }

    if (check_inner) {
      // cell 2: compare v^-_{i+1/2} with v^+_{i-1/2}
      const double dl = w[2] - w[1];
      if (dl != 0.0 && dv != 0.0 && (dl > 0.0) == (dv > 0.0)) {
        const auto left_iface = detail::trace_in_window(w, 1, scheme);
        const double inner_jump = t.v_minus - left_iface.v_plus;
        ++inner.checks;
        if (inner_jump * dv < 0.0) ++inner.violations;
      }
    }
  }

  report.properties = {sign, zero};
  if (is_sp) {
    report.properties.push_back(bound);
    report.properties.push_back(consistency);
    report.properties.push_back(mirror);
    report.properties.push_back(negation);
  }
  if (check_inner) report.properties.push_back(inner);
  return report;
}

/// Entropy-conservation identity dv F* = dPsi on random pairs; the error is
/// measured relative to |Psi(u_L)| + |Psi(u_R)|.
inline PropertyCount run_ec_identity(const Equation& eq, std::uint64_t samples, std::uint64_t seed,
                                     double rel_tol = 1e-12) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  const EntropyPair pair{eq};
  const FluxScheme flux{eq};
  PropertyCount count{"ec_identity_" + std::string(eq.kind == EquationKind::advection ? "advection"
                                                                                      : "burgers")};
  for (std::uint64_t n = 0; n < samples; ++n) {
    const double ul = dist(rng), ur = dist(rng);
    const double lhs = (pair.variable(ur) - pair.variable(ul)) * flux.ec_two_point(ul, ur);
    const double rhs = pair.potential(ur) - pair.potential(ul);
    const double scale = std::abs(pair.potential(ur)) + std::abs(pair.potential(ul));
    ++count.checks;
    if (std::abs(lhs - rhs) > rel_tol * scale) ++count.violations;
  }
  return count;
}

}  // namespace tecno
