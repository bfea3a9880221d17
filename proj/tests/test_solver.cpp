#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "tecno/solver.hpp"

using namespace tecno;

namespace {

SolverConfig config(Equation eq, Scheme scheme, double t_end, double cfl = 0.4) {
  SolverConfig c;
  c.cfl = cfl;
  c.t_end = t_end;
  c.scheme = scheme;
  c.flux = FluxScheme{eq};
  return c;
}

CellField sine(int n, int ghosts = 3) {
  return CellField::sample(build_grid(0.0, 2 * M_PI, n, ghosts), [](double x) { return std::sin(x); });
}

double sum(const CellField& f) {
  return std::accumulate(f.interior().begin(), f.interior().end(), 0.0);
}

}  // namespace

TEST(Rhs, ConstantStateIsSteady) {
  CellField u(build_grid(0.0, 1.0, 20, 3), 2.5);
  for (Scheme s : kAllSchemes) {
    for (const Equation& eq : {Equation::advection(1.0), Equation::burgers()}) {
      const CellField r = rhs(u, config(eq, s, 1.0));
      for (double v : r.interior()) EXPECT_EQ(v, 0.0);
    }
  }
}

TEST(Rhs, PeriodicIsConservative) {
  const CellField u = sine(64);
  for (Scheme s : kAllSchemes) {
    const CellField r = rhs(u, config(Equation::burgers(), s, 1.0));
    EXPECT_NEAR(sum(r), 0.0, 1e-12) << to_string(s);
  }
}

TEST(Rhs, ThirdOrderForAdvection) {
  // -(sin)' = -cos, measured in L1: the max norm drops to second order at extrema
  double prev = 0.0;
  for (int n : {80, 160, 320}) {
    const CellField r = rhs(sine(n), config(Equation::advection(1.0), Scheme::spweno, 1.0));
    double err = 0.0;
    for (int i = 0; i < n; ++i) err += std::abs(r[i] + std::cos(r.grid().cell_center(i))) * r.grid().h;
    if (prev > 0.0) {
      EXPECT_GT(std::log2(prev / err), 2.7);
    }
    prev = err;
  }
}

TEST(Rhs, NonFiniteInputThrows) {
  CellField u = sine(20);
  u[4] = std::nan("");
  EXPECT_THROW(rhs(u, config(Equation::burgers(), Scheme::spweno, 1.0), 0.25), BlowUpError);
  try {
    rhs(u, config(Equation::burgers(), Scheme::spweno, 1.0), 0.25);
  } catch (const BlowUpError& e) {
    EXPECT_EQ(e.time(), 0.25);
  }
}

TEST(CflDt, Examples) {
  CellField u(build_grid(0.0, 1.0, 10), 0.0);
  u[3] = -4.0;
  EXPECT_DOUBLE_EQ(cfl_dt(u, config(Equation::burgers(), Scheme::spweno, 1.0, 0.5)), 0.5 * 0.1 / 4);
  EXPECT_DOUBLE_EQ(cfl_dt(u, config(Equation::advection(-2.0), Scheme::spweno, 1.0, 0.5)), 0.025);
  EXPECT_DOUBLE_EQ(cfl_dt(u, config(Equation::burgers(), Scheme::spweno, 1.0), 1e-3), 1e-3);
  CellField z(build_grid(0.0, 1.0, 10), 0.0);
  EXPECT_DOUBLE_EQ(cfl_dt(z, config(Equation::burgers(), Scheme::spweno, 1.0)), 0.04);
}

TEST(SspRk3, MatchesCubicTaylorOnLinearProblem) {
  // for linear advection the step is exactly I + dt L + dt^2 L^2/2 + dt^3 L^3/6
  const auto cfg = config(Equation::advection(1.0), Scheme::eno2, 1.0);
  SolverConfig linear = cfg;
  linear.flux.dissipative = false;  // keeps L linear
  const CellField u = sine(32);
  const double dt = 0.05;
  const CellField l1 = rhs(u, linear);
  const CellField l2 = rhs(l1, linear);
  const CellField l3 = rhs(l2, linear);
  const CellField step = ssp_rk3_step(u, dt, linear);
  for (int i = 0; i < 32; ++i) {
    const double taylor = u[i] + dt * l1[i] + dt * dt / 2 * l2[i] + dt * dt * dt / 6 * l3[i];
    EXPECT_NEAR(step[i], taylor, 1e-14);
  }
}

TEST(SspRk3, RejectsBadStep) {
  EXPECT_THROW(ssp_rk3_step(sine(20), 0.0, config(Equation::burgers(), Scheme::spweno, 1.0)),
               std::invalid_argument);
}

TEST(Evolve, ZeroTimeIsIdentity) {
  const CellField u = sine(20);
  const CellField out = evolve(u, config(Equation::burgers(), Scheme::spweno, 0.0));
  for (int i = 0; i < 20; ++i) EXPECT_EQ(out[i], u[i]);
}

TEST(Evolve, EndsExactlyAtFinalTime) {
  double last = -1.0;
  int steps = 0;
  evolve(sine(40), config(Equation::advection(1.0), Scheme::spweno, 0.37),
         {[&](double t, const CellField&) {
           EXPECT_GT(t, last);
           last = t;
           ++steps;
         }});
  EXPECT_EQ(last, 0.37);
  EXPECT_GT(steps, 1);
}

TEST(Evolve, FullPeriodAdvectionReturns) {
  const CellField u = sine(200);
  const CellField out = evolve(u, config(Equation::advection(1.0), Scheme::spweno, 2 * M_PI));
  for (int i = 0; i < 200; ++i) EXPECT_NEAR(out[i], u[i], 2e-4);
}

TEST(Evolve, ScalingSymmetry) {
  // Burgers: u(x,t) solves it iff a u(x, a t) does, so scaling data by 2 halves the time
  const CellField u = sine(50);
  CellField u2 = u;
  for (double& v : u2.interior()) v *= 2.0;
  const CellField a = evolve(u, config(Equation::burgers(), Scheme::spweno, 0.4));
  const CellField b = evolve(u2, config(Equation::burgers(), Scheme::spweno, 0.2));
  for (int i = 0; i < 50; ++i) EXPECT_NEAR(b[i], 2.0 * a[i], 1e-12);
}

TEST(Evolve, BurgersEntropyNeverIncreases) {
  // a shock forms at t = 1; entropy may only fall, up to the time-integration error
  const CellField u = sine(100);
  auto entropy = [](const CellField& f) {
    double e = 0.0;
    for (double v : f.interior()) e += 0.5 * v * v;
    return e;
  };
  const double e0 = entropy(u);
  double prev = e0;
  evolve(u, config(Equation::burgers(), Scheme::spweno, 1.5), {[&](double, const CellField& f) {
           const double e = entropy(f);
           EXPECT_LE(e, prev + 1e-9 * e0);
           prev = e;
         }});
  EXPECT_LT(prev, e0 * 0.99);
}

TEST(Config, Validation) {
  SolverConfig c;
  c.cfl = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.cfl = 0.5;
  c.t_end = -1.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.t_end = 1.0;
  c.fixed_dt = -0.1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}
