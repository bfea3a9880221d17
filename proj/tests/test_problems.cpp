#include <gtest/gtest.h>

#include <cmath>

#include "tecno/problems.hpp"

using namespace tecno;

namespace {

// u = u0(x - u t) by bisection; g(u) is increasing before the breaking time
double bisect_burgers(double x, double t) {
  auto u0 = [](double y) { return 1.0 + 0.5 * std::sin(M_PI * y); };
  double lo = 0.5, hi = 1.5;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (mid - u0(x - mid * t) > 0.0) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST(Registry, AllProblemsPresent) {
  for (const char* name : {"recon_accuracy", "adv1", "adv2", "adv3", "burgers1", "burgers2", "burgers3"})
    EXPECT_EQ(lookup_problem(name).name, name);
  EXPECT_THROW(lookup_problem("euler"), std::invalid_argument);
}

TEST(Registry, Settings) {
  const auto& adv2 = lookup_problem("adv2");
  EXPECT_EQ(adv2.cfl, 0.5);
  EXPECT_EQ(adv2.t_end, 0.5);
  EXPECT_EQ(adv2.bc, BoundaryCondition::periodic);
  EXPECT_DOUBLE_EQ(adv2.a, -M_PI);
  const auto& b2 = lookup_problem("burgers2");
  EXPECT_EQ(b2.equation.kind, EquationKind::burgers);
  EXPECT_EQ(b2.bc, BoundaryCondition::neumann);
  EXPECT_EQ(b2.default_cells, 100);
  EXPECT_FALSE(b2.exact.has_value());
  EXPECT_EQ(lookup_problem("burgers1").t_end, 0.3);
}

TEST(Registry, InitialProfiles) {
  EXPECT_DOUBLE_EQ(lookup_problem("burgers1").initial(0.5), 1.5);
  EXPECT_DOUBLE_EQ(lookup_problem("adv2").initial(M_PI / 2), 1.0);
  EXPECT_EQ(lookup_problem("burgers3").initial(0.0), -2.0);
  EXPECT_EQ(lookup_problem("burgers3").initial(1e-9), 1.0);
  EXPECT_NEAR(lookup_problem("recon_accuracy").initial(0.05), 1.05, 1e-15);
}

TEST(ExactSolutions, AdvectionWraps) {
  const auto& adv1 = lookup_problem("adv1");
  for (double x : {-3.0, -1.0, 0.0, 2.5, 3.1})
    EXPECT_NEAR((*adv1.exact)(x, 0.5), std::sin(x - 0.5), 1e-14);
  EXPECT_NEAR(advection_exact(0.9, 2.0, [](double y) { return y; }, 1.0, 0.0, 1.0,
                              BoundaryCondition::periodic),
              0.9, 1e-14);
}

TEST(ExactSolutions, AdvectedStep) {
  const auto& adv3 = *lookup_problem("adv3").exact;
  EXPECT_EQ(adv3(0.4, 0.5), 3.0);
  EXPECT_EQ(adv3(0.6, 0.5), -1.0);
}

TEST(ExactSolutions, BurgersNewtonMatchesBisection) {
  const auto& exact = *lookup_problem("burgers1").exact;
  for (double t : {0.0, 0.1, 0.3, 0.6}) {
    for (double x = -1.0; x <= 1.0; x += 0.05) EXPECT_NEAR(exact(x, t), bisect_burgers(x, t), 1e-11);
  }
}

TEST(ExactSolutions, BreakingTime) { EXPECT_NEAR(kBurgersBreakingTime, 0.63662, 1e-5); }
