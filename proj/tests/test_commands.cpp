#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "tecno/commands.hpp"

using namespace tecno;

namespace {

std::string first_lines(const std::string& s, int n) {
  std::istringstream is(s);
  std::string line, out;
  for (int k = 0; k < n && std::getline(is, line); ++k) out += line + '\n';
  return out;
}

}  // namespace

TEST(Formatting, Numbers) {
  EXPECT_EQ(format_sci(6.219e-4), "6.21900e-04");
  EXPECT_EQ(format_fixed(3.16789), "3.1679");
  EXPECT_EQ(format_rate(std::nullopt), "");
  EXPECT_EQ(join_ints({50, 100}), "50;100");
}

TEST(Commands, ConvergenceCsvShape) {
  RunManifest m;
  m.problem = "adv1";
  m.schemes = {Scheme::spweno, Scheme::eno2};
  m.n_list = {20, 40};
  const auto table = run_convergence(m);
  std::ostringstream os;
  write_table_csv(os, table, m.n_list);
  EXPECT_EQ(first_lines(os.str(), 2),
            "# problem=adv1 scheme=spweno;eno2 N=20;40 cfl=0.4 t_end=0.5\n"
            "scheme,N,error_l1,rate_l1,error_linf,rate_linf\n");
  ASSERT_NE(table.block(Scheme::eno2), nullptr);
  EXPECT_EQ(table.block(Scheme::eno3), nullptr);
  EXPECT_EQ(table.block(Scheme::spweno)->rows.size(), 2u);
}

TEST(Commands, Deterministic) {
  RunManifest m;
  m.problem = "burgers1";
  m.n_list = {20, 40};
  std::ostringstream a, b;
  write_table_csv(a, run_convergence(m), m.n_list);
  write_table_csv(b, run_convergence(m), m.n_list);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Commands, RejectsBadManifest) {
  RunManifest m;
  m.problem = "burgers2";
  m.n_list = {20};
  EXPECT_THROW(run_convergence(m), std::invalid_argument);
  m.problem = "adv1";
  m.n_list = {40, 20};
  EXPECT_THROW(run_convergence(m), std::invalid_argument);
  m.n_list = {};
  EXPECT_THROW(run_convergence(m), std::invalid_argument);
}

TEST(Commands, ReconAccuracyDefaultsToAllSchemes) {
  RunManifest m;
  m.n_list = {40, 80};
  const auto table = run_recon_accuracy(m);
  EXPECT_EQ(table.blocks.size(), 4u);
  EXPECT_EQ(table.problem, "recon_accuracy");
}

TEST(Commands, SolveSnapshots) {
  RunManifest m;
  m.problem = "burgers2";
  m.n_list = {50};
  m.snapshot_times = {0.2};
  const auto snaps = run_solve(m);
  ASSERT_EQ(snaps.size(), 2u);
  EXPECT_GE(snaps[0].t, 0.2);
  EXPECT_LT(snaps[0].t, 0.25);
  EXPECT_EQ(snaps[1].t, 0.45);
  std::ostringstream os;
  write_snapshot_csv(os, resolve(m), Scheme::spweno, snaps[1]);
  EXPECT_EQ(first_lines(os.str(), 2).substr(first_lines(os.str(), 2).find('\n') + 1), "x,u\n");
}

TEST(Commands, EntropyHistoryCsv) {
  RunManifest m;
  m.n_list = {40};
  m.t_end = 0.1;
  const auto h = run_entropy_history(m);
  EXPECT_EQ(h.samples().front().t, 0.0);
  EXPECT_DOUBLE_EQ(h.samples().back().t, 0.1);
  m.problem = "burgers1";
  std::ostringstream os;
  write_entropy_csv(os, resolve(m), Scheme::spweno, 40, h);
  EXPECT_NE(os.str().find("\nt,E,rel_change\n"), std::string::npos);
}

TEST(Commands, PropTestPasses) {
  RunManifest m;
  m.samples = 20'000;
  std::ostringstream os;
  EXPECT_TRUE(run_proptest(m, os));
  EXPECT_NE(os.str().find("weno3 sign counterexample"), std::string::npos);
  EXPECT_NE(os.str().find("PASS"), std::string::npos);
}
