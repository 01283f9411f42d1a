#include <gtest/gtest.h>

#include <cmath>

#include "gnum/grid_measure.hpp"
#include "gnum/summatory.hpp"
#include "gnum/system_io.hpp"

namespace {

TEST(Mobius, ExactValuesOnSmallSystems) {
  auto sys = gnum::load_system("primes:2,3");
  EXPECT_NEAR(gnum::m_value(sys, 10.0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(gnum::m_value(sys, 1e6), (1.0 - 0.5) * (1.0 - 1.0 / 3.0), 1e-15);
  EXPECT_NEAR(gnum::m_value(gnum::builtin("rational"), 1e4), -0.0020826997674822448, 1e-15);
}

TEST(Mobius, GridPathsAgree) {
  auto sys = gnum::load_system("primes:2,3");
  auto mm = gnum::mobius_measure(sys, std::log(2.0) / 4.0, 20.0);
  EXPECT_LT(mm.path_discrepancy, 1e-12);
  auto aligned = gnum::mobius_measure(gnum::load_system("primes:2,4"), std::log(2.0) / 4.0, 20.0);
  EXPECT_NEAR(gnum::mellin(aligned.dM, {2.0, 0.0}).real(), (1.0 - 0.25) * (1.0 - 1.0 / 16.0), 1e-12);
}

TEST(Mobius, GridRouteForContinuousSystems) {
  gnum::SummatoryOptions opt;
  opt.h = 0.01;
  auto r = gnum::m_ladder(gnum::builtin("pi0"), {1.0, 5.0, 10.0}, opt);
  EXPECT_EQ(r.method, "grid");
  ASSERT_EQ(r.values.size(), 3u);
  for (std::size_t i = 0; i < r.u.size(); ++i) EXPECT_NEAR(r.values[i], std::exp(-r.u[i]), 0.01);
}

TEST(Liouville, ExactValues) {
  auto sys = gnum::load_system("primes:2,3");
  EXPECT_NEAR(gnum::ell_value(sys, 10.0), 41.0 / 72.0, 1e-15);
  EXPECT_NEAR(gnum::ell_value(gnum::builtin("rational"), 1e4), 0.0042802774347414346, 1e-15);
}

TEST(Liouville, MeasureRoutesAgree) {
  auto sys = gnum::load_system("primes:2,4");
  const double h = std::log(2.0) / 8.0;
  gnum::SummatoryOptions exact, grid;
  grid.force_grid = true;
  auto a = gnum::liouville_measure(sys, h, 12.0, exact);
  auto b = gnum::liouville_measure(sys, h, 12.0, grid);
  EXPECT_EQ(a.method, "element-wise");
  EXPECT_EQ(b.method, "grid");
  EXPECT_LT(gnum::max_abs_diff(a.dL, b.dL), 1e-9);
  const double want = (1.0 - 1.0 / 4.0) * (1.0 - 1.0 / 16.0) / ((1.0 - 1.0 / 16.0) * (1.0 - 1.0 / 256.0));
  EXPECT_NEAR(gnum::mellin(a.dL, {2.0, 0.0}).real(), want, 1e-9);
}

TEST(Decay, VerdictSplitsLadder) {
  gnum::SummatoryResult r;
  r.u = {1, 2, 3, 4};
  r.values = {1.0, -0.8, 0.1, -0.05};
  auto d = gnum::decay_verdict(r, 2.5);
  EXPECT_DOUBLE_EQ(d.sup_early, 1.0);
  EXPECT_DOUBLE_EQ(d.sup_late, 0.1);
  EXPECT_TRUE(d.decays);
}

}  // namespace
