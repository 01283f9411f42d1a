#include <gtest/gtest.h>

#include <cmath>

#include "gnum/error.hpp"
#include "gnum/grid_measure.hpp"

namespace {

using gnum::Errc;
using gnum::LogGridMeasure;

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const gnum::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gnum::Error thrown";
  return Errc::io;
}

TEST(GridMeasure, ExpOfSingleAtomIsPoisson) {
  const double c = 0.7;
  LogGridMeasure b(0.1, {0.0, c, 0.0, 0.0, 0.0, 0.0});
  auto a = gnum::exp_conv(b);
  double fact = 1.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k > 0) fact *= static_cast<double>(k);
    EXPECT_NEAR(a[k], std::pow(c, k) / fact, 1e-16) << k;
  }
}

TEST(GridMeasure, InverseOfTwoAtomsIsGeometric) {
  LogGridMeasure a(0.5, {1.0, -0.25, 0.0, 0.0, 0.0});
  auto inv = gnum::inv_conv(a);
  for (std::size_t k = 0; k < inv.size(); ++k) EXPECT_DOUBLE_EQ(inv[k], std::pow(0.25, k));
}

TEST(GridMeasure, ConvolutionOfDeltaIsIdentity) {
  LogGridMeasure a(0.2, {2.0, -1.0, 3.0, 0.5});
  auto c = gnum::conv(LogGridMeasure::delta(0.2, 4), a);
  EXPECT_EQ(gnum::max_abs_diff(c, a), 0.0);
}

TEST(GridMeasure, LogInvertsExp) {
  LogGridMeasure b(0.01, {0.0, 0.3, -0.2, 0.1, 0.05, 0.0, 0.02, 0.0});
  EXPECT_LT(gnum::max_abs_diff(gnum::log_conv(gnum::exp_conv(b)), b), 1e-15);
}

TEST(GridMeasure, ErrorsCarryKinds) {
  LogGridMeasure a(0.1, {1.0, 0.5});
  LogGridMeasure b(0.2, {1.0, 0.5});
  EXPECT_EQ(code_of([&] { gnum::conv(a, b); }), Errc::spacing_mismatch);
  EXPECT_EQ(code_of([&] { gnum::exp_conv(a); }), Errc::invalid_prime_measure);
  EXPECT_EQ(code_of([&] { gnum::log_conv(LogGridMeasure(0.1, {2.0, 0.5})); }), Errc::not_normalized);
  EXPECT_EQ(code_of([&] { gnum::inv_conv(LogGridMeasure(0.1, {0.0, 0.5})); }), Errc::non_invertible);
  EXPECT_EQ(code_of([] { LogGridMeasure(0.1, {1.0, -0.5}, false); }), Errc::domain);
  EXPECT_EQ(code_of([] { LogGridMeasure(-0.1, {1.0}); }), Errc::domain);
}

TEST(GridMeasure, MellinAndCumulative) {
  const double h = std::log(2.0);
  LogGridMeasure a(h, {1.0, 1.0, 1.0});  // 1 + 2^{-s} + 4^{-s}
  auto m = gnum::mellin(a, gnum::cplx(1.0, 0.0));
  EXPECT_NEAR(m.real(), 1.75, 1e-15);
  EXPECT_DOUBLE_EQ(gnum::cumulative(a, h), 2.0);
  EXPECT_DOUBLE_EQ(gnum::cumulative(a, 0.5 * h), 1.0);
  auto all = gnum::cumulative_all(a);
  EXPECT_EQ(all, (std::vector<double>{1.0, 2.0, 3.0}));
}

TEST(GridMeasure, SquarePushforwardMovesMass) {
  LogGridMeasure a(0.1, {1.0, 2.0, 3.0, 4.0});
  double dropped = 0.0;
  auto sq = gnum::square_pushforward(a, &dropped);
  EXPECT_EQ(sq.masses(), (std::vector<double>{1.0, 0.0, 2.0, 0.0}));
  EXPECT_DOUBLE_EQ(dropped, 7.0);
}

TEST(GridMeasure, TruncationBoundsOutput) {
  LogGridMeasure b(0.1, {0.0, 1.0, 1.0});
  EXPECT_EQ(gnum::exp_conv(b, 2).size(), 2u);
}

}  // namespace
