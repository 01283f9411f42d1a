#include <gtest/gtest.h>

#include <cmath>

#include "gnum/quadrature.hpp"
#include "gnum/special.hpp"
#include "gnum/sum.hpp"

namespace {

using gnum::cplx;

void expect_close(cplx got, cplx want, double rel) {
  EXPECT_LE(std::abs(got - want), rel * std::abs(want)) << got << " vs " << want;
}

TEST(Special, E1RealMatchesOracle) {
  EXPECT_NEAR(gnum::expint_e1(1.0), 0.21938393439552027368, 1e-15);
  EXPECT_NEAR(gnum::expint_e1(0.1), 1.8229239584193906159, 1e-14);
  EXPECT_NEAR(gnum::expint_e1(5.0) / 0.0011482955912753257973, 1.0, 1e-13);
  EXPECT_NEAR(gnum::expint_e1(30.0) / 3.0215520106888125448e-15, 1.0, 1e-13);
}

TEST(Special, E1ComplexMatchesOracle) {
  expect_close(gnum::expint_e1(cplx(0, 1)), cplx(-0.33740392290096813466, -0.62471325642771360429), 1e-13);
  expect_close(gnum::expint_e1(cplx(0.5, 3)), cplx(-0.091472856419509089232, 0.15044729346311859822), 1e-13);
  expect_close(gnum::expint_e1(cplx(0.01, -20)), cplx(-0.043965673703431050617, 0.022351488190182059619),
               1e-12);
  expect_close(gnum::expint_e1(cplx(2, 0.5)), cplx(0.037011661013361030589, -0.030486216573797426819), 1e-13);
}

TEST(Special, EinMatchesOracle) {
  EXPECT_NEAR(gnum::ein(2.0), 1.3192633561695392896, 1e-14);
  EXPECT_NEAR(gnum::ein(std::log(1e6)), 3.2030076471499792275, 1e-13);
  EXPECT_NEAR(gnum::ein(1e-12), 1e-12, 1e-24);
}

TEST(Special, ExpOverUReducesToLogRatio) {
  auto v = gnum::exp_over_u(cplx(0, 0), 2.0, 6.0);
  EXPECT_NEAR(v.real(), std::log(3.0), 1e-15);
  auto w = gnum::exp_over_u(cplx(1.0, 0), 1.0, 3.0);
  EXPECT_NEAR(w.real(), gnum::expint_e1(1.0) - gnum::expint_e1(3.0), 1e-14);
}

TEST(Quadrature, SimpsonIntegratesSmoothFunction) {
  auto r = gnum::adaptive_simpson<double>([](double x) { return std::exp(-x) * std::cos(3 * x); }, 0.0, 10.0,
                                          {1e-12, 0, 48, 1});
  double exact = (1.0 - std::exp(-10.0) * (std::cos(30.0) - 3 * std::sin(30.0))) / 10.0;
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, exact, 1e-10);
}

TEST(Quadrature, GaussLegendreExactOnPolynomials) {
  double v = gnum::gauss_legendre<double>([](double x) { return std::pow(x, 15); }, 0.0, 1.0);
  EXPECT_NEAR(v, 1.0 / 16.0, 1e-15);
}

TEST(Sum, CompensatedSumRecoversSmallTerms) {
  gnum::Accumulator<double> acc;
  acc += 1.0;
  for (int i = 0; i < 1000000; ++i) acc += 1e-16;
  acc += -1.0;
  EXPECT_NEAR(acc.value(), 1e-10, 1e-18);
}

}  // namespace
