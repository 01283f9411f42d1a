#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gnum/analytic.hpp"
#include "gnum/error.hpp"
#include "gnum/system_io.hpp"

namespace {

using gnum::cplx;

void expect_rel(cplx got, cplx want, double rel) {
  EXPECT_LE(std::abs(got - want), rel * std::abs(want)) << got << " vs " << want;
}

TEST(Zeta, AtomicExampleMatchesClosedForm) {
  auto sys = gnum::builtin("ex43");
  expect_rel(gnum::zeta(sys, {2.0, 0.0}).value, {1.6325269194381528448, 0.0}, 1e-12);
  expect_rel(gnum::zeta(sys, {1.5, 4.0}).value, {0.74805457276764934323, 0.32053775288307628761}, 1e-12);
  expect_rel(gnum::zeta(sys, {1.1, 7.0}).value, {1.8018303759725772503, -0.85568514583703292982}, 1e-12);
}

TEST(Zeta, OscillatingDensityMatchesOracle) {
  auto sys = gnum::builtin("ex42");
  expect_rel(gnum::zeta(sys, {2.0, 0.0}).value, {1.6259716291828755189, 0.0}, 1e-10);
  expect_rel(gnum::zeta(sys, {1.5, 2.0}).value, {0.60700280155622764008, -0.35137412327577274946}, 1e-10);
  expect_rel(gnum::zeta(sys, {1.2, -5.0}).value, {0.91067283396295655186, -0.39258324995562492498}, 1e-10);
}

TEST(Zeta, GridRouteAgreesWithQuadrature) {
  auto sys = gnum::builtin("ex42");
  gnum::ZetaOptions opt;
  opt.method = gnum::ZetaMethod::grid;
  opt.h = 1e-3;
  opt.u_max = 30.0;
  auto z = gnum::zeta(sys, {2.0, 1.0}, opt);
  auto q = gnum::zeta(sys, {2.0, 1.0});
  EXPECT_EQ(z.method, "grid");
  expect_rel(z.value, q.value, 1e-5);
}

TEST(Zeta, DiscreteSums) {
  gnum::ZetaOptions opt;
  opt.cutoff = 1e6;
  auto r = gnum::zeta(gnum::builtin("rational"), {2.0, 0.0}, opt);
  EXPECT_NEAR(r.value.real(), 1.6449330668487264363, 1e-12);
  EXPECT_GE(r.tail_bound, std::numbers::pi * std::numbers::pi / 6.0 - r.value.real());
  auto c = gnum::zeta(gnum::builtin("rational"), {3.0, 1.0}, opt);
  expect_rel(c.value, {1.1072144084314724830, -0.14829086717773263605}, 1e-13);
  auto t = gnum::zeta(gnum::load_system("primes:2,3"), {3.0, 0.0}, opt);
  EXPECT_NEAR(t.value.real(), 1.1868131868131868132, 1e-12);
}

TEST(Zeta, RejectsDivergenceDomain) {
  try {
    gnum::zeta(gnum::builtin("ex42"), {1.0, 2.0});
    FAIL() << "expected divergence_domain";
  } catch (const gnum::Error& e) {
    EXPECT_EQ(e.code(), gnum::Errc::divergence_domain);
  }
}

TEST(J, ValuesAtOneMatchOracle) {
  using gnum::TailModel;
  EXPECT_EQ(gnum::J_value(gnum::builtin("pi0"), {1.0, 0.0}, 40.0).value, cplx(0.0, 0.0));
  EXPECT_NEAR(gnum::J_value(gnum::builtin("ex42"), {1.0, 0.0}, 40.0, TailModel::system).value.real(),
              -0.30367125937666694521, 1e-9);
  EXPECT_NEAR(gnum::J_value(gnum::builtin("ex52"), {1.0, 0.0}, 40.0, TailModel::system).value.real(),
              -0.21070274431986853359, 1e-9);
  EXPECT_NEAR(gnum::J_value(gnum::builtin("ex51"), {1.0, 0.0}, 40.0, TailModel::system).value.real(),
              1.2394487029869407627, 1e-8);
}

TEST(J, TailModelsParse) {
  for (auto m : {gnum::TailModel::none, gnum::TailModel::pi0, gnum::TailModel::xlogx, gnum::TailModel::system})
    EXPECT_EQ(gnum::parse_tail_model(gnum::tail_model_name(m)), m);
  EXPECT_THROW(gnum::parse_tail_model("bogus"), gnum::Error);
}

TEST(Density, ConstantsMatchOracle) {
  auto d = gnum::density_constant(gnum::builtin("ex42"), 40.0, gnum::TailModel::system);
  EXPECT_NEAR(d.a, 0.73810347116658912125, 1e-9);
  auto e = gnum::density_constant(gnum::builtin("ex52"), 40.0, gnum::TailModel::system);
  EXPECT_NEAR(e.a, 0.81001481260202367836, 1e-9);
  auto p = gnum::density_constant(gnum::builtin("pi0"), 40.0);
  EXPECT_DOUBLE_EQ(p.a, 1.0);
}

TEST(Evidence, RuleOnSyntheticLadders) {
  gnum::EvidenceRule rule;
  auto pts = gnum::ladder_points(96.0, 0.0, rule);
  EXPECT_EQ(pts, (std::vector<double>{3, 6, 12, 24, 48, 96}));

  auto judge = [&](std::vector<double> partial) {
    gnum::Ladder l;
    l.U = pts;
    l.partial = std::move(partial);
    gnum::apply_evidence_rule(l, rule);
    return l;
  };
  EXPECT_TRUE(judge({1.0, 2.0, 2.4, 2.55, 2.6, 2.62}).convergent);
  EXPECT_FALSE(judge({1.0, 2.0, 2.8, 3.5, 4.1, 4.6}).convergent);
  EXPECT_TRUE(judge({1.0, 1.0, 1.0, 1.0, 1.0, 1.0}).convergent);
  EXPECT_FALSE(judge({1.0, 2.0, 2.4, 2.55, 2.6, 2.7}).convergent);
}

TEST(Defect, VerdictsOnReferenceSystems) {
  EXPECT_TRUE(gnum::l1_defect(gnum::builtin("ex51"), 96.0).convergent);
  EXPECT_FALSE(gnum::l1_defect(gnum::builtin("ex41"), 96.0).convergent);
  EXPECT_FALSE(gnum::l1_defect(gnum::builtin("ex42"), 96.0, gnum::Comparator::xlogx).convergent);
  auto zero = gnum::l1_defect(gnum::builtin("pi0"), 96.0);
  EXPECT_TRUE(zero.convergent);
  EXPECT_EQ(zero.partial.back(), 0.0);
}

TEST(Criteria, CosineCriterion) {
  const double b = std::numbers::sqrt2 / 2.0, pi = std::numbers::pi;
  auto r = gnum::cosine_criterion({{b, 1.0, -pi / 4.0}}, false);
  EXPECT_NEAR(r.value[0], 1.0, 1e-12);
  EXPECT_TRUE(r.pass);
  auto s = gnum::cosine_criterion({{b, 1.0, 3.0 * pi / 4.0}}, true);
  EXPECT_NEAR(s.value[0], 1.0, 1e-12);
  EXPECT_FALSE(gnum::cosine_criterion({{3.0, 1.0, -pi / 4.0}}, false).pass);
  EXPECT_THROW(gnum::cosine_criterion({{b, 1.0, 0.0}, {b, 1.0, 0.0}}, false), gnum::Error);
}

TEST(Probe, Pi0LowerBoundIsExact) {
  gnum::BetaTermSpec spec{0.5, {}, gnum::BoundKind::lower};
  gnum::ProbeOptions opt;
  opt.n_sigma = 8;
  opt.n_t = 9;
  opt.t_lo = 0.5;
  opt.t_hi = 4.0;
  auto r = gnum::boundary_probe(gnum::builtin("pi0"), spec, opt);
  EXPECT_NEAR(r.extremum, std::log(std::abs(cplx(opt.sigma_lo, opt.t_lo))), 1e-9);
  EXPECT_EQ(r.samples.size(), 72u);
}

TEST(Probe, HypothesisFlags) {
  gnum::ProbeOptions opt;
  opt.n_sigma = 2;
  opt.n_t = 2;
  opt.t_hi = 2.0;
  auto sys = gnum::builtin("pi0");
  EXPECT_FALSE(gnum::boundary_probe(sys, {0.5, {{1.0, -1.5}}, gnum::BoundKind::upper}, opt).hypothesis_ok);
  EXPECT_TRUE(gnum::boundary_probe(sys, {0.5, {{1.0, -0.5}}, gnum::BoundKind::upper}, opt).hypothesis_ok);
  EXPECT_THROW(gnum::boundary_probe(sys, {1.5, {{1.0, -0.5}}, gnum::BoundKind::upper}, opt), gnum::Error);
}

TEST(Chebyshev, RationalSupremum) {
  auto c = gnum::chebyshev_ratio(gnum::builtin("rational"), 1e6);
  EXPECT_NEAR(c.sup, 1.4862148922637326, 1e-12);
  EXPECT_NEAR(c.u_at, std::log(31.0), 1e-12);
  EXPECT_FALSE(c.growth);
}

}  // namespace
