#include <gtest/gtest.h>

#include <cmath>

#include "gnum/error.hpp"
#include "gnum/prime_system.hpp"
#include "gnum/system_io.hpp"

namespace {

using gnum::Errc;

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

TEST(Pi0, MatchesOracle) {
  EXPECT_NEAR(gnum::Pi0_value(1.001) / 0.00099975013879520856, 1.0, 1e-12);
  EXPECT_NEAR(gnum::Pi0_value(10.0), 4.7543513946378092771, 1e-12);
  EXPECT_NEAR(gnum::pi0_of_u(std::log(1e6)) / 78624.346151882804376, 1.0, 1e-13);
  EXPECT_NEAR(gnum::pi0_of_u(5.0), 37.998621778467544220, 1e-12);
  EXPECT_NEAR(gnum::pi0_of_u(40.0) / 6039718263611237.3123, 1.0, 1e-13);
}

TEST(Rational, CountsPrimesAndPowers) {
  auto sys = gnum::builtin("rational");
  EXPECT_EQ(gnum::pi_count(sys, 100.0), 25.0);
  EXPECT_EQ(gnum::pi_count(sys, 1e6), 78498.0);
  EXPECT_NEAR(gnum::Pi_value(sys, 10.0), 4.0 + 2.0 / 2.0 + 1.0 / 3.0, 1e-15);
}

TEST(Ex42, PiMatchesOracle) {
  auto sys = gnum::builtin("ex42");
  EXPECT_NEAR(gnum::Pi_value(sys, 10.0), 5.1438093973851937218, 1e-10);
  EXPECT_NEAR(gnum::Pi_value(sys, 1000.0) / 281.39396724214131613, 1.0, 1e-11);
  EXPECT_NEAR(gnum::Pi_value(sys, 1e6) / 126984.30506424008287, 1.0, 1e-11);
  EXPECT_NEAR(gnum::Pi_value(sys, 1.9), 0.0, 1e-15);
}

TEST(Builtins, CatalogAndErrors) {
  auto cat = gnum::builtin_catalog();
  std::vector<std::string> names;
  for (const auto& b : cat) names.push_back(b.name);
  for (const char* n : {"rational", "pi0", "ex41", "ex42", "ex43", "ex51", "ex52"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  EXPECT_EQ(code_of([] { gnum::builtin("nope"); }), Errc::unknown_name);
  EXPECT_EQ(code_of([] { gnum::builtin("ex42", {{"k", 2}}); }), Errc::invalid_spec);
}

TEST(Builtins, SmoothBumpDensityIsNonnegative) {
  for (double k : {2.0, 3.0, 4.0}) {
    auto sys = gnum::builtin("ex41", {{"k", k}});
    EXPECT_TRUE(gnum::density_issues(sys.model(), 60.0).empty()) << k;
  }
}

TEST(Validation, ListsEveryIssue) {
  gnum::RawSystem raw;
  raw.kind = "discrete";
  raw.primes = {1.0, 3.0, 2.0};
  auto issues = gnum::validation_issues(raw);
  EXPECT_EQ(issues.size(), 2u);
  EXPECT_EQ(code_of([&] { gnum::validate(raw); }), Errc::validation);

  gnum::RawSystem cont;
  cont.kind = "continuous";
  cont.density_u = {0.0, 1.0, 2.0};
  cont.density_rho = {0.0, -1.0, 1.0};
  EXPECT_EQ(gnum::validation_issues(cont).size(), 1u);
}

TEST(Grid, DiscreteAtomsLandOnLattice) {
  auto sys = gnum::load_system("primes:2");
  const double h = std::log(2.0);
  gnum::GridDiagnostics diag;
  auto g = gnum::to_grid(sys, h, 4.5 * h, {}, &diag);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g[0], 0.0);
  for (std::size_t m = 1; m < 5; ++m) EXPECT_DOUBLE_EQ(g[m], 1.0 / m);
  EXPECT_EQ(diag.misaligned_atoms, 0u);
}

TEST(Grid, WarnsOnMisalignedAtoms) {
  auto sys = gnum::load_system("primes:3");
  gnum::GridDiagnostics diag;
  gnum::to_grid(sys, 0.3, 2.0, {}, &diag);
  EXPECT_GE(diag.misaligned_atoms, 1u);
  EXPECT_FALSE(diag.warnings.empty());
}

TEST(Grid, LinearBinningTracksPi0) {
  const double h = 0.01;
  auto g = gnum::to_grid(gnum::builtin("pi0"), h, 10.0);
  double c = 0.0;
  for (std::size_t j = 0; j <= 900; ++j) c += g[j];
  EXPECT_NEAR(c / gnum::pi0_of_u(9.0 + 0.5 * h), 1.0, 1e-3);
}

TEST(SystemIo, ParsesDefinitions) {
  auto d = gnum::system_from_json(R"({"kind": "discrete", "label": "two", "primes": [2, 3]})");
  EXPECT_TRUE(d.is_discrete());
  EXPECT_EQ(d.primes().size(), 2u);
  auto b = gnum::system_from_json(R"({"kind": "builtin", "builtin": {"name": "ex41", "params": {"k": 3}}})");
  EXPECT_FALSE(b.is_discrete());
  auto c = gnum::system_from_json(
      R"({"kind": "continuous", "density": {"u": [1, 2, 3], "rho": [1, 1, 1]}})");
  EXPECT_NEAR(gnum::Pi_value(c, std::exp(2.0)), 1.0, 1e-9);
  EXPECT_EQ(code_of([] { gnum::system_from_json("{"); }), Errc::invalid_spec);
  EXPECT_EQ(code_of([] { gnum::load_system("/nonexistent/system.json"); }), Errc::io);
  EXPECT_EQ(code_of([] { gnum::load_system("builtin:ex41?k"); }), Errc::invalid_spec);
}

}  // namespace
