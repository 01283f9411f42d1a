#include <gtest/gtest.h>

#include <cstdlib>

#include "gnum/error.hpp"
#include "gnum/semigroup.hpp"
#include "gnum/system_io.hpp"

namespace {

std::vector<gnum::GeneralizedInteger> all_upto(const gnum::PrimeSystem& sys, double X,
                                               const gnum::EnumOptions& opt = {}) {
  std::vector<gnum::GeneralizedInteger> out;
  gnum::enumerate(sys, X, [&](const gnum::GeneralizedInteger& g) { out.push_back(g); }, opt);
  return out;
}

TEST(Enumeration, ThreeSmoothNumbers) {
  auto elems = all_upto(gnum::load_system("primes:2,3"), 100.0);
  std::vector<double> values;
  for (const auto& g : elems) values.push_back(g.value);
  EXPECT_EQ(values, (std::vector<double>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 27, 32, 36, 48, 54, 64, 72, 81, 96}));
}

TEST(Enumeration, RationalIntegersInOrder) {
  auto elems = all_upto(gnum::builtin("rational"), 1000.0);
  ASSERT_EQ(elems.size(), 1000u);
  long mertens = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    EXPECT_EQ(elems[i].value, static_cast<double>(i + 1));
    mertens += gnum::mu_of(elems[i]);
  }
  EXPECT_EQ(mertens, 2);  // M(1000)
}

TEST(Enumeration, TiesFollowIndexSequence) {
  auto elems = all_upto(gnum::load_system("primes:2,2"), 4.0);
  ASSERT_EQ(elems.size(), 6u);
  EXPECT_EQ(elems[1].exponents, (decltype(elems[1].exponents){{0, 1}}));
  EXPECT_EQ(elems[2].exponents, (decltype(elems[2].exponents){{1, 1}}));
  EXPECT_EQ(elems[3].exponents, (decltype(elems[3].exponents){{0, 2}}));
  EXPECT_EQ(elems[4].exponents, (decltype(elems[4].exponents){{0, 1}, {1, 1}}));
  EXPECT_EQ(elems[5].exponents, (decltype(elems[5].exponents){{1, 2}}));
  EXPECT_EQ(gnum::mu_of(elems[3]), 0);
  EXPECT_EQ(gnum::mu_of(elems[4]), 1);
  EXPECT_EQ(gnum::lambda_of(elems[3]), 1);
}

TEST(Enumeration, FieldsAreConsistent) {
  for (const auto& g : all_upto(gnum::load_system("primes:2,3,5"), 500.0)) {
    std::uint32_t omega = 0;
    for (const auto& [i, e] : g.exponents) omega += e;
    EXPECT_EQ(omega, g.Omega);
    EXPECT_EQ(g.maxIndex, g.exponents.empty() ? -1 : static_cast<std::int64_t>(g.exponents.back().first));
  }
}

TEST(Enumeration, BudgetIsEnforced) {
  gnum::EnumOptions opt;
  opt.budget = 10;
  try {
    all_upto(gnum::builtin("rational"), 1000.0, opt);
    FAIL() << "expected budget error";
  } catch (const gnum::Error& e) {
    EXPECT_EQ(e.code(), gnum::Errc::budget_exceeded);
  }
}

TEST(Enumeration, ContinuousSystemsAreRejected) {
  try {
    all_upto(gnum::builtin("ex42"), 10.0);
    FAIL() << "expected unsupported";
  } catch (const gnum::Error& e) {
    EXPECT_EQ(e.code(), gnum::Errc::unsupported);
  }
}

TEST(Count, ExactAndGridRoutes) {
  auto r = gnum::N_count(gnum::builtin("rational"), 100.0);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.value, 100.0);
  auto p = gnum::N_count(gnum::builtin("pi0"), std::exp(10.0));
  EXPECT_FALSE(p.exact);
  EXPECT_NEAR(p.value / std::exp(10.0), 1.0, 1e-3);
}

}  // namespace
