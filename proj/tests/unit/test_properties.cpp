#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gnum/grid_measure.hpp"
#include "gnum/semigroup.hpp"
#include "gnum/summatory.hpp"

namespace {

using gnum::LogGridMeasure;

LogGridMeasure random_measure(std::mt19937_64& rng, std::size_t n, double a0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> m(n);
  m[0] = a0;
  for (std::size_t j = 1; j < n; ++j) m[j] = u(rng) / static_cast<double>(j * j);
  return LogGridMeasure(0.05, std::move(m));
}

TEST(Properties, ConvolutionIsCommutativeAndMultiplicative) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> len(1, 200);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_measure(rng, len(rng), 1.0);
    auto b = random_measure(rng, len(rng), -0.5);
    auto ab = gnum::conv(a, b), ba = gnum::conv(b, a);
    EXPECT_LT(gnum::max_abs_diff(ab, ba), 1e-15);
    const gnum::cplx s(1.3, 2.0);
    auto lhs = gnum::mellin(ab, s), rhs = gnum::mellin(a, s) * gnum::mellin(b, s);
    EXPECT_LT(std::abs(lhs - rhs), 1e-13);
  }
}

TEST(Properties, ExpMapsSumsToConvolutions) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> len(2, 300);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = len(rng);
    auto b = random_measure(rng, n, 0.0);
    auto c = random_measure(rng, n, 0.0);
    std::vector<double> sum(n);
    for (std::size_t j = 0; j < n; ++j) sum[j] = b[j] + c[j];
    auto lhs = gnum::exp_conv(LogGridMeasure(0.05, sum));
    auto rhs = gnum::conv(gnum::exp_conv(b), gnum::exp_conv(c), n);
    EXPECT_LT(gnum::max_abs_diff(lhs, rhs), 1e-12);
  }
}

TEST(Properties, InverseIsTwoSided) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> len(1, 400);
  std::uniform_real_distribution<double> lead(0.5, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_measure(rng, len(rng), lead(rng));
    double tail = 0.0;
    for (std::size_t j = 1; j < a.size(); ++j) tail += std::abs(a[j]);
    if (tail > 0.5 * a[0]) {
      std::vector<double> m = a.masses();
      for (std::size_t j = 1; j < m.size(); ++j) m[j] *= 0.5 * a[0] / tail;
      a = LogGridMeasure(0.05, std::move(m));
    }
    auto inv = gnum::inv_conv(a);
    auto left = gnum::conv(inv, a, a.size());
    auto right = gnum::conv(a, inv, a.size());
    EXPECT_LT(gnum::max_abs_diff(left, LogGridMeasure::delta(0.05, a.size())), 1e-12);
    EXPECT_LT(gnum::max_abs_diff(left, right), 1e-15);
  }
}

TEST(Properties, EnumerationMatchesBruteForce) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> value(1.2, 20.0);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> primes(count(rng));
    for (double& p : primes) p = value(rng);
    std::sort(primes.begin(), primes.end());
    auto sys = gnum::PrimeSystem::discrete(primes, "random");
    const double X = 2000.0;

    std::vector<double> brute{1.0};
    for (double p : primes) {
      std::vector<double> next;
      for (double v : brute)
        for (double w = v; w <= X; w *= p) next.push_back(w);
      brute = std::move(next);
    }
    std::sort(brute.begin(), brute.end());

    std::vector<double> seen;
    gnum::enumerate(sys, X, [&](const gnum::GeneralizedInteger& g) { seen.push_back(g.value); });
    ASSERT_EQ(seen.size(), brute.size());
    EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    for (std::size_t i = 0; i < seen.size(); ++i) EXPECT_NEAR(seen[i], brute[i], 1e-9 * brute[i]);
  }
}

TEST(Properties, LatticeGridReproducesExactSummatory) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> base(1.3, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double r = base(rng);
    auto sys = gnum::PrimeSystem::discrete({r, r * r * r}, "lattice");
    gnum::SummatoryOptions grid;
    grid.force_grid = true;
    grid.h = std::log(r) / 2.0;
    const std::vector<double> u{2.0 + 0.25 * trial, 5.0 + 0.1 * trial};
    auto g = gnum::m_ladder(sys, u, grid);
    auto e = gnum::m_ladder(sys, u, {});
    EXPECT_EQ(e.method, "exact");
    for (std::size_t i = 0; i < u.size(); ++i) EXPECT_NEAR(g.values[i], e.values[i], 1e-9);
  }
}

}  // namespace
