#include "gnum/special.hpp"

#include <cmath>
#include <limits>

namespace gnum {

namespace {

// sum_{k>=1} (-1)^{k+1} z^k / (k k!)
cplx ein_series(cplx z) {
  cplx term = 1.0;
  cplx sum = 0.0;
  for (int k = 1; k < 400; ++k) {
    term *= -z / static_cast<double>(k);
    cplx add = -term / static_cast<double>(k);
    sum += add;
    if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

cplx e1_continued_fraction(cplx z) {
  // Modified Lentz on e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...))).
  const double tiny = 1e-300;
  cplx b = z + 1.0;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i < 20000; ++i) {
    double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-z);
}

}  // namespace

cplx expint_e1(cplx z) {
  if (z == cplx(0.0, 0.0)) return {std::numeric_limits<double>::infinity(), 0.0};
  if (std::abs(z) <= 2.0 || (z.real() < 0 && std::abs(z.imag()) < 1.0))
    return -kEulerGamma - std::log(z) + ein_series(z);
  return e1_continued_fraction(z);
}

double expint_e1(double x) { return expint_e1(cplx(x, 0.0)).real(); }

cplx ein(cplx z) {
  if (std::abs(z) <= 4.0) return ein_series(z);
  return expint_e1(z) + std::log(z) + kEulerGamma;
}

double ein(double x) { return ein(cplx(x, 0.0)).real(); }

cplx exp_over_u(cplx c, double a, double b) {
  if (!(b > a)) return 0.0;
  if (c == cplx(0.0, 0.0)) return std::log(b / a);
  cplx lo = c * a, hi = c * b;
  if (std::abs(hi) <= 2.0) {
    // E1(lo) - E1(hi) with the logarithms combined exactly.
    return std::log(b / a) + ein_series(lo) - ein_series(hi);
  }
  return expint_e1(lo) - expint_e1(hi);
}

double ein_neg(double x) {
  double term = 1.0, sum = 0.0;
  for (int k = 1; k < 4000; ++k) {
    term *= x / k;
    double add = term / k;
    sum += add;
    if (k > x && add <= 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace gnum
