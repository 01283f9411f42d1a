#include "gnum/grid_measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnum/error.hpp"
#include "gnum/sum.hpp"

namespace gnum {

namespace {

std::vector<std::size_t> nonzero(const std::vector<double>& m, std::size_t from) {
  std::vector<std::size_t> nz;
  for (std::size_t i = from; i < m.size(); ++i)
    if (m[i] != 0.0) nz.push_back(i);
  return nz;
}

std::size_t limit(std::size_t natural, std::size_t max_nodes) {
  return max_nodes ? std::min(natural, max_nodes) : natural;
}

}  // namespace

LogGridMeasure::LogGridMeasure(double h, std::vector<double> masses, bool is_signed)
    : h_(h), m_(std::move(masses)), signed_(is_signed) {
  if (!(h_ > 0) || !std::isfinite(h_))
    throw Error(Errc::domain, "grid spacing must be positive and finite");
  if (m_.empty()) throw Error(Errc::domain, "grid measure needs at least one node");
  for (std::size_t j = 0; j < m_.size(); ++j) {
    if (!std::isfinite(m_[j]))
      throw Error(Errc::domain, "non-finite mass at node " + std::to_string(j));
    if (!signed_ && m_[j] < 0)
      throw Error(Errc::domain, "negative mass at node " + std::to_string(j) +
                                    " of an unsigned measure");
  }
}

LogGridMeasure LogGridMeasure::delta(double h, std::size_t n) {
  std::vector<double> m(std::max<std::size_t>(n, 1), 0.0);
  m[0] = 1.0;
  return LogGridMeasure(h, std::move(m), false);
}

LogGridMeasure LogGridMeasure::zeros(double h, std::size_t n, bool is_signed) {
  return LogGridMeasure(h, std::vector<double>(std::max<std::size_t>(n, 1), 0.0),
                        is_signed);
}

LogGridMeasure LogGridMeasure::truncated(std::size_t n) const {
  std::vector<double> m(m_.begin(), m_.begin() + std::min(n, m_.size()));
  if (m.empty()) m.push_back(0.0);
  return LogGridMeasure(h_, std::move(m), signed_);
}

LogGridMeasure LogGridMeasure::negated() const {
  std::vector<double> m(m_);
  for (double& v : m) v = -v;
  return LogGridMeasure(h_, std::move(m), true);
}

LogGridMeasure LogGridMeasure::scaled(double c) const {
  std::vector<double> m(m_);
  for (double& v : m) v *= c;
  return LogGridMeasure(h_, std::move(m), signed_ || c < 0);
}

LogGridMeasure LogGridMeasure::exp_weighted(double sigma) const {
  std::vector<double> m(m_);
  for (std::size_t j = 0; j < m.size(); ++j) m[j] *= std::exp(-sigma * u(j));
  return LogGridMeasure(h_, std::move(m), signed_);
}

LogGridMeasure conv(const LogGridMeasure& a, const LogGridMeasure& b,
                    std::size_t max_nodes) {
  if (a.h() != b.h())
    throw Error(Errc::spacing_mismatch, "convolution of measures with different spacing");
  const std::size_t n = limit(a.size() + b.size() - 1, max_nodes);
  const auto& am = a.masses();
  const auto& bm = b.masses();
  auto na = nonzero(am, 0);
  auto nb = nonzero(bm, 0);
  const bool a_drives = na.size() <= nb.size();
  const auto& drv = a_drives ? am : bm;
  const auto& oth = a_drives ? bm : am;
  const auto& idx = a_drives ? na : nb;
  std::vector<Accumulator<double>> acc(n);
  for (std::size_t i : idx) {
    if (i >= n) break;
    const double w = drv[i];
    const std::size_t top = std::min(oth.size(), n - i);
    for (std::size_t k = 0; k < top; ++k)
      if (oth[k] != 0.0) acc[i + k] += w * oth[k];
  }
  std::vector<double> c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = acc[j].value();
  return LogGridMeasure(a.h(), std::move(c), a.is_signed() || b.is_signed());
}

LogGridMeasure exp_conv(const LogGridMeasure& b, std::size_t max_nodes) {
  if (b[0] != 0.0)
    throw Error(Errc::invalid_prime_measure, "prime measure has mass at x = 1");
  const std::size_t n = limit(b.size(), max_nodes);
  const auto& bm = b.masses();
  auto nz = nonzero(bm, 1);
  std::vector<double> wb(bm.size());
  for (std::size_t i : nz) wb[i] = static_cast<double>(i) * bm[i];
  std::vector<double> a(n, 0.0);
  a[0] = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    Accumulator<double> s;
    for (std::size_t i : nz) {
      if (i > j) break;
      s += wb[i] * a[j - i];
    }
    a[j] = s.value() / static_cast<double>(j);
  }
  return LogGridMeasure(b.h(), std::move(a), b.is_signed());
}

LogGridMeasure log_conv(const LogGridMeasure& a, std::size_t max_nodes) {
  if (a[0] != 1.0)
    throw Error(Errc::not_normalized, "log_conv needs unit mass at x = 1");
  const std::size_t n = limit(a.size(), max_nodes);
  const auto& am = a.masses();
  auto nz = nonzero(am, 1);
  std::vector<double> b(n, 0.0), wb(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    Accumulator<double> s;
    // sum_{i=1}^{j-1} i b_i a_{j-i}, driven by the nonzero a_{j-i}
    for (std::size_t k : nz) {
      if (k >= j) break;
      s += wb[j - k] * am[k];
    }
    b[j] = am[j] - s.value() / static_cast<double>(j);
    wb[j] = static_cast<double>(j) * b[j];
  }
  return LogGridMeasure(a.h(), std::move(b), true);
}

LogGridMeasure inv_conv(const LogGridMeasure& a, std::size_t max_nodes) {
  if (a[0] == 0.0)
    throw Error(Errc::non_invertible, "measure has no mass at x = 1");
  const std::size_t n = limit(a.size(), max_nodes);
  const auto& am = a.masses();
  auto nz = nonzero(am, 1);
  const double inv0 = 1.0 / am[0];
  std::vector<double> m(n, 0.0);
  m[0] = inv0;
  for (std::size_t j = 1; j < n; ++j) {
    Accumulator<double> s;
    for (std::size_t i : nz) {
      if (i > j) break;
      s += am[i] * m[j - i];
    }
    m[j] = -inv0 * s.value();
  }
  return LogGridMeasure(a.h(), std::move(m), true);
}

cplx mellin(const LogGridMeasure& a, cplx s) {
  Accumulator<cplx> acc;
  const auto& m = a.masses();
  for (std::size_t j = 0; j < m.size(); ++j)
    if (m[j] != 0.0) acc += m[j] * std::exp(-s * a.u(j));
  return acc.value();
}

double cumulative(const LogGridMeasure& a, double u) {
  if (!(u >= 0)) throw Error(Errc::domain, "cumulative needs u >= 0");
  const double k = std::floor(u / a.h() + 1e-9);
  const std::size_t top = std::min<std::size_t>(a.size() - 1, static_cast<std::size_t>(k));
  Accumulator<double> acc;
  for (std::size_t j = 0; j <= top; ++j) acc += a[j];
  return acc.value();
}

std::vector<double> cumulative_all(const LogGridMeasure& a) {
  std::vector<double> c(a.size());
  Accumulator<double> acc;
  for (std::size_t j = 0; j < a.size(); ++j) {
    acc += a[j];
    c[j] = acc.value();
  }
  return c;
}

LogGridMeasure square_pushforward(const LogGridMeasure& a, double* discarded) {
  std::vector<double> m(a.size(), 0.0);
  Accumulator<double> lost;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (2 * j < m.size())
      m[2 * j] = a[j];
    else
      lost += a[j];
  }
  if (discarded) *discarded = lost.value();
  return LogGridMeasure(a.h(), std::move(m), a.is_signed());
}

double max_abs_diff(const LogGridMeasure& a, const LogGridMeasure& b) {
  const std::size_t n = std::max(a.size(), b.size());
  double d = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double x = j < a.size() ? a[j] : 0.0;
    double y = j < b.size() ? b[j] : 0.0;
    d = std::max(d, std::abs(x - y));
  }
  return d;
}

}  // namespace gnum
