#pragma once

#include <cstddef>
#include <vector>

#include "gnum/special.hpp"

namespace gnum {

// Measure on [1, inf) stored as masses at nodes u_j = j*h of u = log x.
class LogGridMeasure {
 public:
  LogGridMeasure(double h, std::vector<double> masses, bool is_signed = true);

  static LogGridMeasure delta(double h, std::size_t n);
  static LogGridMeasure zeros(double h, std::size_t n, bool is_signed = false);

  double h() const { return h_; }
  std::size_t size() const { return m_.size(); }
  bool is_signed() const { return signed_; }
  const std::vector<double>& masses() const { return m_; }
  double operator[](std::size_t j) const { return m_[j]; }
  double u(std::size_t j) const { return static_cast<double>(j) * h_; }

  LogGridMeasure truncated(std::size_t n) const;
  LogGridMeasure negated() const;
  LogGridMeasure scaled(double c) const;
  // Masses multiplied by e^{-sigma u_j}.
  LogGridMeasure exp_weighted(double sigma) const;

 private:
  double h_;
  std::vector<double> m_;
  bool signed_;
};

// All products and series are truncated to max_nodes when it is nonzero.
LogGridMeasure conv(const LogGridMeasure& a, const LogGridMeasure& b,
                    std::size_t max_nodes = 0);
LogGridMeasure exp_conv(const LogGridMeasure& b, std::size_t max_nodes = 0);
LogGridMeasure log_conv(const LogGridMeasure& a, std::size_t max_nodes = 0);
LogGridMeasure inv_conv(const LogGridMeasure& a, std::size_t max_nodes = 0);

cplx mellin(const LogGridMeasure& a, cplx s);
double cumulative(const LogGridMeasure& a, double u);
// Prefix sums: entry j is cumulative(a, u_j).
std::vector<double> cumulative_all(const LogGridMeasure& a);

// Pushforward under x -> x^2 (node j to node 2j); mass beyond the grid is
// dropped and its total returned through discarded.
LogGridMeasure square_pushforward(const LogGridMeasure& a,
                                  double* discarded = nullptr);

double max_abs_diff(const LogGridMeasure& a, const LogGridMeasure& b);

}  // namespace gnum
