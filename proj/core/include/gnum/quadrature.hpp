#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "gnum/sum.hpp"

namespace gnum {

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  int max_depth = 48;
  int min_panels = 1;
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  bool converged = true;
  long evals = 0;
};

namespace detail {
template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}
}  // namespace detail

// Adaptive Simpson with per-panel tolerance proportional to panel width.
// Integrand values are only taken at interior and end points of panels, so
// endpoints may carry removable singularities as long as f returns the limit.
template <class T, class F>
QuadResult<T> adaptive_simpson(F&& f, double a, double b,
                               const QuadOptions& opt = {}) {
  QuadResult<T> res;
  if (!(b > a)) return res;
  struct Panel {
    double a, b;
    T fa, fm, fb, whole;
    int depth;
  };
  const int n = std::max(1, opt.min_panels);
  const double width = (b - a) / n;
  std::vector<Panel> stack;
  stack.reserve(2 * opt.max_depth + n);
  Accumulator<T> rough;
  T f_left = f(a);
  res.evals = 1;
  for (int i = 0; i < n; ++i) {
    double pa = a + i * width;
    double pb = (i + 1 == n) ? b : a + (i + 1) * width;
    double pm = 0.5 * (pa + pb);
    T fm = f(pm);
    T fb = f(pb);
    res.evals += 2;
    T whole = (pb - pa) / 6.0 * (f_left + 4.0 * fm + fb);
    rough += whole;
    stack.push_back({pa, pb, f_left, fm, fb, whole, 0});
    f_left = fb;
  }
  std::reverse(stack.begin(), stack.end());
  const double tol =
      std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(rough.value()));
  Accumulator<T> acc;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    double m = 0.5 * (p.a + p.b);
    double lm = 0.5 * (p.a + m);
    double rm = 0.5 * (m + p.b);
    T flm = f(lm);
    T frm = f(rm);
    res.evals += 2;
    double hw = p.b - p.a;
    T left = hw / 12.0 * (p.fa + 4.0 * flm + p.fm);
    T right = hw / 12.0 * (p.fm + 4.0 * frm + p.fb);
    T delta = left + right - p.whole;
    double local = tol * hw / (b - a);
    double dmag = detail::magnitude(delta);
    bool ok = dmag <= 15.0 * local;
    bool stop = p.depth >= opt.max_depth || !(m > p.a && m < p.b);
    if (ok || stop || !std::isfinite(dmag)) {
      if (!ok) res.converged = false;
      acc += left + right + delta / 15.0;
      res.error += dmag / 15.0;
    } else {
      stack.push_back({m, p.b, p.fm, frm, p.fb, right, p.depth + 1});
      stack.push_back({p.a, m, p.fa, flm, p.fm, left, p.depth + 1});
    }
  }
  res.value = acc.value();
  return res;
}

// Integrates over [a, b] split at every breakpoint strictly inside.
template <class T, class F>
QuadResult<T> integrate_pieces(F&& f, double a, double b,
                               std::vector<double> breaks,
                               const QuadOptions& opt = {}) {
  QuadResult<T> total;
  if (!(b > a)) return total;
  breaks.erase(std::remove_if(breaks.begin(), breaks.end(),
                              [&](double x) { return !(x > a && x < b); }),
               breaks.end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  Accumulator<T> acc;
  double lo = a;
  breaks.push_back(b);
  for (double hi : breaks) {
    QuadOptions o = opt;
    o.abs_tol = opt.abs_tol * (hi - lo) / (b - a);
    auto r = adaptive_simpson<T>(f, lo, hi, o);
    acc += r.value;
    total.error += r.error;
    total.evals += r.evals;
    total.converged = total.converged && r.converged;
    lo = hi;
  }
  total.value = acc.value();
  return total;
}

// Fixed 8-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre8 {
  static constexpr std::array<double, 8> x = {
      -0.96028985649753623168, -0.79666647741362673959, -0.52553240991632898582,
      -0.18343464249564980494, 0.18343464249564980494,  0.52553240991632898582,
      0.79666647741362673959,  0.96028985649753623168};
  static constexpr std::array<double, 8> w = {
      0.10122853629037625915, 0.22238103445337447054, 0.31370664587788728734,
      0.36268378337836198297, 0.36268378337836198297, 0.31370664587788728734,
      0.22238103445337447054, 0.10122853629037625915};
};

template <class T, class F>
T gauss_legendre(F&& f, double a, double b) {
  const double c = 0.5 * (a + b), r = 0.5 * (b - a);
  T s{};
  for (int i = 0; i < 8; ++i)
    s += GaussLegendre8::w[i] * f(c + r * GaussLegendre8::x[i]);
  return r * s;
}

}  // namespace gnum
