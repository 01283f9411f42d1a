#include "gnum/summatory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gnum/error.hpp"
#include "gnum/sum.hpp"

namespace gnum {

namespace {

std::vector<std::size_t> order_of(const std::vector<double>& u) {
  std::vector<std::size_t> idx(u.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
  for (double v : u)
    if (!(v >= 0)) throw Error(Errc::domain, "summatory ladders need x >= 1");
  return idx;
}

// Exact sums over generalized integers of weight(g)/value at each u.
template <class Weight>
SummatoryResult exact_ladder(const PrimeSystem& sys, const std::vector<double>& u,
                             const EnumOptions& eopt, Weight weight) {
  SummatoryResult r;
  r.u = u;
  r.values.assign(u.size(), 0.0);
  r.method = "exact";
  if (u.empty()) return r;
  auto idx = order_of(u);
  const double top = std::exp(u[idx.back()]) * (1 + 1e-14);
  Enumerator e(sys, top, eopt);
  GeneralizedInteger g;
  Accumulator<double> acc;
  std::size_t k = 0;
  while (e.next(g)) {
    double lg = std::log(g.value);
    while (k < idx.size() && u[idx[k]] < lg - 1e-14 * std::max(1.0, lg)) r.values[idx[k++]] = acc.value();
    acc += weight(g) / g.value;
  }
  while (k < idx.size()) r.values[idx[k++]] = acc.value();
  return r;
}

// sum_{u_j <= u} mass_j e^{-u_j} at each requested u.
SummatoryResult grid_ladder(const LogGridMeasure& d, const std::vector<double>& u) {
  SummatoryResult r;
  r.u = u;
  r.values.assign(u.size(), 0.0);
  r.method = "grid";
  r.h = d.h();
  r.u_max = d.u(d.size() - 1);
  auto idx = order_of(u);
  Accumulator<double> acc;
  std::size_t j = 0;
  for (std::size_t k : idx) {
    const double lim = std::floor(u[k] / d.h() + 1e-9);
    while (j < d.size() && static_cast<double>(j) <= lim) {
      acc += d[j] * std::exp(-d.u(j));
      ++j;
    }
    r.values[k] = acc.value();
  }
  return r;
}

double top_u(const std::vector<double>& u, const SummatoryOptions& opt) {
  double m = opt.h;
  for (double v : u) m = std::max(m, v);
  return opt.u_max > 0 ? opt.u_max : m;
}

}  // namespace

MobiusMeasure mobius_measure(const PrimeSystem& sys, double h, double u_max,
                             const GridOptions& grid) {
  auto dpi = to_grid(sys, h, u_max, grid);
  auto dn = exp_conv(dpi);
  auto dm = inv_conv(dn);
  auto dm2 = exp_conv(dpi.negated());
  double diff = max_abs_diff(dm, dm2);
  return {std::move(dm), std::move(dm2), std::move(dn), diff};
}

SummatoryResult m_ladder(const PrimeSystem& sys, const std::vector<double>& u,
                         const SummatoryOptions& opt) {
  if (sys.is_discrete() && !opt.force_grid)
    return exact_ladder(sys, u, opt.enumeration,
                        [](const GeneralizedInteger& g) { return static_cast<double>(mu_of(g)); });
  auto mm = mobius_measure(sys, opt.h, top_u(u, opt), opt.grid);
  return grid_ladder(mm.dM, u);
}

double m_value(const PrimeSystem& sys, double x, const SummatoryOptions& opt) {
  if (!(x >= 1)) throw Error(Errc::domain, "m(x) needs x >= 1");
  return m_ladder(sys, {std::log(x)}, opt).values[0];
}

LiouvilleMeasure liouville_measure(const PrimeSystem& sys, double h, double u_max,
                                   const SummatoryOptions& opt) {
  LiouvilleMeasure r{LogGridMeasure::delta(h, 1), 0.0, ""};
  if (sys.is_discrete() && !opt.force_grid) {
    const std::size_t n = static_cast<std::size_t>(std::floor(u_max / h + 1e-9)) + 1;
    std::vector<double> m(n, 0.0);
    enumerate(
        sys, std::exp(u_max),
        [&](const GeneralizedInteger& g) {
          long j = std::lround(std::log(g.value) / h);
          if (static_cast<std::size_t>(j) < n) m[static_cast<std::size_t>(j)] += lambda_of(g);
        },
        opt.enumeration);
    r.dL = LogGridMeasure(h, std::move(m), true);
    r.method = "element-wise";
    return r;
  }
  auto mm = mobius_measure(sys, h, u_max, opt.grid);
  auto sq = square_pushforward(mm.dN, &r.discarded);
  r.dL = conv(sq, mm.dM, mm.dN.size());
  r.method = "grid";
  return r;
}

SummatoryResult ell_ladder(const PrimeSystem& sys, const std::vector<double>& u,
                           const SummatoryOptions& opt) {
  if (sys.is_discrete() && !opt.force_grid)
    return exact_ladder(sys, u, opt.enumeration,
                        [](const GeneralizedInteger& g) { return static_cast<double>(lambda_of(g)); });
  SummatoryOptions o = opt;
  o.force_grid = true;
  auto lm = liouville_measure(sys, opt.h, top_u(u, opt), o);
  return grid_ladder(lm.dL, u);
}

double ell_value(const PrimeSystem& sys, double x, const SummatoryOptions& opt) {
  if (!(x >= 1)) throw Error(Errc::domain, "l(x) needs x >= 1");
  return ell_ladder(sys, {std::log(x)}, opt).values[0];
}

DecayReport decay_verdict(const SummatoryResult& r, double u_split, double factor) {
  DecayReport d;
  for (std::size_t i = 0; i < r.u.size(); ++i) {
    double v = std::abs(r.values[i]);
    if (r.u[i] < u_split)
      d.sup_early = std::max(d.sup_early, v);
    else
      d.sup_late = std::max(d.sup_late, v);
  }
  d.ratio = d.sup_early > 0 ? d.sup_late / d.sup_early : 0.0;
  d.decays = d.sup_late < factor * d.sup_early;
  return d;
}

}  // namespace gnum
