#include "gnum/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "gnum/error.hpp"
#include "gnum/parallel.hpp"
#include "gnum/quadrature.hpp"
#include "gnum/sum.hpp"

namespace gnum {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// int_a^b e^{-c u} (dPi/dx - dPi0/dx)(u) du for the density part of a model.
cplx excess_transform(const ContinuousModel& m, cplx c, double a, double b) {
  if (!(b > a)) return 0.0;
  auto f = [&](double u) { return std::exp(-c * u) * m.excess_rel(u); };
  QuadOptions opt;
  opt.abs_tol = 1e-12;
  opt.rel_tol = 1e-13;
  opt.min_panels = std::max(4, static_cast<int>((b - a) * (1.0 + std::abs(c.imag()))));
  return integrate_pieces<cplx>(f, a, b, m.breakpoints(a, b), opt).value;
}

// (Pi - Pi0)(e^U).
double excess_at(const PrimeSystem& sys, double U) {
  if (sys.is_discrete()) return Pi_value(sys, std::exp(U)) - pi0_of_u(U);
  return sys.model().Pi_excess(U);
}

// int_{[0,U]} e^{-s u} d(Pi - Pi0).
cplx stieltjes_core(const PrimeSystem& sys, cplx s, double U) {
  Accumulator<cplx> acc;
  for (const Atom& a : sys.atoms(U)) acc += a.w * std::exp(-s * a.u);
  if (!sys.is_discrete() && sys.model().has_density())
    acc += excess_transform(sys.model(), s - 1.0, 0.0, U);
  else
    acc += -(ein(s * U) - ein((s - 1.0) * U));
  return acc.value();
}

cplx xlogx_tail(cplx s, double U) {
  const cplx c = s - 1.0;
  cplx tail = expint_e1(s * U);
  if (c == cplx(0.0, 0.0)) return tail - 1.0 / U;
  return tail - (std::exp(-c * U) - c * U * expint_e1(c * U)) / U;
}

}  // namespace

const char* tail_model_name(TailModel m) {
  switch (m) {
    case TailModel::none: return "none";
    case TailModel::pi0: return "pi0";
    case TailModel::xlogx: return "xlogx";
    case TailModel::system: return "system";
  }
  return "pi0";
}

TailModel parse_tail_model(const std::string& name) {
  if (name == "none") return TailModel::none;
  if (name == "pi0") return TailModel::pi0;
  if (name == "xlogx") return TailModel::xlogx;
  if (name == "system") return TailModel::system;
  throw Error(Errc::invalid_spec, "unknown tail model '" + name + "'");
}

JResult J_value(const PrimeSystem& sys, cplx s, double U, TailModel model) {
  if (!(s.real() >= 1)) throw Error(Errc::divergence_domain, "J(s) needs Re s >= 1");
  if (!(U > 0)) throw Error(Errc::domain, "J(s) needs U > 0");
  JResult r;
  r.model = model;
  const cplx core = stieltjes_core(sys, s, U);
  r.truncation = -std::exp(-s * U) * excess_at(sys, U);
  switch (model) {
    case TailModel::none: r.tail = r.truncation; break;
    case TailModel::pi0: r.tail = 0.0; break;
    case TailModel::xlogx: r.tail = xlogx_tail(s, U); break;
    case TailModel::system: {
      std::optional<cplx> t;
      if (!sys.is_discrete()) t = sys.model().excess_tail(s, U);
      if (!t)
        throw Error(Errc::unsupported, "system '" + sys.label() +
                                           "' has no closed-form tail at this s and U");
      r.tail = *t;
      break;
    }
  }
  r.value = (core + r.tail) / s;
  r.tail_bound = std::abs(r.tail - r.truncation) / std::abs(s);
  return r;
}

ZetaResult zeta(const PrimeSystem& sys, cplx s, const ZetaOptions& opt) {
  if (!(s.real() > 1))
    throw Error(Errc::divergence_domain, "zeta is only defined by its series for Re s > 1");
  ZetaResult r;
  if (sys.is_discrete()) {
    Enumerator e(sys, opt.cutoff, opt.enumeration);
    GeneralizedInteger g;
    Accumulator<cplx> acc;
    double count = 0;
    while (e.next(g)) {
      acc += std::exp(-s * std::log(g.value));
      ++count;
    }
    r.value = acc.value();
    r.log_value = std::log(r.value);
    const double sig = s.real(), X = opt.cutoff;
    r.tail_bound = count / X * std::pow(X, 1.0 - sig) * sig / (sig - 1.0);
    r.method = "exact-sum";
    return r;
  }
  const auto& model = sys.model();
  if (opt.method == ZetaMethod::grid) {
    r.log_value = mellin(to_grid(sys, opt.h, opt.u_max, opt.grid), s);
    r.value = std::exp(r.log_value);
    cplx omitted = expint_e1((s - 1.0) * opt.u_max) - expint_e1(s * opt.u_max);
    if (auto t = model.excess_tail(s, opt.u_max)) omitted += *t;
    r.tail_bound = std::abs(omitted);
    r.method = "grid";
    return r;
  }
  TailModel tm = model.excess_tail(s, opt.U) ? TailModel::system : TailModel::pi0;
  JResult j = J_value(sys, s, opt.U, tm);
  r.log_value = std::log(s / (s - 1.0)) + s * j.value;
  r.value = std::exp(r.log_value);
  r.tail_bound = tm == TailModel::system ? 0.0 : std::abs(s) * j.tail_bound;
  r.method = tm == TailModel::system ? "quadrature+analytic-tail" : "quadrature";
  return r;
}

// ---- ladders ------------------------------------------------------------

std::vector<double> ladder_points(double U, double lower, const EvidenceRule& rule) {
  std::vector<double> pts;
  for (int i = rule.levels - 1; i >= 0; --i) {
    double u = U / std::pow(rule.ratio, i);
    if (u > lower) pts.push_back(u);
  }
  return pts;
}

void apply_evidence_rule(Ladder& L, const EvidenceRule& rule) {
  L.increments.clear();
  for (std::size_t i = 1; i < L.partial.size(); ++i)
    L.increments.push_back(L.partial[i] - L.partial[i - 1]);
  const std::size_t n = L.increments.size();
  const double scale = std::max(1.0, L.partial.empty() ? 0.0 : std::abs(L.partial.back()));
  bool ok = n >= static_cast<std::size_t>(rule.checks) + 1;
  for (std::size_t k = 0; ok && k < static_cast<std::size_t>(rule.checks); ++k) {
    std::size_t i = n - 1 - k;
    double cur = std::abs(L.increments[i]);
    double prev = std::abs(L.increments[i - 1]);
    if (!(cur < rule.factor * prev || cur <= rule.floor * scale)) ok = false;
  }
  L.convergent = ok;
  if (n < static_cast<std::size_t>(rule.checks) + 1)
    L.verdict = "insufficient ladder";
  else
    L.verdict = ok ? "convergence evidence" : "divergence evidence";
}

Comparator parse_comparator(const std::string& name) {
  if (name == "pi0") return Comparator::pi0;
  if (name == "xlogx") return Comparator::xlogx;
  throw Error(Errc::invalid_spec, "unknown comparator '" + name + "'");
}

namespace {

// |f| integrated over [a, b] from samples at a, midpoint and b; exact
// crossings are located linearly when the sign changes.
double abs_simpson(double fa, double fm, double fb, double w) {
  if ((fa >= 0 && fm >= 0 && fb >= 0) || (fa <= 0 && fm <= 0 && fb <= 0))
    return std::abs(w / 6.0 * (fa + 4.0 * fm + fb));
  auto trap = [](double f0, double f1, double hw) {
    if ((f0 >= 0) == (f1 >= 0)) return 0.5 * hw * (std::abs(f0) + std::abs(f1));
    return 0.5 * hw * (f0 * f0 + f1 * f1) / (std::abs(f0) + std::abs(f1));
  };
  return trap(fa, fm, 0.5 * w) + trap(fm, fb, 0.5 * w);
}

// Sorted evaluation points in [lo, hi]: uniform steps, density kinks,
// atom positions and extra marks.
std::vector<double> walk_points(const PrimeSystem& sys, double lo, double hi, double step,
                                const std::vector<double>& extra) {
  std::vector<double> pts;
  const long n = std::max(1L, static_cast<long>(std::ceil((hi - lo) / step - 1e-9)));
  for (long i = 0; i <= n; ++i) pts.push_back(std::min(hi, lo + (hi - lo) * i / n));
  if (!sys.is_discrete())
    for (double b : sys.model().breakpoints(lo, hi)) pts.push_back(b);
  for (const Atom& a : sys.atoms(hi))
    if (a.u > lo) pts.push_back(a.u);
  for (double x : extra)
    if (x >= lo && x <= hi) pts.push_back(x);
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  for (double p : pts)
    if (out.empty() || p - out.back() > 1e-12 * std::max(1.0, p)) out.push_back(p);
  return out;
}

// Tracks E(u) = (Pi - Pi0)(e^u) for a continuous system across increasing u.
class ExcessWalker {
 public:
  ExcessWalker(const PrimeSystem& sys, double u0) : model_(sys.model()) {
    E_ = model_.Pi_excess(u0);
    u_ = u0;
    for (const Atom& a : model_.atoms(1e300)) atoms_.push_back(a);
    while (next_atom_ < atoms_.size() && atoms_[next_atom_].u <= u0) ++next_atom_;
  }
  // E just below b (atoms at b excluded), without moving.
  double peek(double b) const { return E_ + segment(u_, b); }
  // Moves to b and includes atoms at b.
  double advance(double b) {
    E_ += segment(u_, b);
    u_ = b;
    while (next_atom_ < atoms_.size() && atoms_[next_atom_].u <= b + 1e-12 * std::max(1.0, b))
      E_ += atoms_[next_atom_++].w;
    return E_;
  }
  double value() const { return E_; }

 private:
  double segment(double a, double b) const {
    if (!(b > a)) return 0.0;
    if (!model_.has_density()) return -(pi0_of_u(b) - pi0_of_u(a));
    return gauss_legendre<double>([this](double v) { return std::exp(v) * model_.excess_rel(v); },
                                  a, b);
  }
  const ContinuousModel& model_;
  std::vector<Atom> atoms_;
  std::size_t next_atom_ = 0;
  double E_ = 0.0;
  double u_ = 0.0;
};

double comparator_rel(Comparator cmp, double u) {
  // C(e^u) e^{-u}
  return cmp == Comparator::pi0 ? pi0_of_u(u) * std::exp(-u) : 1.0 / u;
}

}  // namespace

Ladder l1_defect(const PrimeSystem& sys, double U, Comparator cmp, const DefectOptions& opt) {
  const double lower = cmp == Comparator::pi0 ? 0.0 : kLn2;
  if (!(U > kLn2)) throw Error(Errc::domain, "l1_defect needs U > log 2");
  Ladder L;
  L.U = ladder_points(U, lower, opt.rule);
  Accumulator<double> acc;
  std::size_t next = 0;

  if (sys.is_discrete()) {
    // Pi is constant between prime powers; integrate (c - C(e^u)) e^{-u}
    // piecewise with Gauss-Legendre, splitting at sign changes.
    std::vector<double> pts = {lower};
    for (const Atom& a : sys.prime_power_atoms(U))
      if (a.u > lower) pts.push_back(a.u);
    for (double u : L.U) pts.push_back(u);
    if (cmp == Comparator::xlogx && 1.0 > lower && 1.0 < U) pts.push_back(1.0);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    double c = Pi_value(sys, std::exp(lower));
    auto atoms = sys.prime_power_atoms(U);
    std::size_t ai = 0;
    while (ai < atoms.size() && atoms[ai].u <= lower) ++ai;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      double a = pts[i], b = pts[i + 1];
      while (ai < atoms.size() && atoms[ai].u <= a) c += atoms[ai++].w;
      auto f = [&](double u) { return c * std::exp(-u) - comparator_rel(cmp, u); };
      const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / 0.05)));
      for (int k = 0; k < pieces; ++k) {
        double lo = a + (b - a) * k / pieces, hi = a + (b - a) * (k + 1) / pieces;
        double flo = f(lo), fhi = f(hi);
        if ((flo > 0) != (fhi > 0) && flo != 0 && fhi != 0) {
          double x0 = lo, x1 = hi;
          for (int it = 0; it < 80; ++it) {
            double xm = 0.5 * (x0 + x1);
            if ((f(xm) > 0) == (flo > 0)) x0 = xm; else x1 = xm;
          }
          acc += std::abs(gauss_legendre<double>(f, lo, x0)) + std::abs(gauss_legendre<double>(f, x0, hi));
        } else {
          acc += std::abs(gauss_legendre<double>(f, lo, hi));
        }
      }
      while (next < L.U.size() && std::abs(b - L.U[next]) <= 1e-12 * std::max(1.0, b)) {
        L.partial.push_back(acc.value());
        ++next;
      }
    }
  } else {
    auto pts = walk_points(sys, lower, U, opt.step, L.U);
    ExcessWalker E(sys, lower);
    auto g = [&](double u, double e) {
      double v = e * std::exp(-u);
      if (cmp == Comparator::xlogx) v += pi0_of_u(u) * std::exp(-u) - 1.0 / u;
      return v;
    };
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      double a = pts[i], b = pts[i + 1], m = 0.5 * (a + b);
      double ga = g(a, E.value());
      double gm = g(m, E.peek(m));
      double gb = g(b, E.peek(b));
      acc += abs_simpson(ga, gm, gb, b - a);
      E.advance(b);
      while (next < L.U.size() && std::abs(b - L.U[next]) <= 1e-12 * std::max(1.0, b)) {
        L.partial.push_back(acc.value());
        ++next;
      }
    }
  }
  while (L.partial.size() < L.U.size()) L.partial.push_back(acc.value());
  apply_evidence_rule(L, opt.rule);
  return L;
}

DensityResult density_constant(const PrimeSystem& sys, double U, TailModel model,
                               const DefectOptions& opt) {
  DensityResult r;
  JResult j = J_value(sys, 1.0, U, model);
  r.J1 = j.value.real();
  r.a = std::exp(r.J1);
  r.tail_bound = r.a * j.tail_bound;
  r.l1 = l1_defect(sys, U, Comparator::pi0, opt);
  r.reliable = r.l1.convergent;
  r.note = r.reliable ? "L1 defect shows convergence evidence"
                      : "diverged hypothesis: L1 defect shows no convergence evidence";
  return r;
}

Ladder density_defect(const PrimeSystem& sys, double a, double U,
                      const DensityDefectOptions& opt) {
  if (!(a > 0)) throw Error(Errc::domain, "density_defect needs a > 0");
  Ladder L;
  L.U = ladder_points(U, 0.0, opt.rule);
  if (sys.is_discrete()) {
    // N is a step function; integrate |c e^{-u} - a| exactly between values.
    Accumulator<double> acc;
    std::size_t next = 0;
    double c = 0.0, prev = 0.0;
    auto add_segment = [&](double lo, double hi) {
      if (!(hi > lo)) return;
      auto piece = [&](double x0, double x1) {
        return c * std::exp(-x0) * (-std::expm1(-(x1 - x0))) - a * (x1 - x0);
      };
      double cross = c > 0 ? std::log(c / a) : -1.0;
      if (cross > lo && cross < hi)
        acc += std::abs(piece(lo, cross)) + std::abs(piece(cross, hi));
      else
        acc += std::abs(piece(lo, hi));
    };
    auto flush_until = [&](double u) {
      while (next < L.U.size() && L.U[next] <= u) {
        add_segment(prev, L.U[next]);
        prev = L.U[next];
        L.partial.push_back(acc.value());
        ++next;
      }
    };
    Enumerator e(sys, std::exp(U), opt.enumeration);
    GeneralizedInteger g;
    while (e.next(g)) {
      double u = std::log(g.value);
      flush_until(u);
      add_segment(prev, u);
      prev = u;
      c += 1.0;
    }
    flush_until(U);
    apply_evidence_rule(L, opt.rule);
    return L;
  }

  auto partials = [&](double h) {
    auto dn = exp_conv(to_grid(sys, h, U, opt.grid));
    auto C = cumulative_all(dn);
    std::vector<double> out;
    Accumulator<double> acc;
    std::size_t next = 0;
    for (std::size_t j = 0; j < C.size() && next < L.U.size(); ++j) {
      double mid = (static_cast<double>(j) + 0.5) * h;
      while (next < L.U.size() && mid > L.U[next]) {
        out.push_back(acc.value());
        ++next;
      }
      if (next >= L.U.size()) break;
      acc += h * std::abs(C[j] * std::exp(-mid) - a);
    }
    while (out.size() < L.U.size()) out.push_back(acc.value());
    return out;
  };
  auto coarse = partials(opt.h);
  if (opt.richardson) {
    auto fine = partials(0.5 * opt.h);
    for (std::size_t i = 0; i < coarse.size(); ++i)
      L.partial.push_back((4.0 * fine[i] - coarse[i]) / 3.0);
  } else {
    L.partial = coarse;
  }
  apply_evidence_rule(L, opt.rule);
  return L;
}

// ---- criteria and probes ------------------------------------------------

CosineResult cosine_criterion(const std::vector<CosineTerm>& terms, bool strengthened) {
  std::set<double> seen;
  CosineResult r;
  for (const auto& term : terms) {
    if (!(term.t > 0)) throw Error(Errc::invalid_spec, "cosine term needs t > 0");
    if (!seen.insert(term.t).second)
      throw Error(Errc::invalid_spec, "cosine terms need distinct t values");
    double theta = term.y + std::atan(term.t);
    double c = std::sqrt(1.0 + term.t * term.t) * term.b * std::cos(theta);
    if (strengthened) c = std::abs(c);
    r.theta.push_back(theta);
    r.value.push_back(c);
    if (!(c < 2.0)) r.pass = false;
  }
  return r;
}

ProbeReport boundary_probe(const PrimeSystem& sys, const BetaTermSpec& spec,
                           const ProbeOptions& opt) {
  if (!(opt.sigma_lo > 1 && opt.sigma_hi < 2 + 1e-12 && opt.sigma_lo <= opt.sigma_hi))
    throw Error(Errc::domain, "probe sigma range must lie in (1, 2]");
  if (!(opt.t_lo <= opt.t_hi) || opt.n_sigma < 1 || opt.n_t < 1)
    throw Error(Errc::domain, "probe needs a nonempty sample grid");
  if (!(spec.eta > 0)) throw Error(Errc::invalid_spec, "probe needs eta > 0");
  double prev = spec.eta;
  for (const auto& b : spec.terms) {
    if (!(b.t > prev)) throw Error(Errc::invalid_spec, "beta terms need 0 < eta < t1 < t2 < ...");
    prev = b.t;
  }
  ProbeReport rep;
  for (const auto& b : spec.terms)
    if (spec.kind == BoundKind::upper ? !(b.beta > -1) : !(b.beta < 1)) rep.hypothesis_ok = false;

  const int ns = opt.n_sigma, nt = opt.n_t;
  std::vector<double> sig(ns), ts(nt);
  const double l0 = std::log(opt.sigma_lo - 1.0), l1 = std::log(opt.sigma_hi - 1.0);
  for (int i = 0; i < ns; ++i) sig[i] = 1.0 + std::exp(ns == 1 ? l0 : l0 + (l1 - l0) * i / (ns - 1));
  for (int i = 0; i < nt; ++i) ts[i] = nt == 1 ? opt.t_lo : opt.t_lo + (opt.t_hi - opt.t_lo) * i / (nt - 1);

  std::vector<ProbeSample> samples(static_cast<std::size_t>(ns) * nt);
  parallel_for(samples.size(), [&](std::size_t idx) {
    const double s0 = sig[idx / nt], t = ts[idx % nt];
    ZetaResult z = zeta(sys, cplx(s0, t), opt.zeta);
    double lz = z.log_value.real();
    double q = lz;
    for (const auto& b : spec.terms)
      if (b.t < opt.t_hi) q -= b.beta * std::log(std::abs(cplx(s0 - 1.0, t - b.t)));
    if (spec.kind == BoundKind::lower) q += std::log(std::abs(cplx(s0 - 1.0, t)));
    samples[idx] = {s0, t, lz, q};
  });
  bool first = true;
  for (const auto& p : samples) {
    bool better = spec.kind == BoundKind::upper ? p.q > rep.extremum : p.q < rep.extremum;
    if (first || better) {
      rep.extremum = p.q;
      rep.sigma_at = p.sigma;
      rep.t_at = p.t;
      first = false;
    }
  }
  if (opt.keep_samples) rep.samples = std::move(samples);
  return rep;
}

ChebyshevResult chebyshev_ratio(const PrimeSystem& sys, double X, int samples) {
  if (!(X > 2)) throw Error(Errc::domain, "chebyshev_ratio needs X > 2");
  samples = std::max(samples, 2);
  const double lo = kLn2, hi = std::log(X);
  const double step = (hi - lo) / (samples - 1);
  ChebyshevResult r;
  std::vector<double> us;
  for (int i = 0; i < samples; ++i) us.push_back(i + 1 == samples ? hi : lo + step * i);
  if (sys.is_discrete()) {
    for (const Atom& a : sys.prime_power_atoms(hi))
      if (a.u >= lo) us.push_back(a.u);
    std::sort(us.begin(), us.end());
    us.erase(std::unique(us.begin(), us.end()), us.end());
    for (double u : us) {
      double x = std::exp(u);
      r.samples.emplace_back(u, Pi_value(sys, x) * u / x);
    }
  } else {
    auto pts = walk_points(sys, lo, hi, step, us);
    ExcessWalker E(sys, lo);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      double u = pts[i];
      double e = i == 0 ? E.value() : E.advance(u);
      r.samples.emplace_back(u, (pi0_of_u(u) + e) * std::exp(-u) * u);
    }
  }
  const double last = hi - std::log(10.0);
  bool first = true;
  for (const auto& [u, v] : r.samples) {
    if (first || v > r.sup) {
      r.sup = v;
      r.u_at = u;
      first = false;
    }
    if (u >= last)
      r.sup_last_decade = std::max(r.sup_last_decade, v);
    else
      r.sup_before_last_decade = std::max(r.sup_before_last_decade, v);
  }
  r.growth = r.sup_last_decade > r.sup_before_last_decade * (1.0 + 1e-9);
  return r;
}

}  // namespace gnum
