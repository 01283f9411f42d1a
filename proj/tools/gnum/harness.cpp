#include "harness.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>
#include <numbers>
#include <random>

#include "gnum/analytic.hpp"
#include "gnum/error.hpp"
#include "gnum/grid_measure.hpp"
#include "gnum/prime_system.hpp"
#include "gnum/semigroup.hpp"
#include "gnum/summatory.hpp"
#include "gnum/system_io.hpp"

namespace gnum::harness {

namespace {

constexpr double kLn2 = std::numbers::ln2;

template <class F>
Check timed(std::string id, std::string title, F&& body) {
  Check c{std::move(id), std::move(title), false, "", 0.0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail += fmt::format("exception: {}", e.what());
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

cplx ex43_closed_form(cplx s) {
  return std::exp(-std::exp(-0.5 * (s - 1.0) * kLn2) * std::log(1.0 - std::exp(-(s - 1.0) * kLn2)));
}

// Random measure with b_0 = 0 and summable decaying masses.
LogGridMeasure random_prime_like(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> b(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) b[j] = u(rng) / (static_cast<double>(j) * j);
  return LogGridMeasure(0.01, std::move(b), true);
}

// Random measure with |a_0| in [0.5, 1] and sum_{j>=1} |a_j| <= |a_0|/2.
LogGridMeasure random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> mag(0.5, 1.0);
  std::vector<double> a(n, 0.0);
  a[0] = mag(rng) * (u(rng) < 0 ? -1.0 : 1.0);
  double total = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    a[j] = u(rng) / (static_cast<double>(j) * j);
    total += std::abs(a[j]);
  }
  const double cap = 0.5 * std::abs(a[0]);
  if (total > cap)
    for (std::size_t j = 1; j < n; ++j) a[j] *= cap / total;
  return LogGridMeasure(0.01, std::move(a), true);
}

double delta_defect(const LogGridMeasure& c) {
  double d = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) d = std::max(d, std::abs(c[j] - (j == 0 ? 1.0 : 0.0)));
  return d;
}

// conv(dN, dM) against delta on e^{-u}-weighted masses.
double weighted_identity_defect(const PrimeSystem& sys, double h, double u_max) {
  auto mm = mobius_measure(sys, h, u_max);
  auto c = conv(mm.dN.exp_weighted(1.0), mm.dM.exp_weighted(1.0), mm.dN.size());
  return delta_defect(c);
}

// |Pi(x) - (x/log x)(1 + (sqrt2/2) cos(log x - pi/4))| log^2 x / x.
double ex42_pnt_sup(const PrimeSystem& sys, double x_lo, double x_hi, int samples) {
  double sup = 0.0;
  const double lo = std::log(x_lo), hi = std::log(x_hi);
  for (int i = 0; i < samples; ++i) {
    double u = lo + (hi - lo) * i / (samples - 1);
    double x = std::exp(u);
    double model = x / u * (1.0 + std::numbers::sqrt2 / 2.0 * std::cos(u - std::numbers::pi / 4.0));
    sup = std::max(sup, std::abs(Pi_value(sys, x) - model) * u * u / x);
  }
  return sup;
}

}  // namespace

WobbleData wobble(int q, double lo, double hi) {
  auto sys = builtin("ex43");
  const double h = kLn2 / q;
  auto dn = exp_conv(to_grid(sys, h, hi + h));
  auto C = cumulative_all(dn);
  WobbleData w;
  bool first = true;
  for (std::size_t j = 0; j < C.size(); ++j) {
    double u = dn.u(j);
    if (u < lo - 1e-12 || u > hi + 1e-12) continue;
    double v = C[j] * std::exp(-u);
    w.rows.emplace_back(u, v);
    if (first || v < w.min) w.min = v;
    if (first || v > w.max) w.max = v;
    first = false;
  }
  return w;
}

namespace {

Check c1() {
  return timed("1", "Euler product: zeta over {2,3} at s = 2 is 3/2", [](Check& c) {
    auto sys = load_system("primes:2,3");
    ZetaOptions opt;
    opt.cutoff = 1e6;
    auto z = zeta(sys, cplx(2.0, 0.0), opt);
    double err = std::abs(z.value - cplx(1.5, 0.0));
    c.pass = err < 1e-3;
    c.detail = fmt::format("zeta(2) = {:.12f}, |error| = {:.3e}, tail bound {:.3e}", z.value.real(),
                           err, z.tail_bound);
  });
}

Check c2() {
  return timed("2", "grid algebra roundtrips and conv(dN, dM) = delta", [](Check& c) {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> len(1, 4096);
    double exp_log = 0.0, log_exp = 0.0, inv = 0.0;
    for (int i = 0; i < 200; ++i) {
      auto b = random_prime_like(rng, len(rng));
      log_exp = std::max(log_exp, max_abs_diff(log_conv(exp_conv(b)), b));
      auto a = exp_conv(random_prime_like(rng, len(rng)));
      exp_log = std::max(exp_log, max_abs_diff(exp_conv(log_conv(a)), a));
      auto g = random_invertible(rng, len(rng));
      inv = std::max(inv, delta_defect(conv(g, inv_conv(g), g.size())));
    }
    struct Case {
      const char* name;
      double h, u_max;
    };
    const Case cases[] = {
        {"primes:2,3", 1e-3, 12.0},
        {"primes:2,3", 5e-4, 12.0},
        {"builtin:rational", 1e-3, 8.0},
        {"builtin:pi0", 0.01, 20.0},
        {"builtin:pi0", 0.005, 20.0},
        {"builtin:ex41", 0.01, 20.0},
        {"builtin:ex42", 0.01, 20.0},
        {"builtin:ex42", 0.005, 20.0},
        {"builtin:ex43", kLn2 / 2.0, 200.0},
        {"builtin:ex43", kLn2 / 16.0, 60.0},
        {"builtin:ex51", 0.01, 20.0},
        {"builtin:ex52", 0.01, 20.0},
    };
    double ident = 0.0;
    std::string worst;
    for (const auto& cs : cases) {
      double d = weighted_identity_defect(load_system(cs.name), cs.h, cs.u_max);
      if (d >= ident) {
        ident = d;
        worst = fmt::format("{} h={:.4g}", cs.name, cs.h);
      }
    }
    c.pass = log_exp < 1e-9 && exp_log < 1e-9 && inv < 1e-9 && ident < 1e-10;
    c.detail = fmt::format(
        "200 random measures: log(exp) {:.2e}, exp(log) {:.2e}, conv(a, inv a) {:.2e}; "
        "conv(dN, dM) - delta {:.2e} over {} system grids (worst {})",
        log_exp, exp_log, inv, ident, std::size(cases), worst);
  });
}

Check c3() {
  return timed("3", "Pi0 system counts N(x) = x", [](Check& c) {
    const double h = 1e-3, u_max = 20.0;
    auto dn = exp_conv(to_grid(builtin("pi0"), h, u_max));
    auto C = cumulative_all(dn);
    double sup = 0.0, at = 0.0;
    for (std::size_t j = 0; j < C.size(); ++j) {
      double d = std::abs(C[j] * std::exp(-dn.u(j)) - 1.0);
      if (d > sup) {
        sup = d;
        at = dn.u(j);
      }
    }
    c.pass = sup < 0.01;
    c.detail = fmt::format("sup |N(x)/x - 1| = {:.3e} at u = {:.3f} (h = {}, u <= {})", sup, at, h,
                           u_max);
  });
}

Check c4() {
  return timed("4", "rational primes: J(1) near 0 and density constant near 1", [](Check& c) {
    auto sys = builtin("rational");
    const double U = std::log(1e6);
    auto d = density_constant(sys, U, TailModel::pi0);
    c.pass = std::abs(d.J1) <= 0.02 && std::abs(d.a - 1.0) <= 0.02;
    c.detail = fmt::format("J(1) = {:.6f}, a = {:.6f}, tail bound {:.2e}, l1 verdict: {}", d.J1, d.a,
                           d.tail_bound, d.l1.verdict);
  });
}

Check c5() {
  return timed("5", "cosine criterion for the oscillating density", [](Check& c) {
    const CosineTerm term{std::numbers::sqrt2 / 2.0, 1.0, -std::numbers::pi / 4.0};
    auto plain = cosine_criterion({term}, false);
    auto strong = cosine_criterion({term}, true);
    double v = plain.value.at(0), w = strong.value.at(0);
    c.pass = plain.pass && strong.pass && std::abs(v - 1.0) < 1e-9 && std::abs(w - 1.0) < 1e-9;
    c.detail = fmt::format("c = {:.15f} (theta = {:.3e}), |c| = {:.15f}", v, plain.theta.at(0), w);
  });
}

Check c6() {
  return timed("6", "atomic example: grid zeta matches the closed form", [](Check& c) {
    auto sys = builtin("ex43");
    ZetaOptions opt;
    opt.method = ZetaMethod::grid;
    opt.h = kLn2 / 2.0;
    opt.u_max = 500.5 * kLn2;
    double worst = 0.0;
    const cplx pts[] = {{1.5, 0.0}, {2.0, 3.0}, {1.1, 7.0}};
    for (cplx s : pts) {
      auto z = zeta(sys, s, opt);
      worst = std::max(worst, std::abs(z.value / ex43_closed_form(s) - 1.0));
    }
    c.pass = worst < 1e-8;
    c.detail = fmt::format("max relative error {:.3e} at s = 1.5, 2+3i, 1.1+7i", worst);
  });
}

Check c7() {
  return timed("7", "atomic example: N(x)/x keeps wobbling", [](Check& c) {
    auto pre = wobble(128);
    auto main = wobble(512);
    bool pre_ok = pre.min < 1.42 && pre.max > 1.47;
    bool main_ok = main.min < 1.38 && main.max > 1.51;
    c.pass = pre_ok && main_ok;
    c.detail = fmt::format(
        "u in [20, 45]: h = log2/128 min {:.4f} max {:.4f}; h = log2/512 min {:.4f} max {:.4f}",
        pre.min, pre.max, main.min, main.max);
  });
}

Check c8() {
  return timed("8", "atomic example: m(x) does not decay", [](Check& c) {
    auto sys = builtin("ex43");
    SummatoryOptions opt;
    opt.h = kLn2 / 2.0;
    opt.u_max = 45.0;
    std::vector<double> us;
    for (double u = 15.0; u <= 45.0 + 1e-9; u += 0.01) us.push_back(u);
    auto r = m_ladder(sys, us, opt);
    auto d = decay_verdict(r, 30.0, 0.5);
    c.pass = d.sup_late >= 0.5 * d.sup_early;
    c.detail = fmt::format("sup |m| on [15, 30) = {:.4f}, on [30, 45] = {:.4f}, ratio {:.3f}",
                           d.sup_early, d.sup_late, d.ratio);
  });
}

Check c9() {
  return timed("9", "random discrete systems: Mobius inversion", [](Check& c) {
    std::mt19937_64 rng(9090);
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_real_distribution<double> value(1.1, 50.0);
    std::uniform_real_distribution<double> base(1.5, 2.0);
    std::uniform_int_distribution<int> refine(1, 3);
    const double X = 1e4;
    long identity_failures = 0, elements = 0;
    double lattice_err = 0.0;
    int lattice_systems = 0;
    for (int i = 0; i < 50; ++i) {
      const int k = count(rng);
      std::vector<double> primes;
      std::vector<int> powers;
      double r = 0.0;
      const bool lattice = i % 2 == 1;
      if (lattice) {
        r = base(rng);
        const int kmax = static_cast<int>(std::floor(std::log(50.0) / std::log(r)));
        std::vector<int> pool(kmax);
        for (int e = 0; e < kmax; ++e) pool[e] = e + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(std::min<std::size_t>(pool.size(), k));
        std::sort(pool.begin(), pool.end());
        for (int e : pool) {
          powers.push_back(e);
          primes.push_back(std::pow(r, e));
        }
      } else {
        for (int j = 0; j < k; ++j) primes.push_back(value(rng));
        std::sort(primes.begin(), primes.end());
      }
      auto sys = PrimeSystem::discrete(primes, fmt::format("random-{}", i));

      std::vector<GeneralizedInteger> elems;
      enumerate(sys, X, [&](const GeneralizedInteger& g) { elems.push_back(g); });
      for (const auto& g : elems) {
        long sum = 0;
        std::vector<std::uint32_t> e(g.exponents.size(), 0);
        while (true) {
          GeneralizedInteger d;
          for (std::size_t t = 0; t < e.size(); ++t) {
            if (e[t] == 0) continue;
            d.exponents.emplace_back(g.exponents[t].first, e[t]);
            d.Omega += e[t];
          }
          sum += mu_of(d);
          std::size_t t = 0;
          while (t < e.size() && e[t] == g.exponents[t].second) e[t++] = 0;
          if (t == e.size()) break;
          ++e[t];
        }
        if (sum != (g.Omega == 0 ? 1 : 0)) ++identity_failures;
      }
      elements += static_cast<long>(elems.size());

      if (lattice) {
        const int q = refine(rng);
        const double h = std::log(r) / q;
        const double u_max = std::log(X);
        auto mm = mobius_measure(sys, h, u_max);
        std::vector<double> agg(mm.dM.size(), 0.0);
        for (const auto& g : elems) {
          std::size_t node = 0;
          for (const auto& [idx, exp] : g.exponents) node += static_cast<std::size_t>(powers[idx]) * exp * q;
          if (node < agg.size()) agg[node] += mu_of(g);
        }
        for (std::size_t j = 0; j < agg.size(); ++j)
          lattice_err = std::max(lattice_err, std::abs(mm.dM[j] - agg[j]));
        ++lattice_systems;
      }
    }
    c.pass = identity_failures == 0 && lattice_err < 1e-9;
    c.detail = fmt::format(
        "50 systems, {} elements <= {:g}: {} Dirichlet identity failures; {} lattice systems, "
        "max |dM - aggregated mu| = {:.2e}",
        elements, X, identity_failures, lattice_systems, lattice_err);
  });
}

Check c10() {
  return timed("10", "Liouville measure and l(x)", [](Check& c) {
    auto sys = load_system("primes:2,3");
    SummatoryOptions opt;
    auto L = liouville_measure(sys, 1e-4, std::log(1e6), opt);
    double m2 = mellin(L.dL, cplx(2.0, 0.0)).real();
    double l10 = ell_value(sys, 10.0, opt);
    double lr = ell_value(builtin("rational"), 1e6, opt);
    bool ok_m = std::abs(m2 - 0.72) < 1e-3;
    bool ok_l10 = std::abs(l10 - 41.0 / 72.0) < 1e-12;
    bool ok_r = std::abs(lr) < 0.01;
    c.pass = ok_m && ok_l10 && ok_r;
    c.detail = fmt::format("{{2,3}}: Mellin(dL, 2) = {:.6f} ({}), l(10) = {:.15f}; rational l(1e6) = {:.3e}",
                           m2, L.method, l10, lr);
  });
}

Check c11() {
  return timed("11", "oscillating density: PNT fails while Chebyshev bounds hold", [](Check& c) {
    auto sys = builtin("ex42");
    double pnt = ex42_pnt_sup(sys, 1e3, 1e6, 2000);
    bool ok_pnt = pnt < 10.0;

    auto l1 = l1_defect(sys, 96.0, Comparator::xlogx);
    bool ok_l1 = !l1.convergent;

    BetaTermSpec spec{0.5, {{1.0, -0.5}}, BoundKind::upper};
    ProbeOptions po;
    po.t_lo = 0.5;
    po.t_hi = 2.0;
    po.n_sigma = 16;
    po.n_t = 61;
    po.keep_samples = false;
    po.sigma_lo = 1.0 + 1e-2;
    auto near = boundary_probe(sys, spec, po);
    po.sigma_lo = 1.0 + 1e-4;
    auto nearer = boundary_probe(sys, spec, po);
    double raw_a = zeta(sys, cplx(1.0 + 1e-2, 1.0)).log_value.real();
    double raw_b = zeta(sys, cplx(1.0 + 1e-4, 1.0)).log_value.real();
    bool ok_probe = nearer.hypothesis_ok && nearer.extremum - near.extremum < 0.5 && raw_b - raw_a > 1.0;

    auto cheb = chebyshev_ratio(sys, 1e6);
    bool ok_cheb = cheb.sup <= 2.0 && !cheb.growth;

    auto a = density_constant(sys, 40.0, TailModel::system).a;
    auto dd = density_defect(sys, a, 96.0);
    bool ok_dd = !dd.convergent;

    c.pass = ok_pnt && ok_l1 && ok_probe && ok_cheb && ok_dd;
    c.detail = fmt::format(
        "PNT error sup {:.3f}; l1 vs x/log x: {}; probe sup {:.3f} -> {:.3f} while log|zeta(s+i)| "
        "{:.3f} -> {:.3f}; Chebyshev sup {:.4f}; density a = {:.6f}, |N - ax| defect: {}",
        pnt, l1.verdict, near.extremum, nearer.extremum, raw_a, raw_b, cheb.sup, a, dd.verdict);
  });
}

Check c12() {
  return timed("12", "L1 hypotheses versus densities", [](Check& c) {
    auto e51 = builtin("ex51");
    auto l1 = l1_defect(e51, 96.0, Comparator::pi0);
    double a51 = density_constant(e51, 40.0, TailModel::system).a;
    auto dd51 = density_defect(e51, a51, 96.0);
    bool ok51 = l1.convergent && !dd51.convergent;

    auto e52 = builtin("ex52");
    double a52 = density_constant(e52, 40.0, TailModel::system).a;
    auto dd52 = density_defect(e52, a52, 96.0);
    auto cheb = chebyshev_ratio(e52, std::exp(218.0));
    bool ok52 = dd52.convergent && cheb.growth;

    c.pass = ok51 && ok52;
    c.detail = fmt::format(
        "ex51: l1 {}, a = {:.6f}, |N - ax| {}; ex52: a = {:.6f}, |N - ax| {}, Chebyshev sup {:.4f} "
        "at u = {:.1f} (growth {})",
        l1.verdict, a51, dd51.verdict, a52, dd52.verdict, cheb.sup, cheb.u_at, cheb.growth);
  });
}

}  // namespace

Check criterion(int id) {
  switch (id) {
    case 1: return c1();
    case 2: return c2();
    case 3: return c3();
    case 4: return c4();
    case 5: return c5();
    case 6: return c6();
    case 7: return c7();
    case 8: return c8();
    case 9: return c9();
    case 10: return c10();
    case 11: return c11();
    case 12: return c12();
    default: break;
  }
  throw Error(Errc::invalid_spec, fmt::format("no acceptance criterion {}", id));
}

std::vector<Check> run_criteria(const std::vector<int>& ids) {
  std::vector<Check> out;
  for (int id : ids) out.push_back(criterion(id));
  return out;
}

std::vector<std::string> example_names() {
  return {"ex41", "ex42", "ex43", "ex43-wobble", "ex51", "ex52", "all"};
}

std::vector<Check> verify_example(const std::string& name) {
  if (name == "all") return run_criteria({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  if (name == "ex42") return run_criteria({5, 11});
  if (name == "ex43") return run_criteria({6, 7, 8});
  if (name == "ex43-wobble") return run_criteria({7});
  if (name == "ex51" || name == "ex52") return run_criteria({12});
  if (name == "ex41") {
    std::vector<Check> out;
    out.push_back(timed("ex41", "smooth bumps: L1 hypothesis fails with nonnegative density", [](Check& c) {
      auto sys = builtin("ex41");
      auto issues = density_issues(sys.model(), 96.0);
      auto l1 = l1_defect(sys, 96.0, Comparator::pi0);
      auto d = density_constant(sys, 40.0, TailModel::system);
      c.pass = issues.empty() && !l1.convergent;
      c.detail = fmt::format("negative density samples: {}; l1 vs Pi0: {}; a = {:.9f}",
                             issues.size(), l1.verdict, d.a);
    }));
    return out;
  }
  throw Error(Errc::unknown_name, fmt::format("unknown example '{}'", name));
}

}  // namespace gnum::harness
