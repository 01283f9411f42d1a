#include <algorithm>
#include <cmath>
#include <numbers>

#include "gnum/error.hpp"
#include "gnum/prime_system.hpp"
#include "gnum/quadrature.hpp"
#include "gnum/sum.hpp"

namespace gnum {

namespace {

constexpr double kLn2 = std::numbers::ln2;

class Pi0Model : public ContinuousModel {
 public:
  double rel_density(double u) const override { return pi0_rel_density(u); }
  double excess_rel(double) const override { return 0.0; }
  double Pi_excess(double) const override { return 0.0; }
  std::optional<cplx> excess_tail(cplx, double) const override { return cplx(0.0); }
};

// dPi/dx = r0 + S + S', Pi = Pi0 + x S(log x), S a sum of rescaled bumps.
class Ex41Model : public ContinuousModel {
 public:
  explicit Ex41Model(int k) : k_(k), m_(k + 3) {
    double sup = 0.0;
    const int samples = 20000;
    for (int i = 0; i <= samples; ++i)
      sup = std::max(sup, std::abs(spline_deriv(m_ * static_cast<double>(i) / samples, k_)));
    scale_ = 1.0 / (16.0 * std::pow(m_, k_) * sup);
  }

  // phi^{(j)}(t), phi = scale * M_m(m t).
  double phi(double t, int j) const {
    if (t <= 0 || t >= 1) return 0.0;
    return scale_ * std::pow(m_, j) * spline_deriv(m_ * t, j);
  }

  double S(double u) const {
    double n, t;
    if (!locate(u, n, t)) return 0.0;
    return phi(t, k_ - 1) / (n * std::pow(std::log(n), 1.0 / k_));
  }
  double dS(double u) const {
    double n, t;
    if (!locate(u, n, t)) return 0.0;
    return phi(t, k_) / n;
  }

  double rel_density(double u) const override { return pi0_rel_density(u) + S(u) + dS(u); }
  double excess_rel(double u) const override { return S(u) + dS(u); }
  double Pi_excess(double u) const override { return std::exp(u) * S(u); }

  std::vector<double> breakpoints(double lo, double hi) const override {
    std::vector<double> b;
    for (double n = std::max(3.0, std::floor(lo)); n <= std::ceil(hi); n += 1.0) {
      double lk = std::pow(std::log(n), 1.0 / k_);
      for (int i = 0; i <= m_; ++i) {
        double x = n + i / (m_ * lk);
        if (x > lo && x < hi) b.push_back(x);
      }
    }
    return b;
  }

  std::optional<cplx> excess_tail(cplx s, double U) const override {
    const cplx c = s - 1.0;
    Accumulator<cplx> acc;
    // Bump straddling U.
    double n0 = std::floor(U);
    if (n0 >= 3) {
      double lk = std::pow(std::log(n0), 1.0 / k_);
      double end = n0 + 1.0 / lk;
      if (U < end) {
        auto f = [&](double u) { return std::exp(-c * u) * excess_rel(u); };
        std::vector<double> br = breakpoints(U, end);
        br.push_back(end);
        double lo = U;
        for (double hi : br) {
          acc += gauss_legendre<cplx>(f, lo, hi);
          lo = hi;
        }
      }
    }
    if (c == cplx(0.0, 0.0)) return acc.value();
    const double dsig = c.real();
    if (!(dsig > 0)) return std::nullopt;
    const double n_end = n0 + std::min(2.0e6, 45.0 / dsig + 2.0);
    for (double n = std::max(3.0, n0 + 1.0); n <= n_end; n += 1.0) {
      double lk = std::pow(std::log(n), 1.0 / k_);
      cplx beta = c / lk;
      cplx inner = bump_transform(beta);
      acc += (1.0 + c) * std::exp(-c * n) / (n * lk * lk) * inner;
    }
    return acc.value();
  }

  std::map<std::string, double> params() const override {
    return {{"k", static_cast<double>(k_)}, {"scale", scale_}};
  }

 private:
  bool locate(double u, double& n, double& t) const {
    n = std::floor(u);
    if (n < 3) return false;
    t = std::pow(std::log(n), 1.0 / k_) * (u - n);
    return t > 0 && t < 1;
  }

  // j-th derivative of the cardinal B-spline of order m on [0, m].
  double spline_deriv(double y, int j) const {
    if (y <= 0 || y >= m_) return 0.0;
    double sign = 1.0;
    if (y > 0.5 * m_) {
      y = m_ - y;
      if (j % 2) sign = -1.0;
    }
    const int deg = m_ - 1 - j;
    double fact = 1.0;
    for (int i = 2; i <= deg; ++i) fact *= i;
    double sum = 0.0, binom = 1.0;
    for (int i = 0; i <= m_ && i < y; ++i) {
      sum += (i % 2 ? -1.0 : 1.0) * binom * std::pow(y - i, deg);
      binom = binom * (m_ - i) / (i + 1);
    }
    return sign * sum / fact;
  }

  // int_0^1 e^{-beta v} phi^{(k-1)}(v) dv, piecewise Gauss-Legendre.
  cplx bump_transform(cplx beta) const {
    const int sub = 1 + static_cast<int>(std::abs(beta) / m_);
    const int pieces = m_ * sub;
    Accumulator<cplx> acc;
    auto f = [&](double v) { return std::exp(-beta * v) * phi(v, k_ - 1); };
    for (int i = 0; i < pieces; ++i)
      acc += gauss_legendre<cplx>(f, static_cast<double>(i) / pieces,
                                  static_cast<double>(i + 1) / pieces);
    return acc.value();
  }

  int k_;
  int m_;
  double scale_ = 1.0;
};

// (1 + cos u)/u past log 2.
class Ex42Model : public ContinuousModel {
 public:
  double rel_density(double u) const override {
    return u >= kLn2 ? (1.0 + std::cos(u)) / u : 0.0;
  }
  double excess_rel(double u) const override {
    return u >= kLn2 ? (std::cos(u) + std::exp(-u)) / u : -pi0_rel_density(u);
  }
  std::vector<double> breakpoints(double lo, double hi) const override {
    if (kLn2 > lo && kLn2 < hi) return {kLn2};
    return {};
  }
  std::optional<cplx> excess_tail(cplx s, double U) const override {
    if (U < kLn2) return std::nullopt;
    const cplx i(0.0, 1.0);
    return 0.5 * (expint_e1((s - 1.0 - i) * U) + expint_e1((s - 1.0 + i) * U)) +
           expint_e1(s * U);
  }
};

// Atoms of mass 2^{k+1/2}/k at (k + 1/2) log 2.
class Ex43Model : public ContinuousModel {
 public:
  double rel_density(double) const override { return 0.0; }
  double excess_rel(double u) const override { return -pi0_rel_density(u); }
  bool has_density() const override { return false; }
  std::vector<Atom> atoms(double u_max) const override {
    std::vector<Atom> out;
    for (int k = 1; (k + 0.5) * kLn2 <= u_max; ++k) {
      double w = std::exp2(k + 0.5) / k;
      if (!std::isfinite(w)) break;
      out.push_back({(k + 0.5) * kLn2, w});
    }
    return out;
  }
  std::optional<cplx> excess_tail(cplx s, double U) const override {
    const cplx c = s - 1.0;
    if (!(c.real() > 0)) return std::nullopt;
    const cplx z = std::exp(-c * kLn2);
    long K = 0;
    while ((K + 1 + 0.5) * kLn2 <= U) ++K;
    Accumulator<cplx> head;
    cplx zk = 1.0;
    for (long k = 1; k <= K; ++k) {
      zk *= z;
      head += zk / static_cast<double>(k);
    }
    cplx atoms_tail = std::exp(-0.5 * c * kLn2) * (-std::log(1.0 - z) - head.value());
    cplx pi0_tail = expint_e1(c * U) - expint_e1(s * U);
    return atoms_tail - pi0_tail;
  }
};

// Pi0 density plus r0^2 omega, omega = 1/log u past u = e.
class Ex51Model : public ContinuousModel {
 public:
  static double omega(double u) { return u >= std::numbers::e ? 1.0 / std::log(u) : 1.0; }
  double rel_density(double u) const override {
    double r = pi0_rel_density(u);
    return r + r * r * omega(u);
  }
  double excess_rel(double u) const override {
    double r = pi0_rel_density(u);
    return r * r * omega(u);
  }
  std::vector<double> breakpoints(double lo, double hi) const override {
    if (std::numbers::e > lo && std::numbers::e < hi) return {std::numbers::e};
    return {};
  }
  std::optional<cplx> excess_tail(cplx s, double U) const override {
    const cplx c = s - 1.0;
    if (c.real() < 0 || U < std::numbers::e) return std::nullopt;
    QuadOptions opt;
    opt.abs_tol = 1e-13;
    if (c.imag() == 0.0) {
      const double cr = c.real();
      auto f = [&](double tau) {
        if (tau <= 0) return 0.0;
        double u = U / tau;
        return std::exp(-cr * u) * excess_rel(u) * U / (tau * tau);
      };
      opt.min_panels = 16;
      return cplx(adaptive_simpson<double>(f, 0.0, 1.0, opt).value, 0.0);
    }
    const double len = c.real() > 0 ? std::min(60.0 / c.real(), 4000.0) : 4000.0;
    auto f = [&](double u) { return std::exp(-c * u) * excess_rel(u); };
    opt.min_panels = static_cast<int>(len * std::max(1.0, std::abs(c.imag())));
    return adaptive_simpson<cplx>(f, U, U + len, opt).value;
  }
};

// Kahane-type system: density 1/log x past 2 with holes [a_j, a_j + b_j) in
// log x, compensated by atoms at a_j.
class Ex52Model : public ContinuousModel {
 public:
  explicit Ex52Model(int jmax) {
    double f = 1.0;
    for (int j = 1; j <= jmax; ++j) {
      f *= j;
      a_.push_back(f * f * f + 1.0);
      b_.push_back(std::sqrt(static_cast<double>(j)));
    }
  }
  bool in_hole(double u) const {
    for (std::size_t j = 0; j < a_.size(); ++j) {
      if (u < a_[j]) return false;
      if (u < a_[j] + b_[j]) return true;
    }
    return false;
  }
  double rel_density(double u) const override {
    return (u < kLn2 || in_hole(u)) ? 0.0 : 1.0 / u;
  }
  double excess_rel(double u) const override {
    return (u < kLn2 || in_hole(u)) ? -pi0_rel_density(u) : std::exp(-u) / u;
  }
  std::vector<double> breakpoints(double lo, double hi) const override {
    std::vector<double> b;
    auto add = [&](double x) {
      if (x > lo && x < hi) b.push_back(x);
    };
    add(kLn2);
    for (std::size_t j = 0; j < a_.size(); ++j) {
      add(a_[j]);
      add(a_[j] + b_[j]);
    }
    return b;
  }
  std::vector<Atom> atoms(double u_max) const override {
    std::vector<Atom> out;
    for (std::size_t j = 0; j < a_.size() && a_[j] <= u_max; ++j)
      out.push_back({a_[j], std::exp(a_[j]) * std::log1p(b_[j] / a_[j])});
    return out;
  }
  std::optional<cplx> excess_tail(cplx s, double U) const override {
    if (U < kLn2) return std::nullopt;
    const cplx c = s - 1.0;
    Accumulator<cplx> acc;
    acc += expint_e1(s * U);
    for (std::size_t j = 0; j < a_.size(); ++j) {
      double hi = a_[j] + b_[j];
      if (hi > U) acc += -exp_over_u(c, std::max(a_[j], U), hi);
      if (a_[j] > U) acc += std::exp(-c * a_[j]) * std::log1p(b_[j] / a_[j]);
    }
    return acc.value();
  }
  std::map<std::string, double> params() const override {
    return {{"jmax", static_cast<double>(a_.size())}};
  }
  const std::vector<double>& a() const { return a_; }
  const std::vector<double>& b() const { return b_; }

 private:
  std::vector<double> a_, b_;
};

void check_params(const std::string& name, const BuiltinParams& given,
                  const BuiltinParams& defaults) {
  for (const auto& [k, v] : given)
    if (!defaults.count(k))
      throw Error(Errc::invalid_spec, "builtin '" + name + "' has no parameter '" + k + "'");
}

}  // namespace

std::vector<BuiltinInfo> builtin_catalog() {
  return {
      {"rational", "ordinary primes up to a sieve limit", {{"limit", 1e6}}},
      {"pi0", "canonical comparator: dPi = (1 - 1/x)/log x dx", {}},
      {"ex41", "Pi0 plus x S(log x), S a sum of C^k bumps (Pi0 comparator fails)", {{"k", 2}}},
      {"ex42", "dPi = (1 + cos log x)/log x dx past 2", {}},
      {"ex43", "atoms 2^{k+1/2}/k at 2^{k+1/2} (wobbling N(x)/x)", {}},
      {"ex51", "Pi0 density plus ((1 - 1/x)/log x)^2 / log log x", {}},
      {"ex52", "1/log x density with holes at a_j = (j!)^3 + 1 of width sqrt(j), "
               "compensated by atoms",
       {{"jmax", 12}}},
  };
}

PrimeSystem builtin(const std::string& name, const BuiltinParams& params) {
  BuiltinParams defaults;
  bool found = false;
  for (const auto& info : builtin_catalog())
    if (info.name == name) {
      defaults = info.defaults;
      found = true;
    }
  if (!found) throw Error(Errc::unknown_name, "unknown builtin system '" + name + "'");
  check_params(name, params, defaults);
  BuiltinParams p = defaults;
  for (const auto& [k, v] : params) p[k] = v;

  if (name == "rational") {
    double limit = p["limit"];
    if (!(limit >= 2) || limit > 5e9)
      throw Error(Errc::invalid_spec, "rational limit must lie in [2, 5e9]");
    auto sys = PrimeSystem::discrete(sieve_primes(static_cast<std::size_t>(limit)), "rational",
                                     std::floor(limit));
    sys.metadata["sieve_limit"] = std::to_string(static_cast<long long>(limit));
    sys.metadata["tail_switchover"] = "Pi continued by Pi0 past the sieve limit";
    return sys;
  }
  if (name == "pi0") return PrimeSystem::continuous(std::make_shared<Pi0Model>(), "pi0");
  if (name == "ex41") {
    double k = p["k"];
    if (k < 2 || k != std::floor(k) || k > 12)
      throw Error(Errc::invalid_spec, "ex41 needs an integer k >= 2 (and at most 12)");
    return PrimeSystem::continuous(std::make_shared<Ex41Model>(static_cast<int>(k)), "ex41");
  }
  if (name == "ex42") return PrimeSystem::continuous(std::make_shared<Ex42Model>(), "ex42");
  if (name == "ex43") return PrimeSystem::continuous(std::make_shared<Ex43Model>(), "ex43");
  if (name == "ex51") return PrimeSystem::continuous(std::make_shared<Ex51Model>(), "ex51");
  double jmax = p["jmax"];
  if (jmax < 2 || jmax > 12 || jmax != std::floor(jmax))
    throw Error(Errc::invalid_spec, "ex52 jmax must be an integer in [2, 12]");
  return PrimeSystem::continuous(std::make_shared<Ex52Model>(static_cast<int>(jmax)), "ex52");
}

}  // namespace gnum
