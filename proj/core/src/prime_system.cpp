#include "gnum/prime_system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gnum/error.hpp"
#include "gnum/quadrature.hpp"
#include "gnum/sum.hpp"

namespace gnum {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::spacing_mismatch: return "spacing-mismatch";
    case Errc::invalid_prime_measure: return "invalid-prime-measure";
    case Errc::not_normalized: return "not-normalized";
    case Errc::non_invertible: return "non-invertible";
    case Errc::domain: return "domain";
    case Errc::unsupported: return "unsupported-operation";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::divergence_domain: return "divergence-domain";
    case Errc::invalid_spec: return "invalid-spec";
    case Errc::validation: return "validation";
    case Errc::unknown_name: return "unknown-name";
    case Errc::io: return "io";
  }
  return "unknown";
}

StepFunction::StepFunction(std::vector<std::pair<double, double>> jumps) {
  std::sort(jumps.begin(), jumps.end());
  for (const auto& [x, d] : jumps) {
    if (!(d > 0) || !std::isfinite(x))
      throw Error(Errc::validation, "step function jumps must be positive and finite");
    if (!xs_.empty() && xs_.back() == x)
      ds_.back() += d;
    else {
      xs_.push_back(x);
      ds_.push_back(d);
    }
  }
  prefix_.resize(ds_.size());
  Accumulator<double> acc;
  for (std::size_t i = 0; i < ds_.size(); ++i) {
    acc += ds_[i];
    prefix_[i] = acc.value();
  }
}

double StepFunction::operator()(double x) const {
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.begin()) return 0.0;
  return prefix_[static_cast<std::size_t>(it - xs_.begin()) - 1];
}

double pi0_rel_density(double u) {
  if (u <= 0) return u == 0 ? 1.0 : 0.0;
  if (u < 1e-8) return 1.0 - 0.5 * u;
  return -std::expm1(-u) / u;
}

double pi0_of_u(double u) {
  if (u <= 0) return 0.0;
  return ein_neg(u);
}

double Pi0_value(double x) {
  if (!(x >= 1)) throw Error(Errc::domain, "Pi0 needs x >= 1");
  const double u = std::log(x);
  auto f = [](double v) { return v < 1e-8 ? 1.0 + 0.5 * v : std::expm1(v) / v; };
  QuadOptions opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-14;
  opt.min_panels = 4;
  return adaptive_simpson<double>(f, 0.0, u, opt).value;
}

double ContinuousModel::excess_rel(double u) const {
  return rel_density(u) - pi0_rel_density(u);
}

std::vector<double> ContinuousModel::breakpoints(double, double) const { return {}; }

std::vector<Atom> ContinuousModel::atoms(double) const { return {}; }

double ContinuousModel::Pi_excess(double u) const {
  if (u <= 0) return 0.0;
  Accumulator<double> acc;
  if (has_density()) {
    auto f = [this](double v) { return std::exp(v) * excess_rel(v); };
    QuadOptions opt;
    opt.abs_tol = 1e-11;
    opt.rel_tol = 1e-12;
    opt.min_panels = std::max(4, static_cast<int>(u));
    acc += integrate_pieces<double>(f, 0.0, u, breakpoints(0.0, u), opt).value;
  } else {
    acc += -pi0_of_u(u);
  }
  for (const Atom& a : atoms(u)) acc += a.w;
  return acc.value();
}

std::optional<cplx> ContinuousModel::excess_tail(cplx, double) const {
  return std::nullopt;
}

PrimeSystem PrimeSystem::discrete(std::vector<double> primes, std::string label,
                                  double complete_to) {
  PrimeSystem s;
  s.kind_ = SystemKind::discrete;
  s.label_ = std::move(label);
  std::vector<std::pair<double, double>> jumps;
  jumps.reserve(primes.size());
  for (double p : primes) jumps.emplace_back(p, 1.0);
  s.pi_ = std::make_shared<const StepFunction>(std::move(jumps));
  s.primes_ = std::make_shared<const std::vector<double>>(std::move(primes));
  s.complete_to_ = complete_to;
  return s;
}

PrimeSystem PrimeSystem::continuous(std::shared_ptr<const ContinuousModel> model,
                                    std::string label) {
  PrimeSystem s;
  s.kind_ = SystemKind::continuous;
  s.label_ = std::move(label);
  s.model_ = std::move(model);
  s.primes_ = std::make_shared<const std::vector<double>>();
  s.pi_ = std::make_shared<const StepFunction>();
  return s;
}

std::vector<Atom> PrimeSystem::prime_power_atoms(double u_max) const {
  std::vector<Atom> out;
  if (!is_discrete()) return out;
  const double eps = 1e-12 * std::max(1.0, u_max);
  for (double p : *primes_) {
    const double lp = std::log(p);
    if (lp > u_max + eps) break;
    for (int m = 1; m * lp <= u_max + eps; ++m) out.push_back({m * lp, 1.0 / m});
  }
  std::sort(out.begin(), out.end(), [](const Atom& a, const Atom& b) { return a.u < b.u; });
  return out;
}

std::vector<Atom> PrimeSystem::atoms(double u_max) const {
  return is_discrete() ? prime_power_atoms(u_max) : model_->atoms(u_max);
}

namespace {

class TabulatedModel : public ContinuousModel {
 public:
  TabulatedModel(std::vector<double> u, std::vector<double> rho, std::vector<Atom> atoms)
      : u_(std::move(u)), rho_(std::move(rho)), atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) { return a.u < b.u; });
  }
  double rel_density(double u) const override {
    if (u_.empty() || u < u_.front() || u > u_.back()) return 0.0;
    auto it = std::upper_bound(u_.begin(), u_.end(), u);
    if (it == u_.end()) return rho_.back() * std::exp(-u);
    std::size_t i = static_cast<std::size_t>(it - u_.begin());
    if (i == 0) return rho_.front() * std::exp(-u);
    double t = (u - u_[i - 1]) / (u_[i] - u_[i - 1]);
    return ((1 - t) * rho_[i - 1] + t * rho_[i]) * std::exp(-u);
  }
  bool has_density() const override { return !u_.empty(); }
  std::vector<double> breakpoints(double lo, double hi) const override {
    std::vector<double> b;
    for (double x : u_)
      if (x > lo && x < hi) b.push_back(x);
    return b;
  }
  std::vector<Atom> atoms(double u_max) const override {
    std::vector<Atom> out;
    for (const Atom& a : atoms_)
      if (a.u <= u_max) out.push_back(a);
    return out;
  }

 private:
  std::vector<double> u_, rho_;
  std::vector<Atom> atoms_;
};

}  // namespace

std::vector<std::string> validation_issues(const RawSystem& raw) {
  std::vector<std::string> issues;
  auto fmt_num = [](double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  };
  if (raw.kind == "discrete") {
    if (raw.primes.empty()) issues.push_back("discrete system has no primes");
    for (std::size_t i = 0; i < raw.primes.size(); ++i) {
      double p = raw.primes[i];
      if (!std::isfinite(p)) issues.push_back("prime " + std::to_string(i) + " is not finite");
      if (i == 0 && !(p > 1))
        issues.push_back("first prime must exceed 1 (got " + fmt_num(p) + ")");
      if (i > 0 && p < raw.primes[i - 1])
        issues.push_back("sequence decreases at index " + std::to_string(i) + " (" +
                         fmt_num(raw.primes[i - 1]) + " > " + fmt_num(p) + ")");
    }
  } else if (raw.kind == "continuous") {
    if (raw.density_u.size() != raw.density_rho.size())
      issues.push_back("density table columns differ in length");
    for (std::size_t i = 0; i < raw.density_u.size(); ++i) {
      if (!(raw.density_u[i] >= 0)) issues.push_back("density abscissa " + std::to_string(i) + " is negative");
      if (i > 0 && !(raw.density_u[i] > raw.density_u[i - 1]))
        issues.push_back("density abscissae must increase (index " + std::to_string(i) + ")");
    }
    for (std::size_t i = 0; i < raw.density_rho.size(); ++i)
      if (!(raw.density_rho[i] >= 0))
        issues.push_back("negative density " + fmt_num(raw.density_rho[i]) + " at sample " +
                         std::to_string(i));
    for (std::size_t i = 0; i < raw.atoms.size(); ++i) {
      if (!(raw.atoms[i].u > 0)) issues.push_back("atom " + std::to_string(i) + " position must be positive");
      if (!(raw.atoms[i].w > 0)) issues.push_back("atom " + std::to_string(i) + " has nonpositive weight");
    }
    if (raw.density_u.empty() && raw.atoms.empty())
      issues.push_back("continuous system has neither density nor atoms");
  } else {
    issues.push_back("unknown system kind '" + raw.kind + "'");
  }
  return issues;
}

PrimeSystem validate(const RawSystem& raw) {
  auto issues = validation_issues(raw);
  if (!issues.empty()) {
    std::string msg = "invalid prime system:";
    for (const auto& s : issues) msg += "\n  - " + s;
    throw Error(Errc::validation, msg);
  }
  if (raw.kind == "discrete") return PrimeSystem::discrete(raw.primes, raw.label);
  auto model = std::make_shared<TabulatedModel>(raw.density_u, raw.density_rho, raw.atoms);
  return PrimeSystem::continuous(model, raw.label);
}

std::vector<std::string> density_issues(const ContinuousModel& model, double u_max,
                                        int samples) {
  std::vector<std::string> issues;
  for (int i = 0; i <= samples; ++i) {
    double u = u_max * i / samples;
    double r = model.rel_density(u);
    if (r < 0 || !std::isfinite(r)) {
      std::ostringstream os;
      os << "negative density " << r << " at u = " << u;
      issues.push_back(os.str());
      if (issues.size() >= 10) break;
    }
  }
  return issues;
}

double pi_count(const PrimeSystem& sys, double x) {
  if (!sys.is_discrete())
    throw Error(Errc::unsupported, "pi_count is defined for discrete systems only");
  if (!(x >= 1)) throw Error(Errc::domain, "pi_count needs x >= 1");
  return sys.pi_steps()(x);
}

namespace {

// Number of primes p (with multiplicity) with p^k <= x.
std::size_t count_powers(const std::vector<double>& p, double x, int k) {
  if (k == 1) return static_cast<std::size_t>(std::upper_bound(p.begin(), p.end(), x) - p.begin());
  double r = std::pow(x, 1.0 / k);
  std::size_t c = static_cast<std::size_t>(std::upper_bound(p.begin(), p.end(), r) - p.begin());
  while (c > 0 && std::pow(p[c - 1], k) > x) --c;
  while (c < p.size() && std::pow(p[c], k) <= x) ++c;
  return c;
}

}  // namespace

double Pi_value(const PrimeSystem& sys, double x) {
  if (!(x >= 1)) throw Error(Errc::domain, "Pi needs x >= 1");
  if (sys.is_discrete()) {
    const auto& p = sys.primes();
    if (p.empty() || x < p.front()) return 0.0;
    Accumulator<double> acc;
    for (int k = 1; std::pow(p.front(), k) <= x; ++k)
      acc += static_cast<double>(count_powers(p, x, k)) / k;
    return acc.value();
  }
  const double u = std::log(x);
  const auto& m = sys.model();
  if (!m.has_density()) {
    Accumulator<double> acc;
    for (const Atom& a : m.atoms(u)) acc += a.w;
    return acc.value();
  }
  return pi0_of_u(u) + m.Pi_excess(u);
}

LogGridMeasure to_grid(const PrimeSystem& sys, double h, double u_max,
                       const GridOptions& opt, GridDiagnostics* diag) {
  if (!(h > 0) || !(u_max > 0)) throw Error(Errc::domain, "to_grid needs h > 0 and u_max > 0");
  const std::size_t n = static_cast<std::size_t>(std::floor(u_max / h + 1e-9)) + 1;
  std::vector<double> m(n, 0.0);
  GridDiagnostics local;
  GridDiagnostics& d = diag ? *diag : local;

  if (!sys.is_discrete() && sys.model().has_density()) {
    const auto& model = sys.model();
    const double top = static_cast<double>(n) * h;
    auto brk = model.breakpoints(0.0, top);
    std::sort(brk.begin(), brk.end());
    std::size_t bi = 0;
    auto dens = [&model](double v) { return std::exp(v) * model.rel_density(v); };
    for (std::size_t j = 0; j < n; ++j) {
      const double a = static_cast<double>(j) * h;
      const double b = a + h;
      while (bi < brk.size() && brk[bi] <= a) ++bi;
      double lo = a, mass = 0.0, moment = 0.0;
      std::size_t k = bi;
      while (true) {
        double hi = (k < brk.size() && brk[k] < b) ? brk[k] : b;
        if (hi > lo) {
          mass += gauss_legendre<double>(dens, lo, hi);
          moment += gauss_legendre<double>([&](double v) { return (v - a) * dens(v); }, lo, hi);
        }
        if (hi >= b) break;
        lo = hi;
        ++k;
      }
      if (j == 0) {
        if (n > 1) m[1] += mass;
        continue;
      }
      if (opt.rule == BinRule::left) {
        m[j] += mass;
      } else {
        double frac = mass != 0.0 ? std::clamp(moment / (mass * h), 0.0, 1.0) : 0.5;
        m[j] += mass * (1.0 - frac);
        if (j + 1 < n) m[j + 1] += mass * frac;
      }
    }
  }

  for (const Atom& a : sys.atoms(u_max)) {
    long j = std::lround(a.u / h);
    double off = std::abs(a.u - static_cast<double>(j) * h);
    if (j < 1) {
      off = std::abs(a.u - h);
      j = 1;
    }
    if (static_cast<std::size_t>(j) >= n) continue;
    d.max_atom_offset = std::max(d.max_atom_offset, off);
    if (off > 0.25 * h) ++d.misaligned_atoms;
    m[static_cast<std::size_t>(j)] += a.w;
  }
  if (d.misaligned_atoms > 0) {
    std::ostringstream os;
    os << d.misaligned_atoms << " atom(s) lie more than h/4 from their grid node (max offset "
       << d.max_atom_offset << ", h = " << h << ")";
    d.warnings.push_back(os.str());
  }
  if (n > 1 && m.size() > 0) m[0] = 0.0;
  return LogGridMeasure(h, std::move(m), false);
}

std::vector<double> sieve_primes(std::size_t limit) {
  std::vector<double> out;
  if (limit < 2) return out;
  std::vector<bool> comp(limit + 1, false);
  for (std::size_t i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    out.push_back(static_cast<double>(i));
    for (std::size_t j = i * i; j <= limit; j += i) comp[j] = true;
  }
  return out;
}

}  // namespace gnum
