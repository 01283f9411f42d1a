#include "gnum/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "gnum/error.hpp"

namespace gnum {

int mu_of(const GeneralizedInteger& g) {
  for (const auto& [i, e] : g.exponents)
    if (e >= 2) return 0;
  return g.exponents.size() % 2 ? -1 : 1;
}

int lambda_of(const GeneralizedInteger& g) { return g.Omega % 2 ? -1 : 1; }

std::uint64_t default_budget() {
  if (const char* env = std::getenv("GNUM_BUDGET")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v >= 1) return static_cast<std::uint64_t>(v);
  }
  return 100000000ULL;
}

bool Enumerator::Later::operator()(const Node& a, const Node& b) const {
  if (a.value != b.value) return a.value > b.value;
  return std::lexicographical_compare(b.seq.begin(), b.seq.end(), a.seq.begin(), a.seq.end());
}

Enumerator::Enumerator(const PrimeSystem& sys, double X, const EnumOptions& opt)
    : primes_(&sys.primes()), X_(X), budget_(opt.budget ? opt.budget : default_budget()) {
  if (!sys.is_discrete())
    throw Error(Errc::unsupported, "enumeration needs a discrete prime system");
  if (!(X >= 1)) throw Error(Errc::domain, "enumeration needs X >= 1");
}

void Enumerator::push(Node n) {
  if (n.value <= X_) heap_.push(std::move(n));
}

bool Enumerator::next(GeneralizedInteger& out) {
  const auto& p = *primes_;
  Node cur;
  if (!started_) {
    started_ = true;
    cur = {1.0, 1.0, {}};
  } else {
    if (heap_.empty()) return false;
    cur = heap_.top();
    heap_.pop();
  }
  if (emitted_ >= budget_)
    throw Error(Errc::budget_exceeded,
                "enumeration exceeded the element budget of " + std::to_string(budget_) +
                    " (set GNUM_BUDGET to raise it)");
  ++emitted_;

  if (cur.seq.empty()) {
    if (!p.empty()) push({p[0], 1.0, {0}});
  } else {
    const std::uint32_t j = cur.seq.back();
    Node child{cur.value * p[j], cur.value, cur.seq};
    child.seq.push_back(j);
    push(std::move(child));
    if (j + 1 < p.size()) {
      Node sib{cur.parent_value * p[j + 1], cur.parent_value, cur.seq};
      sib.seq.back() = j + 1;
      push(std::move(sib));
    }
  }

  out.exponents.clear();
  for (std::uint32_t i : cur.seq) {
    if (!out.exponents.empty() && out.exponents.back().first == i)
      ++out.exponents.back().second;
    else
      out.exponents.emplace_back(i, 1);
  }
  out.value = cur.value;
  out.Omega = static_cast<std::uint32_t>(cur.seq.size());
  out.maxIndex = cur.seq.empty() ? -1 : static_cast<std::int64_t>(cur.seq.back());
  return true;
}

void enumerate(const PrimeSystem& sys, double X,
               const std::function<void(const GeneralizedInteger&)>& visit,
               const EnumOptions& opt) {
  Enumerator e(sys, X, opt);
  GeneralizedInteger g;
  while (e.next(g)) visit(g);
}

CountResult N_count(const PrimeSystem& sys, double x, const CountOptions& opt) {
  if (!(x >= 1)) throw Error(Errc::domain, "N(x) needs x >= 1");
  CountResult r;
  if (sys.is_discrete()) {
    Enumerator e(sys, x, opt.enumeration);
    GeneralizedInteger g;
    std::uint64_t n = 0;
    while (e.next(g)) ++n;
    r.value = static_cast<double>(n);
    return r;
  }
  const double u = std::log(x);
  const double u_max = opt.u_max > 0 ? opt.u_max : std::max(u, opt.h);
  auto dn = exp_conv(to_grid(sys, opt.h, u_max, opt.grid));
  r.value = cumulative(dn, u);
  r.exact = false;
  r.h = opt.h;
  r.u_max = u_max;
  return r;
}

}  // namespace gnum
