#pragma once

#include <string>
#include <vector>

#include "gnum/prime_system.hpp"
#include "gnum/semigroup.hpp"

namespace gnum {

// ---- zeta and J ---------------------------------------------------------

enum class ZetaMethod { automatic, quadrature, grid };

struct ZetaOptions {
  double cutoff = 1e6;  // discrete: sum over n <= cutoff
  ZetaMethod method = ZetaMethod::automatic;
  double U = 40.0;      // quadrature route: explicit range in log x
  double h = 1e-3;      // grid route
  double u_max = 30.0;  // grid route
  GridOptions grid;
  EnumOptions enumeration;
};

struct ZetaResult {
  cplx value;
  cplx log_value;
  double tail_bound = 0.0;  // estimate of what the truncation leaves out
  std::string method;
};

ZetaResult zeta(const PrimeSystem& sys, cplx s, const ZetaOptions& opt = {});

enum class TailModel { none, pi0, xlogx, system };

const char* tail_model_name(TailModel m);
TailModel parse_tail_model(const std::string& name);

struct JResult {
  cplx value;             // J(s)
  cplx tail;              // model contribution to s J(s) past U
  cplx truncation;        // -e^{-sU}(Pi - Pi0)(e^U): the plain cutoff term
  double tail_bound = 0;  // |tail - truncation| / |s|
  TailModel model = TailModel::pi0;
};

// J(s) = int_1^inf x^{-1-s}(Pi(x) - Pi0(x)) dx with the range past e^U
// supplied by the tail model.
JResult J_value(const PrimeSystem& sys, cplx s, double U, TailModel model = TailModel::pi0);

// ---- evidence ladders ---------------------------------------------------

struct EvidenceRule {
  double ratio = 2.0;    // ladder step in u
  double factor = 0.5;   // required decay of successive increments
  int checks = 3;        // how many trailing increments must decay
  int levels = 6;        // ladder points
  double floor = 1e-12;  // increments below floor * scale count as decayed
};

struct Ladder {
  std::vector<double> U;        // ladder abscissae in u = log x
  std::vector<double> partial;  // partial integrals up to U[i]
  std::vector<double> increments;
  bool convergent = false;
  std::string verdict;
};

std::vector<double> ladder_points(double U, double lower, const EvidenceRule& rule);
void apply_evidence_rule(Ladder& ladder, const EvidenceRule& rule);

enum class Comparator { pi0, xlogx };

Comparator parse_comparator(const std::string& name);

struct DefectOptions {
  EvidenceRule rule;
  double step = 0.01;  // continuous systems: integration panel width in u
};

// Partial integrals of |Pi(x) - C(x)| dx/x^2.
Ladder l1_defect(const PrimeSystem& sys, double U, Comparator cmp = Comparator::pi0,
                 const DefectOptions& opt = {});

struct DensityResult {
  double a = 0.0;
  double J1 = 0.0;
  double tail_bound = 0.0;
  bool reliable = false;
  Ladder l1;
  std::string note;
};

DensityResult density_constant(const PrimeSystem& sys, double U,
                               TailModel model = TailModel::pi0,
                               const DefectOptions& opt = {});

struct DensityDefectOptions {
  EvidenceRule rule;
  double h = 0.01;          // continuous systems: coarse grid spacing
  bool richardson = true;   // combine h and h/2
  GridOptions grid;
  EnumOptions enumeration;
};

// Partial integrals of |N(x) - a x| dx/x^2.
Ladder density_defect(const PrimeSystem& sys, double a, double U,
                      const DensityDefectOptions& opt = {});

// ---- criteria and probes ------------------------------------------------

struct CosineTerm {
  double b, t, y;
};

struct CosineResult {
  std::vector<double> theta;
  std::vector<double> value;
  bool pass = true;
};

CosineResult cosine_criterion(const std::vector<CosineTerm>& terms, bool strengthened);

enum class BoundKind { upper, lower };

struct BetaTerm {
  double t, beta;
};

struct BetaTermSpec {
  double eta = 0.0;
  std::vector<BetaTerm> terms;
  BoundKind kind = BoundKind::upper;
};

struct ProbeOptions {
  double sigma_lo = 1.01, sigma_hi = 2.0;
  double t_lo = 0.5, t_hi = 10.0;
  int n_sigma = 200, n_t = 400;
  ZetaOptions zeta;
  bool keep_samples = true;
};

struct ProbeSample {
  double sigma, t, log_abs_zeta, q;
};

struct ProbeReport {
  double extremum = 0.0;
  double sigma_at = 0.0, t_at = 0.0;
  bool hypothesis_ok = true;  // beta sign constraints for the kind
  std::vector<ProbeSample> samples;
};

ProbeReport boundary_probe(const PrimeSystem& sys, const BetaTermSpec& spec,
                           const ProbeOptions& opt = {});

struct ChebyshevResult {
  double sup = 0.0;
  double u_at = 0.0;
  double sup_before_last_decade = 0.0;
  double sup_last_decade = 0.0;
  bool growth = false;
  std::vector<std::pair<double, double>> samples;  // (u, Pi(x) log x / x)
};

ChebyshevResult chebyshev_ratio(const PrimeSystem& sys, double X, int samples = 2000);

}  // namespace gnum
