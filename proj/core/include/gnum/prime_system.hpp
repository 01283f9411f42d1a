#pragma once

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnum/grid_measure.hpp"
#include "gnum/special.hpp"

namespace gnum {

struct Atom {
  double u;  // position in log x
  double w;  // mass
};

// Right-continuous nondecreasing step function built from positive jumps.
class StepFunction {
 public:
  StepFunction() = default;
  explicit StepFunction(std::vector<std::pair<double, double>> jumps);

  double operator()(double x) const;
  std::size_t size() const { return xs_.size(); }
  const std::vector<double>& abscissae() const { return xs_; }
  const std::vector<double>& increments() const { return ds_; }

 private:
  std::vector<double> xs_;
  std::vector<double> ds_;
  std::vector<double> prefix_;
};

// (1 - e^{-u})/u, the density of Pi0 with respect to x, written in u.
double pi0_rel_density(double u);
// Pi0(e^u) from its positive power series.
double pi0_of_u(double u);
// Pi0(x) by adaptive quadrature of (1 - 1/t)/log t.
double Pi0_value(double x);

// Absolutely continuous part described through dPi/dx as a function of
// u = log x, plus atoms.
class ContinuousModel {
 public:
  virtual ~ContinuousModel() = default;

  virtual double rel_density(double u) const = 0;
  // rel_density(u) - pi0_rel_density(u).
  virtual double excess_rel(double u) const;
  virtual bool has_density() const { return true; }
  // Kinks and jumps of the density inside (lo, hi).
  virtual std::vector<double> breakpoints(double lo, double hi) const;
  virtual std::vector<Atom> atoms(double u_max) const;
  // Pi(e^u) - Pi0(e^u), atoms included.
  virtual double Pi_excess(double u) const;
  // int over (U, inf) of e^{-s v} d(Pi - Pi0)(v), when available.
  virtual std::optional<cplx> excess_tail(cplx s, double U) const;
  virtual std::map<std::string, double> params() const { return {}; }
};

enum class SystemKind { discrete, continuous };

class PrimeSystem {
 public:
  static PrimeSystem discrete(std::vector<double> primes, std::string label,
                              double complete_to = std::numeric_limits<double>::infinity());
  static PrimeSystem continuous(std::shared_ptr<const ContinuousModel> model,
                                std::string label);

  SystemKind kind() const { return kind_; }
  bool is_discrete() const { return kind_ == SystemKind::discrete; }
  const std::string& label() const { return label_; }
  const std::vector<double>& primes() const { return *primes_; }
  const StepFunction& pi_steps() const { return *pi_; }
  const ContinuousModel& model() const { return *model_; }
  std::shared_ptr<const ContinuousModel> model_ptr() const { return model_; }
  // Discrete systems built from a truncated list are exhaustive up to here.
  double complete_to() const { return complete_to_; }

  // Atoms of dPi for a discrete system: mass 1/m at m log p, m log p <= u_max.
  std::vector<Atom> prime_power_atoms(double u_max) const;
  // All atoms of dPi up to u_max, for either kind.
  std::vector<Atom> atoms(double u_max) const;

  std::map<std::string, std::string> metadata;

 private:
  PrimeSystem() = default;
  SystemKind kind_ = SystemKind::discrete;
  std::string label_;
  std::shared_ptr<const std::vector<double>> primes_;
  std::shared_ptr<const StepFunction> pi_;
  std::shared_ptr<const ContinuousModel> model_;
  double complete_to_ = std::numeric_limits<double>::infinity();
};

// Unvalidated system description.
struct RawSystem {
  std::string kind;  // "discrete" or "continuous"
  std::string label = "custom";
  std::vector<double> primes;
  // Tabulated dPi/du samples, linearly interpolated, zero past the table.
  std::vector<double> density_u;
  std::vector<double> density_rho;
  std::vector<Atom> atoms;
};

std::vector<std::string> validation_issues(const RawSystem& raw);
PrimeSystem validate(const RawSystem& raw);
// Samples the density of a model on [0, u_max] and lists negative values.
std::vector<std::string> density_issues(const ContinuousModel& model, double u_max,
                                        int samples = 20000);

double pi_count(const PrimeSystem& sys, double x);
double Pi_value(const PrimeSystem& sys, double x);

enum class BinRule { linear, left };

struct GridOptions {
  BinRule rule = BinRule::linear;
};

struct GridDiagnostics {
  double max_atom_offset = 0.0;
  std::size_t misaligned_atoms = 0;
  std::vector<std::string> warnings;
};

LogGridMeasure to_grid(const PrimeSystem& sys, double h, double u_max,
                       const GridOptions& opt = {}, GridDiagnostics* diag = nullptr);

using BuiltinParams = std::map<std::string, double>;

struct BuiltinInfo {
  std::string name;
  std::string description;
  BuiltinParams defaults;
};

std::vector<BuiltinInfo> builtin_catalog();
PrimeSystem builtin(const std::string& name, const BuiltinParams& params = {});

std::vector<double> sieve_primes(std::size_t limit);

}  // namespace gnum
