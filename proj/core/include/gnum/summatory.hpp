#pragma once

#include <string>
#include <vector>

#include "gnum/grid_measure.hpp"
#include "gnum/prime_system.hpp"
#include "gnum/semigroup.hpp"

namespace gnum {

struct SummatoryOptions {
  double h = 1e-3;      // grid route spacing
  double u_max = 0.0;   // 0 means the largest requested u
  GridOptions grid;
  EnumOptions enumeration;
  bool force_grid = false;  // use the grid route for discrete systems too
};

struct SummatoryResult {
  std::vector<double> u;       // abscissae as log x
  std::vector<double> values;  // m(x) or l(x)
  std::string method;          // "exact" or "grid"
  double h = 0.0;
  double u_max = 0.0;
};

struct MobiusMeasure {
  LogGridMeasure dM;          // inv_conv(exp_conv(dPi))
  LogGridMeasure dM_direct;   // exp_conv(-dPi)
  LogGridMeasure dN;
  double path_discrepancy;    // max node-wise difference of the two paths
};

MobiusMeasure mobius_measure(const PrimeSystem& sys, double h, double u_max,
                             const GridOptions& grid = {});

double m_value(const PrimeSystem& sys, double x, const SummatoryOptions& opt = {});
SummatoryResult m_ladder(const PrimeSystem& sys, const std::vector<double>& u,
                         const SummatoryOptions& opt = {});

struct LiouvilleMeasure {
  LogGridMeasure dL;
  double discarded = 0.0;  // squared mass pushed past the grid
  std::string method;      // "element-wise" or "grid"
};

LiouvilleMeasure liouville_measure(const PrimeSystem& sys, double h, double u_max,
                                   const SummatoryOptions& opt = {});

double ell_value(const PrimeSystem& sys, double x, const SummatoryOptions& opt = {});
SummatoryResult ell_ladder(const PrimeSystem& sys, const std::vector<double>& u,
                           const SummatoryOptions& opt = {});

struct DecayReport {
  double sup_early = 0.0;  // sup |value| with u below the split
  double sup_late = 0.0;   // sup |value| with u at or above the split
  double ratio = 0.0;
  bool decays = false;
};

// decays iff sup_late < factor * sup_early.
DecayReport decay_verdict(const SummatoryResult& r, double u_split, double factor = 0.5);

}  // namespace gnum
