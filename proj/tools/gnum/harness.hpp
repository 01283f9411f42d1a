#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gnum::harness {

struct Check {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Acceptance criteria 1..12.
Check criterion(int id);
std::vector<Check> run_criteria(const std::vector<int>& ids);

// Worked examples: ex41, ex42, ex43, ex43-wobble, ex51, ex52, all.
std::vector<std::string> example_names();
std::vector<Check> verify_example(const std::string& name);

struct WobbleData {
  std::vector<std::pair<double, double>> rows;  // (u, N(x)/x)
  double min = 0.0, max = 0.0;
};

// N(x)/x for the atomic builtin ex43 on u in [lo, hi], grid spacing log 2 / q.
WobbleData wobble(int q, double lo = 20.0, double hi = 45.0);

}  // namespace gnum::harness
