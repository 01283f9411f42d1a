#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "gnum/prime_system.hpp"

namespace gnum {

struct GeneralizedInteger {
  // Sparse (prime index, exponent >= 1), sorted by index.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> exponents;
  double value = 1.0;
  std::uint32_t Omega = 0;
  std::int64_t maxIndex = -1;  // -1 for the unit
};

int mu_of(const GeneralizedInteger& g);
int lambda_of(const GeneralizedInteger& g);

// Element budget: GNUM_BUDGET when set, else 1e8.
std::uint64_t default_budget();

struct EnumOptions {
  std::uint64_t budget = 0;  // 0 means default_budget()
};

// Streams the semigroup elements with value <= X in nondecreasing value order.
// Equal values are ordered lexicographically by their nondecreasing
// prime-index sequence.
class Enumerator {
 public:
  Enumerator(const PrimeSystem& sys, double X, const EnumOptions& opt = {});
  bool next(GeneralizedInteger& out);
  std::uint64_t emitted() const { return emitted_; }

 private:
  struct Node {
    double value;
    double parent_value;
    std::vector<std::uint32_t> seq;  // nondecreasing prime indices
  };
  struct Later {
    bool operator()(const Node& a, const Node& b) const;
  };
  void push(Node n);

  const std::vector<double>* primes_;
  double X_;
  std::uint64_t budget_;
  std::uint64_t emitted_ = 0;
  bool started_ = false;
  std::priority_queue<Node, std::vector<Node>, Later> heap_;
};

void enumerate(const PrimeSystem& sys, double X,
               const std::function<void(const GeneralizedInteger&)>& visit,
               const EnumOptions& opt = {});

struct CountResult {
  double value = 0.0;
  bool exact = true;
  double h = 0.0;      // grid spacing for the grid route
  double u_max = 0.0;
};

struct CountOptions {
  double h = 1e-3;
  double u_max = 0.0;  // 0 means log x
  GridOptions grid;
  EnumOptions enumeration;
};

CountResult N_count(const PrimeSystem& sys, double x, const CountOptions& opt = {});

}  // namespace gnum
