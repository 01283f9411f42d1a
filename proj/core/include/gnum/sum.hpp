#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace gnum {

// Neumaier compensated accumulator.
template <class T>
class Accumulator {
 public:
  void add(T v) {
    if constexpr (std::is_floating_point_v<T>) {
      step(sum_, comp_, v);
    } else {
      double re = sum_.real(), im = sum_.imag();
      double cre = comp_.real(), cim = comp_.imag();
      step(re, cre, v.real());
      step(im, cim, v.imag());
      sum_ = T(re, im);
      comp_ = T(cre, cim);
    }
  }
  Accumulator& operator+=(T v) {
    add(v);
    return *this;
  }
  T value() const { return sum_ + comp_; }

 private:
  static void step(double& s, double& c, double v) {
    double t = s + v;
    if (std::abs(s) >= std::abs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
  T sum_{};
  T comp_{};
};

}  // namespace gnum
