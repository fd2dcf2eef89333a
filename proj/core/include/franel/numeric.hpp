#pragma once

namespace franel {

// Kahan compensated summation. Deterministic (bit-identical) for a fixed add
// order; keeps ~10^7-term accumulations accurate to the last few ulps.
class KahanSum {
 public:
  void add(double x) noexcept {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const noexcept { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace franel
