#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace franel {

// A reduced fraction num/den together with its 1-based position in the full
// enumeration of F_m (0/1 first, 1/1 last). Consecutive elements a/b, c/d of
// any F_m satisfy b*c - a*d = 1.
struct FareyFraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  std::uint64_t index = 0;

  double value() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  bool operator==(const FareyFraction&) const = default;
};

// Streams F_m in ascending order with O(1) state. Given consecutive terms
// a/b, c/d the next term is (t*c - a)/(t*d - b) with t = floor((m + b)/d).
// All arithmetic is 64-bit and multiplications are overflow-checked; an
// overflow throws OverflowError rather than wrapping.
class FareyStream {
 public:
  // Throws std::invalid_argument for m < 2.
  explicit FareyStream(std::uint64_t m);

  // Next fraction in ascending order, or nullopt once 1/1 has been produced.
  std::optional<FareyFraction> next();

  std::uint64_t order() const noexcept { return m_; }

 private:
  std::uint64_t m_;
  std::uint64_t a_, b_;  // previous term
  std::uint64_t c_, d_;  // current (not yet emitted) term
  std::uint64_t index_ = 0;
  bool emitted_zero_ = false;
};

// Quadratic-memory oracle: enumerates every reduced h/k with k <= m (endpoints
// once each) and sorts by exact cross-multiplication. Produces content and
// order identical to FareyStream. Guarded to m <= 2000; larger m throws
// std::invalid_argument.
std::vector<FareyFraction> brute_force_farey(std::uint64_t m);

// 1-based rank of h/k within F_m (0/1 has rank 1), computed by Moebius-inverted
// divisor-sum counting in O(m log m) without enumeration. Requires gcd(h,k)=1,
// h <= k <= m. Enables seeding partitioned sweeps.
std::uint64_t rank_of(std::uint64_t h, std::uint64_t k, std::uint64_t m);

}  // namespace franel
