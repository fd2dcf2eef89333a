#pragma once

#include <cstdint>
#include <vector>

namespace franel {

// Euler phi for 1..limit plus prefix sums, sieved once and immutable after
// construction (safe to share across threads).
//
// Memory: two uint64 arrays, 16 bytes per k. A limit of 10^8 takes ~1.6 GB;
// desk-scale sweeps (limit <= ~10^7) are well within ordinary RAM.
class TotientTable {
 public:
  // Sieve of Eratosthenes style phi computation, O(limit log log limit).
  // Throws std::invalid_argument for limit = 0.
  explicit TotientTable(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

  // phi(k), 1 <= k <= limit.
  std::uint64_t phi(std::uint64_t k) const;

  // Number of reduced fractions strictly between 0 and 1 with denominator <= m,
  // i.e. sum of phi(k) for 2 <= k <= m. Throws for m < 2 or m > limit.
  std::uint64_t interior_count(std::uint64_t m) const;

  // phi(k) == k-1 exactly for primes.
  bool is_prime(std::uint64_t k) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> phi_;     // phi_[k], index 0 unused
  std::vector<std::uint64_t> prefix_;  // prefix_[m] = sum phi(2..m), prefix_[1] = 0
};

}  // namespace franel
