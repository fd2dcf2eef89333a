#pragma once

#include <cstdint>
#include <vector>

namespace franel {

// Ascending primes <= limit (empty for limit < 2).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// The n-th prime under 1-based indexing (prime #1 = 2).
std::uint64_t nth_prime(std::uint64_t n);

// The prime in `primes` (ascending, non-empty) closest to target; ties go to
// the smaller prime.
std::uint64_t nearest_prime(const std::vector<std::uint64_t>& primes, double target);

}  // namespace franel
