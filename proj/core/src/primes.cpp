#include "franel/primes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace franel {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;

  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t mult = p * p; mult <= limit; mult += p) composite[mult] = true;
  }
  for (std::uint64_t k = 2; k <= limit; ++k) {
    if (!composite[k]) primes.push_back(k);
  }
  return primes;
}

std::uint64_t nth_prime(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("nth_prime: index is 1-based");

  // p_n < n (ln n + ln ln n) for n >= 6; small n handled by the floor of 16.
  auto bound_for = [](std::uint64_t n_) {
    const double x = static_cast<double>(n_);
    const double b = x * (std::log(x) + std::log(std::log(x)));
    return static_cast<std::uint64_t>(b) + 16;
  };

  std::uint64_t bound = n < 6 ? 16 : bound_for(n);
  for (;;) {
    auto primes = primes_up_to(bound);
    if (primes.size() >= n) return primes[n - 1];
    bound += bound / 2;  // unreachable for the bound above, kept as a safety net
  }
}

std::uint64_t nearest_prime(const std::vector<std::uint64_t>& primes, double target) {
  if (primes.empty()) throw std::invalid_argument("nearest_prime: empty prime list");
  std::uint64_t best = primes.front();
  double best_dist = std::abs(static_cast<double>(best) - target);
  for (std::uint64_t p : primes) {
    const double dist = std::abs(static_cast<double>(p) - target);
    if (dist < best_dist) {  // strict: ties keep the smaller (earlier) prime
      best = p;
      best_dist = dist;
    }
  }
  return best;
}

}  // namespace franel
