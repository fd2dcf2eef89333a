#include "franel/totient.hpp"

#include <stdexcept>
#include <string>

namespace franel {

TotientTable::TotientTable(std::uint64_t limit) : limit_(limit) {
  if (limit == 0) throw std::invalid_argument("TotientTable: limit must be >= 1");

  phi_.resize(limit + 1);
  for (std::uint64_t k = 0; k <= limit; ++k) phi_[k] = k;
  phi_[1] = 1;

  // phi_[p] == p marks p as prime when reached in ascending order.
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (phi_[p] != p) continue;
    for (std::uint64_t mult = p; mult <= limit; mult += p) {
      phi_[mult] -= phi_[mult] / p;
    }
  }

  prefix_.assign(limit + 1, 0);
  for (std::uint64_t k = 2; k <= limit; ++k) {
    prefix_[k] = prefix_[k - 1] + phi_[k];
  }
}

std::uint64_t TotientTable::phi(std::uint64_t k) const {
  if (k < 1 || k > limit_) {
    throw std::invalid_argument("TotientTable::phi: k=" + std::to_string(k) +
                                " outside [1, " + std::to_string(limit_) + "]");
  }
  return phi_[k];
}

std::uint64_t TotientTable::interior_count(std::uint64_t m) const {
  if (m < 2 || m > limit_) {
    throw std::invalid_argument("TotientTable::interior_count: m=" + std::to_string(m) +
                                " outside [2, " + std::to_string(limit_) + "]");
  }
  return prefix_[m];
}

bool TotientTable::is_prime(std::uint64_t k) const {
  if (k < 2 || k > limit_) return false;
  return phi_[k] == k - 1;
}

}  // namespace franel
