#include "franel/farey.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "franel/error.hpp"
#include "franel/totient.hpp"

namespace franel {

namespace {

// t*x with overflow detection; the recurrence must fail loudly, not wrap.
std::uint64_t checked_mul(std::uint64_t t, std::uint64_t x) {
  std::uint64_t out;
  if (__builtin_mul_overflow(t, x, &out)) {
    throw OverflowError("FareyStream: 64-bit overflow in next-term recurrence");
  }
  return out;
}

}  // namespace

FareyStream::FareyStream(std::uint64_t m) : m_(m), a_(0), b_(1), c_(1), d_(m) {
  if (m < 2) throw std::invalid_argument("FareyStream: order must be >= 2");
}

std::optional<FareyFraction> FareyStream::next() {
  if (!emitted_zero_) {
    emitted_zero_ = true;
    return FareyFraction{0, 1, ++index_};
  }
  if (c_ > m_) return std::nullopt;

  FareyFraction out{c_, d_, ++index_};

  const std::uint64_t t = (m_ + b_) / d_;
  const std::uint64_t next_num = checked_mul(t, c_) - a_;
  const std::uint64_t next_den = checked_mul(t, d_) - b_;
  a_ = c_;
  b_ = d_;
  c_ = next_num;
  d_ = next_den;
  return out;
}

std::vector<FareyFraction> brute_force_farey(std::uint64_t m) {
  constexpr std::uint64_t kGuard = 2000;  // quadratic memory below this
  if (m < 2) throw std::invalid_argument("brute_force_farey: order must be >= 2");
  if (m > kGuard) {
    throw std::invalid_argument("brute_force_farey: m=" + std::to_string(m) +
                                " above the quadratic guard " + std::to_string(kGuard));
  }

  std::vector<FareyFraction> out;
  TotientTable table(m);
  out.reserve(table.interior_count(m) + 2);

  out.push_back({0, 1, 0});
  for (std::uint64_t k = 2; k <= m; ++k) {
    for (std::uint64_t h = 1; h < k; ++h) {
      if (std::gcd(h, k) == 1) out.push_back({h, k, 0});
    }
  }
  out.push_back({1, 1, 0});

  // Exact ordering: h1/k1 < h2/k2  <=>  h1*k2 < h2*k1 (products <= m^2, no overflow
  // under the guard). Distinct reduced fractions never tie.
  std::sort(out.begin(), out.end(), [](const FareyFraction& x, const FareyFraction& y) {
    return x.num * y.den < y.num * x.den;
  });

  for (std::uint64_t i = 0; i < out.size(); ++i) out[i].index = i + 1;
  return out;
}

std::uint64_t rank_of(std::uint64_t h, std::uint64_t k, std::uint64_t m) {
  if (k == 0 || k > m || h > k || std::gcd(h, k) != 1) {
    throw std::invalid_argument("rank_of: need a reduced h/k with h <= k <= m");
  }

  // Moebius sieve up to m.
  std::vector<int8_t> mu(m + 1, 1);
  {
    std::vector<bool> composite(m + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= m; ++i) {
      if (!composite[i]) {
        primes.push_back(i);
        mu[i] = -1;
      }
      for (std::uint64_t p : primes) {
        if (i * p > m) break;
        composite[i * p] = true;
        if (i % p == 0) {
          mu[i * p] = 0;
          break;
        }
        mu[i * p] = -mu[i];
      }
    }
  }

  // rank = 1 (for 0/1) + #{reduced p/q <= h/k : 1 <= p, q <= m}
  //      = 1 + sum_{d=1}^{m} mu(d) * sum_{q=1}^{floor(m/d)} floor(q*h/k).
  std::int64_t reduced = 0;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (mu[d] == 0) continue;
    const std::uint64_t qmax = m / d;
    std::uint64_t inner = 0;
    for (std::uint64_t q = 1; q <= qmax; ++q) {
      inner += q * h / k;  // exact: q*h <= m*k fits easily in 64 bits at desk scale
    }
    reduced += static_cast<std::int64_t>(mu[d]) * static_cast<std::int64_t>(inner);
  }
  return 1 + static_cast<std::uint64_t>(reduced);
}

}  // namespace franel
