#include "franel/profile.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "franel/numeric.hpp"
#include "franel/primes.hpp"

namespace franel {

std::string_view to_string(IndexConvention c) noexcept {
  return c == IndexConvention::interior ? "interior" : "paper-literal";
}

std::optional<IndexConvention> convention_from_string(std::string_view s) noexcept {
  if (s == "interior") return IndexConvention::interior;
  if (s == "paper-literal" || s == "paper_literal") return IndexConvention::paper_literal;
  return std::nullopt;
}

DenominatorProfile compute_profile(std::uint64_t m, IndexConvention convention) {
  TotientTable table(m < 2 ? 2 : m);  // delegate the m<2 error to interior_count
  const std::uint64_t n = table.interior_count(m);

  DenominatorProfile prof;
  prof.m = m;
  prof.convention = convention;
  prof.n = n;
  prof.term_counts.assign(m + 1, 0);

  std::vector<KahanSum> per_k(m + 1);
  KahanSum total;
  for_each_term(m, convention, n, [&](const DeviationTerm& term) {
    per_k[term.fraction.den].add(term.squared);
    total.add(term.squared);
    ++prof.term_counts[term.fraction.den];
  });

  prof.p_values.resize(m + 1);
  for (std::uint64_t k = 0; k <= m; ++k) prof.p_values[k] = per_k[k].value();
  prof.r_total = total.value();
  return prof;
}

double deviation_sum(std::uint64_t m, IndexConvention convention) {
  TotientTable table(m < 2 ? 2 : m);
  const std::uint64_t n = table.interior_count(m);
  KahanSum total;
  for_each_term(m, convention, n, [&](const DeviationTerm& term) { total.add(term.squared); });
  return total.value();
}

std::vector<DenominatorProfile> compute_profiles(std::span<const std::uint64_t> ms,
                                                 IndexConvention convention, unsigned threads) {
  std::vector<DenominatorProfile> results(ms.size());
  if (ms.empty()) return results;

  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (threads > ms.size()) threads = static_cast<unsigned>(ms.size());

  if (threads == 1) {
    for (std::size_t i = 0; i < ms.size(); ++i) results[i] = compute_profile(ms[i], convention);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= ms.size()) return;
      try {
        results[i] = compute_profile(ms[i], convention);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (first_error) std::rethrow_exception(first_error);
  return results;
}

std::vector<std::pair<std::uint64_t, double>> prime_hull(const DenominatorProfile& profile,
                                                         const TotientTable& table) {
  if (table.limit() < profile.m) {
    throw std::invalid_argument("prime_hull: totient table smaller than profile order");
  }
  std::vector<std::pair<std::uint64_t, double>> hull;
  for (std::uint64_t k = 2; k <= profile.m; ++k) {
    if (table.is_prime(k)) hull.emplace_back(k, profile.p_values[k]);
  }
  return hull;
}

// ---------------------------------------------------------------------------
// Bump detection. See the header for the pipeline; constants below were chosen
// on desk-scale data (m = 50..1000) so that every reported peak at m = 50 sits
// within 3 of some m/j and the m/2, m/3, m/4 bumps at m = 1000 all survive.
// ---------------------------------------------------------------------------

namespace {

constexpr int kSmoothHalfWidth = 2;
constexpr double kMinProminence = 0.12;

// Nearest-ratio j for a peak at k: the j in [2, m) minimizing |k - m/j|,
// ties to the smaller j. m/j is monotone in j, so only a few candidates
// around m/k matter.
std::uint64_t nearest_ratio(std::uint64_t k, std::uint64_t m, double* distance) {
  const std::uint64_t j0 = m / k;
  const std::uint64_t lo = j0 > 4 ? j0 - 2 : 2;
  const std::uint64_t hi = std::min<std::uint64_t>(j0 + 3, m - 1);
  std::uint64_t best_j = lo;
  double best = std::abs(static_cast<double>(k) - static_cast<double>(m) / static_cast<double>(lo));
  for (std::uint64_t j = lo + 1; j <= hi; ++j) {
    const double d = std::abs(static_cast<double>(k) - static_cast<double>(m) / static_cast<double>(j));
    if (d < best) {
      best = d;
      best_j = j;
    }
  }
  *distance = best;
  return best_j;
}

}  // namespace

std::vector<Bump> detect_bumps(const DenominatorProfile& profile) {
  const std::uint64_t m = profile.m;
  if (m < 12) throw std::invalid_argument("detect_bumps: need m >= 12");

  // Per-term means; the phi(k) term-count factor otherwise dominates every
  // local comparison.
  std::vector<double> mean(m + 1, 0.0);
  for (std::uint64_t k = 2; k <= m; ++k) {
    if (profile.term_counts[k] > 0) {
      mean[k] = profile.p_values[k] / static_cast<double>(profile.term_counts[k]);
    }
  }

  const auto primes = primes_up_to(m);
  if (primes.size() < 2) return {};
  const std::uint64_t k_hi = primes.back();
  const std::uint64_t k_lo = nearest_prime(primes, static_cast<double>(m) / 2.0);
  if (k_hi == k_lo || mean[k_hi] <= 0.0 || mean[k_lo] <= 0.0) return {};

  // Two-anchor exponential trend on the per-term means.
  const double b = (std::log(mean[k_hi]) - std::log(mean[k_lo])) /
                   static_cast<double>(k_hi - k_lo);
  const double a = std::log(mean[k_hi]) - b * static_cast<double>(k_hi);

  const std::size_t len = m - 1;  // entries for k = 2..m
  std::vector<double> detrended(len);
  for (std::uint64_t k = 2; k <= m; ++k) {
    detrended[k - 2] = mean[k] / std::exp(a + b * static_cast<double>(k));
  }

  // Light moving average (window shrinks at the edges) to merge the residual
  // point-to-point alternation into single maxima.
  std::vector<double> smooth(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t lo = i >= kSmoothHalfWidth ? i - kSmoothHalfWidth : 0;
    const std::size_t hi = std::min(len - 1, i + kSmoothHalfWidth);
    double sum = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) sum += detrended[j];
    smooth[i] = sum / static_cast<double>(hi - lo + 1);
  }

  // Strict local maxima with topographic prominence, restricted to the
  // abscissa range k <= m/2 + 3 where the m/j family (j >= 2) lives.
  const std::uint64_t k_max = m / 2 + 3;
  std::vector<Bump> bumps;
  for (std::size_t i = 1; i + 1 < len; ++i) {
    const std::uint64_t k = i + 2;
    if (k > k_max) break;
    if (!(smooth[i] > smooth[i - 1] && smooth[i] > smooth[i + 1])) continue;

    // Walk outward to the next strictly higher point (or the edge); the
    // prominence is the drop to the higher of the two valley floors.
    double left_min = smooth[i];
    for (std::size_t j = i; j-- > 0 && smooth[j] < smooth[i];) {
      left_min = std::min(left_min, smooth[j]);
    }
    double right_min = smooth[i];
    for (std::size_t j = i + 1; j < len && smooth[j] < smooth[i]; ++j) {
      right_min = std::min(right_min, smooth[j]);
    }
    const double prominence = smooth[i] - std::max(left_min, right_min);
    if (prominence < kMinProminence) continue;

    double distance = 0.0;
    const std::uint64_t j = nearest_ratio(k, m, &distance);
    bumps.push_back(Bump{k, j, distance, prominence});
  }
  return bumps;
}

}  // namespace franel
