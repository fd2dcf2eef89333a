#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "franel/farey.hpp"
#include "franel/totient.hpp"

namespace franel {

// How deviation terms are indexed against the equally spaced grid i/n, where
// n is the interior count of F_m.
//
//   interior      - interior fractions (0 < h/k < 1) get i = 1..n and every
//                   one contributes; exactly n terms, phi(k) per denominator.
//   paper_literal - the full sequence is indexed from 1 at 0/1 and the sum
//                   runs i = 2..n, i.e. n-1 terms; the last interior fraction
//                   drops out. Kept for sensitivity runs; `interior` is the
//                   default everywhere.
enum class IndexConvention { interior, paper_literal };

std::string_view to_string(IndexConvention c) noexcept;
std::optional<IndexConvention> convention_from_string(std::string_view s) noexcept;

// One summand of the deviation sum.
struct DeviationTerm {
  FareyFraction fraction;  // index holds the convention index i
  double expected;         // i/n
  double deviation;        // num/den - i/n
  double squared;          // deviation^2
};

// Per-denominator decomposition of the deviation sum for one order m:
// p_value(k) collects the squared deviations of all in-scope terms with
// denominator exactly k, and r_total is their grand total.
struct DenominatorProfile {
  std::uint64_t m = 0;
  IndexConvention convention = IndexConvention::interior;
  std::uint64_t n = 0;                     // interior count of F_m
  std::vector<double> p_values;            // indexed by k, 0..m; [0],[1] unused
  std::vector<std::uint64_t> term_counts;  // same indexing
  double r_total = 0.0;

  double p_value(std::uint64_t k) const { return p_values.at(k); }
  std::uint64_t term_count(std::uint64_t k) const { return term_counts.at(k); }
};

// Calls fn(const DeviationTerm&) for every in-scope term of F_m in ascending
// fraction order. Single streaming pass, O(1) memory beyond the stream.
template <typename Fn>
void for_each_term(std::uint64_t m, IndexConvention convention, std::uint64_t n, Fn&& fn) {
  FareyStream stream(m);
  const double dn = static_cast<double>(n);
  while (auto f = stream.next()) {
    std::uint64_t i;
    if (convention == IndexConvention::interior) {
      if (f->den == 1) continue;  // endpoints 0/1 and 1/1
      i = f->index - 1;           // 1..n
    } else {
      if (f->index < 2) continue;  // 0/1
      if (f->index > n) break;     // last interior term and 1/1 are out of scope
      i = f->index;
    }
    const double expected = static_cast<double>(i) / dn;
    const double value = f->value();
    const double dev = value - expected;
    fn(DeviationTerm{FareyFraction{f->num, f->den, i}, expected, dev, dev * dev});
  }
}

template <typename Fn>
void for_each_term(std::uint64_t m, IndexConvention convention, Fn&& fn) {
  TotientTable table(m);
  for_each_term(m, convention, table.interior_count(m), std::forward<Fn>(fn));
}

// One streaming pass accumulating p_values, term counts and r_total. Terms are
// added in ascending fraction order with compensated summation, so results are
// bit-identical across runs. O(m) memory. Throws std::invalid_argument for
// m < 2; integer overflow in the stream propagates as OverflowError.
DenominatorProfile compute_profile(std::uint64_t m,
                                   IndexConvention convention = IndexConvention::interior);

// r_total alone, skipping the per-denominator bookkeeping. Accumulation order
// and method match compute_profile exactly, so the two agree bit-for-bit.
double deviation_sum(std::uint64_t m, IndexConvention convention = IndexConvention::interior);

// compute_profile for several orders on `threads` worker threads (0 = hardware
// concurrency). Orders are independent; the table inside each worker is local.
std::vector<DenominatorProfile> compute_profiles(std::span<const std::uint64_t> ms,
                                                 IndexConvention convention,
                                                 unsigned threads = 0);

// The profile restricted to prime k, ascending: the upper envelope ("top") of
// the scatter, since phi is maximal at primes.
std::vector<std::pair<std::uint64_t, double>> prime_hull(const DenominatorProfile& profile,
                                                         const TotientTable& table);

// A local excursion of the profile above its global trend, near k ~ m/j.
struct Bump {
  std::uint64_t k_peak;
  std::uint64_t j;    // integer minimizing |k_peak - m/j|, ties to smaller j
  double distance;    // |k_peak - m/j|
  double prominence;  // height of the excursion in detrended units
};

// Finds bumps of the profile. The raw p-values are dominated by the totient
// factor (phi(k) terms per denominator) and an exponential global trend, so
// the detector works on the per-term means p_value(k)/term_count(k), detrended
// by a two-anchor exponential fit (anchors: largest prime <= m and the prime
// nearest m/2), lightly smoothed; strict local maxima with topographic
// prominence >= 0.12 are reported for k <= m/2 + 3, the abscissa range where
// the m/j family lives. Requires m >= 12; may return an empty list.
std::vector<Bump> detect_bumps(const DenominatorProfile& profile);

}  // namespace franel
