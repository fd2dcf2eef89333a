#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "franel/profile.hpp"

namespace franel {

// The p-th through q-th primes, 1-based (prime #1 = 2).
struct PrimeSet {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> primes;  // ascending, size q - p + 1
};

// Throws std::invalid_argument unless 1 <= p <= q.
PrimeSet prime_set(std::uint64_t p, std::uint64_t q);

// Exponential envelope exp(a + b*k) through two anchors of a profile with
// prime order m: (m, P(m)) and (k_star, P(k_star)) where k_star is the prime
// closest to m/2 (ties to the smaller prime). Exact two-point interpolation.
struct EnvelopeFit {
  std::uint64_t m = 0;
  double a = 0.0;  // log-scale intercept
  double b = 0.0;  // per-k rate
  std::uint64_t k_star = 0;
  double p_at_m = 0.0;
  double p_at_k_star = 0.0;

  double evaluate(double k) const;  // exp(a + b*k)
};

// Throws std::invalid_argument for non-prime m and std::domain_error when an
// anchor value is not strictly positive (the log is undefined there).
EnvelopeFit two_point_envelope_fit(const DenominatorProfile& profile);

// value ~ coefficient * m^exponent, fitted by ordinary least squares of
// ln|value| against ln m. The common sign of the values is factored out before
// the log transform and reattached to the coefficient. Residuals are log-space.
struct PowerLawModel {
  double coefficient = 0.0;
  double exponent = 0.0;
  std::vector<std::pair<double, double>> points;  // (m, value) as fitted
  std::vector<double> residuals;                  // ln|value| - fit, mean 0

  double evaluate(double m) const;
};

// Requires >= 2 points (std::invalid_argument) with all values nonzero and of
// one sign (std::domain_error), all m >= 2.
PowerLawModel power_law_fit(std::span<const std::pair<double, double>> points);

// One row of the parameter table: a(m) = s*m^t and b(m) = u*m^v fitted over
// the envelope parameters of every order in the set.
struct FitTableRow {
  PrimeSet set;
  IndexConvention convention = IndexConvention::interior;
  double s = 0.0, t = 0.0;  // a(m) = s * m^t
  double u = 0.0, v = 0.0;  // b(m) = u * m^v
  std::vector<EnvelopeFit> fits;  // one per order, ascending m
  PowerLawModel a_model;
  PowerLawModel b_model;
};

// Runs two_point_envelope_fit per order in `set`, then power-law fits over
// {(m, a_m)} and {(m, b_m)}. The provider maps m to its profile (computed or
// loaded from cache) and should throw MissingProfileError when it cannot.
FitTableRow fit_table_row(const PrimeSet& set, IndexConvention convention,
                          const std::function<DenominatorProfile(std::uint64_t)>& profiles);

// Convenience overload computing all profiles in-process, in parallel.
FitTableRow fit_table_row(const PrimeSet& set,
                          IndexConvention convention = IndexConvention::interior,
                          unsigned threads = 0);

}  // namespace franel
