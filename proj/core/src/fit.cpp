#include "franel/fit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "franel/error.hpp"
#include "franel/primes.hpp"

namespace franel {

PrimeSet prime_set(std::uint64_t p, std::uint64_t q) {
  if (p < 1 || p > q) throw std::invalid_argument("prime_set: need 1 <= p <= q");

  PrimeSet set;
  set.p = p;
  set.q = q;
  // One sieve up to the q-th prime covers the whole range.
  const std::uint64_t largest = nth_prime(q);
  auto primes = primes_up_to(largest);
  set.primes.assign(primes.begin() + static_cast<std::ptrdiff_t>(p - 1), primes.end());
  return set;
}

double EnvelopeFit::evaluate(double k) const { return std::exp(a + b * k); }

EnvelopeFit two_point_envelope_fit(const DenominatorProfile& profile) {
  const std::uint64_t m = profile.m;
  const auto primes = primes_up_to(m);
  if (primes.empty() || primes.back() != m) {
    throw std::invalid_argument("two_point_envelope_fit: order m=" + std::to_string(m) +
                                " is not prime");
  }

  const std::uint64_t k_star = nearest_prime(primes, static_cast<double>(m) / 2.0);
  const double p_m = profile.p_values[m];
  const double p_star = profile.p_values[k_star];
  if (!(p_m > 0.0) || !(p_star > 0.0)) {
    throw std::domain_error("two_point_envelope_fit: anchor value not strictly positive");
  }

  EnvelopeFit fit;
  fit.m = m;
  fit.k_star = k_star;
  fit.p_at_m = p_m;
  fit.p_at_k_star = p_star;
  fit.b = (std::log(p_m) - std::log(p_star)) / static_cast<double>(m - k_star);
  fit.a = std::log(p_m) - fit.b * static_cast<double>(m);
  return fit;
}

double PowerLawModel::evaluate(double m) const { return coefficient * std::pow(m, exponent); }

PowerLawModel power_law_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw std::invalid_argument("power_law_fit: need at least 2 points");

  const double sign = points.front().second > 0.0 ? 1.0 : -1.0;
  for (const auto& [m, value] : points) {
    if (m < 2.0) throw std::invalid_argument("power_law_fit: all m must be >= 2");
    if (value == 0.0 || (value > 0.0 ? 1.0 : -1.0) != sign) {
      throw std::domain_error("power_law_fit: values must be nonzero and share one sign");
    }
  }

  // OLS of y = ln|value| on x = ln m, mean-centered for conditioning.
  const std::size_t count = points.size();
  double x_mean = 0.0, y_mean = 0.0;
  std::vector<double> xs(count), ys(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = std::log(points[i].first);
    ys[i] = std::log(std::abs(points[i].second));
    x_mean += xs[i];
    y_mean += ys[i];
  }
  x_mean /= static_cast<double>(count);
  y_mean /= static_cast<double>(count);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
    sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
  }
  if (sxx == 0.0) throw std::domain_error("power_law_fit: all m identical, slope undefined");

  PowerLawModel model;
  model.exponent = sxy / sxx;
  const double intercept = y_mean - model.exponent * x_mean;
  model.coefficient = sign * std::exp(intercept);
  model.points.assign(points.begin(), points.end());
  model.residuals.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    model.residuals[i] = ys[i] - (intercept + model.exponent * xs[i]);
  }
  return model;
}

FitTableRow fit_table_row(const PrimeSet& set, IndexConvention convention,
                          const std::function<DenominatorProfile(std::uint64_t)>& profiles) {
  if (set.primes.size() < 2) {
    throw std::invalid_argument("fit_table_row: need at least 2 orders for the regression");
  }

  FitTableRow row;
  row.set = set;
  row.convention = convention;
  row.fits.reserve(set.primes.size());

  std::vector<std::pair<double, double>> a_points, b_points;
  a_points.reserve(set.primes.size());
  b_points.reserve(set.primes.size());
  for (std::uint64_t m : set.primes) {
    DenominatorProfile profile = profiles(m);
    if (profile.m != m) throw MissingProfileError(m);
    EnvelopeFit fit = two_point_envelope_fit(profile);
    a_points.emplace_back(static_cast<double>(m), fit.a);
    b_points.emplace_back(static_cast<double>(m), fit.b);
    row.fits.push_back(fit);
  }

  row.a_model = power_law_fit(a_points);
  row.b_model = power_law_fit(b_points);
  row.s = row.a_model.coefficient;
  row.t = row.a_model.exponent;
  row.u = row.b_model.coefficient;
  row.v = row.b_model.exponent;
  return row;
}

FitTableRow fit_table_row(const PrimeSet& set, IndexConvention convention, unsigned threads) {
  if (set.primes.size() < 2) {
    throw std::invalid_argument("fit_table_row: need at least 2 orders for the regression");
  }
  auto profiles = compute_profiles(set.primes, convention, threads);
  std::size_t cursor = 0;
  return fit_table_row(set, convention, [&](std::uint64_t m) {
    // Orders arrive in set order; fall back to a scan if ever called otherwise.
    if (cursor < profiles.size() && profiles[cursor].m == m) return profiles[cursor++];
    for (const auto& p : profiles) {
      if (p.m == m) return p;
    }
    throw MissingProfileError(m);
  });
}

}  // namespace franel
