#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "franel/error.hpp"
#include "franel/fit.hpp"
#include "franel/profile.hpp"

using franel::DenominatorProfile;
using franel::EnvelopeFit;
using franel::fit_table_row;
using franel::IndexConvention;
using franel::power_law_fit;
using franel::PowerLawModel;
using franel::prime_set;
using franel::two_point_envelope_fit;

namespace {

DenominatorProfile synthetic_profile(std::uint64_t m) {
  DenominatorProfile profile;
  profile.m = m;
  profile.convention = IndexConvention::interior;
  profile.n = 1;
  profile.p_values.assign(m + 1, 0.0);
  profile.term_counts.assign(m + 1, 1);
  return profile;
}

}  // namespace

TEST_CASE("prime_set") {
  const auto first = prime_set(1, 5);
  CHECK(first.primes == std::vector<std::uint64_t>{2, 3, 5, 7, 11});

  CHECK(prime_set(101, 101).primes == std::vector<std::uint64_t>{547});
  CHECK(prime_set(800, 800).primes == std::vector<std::uint64_t>{6133});

  const auto range = prime_set(101, 200);
  CHECK(range.primes.size() == 100);
  CHECK(range.primes.front() == 547);
  CHECK(range.primes.back() == 1223);

  CHECK_THROWS_AS(prime_set(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(prime_set(0, 4), std::invalid_argument);
}

TEST_CASE("two-point fit solves the anchor system exactly") {
  auto profile = synthetic_profile(997);
  profile.p_values[499] = std::exp(-3.0);  // 499 is the prime nearest 498.5
  profile.p_values[997] = std::exp(-2.0);

  const auto fit = two_point_envelope_fit(profile);
  CHECK(fit.k_star == 499);
  CHECK(fit.b == doctest::Approx(1.0 / 498.0).epsilon(1e-14));
  CHECK(fit.a == doctest::Approx(-2.0 - 997.0 / 498.0).epsilon(1e-14));
}

TEST_CASE("two-point fit recovers an exact exponential profile") {
  const double c = -9.25, d = 0.0125;
  auto profile = synthetic_profile(1009);
  for (std::uint64_t k = 2; k <= 1009; ++k) {
    profile.p_values[k] = std::exp(c + d * static_cast<double>(k));
  }
  const auto fit = two_point_envelope_fit(profile);
  CHECK(std::abs(fit.a - c) <= 1e-12 * std::abs(c));
  CHECK(std::abs(fit.b - d) <= 1e-12 * d);
  CHECK(std::abs(fit.evaluate(1009.0) - profile.p_values[1009]) <=
        1e-12 * profile.p_values[1009]);
}

TEST_CASE("two-point fit on a computed profile reproduces its anchors") {
  const auto profile = franel::compute_profile(1009);
  const auto fit = two_point_envelope_fit(profile);
  CHECK(fit.k_star == 503);
  CHECK(std::abs(fit.evaluate(static_cast<double>(fit.m)) - fit.p_at_m) <= 1e-9 * fit.p_at_m);
  CHECK(std::abs(fit.evaluate(static_cast<double>(fit.k_star)) - fit.p_at_k_star) <=
        1e-9 * fit.p_at_k_star);
}

TEST_CASE("two-point fit rejects bad input") {
  CHECK_THROWS_AS(two_point_envelope_fit(synthetic_profile(1000)), std::invalid_argument);

  auto zero_anchor = synthetic_profile(997);
  zero_anchor.p_values[997] = 1.0;  // k* anchor left at zero
  CHECK_THROWS_AS(two_point_envelope_fit(zero_anchor), std::domain_error);
}

TEST_CASE("power law recovers exact data") {
  const std::pair<double, double> points[] = {{2.0, 3.0 * std::sqrt(2.0)},
                                              {8.0, 3.0 * std::sqrt(8.0)}};
  const auto model = power_law_fit(points);
  CHECK(std::abs(model.coefficient - 3.0) <= 1e-12 * 3.0);
  CHECK(std::abs(model.exponent - 0.5) <= 1e-12);
}

TEST_CASE("power law on constant data") {
  const std::pair<double, double> points[] = {{2.0, 4.5}, {5.0, 4.5}, {11.0, 4.5}};
  const auto model = power_law_fit(points);
  CHECK(std::abs(model.exponent) <= 1e-14);
  CHECK(model.coefficient == doctest::Approx(4.5).epsilon(1e-13));
}

TEST_CASE("power law recovery across random draws") {
  std::mt19937_64 rng(987654321);
  std::uniform_real_distribution<double> coef(0.1, 100.0);
  std::uniform_real_distribution<double> expo(-3.0, 3.0);
  std::uniform_int_distribution<int> count(3, 12);

  for (int draw = 0; draw < 20; ++draw) {
    const double sign = draw % 2 == 0 ? 1.0 : -1.0;
    const double c = sign * coef(rng);
    const double e = expo(rng);
    std::vector<std::pair<double, double>> points;
    double m = 2.0;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      points.emplace_back(m, c * std::pow(m, e));
      m *= 1.9;
    }
    const auto model = power_law_fit(points);
    CHECK(std::abs(model.coefficient - c) <= 1e-10 * std::abs(c));
    CHECK(std::abs(model.exponent - e) <= 1e-10 * std::max(1.0, std::abs(e)));
    CHECK(model.evaluate(7.0) * c > 0.0);  // sign carried by the coefficient
  }
}

TEST_CASE("power law residuals average to zero") {
  // Multiplicative noise, deterministic: residuals live in log space.
  std::vector<std::pair<double, double>> points;
  for (int i = 0; i < 40; ++i) {
    const double m = 3.0 + 5.0 * i;
    const double noise = 1.0 + 0.05 * std::sin(1.7 * i);
    points.emplace_back(m, 2.5 * std::pow(m, -1.1) * noise);
  }
  const auto model = power_law_fit(points);
  REQUIRE(model.residuals.size() == points.size());
  double mean = 0.0;
  for (double r : model.residuals) mean += r;
  mean /= static_cast<double>(model.residuals.size());
  CHECK(std::abs(mean) <= 1e-9);
}

TEST_CASE("power law input validation") {
  const std::pair<double, double> single[] = {{2.0, 1.0}};
  CHECK_THROWS_AS(power_law_fit(single), std::invalid_argument);

  const std::pair<double, double> mixed[] = {{2.0, 1.0}, {4.0, -1.0}};
  CHECK_THROWS_AS(power_law_fit(mixed), std::domain_error);

  const std::pair<double, double> zero[] = {{2.0, 1.0}, {4.0, 0.0}};
  CHECK_THROWS_AS(power_law_fit(zero), std::domain_error);

  const std::pair<double, double> small_m[] = {{1.0, 1.0}, {4.0, 2.0}};
  CHECK_THROWS_AS(power_law_fit(small_m), std::invalid_argument);

  const std::pair<double, double> same_m[] = {{4.0, 1.0}, {4.0, 2.0}};
  CHECK_THROWS_AS(power_law_fit(same_m), std::domain_error);
}

TEST_CASE("fit_table_row over a small prime set") {
  const auto set = prime_set(5, 8);  // 11, 13, 17, 19
  const auto row = fit_table_row(set, IndexConvention::interior, 2u);
  REQUIRE(row.fits.size() == 4);
  for (std::size_t i = 0; i < row.fits.size(); ++i) {
    CHECK(row.fits[i].m == set.primes[i]);
  }
  CHECK(row.s == row.a_model.coefficient);
  CHECK(row.t == row.a_model.exponent);
  CHECK(row.u == row.b_model.coefficient);
  CHECK(row.v == row.b_model.exponent);
}

TEST_CASE("fit_table_row sign stability over M(101,120)") {
  const auto set = prime_set(101, 120);
  const auto row = fit_table_row(set, IndexConvention::interior, 0u);
  const double a_sign = row.fits.front().a > 0 ? 1.0 : -1.0;
  const double b_sign = row.fits.front().b > 0 ? 1.0 : -1.0;
  for (const auto& fit : row.fits) {
    CHECK(fit.a * a_sign > 0.0);
    CHECK(fit.b * b_sign > 0.0);
  }
  CHECK(row.s < 0.0);
  CHECK(row.u > 0.0);
}

TEST_CASE("fit_table_row propagates missing profiles and rejects degenerate sets") {
  const auto set = prime_set(5, 8);
  CHECK_THROWS_AS(fit_table_row(set, IndexConvention::interior,
                                [](std::uint64_t m) -> DenominatorProfile {
                                  throw franel::MissingProfileError(m);
                                }),
                  franel::MissingProfileError);

  const auto single = prime_set(101, 101);
  CHECK_THROWS_AS(fit_table_row(single, IndexConvention::interior, 1u), std::invalid_argument);
}
