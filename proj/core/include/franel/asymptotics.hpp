#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "franel/profile.hpp"

namespace franel {

// Power-law parameter models a(m) = s*m^t and b(m) = u*m^v feeding the
// envelope exp(a(m) + b(m)*x), plus the exponent offset epsilon used by the
// decay-ratio scan.
struct AsymptoticParams {
  double s = 0.0;
  double t = 0.0;
  double u = 0.0;
  double v = 0.0;
  double epsilon = 1e-6;

  double a(double m) const;  // s * m^t
  double b(double m) const;  // u * m^v
  double alpha() const noexcept { return u; }
  double beta() const noexcept { return -v; }

  // Parameters fitted over the 101st..800th primes; the standard choice for
  // desk-scale scans.
  static AsymptoticParams reference() noexcept { return {-7.87, 0.11, 4.73, -1.02, 1e-6}; }
};

// exp(a(m) + b(m)*x) for x >= 2, m >= 2. Strictly positive, monotone in x with
// the sign of b(m). An exponent beyond double range throws std::range_error
// instead of propagating infinities.
double envelope(double x, double m, const AsymptoticParams& params);

// Integral of the envelope over [2, m] in antiderivative form:
// exp(a) * (exp(b*m) - exp(2b)) / b, evaluated as exp(a+2b)*expm1(b*(m-2))/b
// so that it stays accurate through b -> 0; at b = 0 exactly it falls back to
// the limit (m-2)*exp(a). Requires m > 2. Out-of-range exponents throw
// std::range_error.
double closed_form_bound(double m, const AsymptoticParams& params);

// The same integral by adaptive Simpson quadrature to `rel_tol` relative
// tolerance; serves as the independent oracle for closed_form_bound.
// Throws QuadratureError (carrying the achieved tolerance) on non-convergence.
double quadrature_bound(double m, const AsymptoticParams& params, double rel_tol = 1e-10);

struct RatioPoint {
  double x;
  double ratio;  // bound(x) / x^(-1+epsilon)  ==  bound(x) * x^(1-epsilon)
};

// Decay-ratio series over geometrically spaced x in [x_lo, x_hi]. Requires
// 2 < x_lo < x_hi and steps >= 2 (the endpoints are always included).
std::vector<RatioPoint> ratio_scan(double x_lo, double x_hi, std::size_t steps,
                                   const AsymptoticParams& params);

// Generic kernel taking an arbitrary bound function; the params overload
// delegates here with closed_form_bound.
std::vector<RatioPoint> ratio_scan(double x_lo, double x_hi, std::size_t steps,
                                   const std::function<double(double)>& bound, double epsilon);

struct BoundCheck {
  std::uint64_t m = 0;
  double r = 0.0;       // computed deviation sum
  double r_bound = 0.0; // closed-form bound at m
  bool satisfied = false;
};

// Computes both sides of r <= bound and reports; the bound is empirical and is
// never asserted here.
BoundCheck check_bound(std::uint64_t m, IndexConvention convention,
                       const AsymptoticParams& params);

}  // namespace franel
