#pragma once

// Elementary special-function building blocks: spherical Bessel functions,
// half-integer order J, log-gamma and the Maclaurin power series for J_nu.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "bessel_series/errors.hpp"
#include "bessel_series/summation.hpp"

namespace bessel_series {

inline constexpr double pi = std::numbers::pi;

/// An angle stored as k*pi + delta.
///
/// Series terms are evaluated at arguments phi_k = sqrt(x^2 + (k pi)^2) which for
/// large k sit just above k*pi. Keeping the offset delta separately gives sin and
/// cos to full relative accuracy instead of losing log10(k*pi) digits to argument
/// reduction.
struct ShiftedAngle {
  std::int64_t k = 0;
  double delta = 0.0;

  double value() const { return static_cast<double>(k) * pi + delta; }
  double parity() const { return (k % 2 == 0) ? 1.0 : -1.0; }
  double sin() const { return parity() * std::sin(delta); }
  double cos() const { return parity() * std::cos(delta); }
};

/// Order m + 1/2 of a half-integer Bessel function.
struct HalfOrderIndex {
  int m = 0;

  explicit constexpr HalfOrderIndex(int order_floor) : m(order_floor) {}
  constexpr double order() const { return m + 0.5; }
};

/// Truncation policy of the power-series oracle.
struct OracleConfig {
  double tol = 1e-16;
  int max_terms = 400;

  void validate() const {
    if (!(tol > 0.0) || max_terms < 1) {
      throw InvalidArgument("OracleConfig requires tol > 0 and max_terms >= 1");
    }
  }
};

namespace detail {

inline void require_order_and_argument(int m, double z) {
  if (m < 0) throw InvalidArgument("spherical Bessel order must be >= 0");
  if (!std::isfinite(z) || z < 0.0) {
    throw InvalidArgument("spherical Bessel argument must be finite and >= 0, got " +
                          std::to_string(z));
  }
}

// Maclaurin expansion, 12 terms; used for z < 0.5 where closed forms cancel.
inline double spherical_bessel_maclaurin(int m, double z) {
  double lead = 1.0;
  for (int i = 1; i <= m; ++i) lead *= z / (2 * i + 1);
  const double q = -0.5 * z * z;
  double term = 1.0;
  CompensatedSum<double> sum;
  sum += term;
  for (int j = 1; j < 12; ++j) {
    term *= q / (j * (2.0 * m + 2.0 * j + 1.0));
    sum += term;
  }
  return lead * sum.value();
}

// j_0 and j_1 from supplied sin/cos of z.
inline double spherical_j0(double z, double s) { return s / z; }
inline double spherical_j1(double z, double s, double c) { return (s / z - c) / z; }

inline double spherical_bessel_upward(int m, double z, double s, double c) {
  double prev = spherical_j0(z, s);
  if (m == 0) return prev;
  double cur = spherical_j1(z, s, c);
  for (int l = 1; l < m; ++l) {
    const double next = (2 * l + 1) / z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Miller's backward recurrence, normalised against whichever of j_0, j_1 is larger.
inline double spherical_bessel_miller(int m, double z, double s, double c) {
  const int start = m + 16 + static_cast<int>(std::ceil(std::sqrt(40.0 * m)));
  double upper = 0.0;
  double cur = 1e-30;
  double at_m = (start == m) ? cur : 0.0;
  double at_1 = 0.0;
  for (int l = start; l > 0; --l) {
    const double lower = (2 * l + 1) / z * cur - upper;
    upper = cur;
    cur = lower;
    if (std::abs(cur) > 1e200) {
      upper *= 1e-200;
      cur *= 1e-200;
      at_m *= 1e-200;
      at_1 *= 1e-200;
    }
    if (l - 1 == m) at_m = cur;
    if (l - 1 == 1) at_1 = cur;
  }
  const double j0 = spherical_j0(z, s);
  const double j1 = spherical_j1(z, s, c);
  const double scale = (std::abs(j0) >= std::abs(j1)) ? j0 / cur : j1 / at_1;
  return at_m * scale;
}

inline double spherical_bessel_dispatch(int m, double z, double s, double c) {
  if (z == 0.0) return m == 0 ? 1.0 : 0.0;
  if (z < 0.5) return spherical_bessel_maclaurin(m, z);
  if (z >= m + 1.0) return spherical_bessel_upward(m, z, s, c);
  return spherical_bessel_miller(m, z, s, c);
}

}  // namespace detail

/// Spherical Bessel function j_m(z) = sqrt(pi / 2z) J_{m+1/2}(z) for z >= 0.
///
/// Three regimes: Maclaurin series for z < 0.5, upward recurrence from j_0, j_1
/// for z >= m + 1, Miller backward recurrence otherwise.
inline double spherical_bessel_j(int m, double z) {
  detail::require_order_and_argument(m, z);
  return detail::spherical_bessel_dispatch(m, z, std::sin(z), std::cos(z));
}

/// j_m evaluated at an argument held as k*pi + delta.
inline double spherical_bessel_j(int m, const ShiftedAngle& z) {
  const double v = z.value();
  detail::require_order_and_argument(m, v);
  return detail::spherical_bessel_dispatch(m, v, z.sin(), z.cos());
}

/// J_{m+1/2}(z) = sqrt(2z/pi) j_m(z); zero at z = 0 for every m.
inline double bessel_j_half(int m, double z) {
  const double j = spherical_bessel_j(m, z);
  return std::sqrt(2.0 * z / pi) * j;
}

inline double bessel_j_half(HalfOrderIndex order, double z) { return bessel_j_half(order.m, z); }

inline double bessel_j_half(int m, const ShiftedAngle& z) {
  const double j = spherical_bessel_j(m, z);
  return std::sqrt(2.0 * z.value() / pi) * j;
}

// Lanczos approximation, g = 7, nine coefficients (Godfrey's table).
inline constexpr int lanczos_g = 7;
inline constexpr std::array<double, 9> lanczos_coefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

/// ln Gamma(a) for a > 0.
inline double log_gamma(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw InvalidArgument("log_gamma requires a finite a > 0");
  }
  if (a == 1.0 || a == 2.0) return 0.0;
  if (a < 0.5) {
    // Reflection: Gamma(a) Gamma(1 - a) = pi / sin(pi a).
    return std::log(pi / std::sin(pi * a)) - log_gamma(1.0 - a);
  }
  const double z = a - 1.0;
  double series = lanczos_coefficients[0];
  for (int i = 1; i < lanczos_g + 2; ++i) series += lanczos_coefficients[i] / (z + i);
  const double t = z + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

namespace detail {

#if defined(__SIZEOF_FLOAT128__)
using extended_real = __float128;
#else
using extended_real = long double;
#endif

template <typename Real>
Real extended_sqrt(Real v) {
  if (v <= 0) return Real(0);
  Real s = static_cast<Real>(std::sqrt(static_cast<double>(v)));
  for (int i = 0; i < 3; ++i) s = (s + v / s) / 2;
  return s;
}

// pi as a double-double pair; exact to ~32 digits once summed in Real.
template <typename Real>
Real extended_pi() {
  return static_cast<Real>(3.141592653589793116) + static_cast<Real>(1.2246467991473532e-16);
}

inline bool is_integer(double v) { return v == std::floor(v); }

// (x/2)^nu / Gamma(nu + 1), exact products for integer and half-integer nu.
template <typename Real>
Real power_series_lead(double nu, double x) {
  const Real half_x = static_cast<Real>(x) / 2;
  if (nu >= 0.0 && is_integer(nu)) {
    Real lead = 1;
    for (int i = 1; i <= static_cast<int>(nu); ++i) lead *= half_x / i;
    return lead;
  }
  if (nu >= -0.5 && is_integer(nu - 0.5)) {
    // Gamma(3/2) = sqrt(pi)/2, so (x/2)^{1/2} / Gamma(3/2) = sqrt(2x/pi).
    const Real two_x = static_cast<Real>(x) * 2;
    if (nu == -0.5) {
      // (x/2)^{-1/2} / Gamma(1/2) = sqrt(2/(pi x)).
      return extended_sqrt(Real(2) / (extended_pi<Real>() * static_cast<Real>(x)));
    }
    Real lead = extended_sqrt(two_x / extended_pi<Real>());
    const int m = static_cast<int>(nu - 0.5);
    for (int i = 1; i <= m; ++i) lead *= half_x / (Real(i) + Real(0.5));
    return lead;
  }
  return static_cast<Real>(std::exp(nu * std::log(0.5 * x) - log_gamma(nu + 1.0)));
}

template <typename Real>
double power_series_sum(double nu, double x, const OracleConfig& cfg) {
  const Real q = -(static_cast<Real>(x) / 2) * (static_cast<Real>(x) / 2);
  Real term = power_series_lead<Real>(nu, x);
  Real sum = term;
  for (int j = 0; j < cfg.max_terms; ++j) {
    const Real next = term * q / (Real(j + 1) * (static_cast<Real>(nu) + Real(j + 1)));
    const bool decreasing = 0.25 * x * x < (j + 1.0) * (nu + j + 1.0);
    const double magnitude = std::abs(static_cast<double>(next));
    if (decreasing && magnitude < cfg.tol) return static_cast<double>(sum);
    sum += next;
    term = next;
  }
  throw NoConvergence("bessel_j_power_series: max_terms reached before the term-size criterion");
}

}  // namespace detail

inline constexpr double power_series_max_argument = 50.0;

/// J_nu(x) from its Maclaurin series, sum_j (-1)^j (x/2)^{nu+2j} / (j! Gamma(nu+j+1)).
///
/// This is the reference oracle for everything else in the library and shares no
/// code with the series engine beyond log_gamma. The sum stops when the next term
/// is below cfg.tol. For x > 4 the terms are accumulated in binary128 (or long
/// double where unavailable) so that the alternating cancellation does not eat
/// the result: absolute error stays within 2 tol up to x = 30 and degrades to
/// roughly 1e-14 at the range limit x = 50. Integer and half-integer orders use
/// exact leading factors; other orders go through log_gamma (relative 1e-13).
inline double bessel_j_power_series(double nu, double x, const OracleConfig& cfg = {}) {
  cfg.validate();
  if (!std::isfinite(nu) || !(nu > -1.0)) {
    throw InvalidArgument("bessel_j_power_series requires nu > -1");
  }
  if (!std::isfinite(x) || x < 0.0 || x > power_series_max_argument) {
    throw InvalidArgument("bessel_j_power_series requires 0 <= x <= 50, got " + std::to_string(x));
  }
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  if (x <= 4.0) return detail::power_series_sum<double>(nu, x, cfg);
  return detail::power_series_sum<detail::extended_real>(nu, x, cfg);
}

}  // namespace bessel_series
