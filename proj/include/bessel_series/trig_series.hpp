#pragma once

// Sine and cosine series from the b -> 0 limit of the Bessel expansions.
//
//   cos x - 1 + x^2/2 = 2 sum_{k>=1} [1 - (-1)^k cos phi_k]
//   1 - sin x / x     = 2 sum_{k>=1} (-1)^k sin phi_k / phi_k
//   1 - sin x / x     = -2 sum_{k>=1} [(-1)^k - (k pi)^2 cos phi_k / phi_k^2 - x^2 sin phi_k / phi_k^3]
//
// Every bracket is rewritten through phi_k = k pi + delta_k, which keeps each
// term accurate when it is many orders of magnitude below 1.

#include <cmath>
#include <cstdint>

#include "bessel_series/errors.hpp"
#include "bessel_series/series.hpp"
#include "bessel_series/summation.hpp"

namespace bessel_series {

namespace detail {

inline void require_trig_args(double x, std::int64_t K) {
  if (!std::isfinite(x)) throw InvalidArgument("trig series: non-finite x");
  if (K < 1) throw InvalidArgument("trig series: K must be >= 1");
}

template <typename TermFn>
double sum_terms(std::int64_t K, TermFn term) {
  CompensatedSum<double> sum;
  for (std::int64_t k = 1; k <= K; ++k) sum += term(k);
  return sum.value();
}

}  // namespace detail

/// Term k of the cosine series: 2[1 - (-1)^k cos phi_k] = 4 sin^2(delta_k / 2).
inline double cos_series_term(double x, std::int64_t k) {
  const double s = std::sin(0.5 * shifted_phi(x, k).delta);
  return 4.0 * s * s;
}

/// Term k of the first sine series: 2 (-1)^k sin phi_k / phi_k = 2 sin delta_k / phi_k.
inline double sin_series1_term(double x, std::int64_t k) {
  const ShiftedAngle a = shifted_phi(x, k);
  return 2.0 * std::sin(a.delta) / a.value();
}

/// Term k of the faster sine series, bracket re-associated with (k pi / phi)^2 = 1 - (x / phi)^2:
/// -2 (-1)^k [(1 - cos delta) + (x / phi)^2 (cos delta - sin delta / phi)].
inline double sin_series2_term(double x, std::int64_t k) {
  const ShiftedAngle a = shifted_phi(x, k);
  const double p = a.value();
  const double h = std::sin(0.5 * a.delta);
  const double r = x / p;
  const double bracket = 2.0 * h * h + r * r * (std::cos(a.delta) - std::sin(a.delta) / p);
  return -2.0 * detail::sign_power(k) * bracket;
}

/// Partial sum through k = K of the series for cos x - 1 + x^2/2.
inline double cos_series(double x, std::int64_t K) {
  detail::require_trig_args(x, K);
  return detail::sum_terms(K, [x](std::int64_t k) { return cos_series_term(x, k); });
}

/// Partial sum through k = K of the first series for 1 - sin x / x; 0 at x = 0.
inline double sin_series1(double x, std::int64_t K) {
  detail::require_trig_args(x, K);
  if (x == 0.0) return 0.0;
  return detail::sum_terms(K, [x](std::int64_t k) { return sin_series1_term(x, k); });
}

/// Partial sum through k = K of the second series for 1 - sin x / x; 0 at x = 0.
inline double sin_series2(double x, std::int64_t K) {
  detail::require_trig_args(x, K);
  if (x == 0.0) return 0.0;
  return detail::sum_terms(K, [x](std::int64_t k) { return sin_series2_term(x, k); });
}

/// x times the first sine series: the cosine series differentiated term by term.
inline double cos_series_derivative(double x, std::int64_t K) { return x * sin_series1(x, K); }

/// The limits the three series converge to.
inline double cos_series_limit(double x) { return std::cos(x) - 1.0 + 0.5 * x * x; }
inline double sin_series_limit(double x) { return x == 0.0 ? 0.0 : 1.0 - std::sin(x) / x; }

/// Rigorous tail of the cosine series after K terms: 4 sin^2(delta/2) <= delta^2 <= x^4 / (2 k pi)^2,
/// summed over k > K with sum 1/k^2 < 1/K.
inline double cos_series_tail_bound(double x, std::int64_t K) {
  detail::require_trig_args(x, K);
  return x * x * x * x / (4.0 * pi * pi * static_cast<double>(K));
}

/// Rigorous tail of the first sine series: |2 sin delta / phi| <= x^2 / (k pi)^2.
inline double sin_series1_tail_bound(double x, std::int64_t K) {
  detail::require_trig_args(x, K);
  return x * x / (pi * pi * static_cast<double>(K));
}

/// Alternating-series tail of the second sine series, |term K+1|. Throws
/// BoundNotApplicable unless terms K+1 .. K+8 alternate with decreasing magnitude.
inline double sin_series2_tail_bound(double x, std::int64_t K) {
  detail::require_trig_args(x, K);
  if (x == 0.0) return 0.0;
  double previous = sin_series2_term(x, K + 1);
  for (int i = 2; i <= tail_bound_lookahead; ++i) {
    const double t = sin_series2_term(x, K + i);
    if (!(t * previous < 0.0 && std::abs(t) < std::abs(previous))) {
      throw BoundNotApplicable("second sine series is not yet alternating after K = " + std::to_string(K));
    }
    previous = t;
  }
  return std::abs(sin_series2_term(x, K + 1));
}

}  // namespace bessel_series
