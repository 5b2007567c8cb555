#pragma once

// Independent checks of the integral identities behind the series, their Fourier
// reading, the large-k term asymptotics and accuracy sweeps against the
// power-series oracle.
//
//   A: int_0^1 x^{nu+1} J_nu(bx) sin(y sqrt(1-x^2)) dx
//        = sqrt(pi/2) y b^nu rho^{-nu-3/2} J_{nu+3/2}(rho)
//   B: int_0^1 J_nu(bx) cos(y sqrt(1-x^2)) / sqrt(1-x^2) dx
//        = (pi/2) J_{nu/2}((rho-y)/2) J_{nu/2}((rho+y)/2)
//   C: int_0^1 x^{nu+1} J_nu(bx) cos(y sqrt(1-x^2)) / sqrt(1-x^2) dx
//        = sqrt(pi/2) b^nu rho^{-nu-1/2} J_{nu+1/2}(rho)
//
// with rho = sqrt(b^2 + y^2). Substituting t = sqrt(1-x^2) and extending to
// t in [-1, 1] gives int F(b,t) e^{iyt} dt = f(b,y) with twice the right side.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "bessel_series/errors.hpp"
#include "bessel_series/quadrature.hpp"
#include "bessel_series/series.hpp"
#include "bessel_series/special.hpp"

namespace bessel_series {

struct IdentityResidual {
  SeriesFamily alpha = SeriesFamily::A;
  double nu = 0.0;
  double b = 0.0;
  double y = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  /// Imaginary part of the left side; zero for the half-interval identities.
  double lhs_imag = 0.0;
  /// |lhs - rhs| combined with |lhs_imag|.
  double residual = 0.0;
};

namespace detail {

inline void require_identity_args(double nu, double b) {
  if (!std::isfinite(nu) || !(nu > -1.0)) throw InvalidArgument("identity checks require nu > -1");
  if (!std::isfinite(b) || !(b > 0.0)) throw InvalidArgument("identity checks require b > 0");
}

inline bool is_half_integer(double v) { return v >= 0.5 && is_integer(v - 0.5); }

// J_order(z) for z >= 0: elementary for half-integer orders, power series otherwise.
inline double reference_bessel_j(double order, double z) {
  if (is_half_integer(order)) return bessel_j_half(static_cast<int>(order - 0.5), z);
  return bessel_j_power_series(order, z);
}

// Smoothstep s(u) = 3u^2 - 2u^3 and its derivative; s' vanishes at both ends.
inline double smoothstep(double u) { return u * u * (3.0 - 2.0 * u); }
inline double smoothstep_slope(double u) { return 6.0 * u * (1.0 - u); }

inline QuadratureOptions oscillation_panels(QuadratureOptions q, double y) {
  if (std::abs(y) > 20.0) {
    q.panels = std::max(q.panels, static_cast<int>(std::ceil(std::abs(y) / pi)));
    q.max_panels = std::max(q.max_panels, q.panels);
  }
  return q;
}

}  // namespace detail

/// f^alpha_nu(b, y), the full-interval right side.
inline double fourier_transform(SeriesFamily alpha, double nu, double b, double y) {
  detail::require_identity_args(nu, b);
  if (!std::isfinite(y)) throw InvalidArgument("fourier_transform: non-finite y");
  const double rho = std::hypot(b, y);
  const double root_two_pi = std::sqrt(2.0 * pi);
  switch (alpha) {
    case SeriesFamily::A:
      if (y == 0.0) return 0.0;
      return root_two_pi * y * std::pow(b, nu) * std::pow(rho, -nu - 1.5) *
             detail::reference_bessel_j(nu + 1.5, rho);
    case SeriesFamily::B: {
      const double ay = std::abs(y);
      const double u_minus = b * b / (2.0 * (rho + ay));
      const double u_plus = 0.5 * (rho + ay);
      return pi * detail::reference_bessel_j(0.5 * nu, u_minus) * detail::reference_bessel_j(0.5 * nu, u_plus);
    }
    case SeriesFamily::C:
      return root_two_pi * std::pow(b, nu) * std::pow(rho, -nu - 0.5) * detail::reference_bessel_j(nu + 0.5, rho);
  }
  return 0.0;
}

/// Left side of the half-interval identity, integrated in theta with x = sin(theta).
inline double identity_lhs(SeriesFamily alpha, double nu, double b, double y, const QuadratureOptions& q = {}) {
  detail::require_identity_args(nu, b);
  auto integrand = [=](double u) {
    const double theta = 0.5 * pi * detail::smoothstep(u);
    const double jacobian = 0.5 * pi * detail::smoothstep_slope(u);
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double j = bessel_j_power_series(nu, b * s);
    switch (alpha) {
      case SeriesFamily::A: return std::pow(s, nu + 1.0) * j * std::sin(y * c) * c * jacobian;
      case SeriesFamily::B: return j * std::cos(y * c) * jacobian;
      case SeriesFamily::C: return std::pow(s, nu + 1.0) * j * std::cos(y * c) * jacobian;
    }
    return 0.0;
  };
  return integrate(integrand, 0.0, 1.0, detail::oscillation_panels(q, y)).value;
}

/// Checks the half-interval identity for one (alpha, nu, b, y).
inline IdentityResidual check_integral_identity(SeriesFamily alpha, double nu, double b, double y,
                                                const QuadratureOptions& q = {}) {
  IdentityResidual r{alpha, nu, b, y};
  r.lhs = identity_lhs(alpha, nu, b, y, q);
  r.rhs = 0.5 * fourier_transform(alpha, nu, b, y);
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

/// Real and imaginary parts of int_{-1}^{1} F^alpha_nu(b, t) e^{iyt} dt, with t = sin(theta).
struct ComplexIntegral {
  double real = 0.0;
  double imag = 0.0;
};

inline ComplexIntegral fourier_integral(SeriesFamily alpha, double nu, double b, double y,
                                        const QuadratureOptions& q = {}) {
  detail::require_identity_args(nu, b);
  const QuadratureOptions qq = detail::oscillation_panels(q, y);
  // weight(theta) multiplies e^{iyt}; A carries the extra factor -i.
  auto weight = [=](double theta) {
    const double c = std::cos(theta);
    const double j = bessel_j_power_series(nu, b * c);
    switch (alpha) {
      case SeriesFamily::A: return std::sin(theta) * std::pow(c, nu + 1.0) * j;
      case SeriesFamily::B: return j;
      case SeriesFamily::C: return std::pow(c, nu + 1.0) * j;
    }
    return 0.0;
  };
  auto part = [&](bool cosine) {
    return integrate(
               [&](double u) {
                 const double theta = pi * (detail::smoothstep(u) - 0.5);
                 const double jacobian = pi * detail::smoothstep_slope(u);
                 const double phase = y * std::sin(theta);
                 return weight(theta) * (cosine ? std::cos(phase) : std::sin(phase)) * jacobian;
               },
               0.0, 1.0, qq)
        .value;
  };
  const double cos_part = part(true);
  const double sin_part = part(false);
  // -i (C + iS) = S - iC for A; C + iS otherwise.
  if (alpha == SeriesFamily::A) return {sin_part, -cos_part};
  return {cos_part, sin_part};
}

/// The full-interval identity at y = k pi: the k-th Fourier coefficient of F.
inline IdentityResidual check_fourier_coefficient(SeriesFamily alpha, double nu, double b, std::int64_t k,
                                                  const QuadratureOptions& q = {}) {
  if (k < 0) throw InvalidArgument("check_fourier_coefficient requires k >= 0");
  const double y = static_cast<double>(k) * pi;
  IdentityResidual r{alpha, nu, b, y};
  const ComplexIntegral lhs = fourier_integral(alpha, nu, b, y, q);
  r.lhs = lhs.real;
  r.lhs_imag = lhs.imag;
  r.rhs = fourier_transform(alpha, nu, b, y);
  r.residual = std::hypot(r.lhs - r.rhs, r.lhs_imag);
  return r;
}

/// Both left sides at the same (alpha, nu, b, y); full should equal twice half.
struct SymmetricExtension {
  double half_interval = 0.0;
  double full_interval = 0.0;
  double full_imag = 0.0;
};

inline SymmetricExtension symmetric_extension(SeriesFamily alpha, double nu, double b, double y,
                                              const QuadratureOptions& q = {}) {
  const ComplexIntegral full = fourier_integral(alpha, nu, b, y, q);
  return {identity_lhs(alpha, nu, b, y, q), full.real, full.imag};
}

struct DecayRatio {
  std::int64_t k = 0;
  double term = 0.0;
  double asymptote = 0.0;
  double ratio = 0.0;
};

/// raw_term / asymptotic_term at each k.
inline std::vector<DecayRatio> decay_ratio_study(SeriesFamily family, int n, double x,
                                                 const std::vector<std::int64_t>& ks,
                                                 AsymptoteForm form = AsymptoteForm::published) {
  std::vector<DecayRatio> out;
  out.reserve(ks.size());
  for (const std::int64_t k : ks) {
    DecayRatio d{k, raw_term(family, n, std::abs(x), k), asymptotic_term(family, n, std::abs(x), k, form)};
    d.ratio = d.term / d.asymptote;
    out.push_back(d);
  }
  return out;
}

/// Smallest truncation index K with a valid alternating tail bound <= tol.
/// Only b = 1 series qualify; others throw BoundNotApplicable.
inline std::int64_t terms_to_tolerance(const SeriesSpec& spec, double tol, std::int64_t max_terms = 1'000'000) {
  if (!(tol > 0.0)) throw InvalidArgument("terms_to_tolerance requires tol > 0");
  const std::int64_t first = first_index(spec.family);
  require_bound_applicable(spec);
  const double x = std::abs(spec.x);
  if (x == 0.0) return first;
  for (std::int64_t K = first; K < first + max_terms; ++K) {
    if (std::abs(series_term(spec.family, spec.n, spec.b, x, K + 1)) > tol) continue;
    try {
      if (tail_bound(spec, K) <= tol) return K;
    } catch (const BoundNotApplicable&) {
    }
  }
  throw NoConvergence("terms_to_tolerance: no K <= " + std::to_string(first + max_terms - 1) +
                      " reaches tol " + detail::format_g(tol));
}

/// Family left side at (b, x) computed from J_n(bx).
inline double family_value_from_bessel(const SeriesSpec& spec, double j) {
  switch (spec.family) {
    case SeriesFamily::B:
      return spec.n % 2 == 1 ? j / spec.b : 2.0 * spec.n * j / (spec.b * spec.b);
    case SeriesFamily::A:
    case SeriesFamily::C:
      return std::pow(spec.b, spec.n) * j;
  }
  return j;
}

/// J_n(bx) from the power-series oracle, with integer-order parity for x < 0.
inline double oracle_bessel_j(int n, double bx, const OracleConfig& cfg = {}) {
  const double v = bessel_j_power_series(n, std::abs(bx), cfg);
  return (bx < 0.0 && n % 2 == 1) ? -v : v;
}

struct ConvergenceRecord {
  SeriesSpec spec;
  /// Highest summed index.
  std::int64_t K = -1;
  double value = std::numeric_limits<double>::quiet_NaN();
  double bessel_value = std::numeric_limits<double>::quiet_NaN();
  double oracle = std::numeric_limits<double>::quiet_NaN();
  /// |bessel_value - oracle|.
  double abs_error = std::numeric_limits<double>::quiet_NaN();
  /// First omitted term carried to the J_n(bx) scale.
  double tail_bound = std::numeric_limits<double>::quiet_NaN();
  std::int64_t terms_used = 0;
  bool converged = false;
  std::optional<std::int64_t> terms_to_tol;
  /// Empty on success; otherwise the error that stopped this record.
  std::string error;
};

struct SweepOptions {
  EvalOptions eval;
  OracleConfig oracle;
  /// Also run terms_to_tolerance at eval.tol (b = 1 records only).
  bool terms_to_tol = false;
  unsigned threads = 1;
};

inline ConvergenceRecord sweep_one(const SeriesSpec& spec, const SweepOptions& opts) {
  ConvergenceRecord rec;
  rec.spec = spec;
  try {
    EvalResult r;
    try {
      r = eval_series(spec, opts.eval);
    } catch (const SeriesNoConvergence& e) {
      r = e.partial();
      rec.error = e.what();
    }
    rec.K = r.last_index;
    rec.value = r.value;
    rec.bessel_value = r.bessel_value;
    rec.tail_bound = r.bessel_tail_bound;
    rec.terms_used = r.terms_used;
    rec.converged = r.converged;
    rec.oracle = oracle_bessel_j(spec.n, spec.b * spec.x, opts.oracle);
    rec.abs_error = std::abs(rec.bessel_value - rec.oracle);
    if (opts.terms_to_tol && spec.b == 1.0) {
      try {
        rec.terms_to_tol = terms_to_tolerance(spec, opts.eval.tol, opts.eval.max_terms);
      } catch (const std::exception&) {
      }
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

/// One record per spec, in input order. Records are independent, so they may be
/// spread over worker threads without changing any result.
inline std::vector<ConvergenceRecord> sweep(const std::vector<SeriesSpec>& grid, const SweepOptions& opts = {}) {
  std::vector<ConvergenceRecord> out(grid.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(grid.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = sweep_one(grid[i], opts);
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < grid.size(); i += workers) out[i] = sweep_one(grid[i], opts);
    });
  }
  pool.clear();
  return out;
}

}  // namespace bessel_series
