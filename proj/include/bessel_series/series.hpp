#pragma once

// Non-power series for J_n of integer order in three families.
//
//   A:  b^n J_n(bx)   = sum_{k>=1} g^A_k(b) (k pi) f^A_n(x, k pi),   b in (0,1]
//   B:  J_n(bx) / b   = sum_{k>=0} eps_k g^BC_k(b) f^B_n(x, k pi),  n odd, b in [0,1]
//       (4m/b^2) J_2m(bx) = same sum with the even-order combination, n = 2m
//   C:  b^n J_n(bx)   = sum_{k>=0} eps_k g^BC_k(b) f^C_n(x, k pi),  b in [0,1]
//
// with phi_k = sqrt(x^2 + (k pi)^2), g^A_k = sinc-type factor, g^BC_k = cos(k pi sqrt(1-b^2))
// and eps_0 = 1/2. Every f is elementary: a spherical Bessel function of phi_k
// (A, C) or a product of two spherical Bessel functions at (phi_k -+ k pi)/2 (B).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bessel_series/errors.hpp"
#include "bessel_series/special.hpp"
#include "bessel_series/summation.hpp"

namespace bessel_series {

enum class SeriesFamily { A, B, C };

inline std::string_view to_string(SeriesFamily family) {
  switch (family) {
    case SeriesFamily::A: return "A";
    case SeriesFamily::B: return "B";
    case SeriesFamily::C: return "C";
  }
  return "?";
}

inline std::optional<SeriesFamily> parse_family(std::string_view name) {
  if (name == "A" || name == "a") return SeriesFamily::A;
  if (name == "B" || name == "b") return SeriesFamily::B;
  if (name == "C" || name == "c") return SeriesFamily::C;
  return std::nullopt;
}

/// One evaluation request. x may be negative; parity is applied by the engine.
struct SeriesSpec {
  SeriesFamily family = SeriesFamily::C;
  int n = 0;
  double b = 1.0;
  double x = 0.0;
};

enum class TruncationMode { fixed_terms, adaptive };

struct EvalOptions {
  TruncationMode mode = TruncationMode::adaptive;
  std::int64_t max_terms = 1'000'000;
  /// Absolute tolerance on the recovered J_n(bx) (and on the series value itself).
  double tol = 1e-10;

  void validate() const {
    if (max_terms < 1) throw InvalidArgument("EvalOptions.max_terms must be >= 1");
    if (!(tol > 0.0)) throw InvalidArgument("EvalOptions.tol must be > 0");
  }
};

struct EvalResult {
  /// The family's left-hand side: b^n J_n(bx), J_n(bx)/b or (4m/b^2) J_2m(bx).
  double value = 0.0;
  /// J_n(bx) recovered from value.
  double bessel_value = 0.0;
  std::int64_t terms_used = 0;
  /// Highest k included in the sum; -1 when nothing was summed.
  std::int64_t last_index = -1;
  /// |first omitted term| on the value scale.
  double tail_bound = 0.0;
  /// tail_bound carried through the same inversion as bessel_value.
  double bessel_tail_bound = 0.0;
  bool converged = false;
  /// Set when b^n < 1e-6: dividing by b^n amplifies the truncation error.
  bool ill_conditioned = false;
};

/// Budget exhausted in adaptive mode; carries the partial sum.
class SeriesNoConvergence : public NoConvergence {
 public:
  SeriesNoConvergence(const std::string& what, const EvalResult& partial)
      : NoConvergence(what), partial_(partial) {}
  const EvalResult& partial() const noexcept { return partial_; }

 private:
  EvalResult partial_;
};

// ---------------------------------------------------------------------------
// Elementary ingredients

namespace detail {

inline double sign_power(std::int64_t k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// sqrt(1 - b^2) without cancellation near b = 1.
inline double complement(double b) { return std::sqrt((1.0 - b) * (1.0 + b)); }

// sin(pi k c) and cos(pi k c) with k c reduced exactly modulo 2.
inline double reduced_turns(std::int64_t k, double c, double& parity) {
  const double kd = static_cast<double>(k);
  const double whole = std::nearbyint(kd * c);
  parity = std::fmod(whole, 2.0) == 0.0 ? 1.0 : -1.0;
  return std::fma(kd, c, -whole);
}
inline double sin_pi_kc(std::int64_t k, double c) {
  double parity = 1.0;
  const double frac = reduced_turns(k, c, parity);
  return parity * std::sin(pi * frac);
}
inline double cos_pi_kc(std::int64_t k, double c) {
  double parity = 1.0;
  const double frac = reduced_turns(k, c, parity);
  return parity * std::cos(pi * frac);
}

inline void require_nonnegative_x(double x) {
  if (!std::isfinite(x) || x < 0.0) throw InvalidArgument("term argument x must be finite and >= 0");
}

inline void require_unit_b(double b, bool allow_zero) {
  if (!std::isfinite(b) || b > 1.0 || b < 0.0 || (!allow_zero && b == 0.0)) {
    throw InvalidArgument(std::string("scale b must lie in ") + (allow_zero ? "[0, 1]" : "(0, 1]"));
  }
}

}  // namespace detail

/// phi_k = sqrt(x^2 + (k pi)^2).
inline double phi(double x, std::int64_t k) {
  if (!std::isfinite(x)) throw InvalidArgument("phi: non-finite x");
  return std::hypot(x, static_cast<double>(k) * pi);
}

/// phi_k as k*pi + delta with delta = x^2 / (phi_k + k pi).
inline ShiftedAngle shifted_phi(double x, std::int64_t k) {
  if (k == 0) return {0, std::abs(x)};
  const double kp = static_cast<double>(k) * pi;
  return {k, x * x / (std::hypot(x, kp) + kp)};
}

inline double eps_k(std::int64_t k) { return k == 0 ? 0.5 : 1.0; }

/// sin(k pi sqrt(1-b^2)) / (k pi sqrt(1-b^2)); 1 at b = 1.
inline double g_a(double b, std::int64_t k) {
  detail::require_unit_b(b, false);
  if (k < 1) throw InvalidArgument("g_a requires k >= 1");
  const double c = detail::complement(b);
  if (c == 0.0) return 1.0;
  return detail::sin_pi_kc(k, c) / (static_cast<double>(k) * pi * c);
}

/// cos(k pi sqrt(1-b^2)).
inline double g_bc(double b, std::int64_t k) {
  detail::require_unit_b(b, true);
  if (k < 0) throw InvalidArgument("g_bc requires k >= 0");
  const double c = detail::complement(b);
  if (c == 0.0) return 1.0;
  return detail::cos_pi_kc(k, c);
}

/// (k pi) f^A_n(x, k pi) = 2 (k pi)^2 x^n j_{n+1}(phi_k) / phi_k^{n+1}.
inline double term_a(int n, double x, std::int64_t k) {
  if (n < 0) throw InvalidArgument("term_a requires n >= 0");
  if (k < 1) throw InvalidArgument("term_a requires k >= 1");
  detail::require_nonnegative_x(x);
  const ShiftedAngle angle = shifted_phi(x, k);
  const double p = angle.value();
  const double kp = static_cast<double>(k) * pi;
  return 2.0 * kp * (kp / p) * std::pow(x / p, n) * spherical_bessel_j(n + 1, angle);
}

namespace detail {

// Odd order n = 2l + 1: pi J_{n/2}(u-) J_{n/2}(u+) = x j_l(u-) j_l(u+), since u- u+ = x^2/4.
inline double term_b_odd(int n, double x, std::int64_t k) {
  const int l = (n - 1) / 2;
  if (x == 0.0) return 0.0;
  const ShiftedAngle angle = shifted_phi(x, k);
  const double u_minus = 0.5 * angle.delta;
  const ShiftedAngle u_plus{k, 0.5 * angle.delta};
  return x * spherical_bessel_j(l, u_minus) * spherical_bessel_j(l, u_plus);
}

}  // namespace detail

/// f^B_n(x, k pi). Odd n: pi J_{n/2}(u-) J_{n/2}(u+) with u-+ = (phi_k -+ k pi)/2.
/// Even n = 2m: x (f^B_{2m-1} + f^B_{2m+1}), the combination whose series sums to
/// (4m/b^2) J_2m(bx).
inline double term_b(int n, double x, std::int64_t k) {
  if (n < 1) throw InvalidArgument("term_b requires n >= 1: the B family has no elementary J_0 series");
  if (k < 0) throw InvalidArgument("term_b requires k >= 0");
  detail::require_nonnegative_x(x);
  if (n % 2 == 1) return detail::term_b_odd(n, x, k);
  return x * (detail::term_b_odd(n - 1, x, k) + detail::term_b_odd(n + 1, x, k));
}

/// f^C_n(x, k pi) = 2 x^n j_n(phi_k) / phi_k^n.
inline double term_c(int n, double x, std::int64_t k) {
  if (n < 0) throw InvalidArgument("term_c requires n >= 0");
  if (k < 0) throw InvalidArgument("term_c requires k >= 0");
  detail::require_nonnegative_x(x);
  if (k == 0 && x == 0.0) return n == 0 ? 2.0 : 0.0;
  const ShiftedAngle angle = shifted_phi(x, k);
  return 2.0 * std::pow(x / angle.value(), n) * spherical_bessel_j(n, angle);
}

/// Unmodulated term k of the family: (k pi) f^A_n, f^B_n or f^C_n.
inline double raw_term(SeriesFamily family, int n, double x, std::int64_t k) {
  switch (family) {
    case SeriesFamily::A: return term_a(n, x, k);
    case SeriesFamily::B: return term_b(n, x, k);
    case SeriesFamily::C: return term_c(n, x, k);
  }
  return 0.0;
}

inline std::int64_t first_index(SeriesFamily family) { return family == SeriesFamily::A ? 1 : 0; }

/// Term k of the family's series at scale b, modulation and eps_k included. x >= 0.
inline double series_term(SeriesFamily family, int n, double b, double x, std::int64_t k) {
  switch (family) {
    case SeriesFamily::A: return g_a(b, k) * term_a(n, x, k);
    case SeriesFamily::B: return eps_k(k) * g_bc(b, k) * term_b(n, x, k);
    case SeriesFamily::C: return eps_k(k) * g_bc(b, k) * term_c(n, x, k);
  }
  return 0.0;
}

/// Checks the family/order/scale combination; throws DomainError or InvalidArgument.
inline void validate(const SeriesSpec& spec) {
  if (spec.n < 0) throw InvalidArgument("order n must be >= 0");
  if (!std::isfinite(spec.x)) throw InvalidArgument("argument x must be finite");
  if (!std::isfinite(spec.b) || spec.b < 0.0 || spec.b > 1.0) {
    throw InvalidArgument("scale b must lie in [0, 1]");
  }
  switch (spec.family) {
    case SeriesFamily::A:
      if (spec.b == 0.0) throw DomainError("A family requires b > 0");
      if (spec.n == 0 && spec.b == 1.0) {
        throw DomainError("A family at b = 1, n = 0 diverges: its terms tend to 2(-1)^(k+1)");
      }
      break;
    case SeriesFamily::B:
      if (spec.n == 0) throw DomainError("B family requires n >= 1: no elementary J_0 series");
      break;
    case SeriesFamily::C: break;
  }
}

namespace detail {

// Multiplier taking the series value to J_n(bx); b > 0 except C with n = 0.
inline double recovery_factor(const SeriesSpec& spec) {
  switch (spec.family) {
    case SeriesFamily::B:
      return spec.n % 2 == 1 ? spec.b : spec.b * spec.b / (2.0 * spec.n);
    case SeriesFamily::A:
    case SeriesFamily::C:
      return spec.n == 0 ? 1.0 : 1.0 / std::pow(spec.b, spec.n);
  }
  return 1.0;
}

// Weight multiplying the raw term k (eps_k and g_k), and an upper bound of its
// magnitude that ignores the oscillation: |g^BC| <= 1, |g^A| <= min(1, 1/(k pi sqrt(1-b^2))).
struct TermWeight {
  double weight;
  double envelope;
};

inline TermWeight term_weight(SeriesFamily family, double b, std::int64_t k) {
  if (family == SeriesFamily::A) {
    const double c = complement(b);
    if (c == 0.0) return {1.0, 1.0};
    const double kpc = static_cast<double>(k) * pi * c;
    return {sin_pi_kc(k, c) / kpc, std::min(1.0, 1.0 / kpc)};
  }
  const double e = eps_k(k);
  return {e * g_bc(b, k), e};
}

// Terms may grow while phi_k is below the spherical-Bessel turning point.
inline bool past_turning_point(int n, std::int64_t k) {
  return static_cast<double>(k) * pi >= n + 2.0;
}

// Closed-form values at b = 0 where the engine does not sum.
inline std::optional<EvalResult> degenerate_scale(const SeriesSpec& spec, double x) {
  if (spec.b != 0.0) return std::nullopt;
  EvalResult r;
  r.converged = true;
  r.terms_used = 0;
  if (spec.family == SeriesFamily::B) {
    // lim J_n(bx)/b: x/2 for n = 1, else 0. lim (4m/b^2) J_2m(bx): x^2/2 for m = 1, else 0.
    if (spec.n == 1) {
      r.value = 0.5 * x;
      r.bessel_value = 0.5 * x;
    } else if (spec.n == 2) {
      r.value = 0.5 * x * x;
    }
    return r;
  }
  if (spec.family == SeriesFamily::C && spec.n >= 1) return r;
  return std::nullopt;
}

}  // namespace detail

/// Sums the family's series in ascending k with compensated summation.
///
/// fixed_terms sums exactly opts.max_terms terms. adaptive stops once k pi >= n + 2
/// and two consecutive term majorants (|term| without its oscillating g factor),
/// scaled to J_n(bx), are below opts.tol and the first omitted term is too;
/// exhausting the budget throws SeriesNoConvergence with the partial sum.
/// Negative x is handled by the parity J_n(-z) = (-1)^n J_n(z).
inline EvalResult eval_series(const SeriesSpec& spec, const EvalOptions& opts = {}) {
  opts.validate();
  validate(spec);
  const double x = std::abs(spec.x);
  const double parity = (spec.x < 0.0 && spec.n % 2 == 1) ? -1.0 : 1.0;

  if (auto r = detail::degenerate_scale(spec, x)) {
    r->value *= parity;
    r->bessel_value *= parity;
    return *r;
  }

  const double recovery = detail::recovery_factor(spec);
  const double scale = std::max(1.0, recovery);
  const std::int64_t first = first_index(spec.family);
  const bool adaptive = opts.mode == TruncationMode::adaptive;

  CompensatedSum<double> sum;
  EvalResult r;
  r.ill_conditioned = spec.family != SeriesFamily::B && spec.n >= 1 && std::pow(spec.b, spec.n) < 1e-6;

  int quiet_run = 0;
  bool stopped = false;
  std::int64_t k = first;
  for (; k < first + opts.max_terms; ++k) {
    const double raw = raw_term(spec.family, spec.n, x, k);
    const detail::TermWeight w = detail::term_weight(spec.family, spec.b, k);
    sum += w.weight * raw;
    r.last_index = k;
    ++r.terms_used;
    if (!adaptive) continue;
    const bool quiet = w.envelope * std::abs(raw) * scale < opts.tol;
    quiet_run = quiet ? quiet_run + 1 : 0;
    if (quiet_run >= 2 && detail::past_turning_point(spec.n, k) &&
        std::abs(series_term(spec.family, spec.n, spec.b, x, k + 1)) * scale <= opts.tol) {
      stopped = true;
      break;
    }
  }

  r.tail_bound = std::abs(series_term(spec.family, spec.n, spec.b, x, r.last_index + 1));
  r.bessel_tail_bound = r.tail_bound * recovery;
  r.value = parity * sum.value();
  r.bessel_value = r.value * recovery;
  r.converged = adaptive ? stopped : r.tail_bound * scale <= opts.tol;

  if (adaptive && !stopped) {
    throw SeriesNoConvergence("series did not meet tol " + detail::format_g(opts.tol) + " within " +
                                  std::to_string(opts.max_terms) + " terms",
                              r);
  }
  return r;
}

/// Sum through index K (inclusive) on the value scale.
inline double partial_sum(const SeriesSpec& spec, std::int64_t K) {
  const std::int64_t first = first_index(spec.family);
  if (K < first) return 0.0;
  EvalOptions opts;
  opts.mode = TruncationMode::fixed_terms;
  opts.max_terms = K - first + 1;
  return eval_series(spec, opts).value;
}

/// The b -> 1 limit of the A family: J_n(x) = sum_{k>=1} (k pi) f^A_n(x, k pi), n >= 1.
inline EvalResult eval_at_b1(int n, double x, const EvalOptions& opts = {}) {
  if (n == 0) throw DomainError("b = 1 limit series diverges at n = 0");
  return eval_series({SeriesFamily::A, n, 1.0, x}, opts);
}

/// Term n >= 1 of the A-family J_0 series at b = sqrt(3)/2 rescaled to argument x:
/// 4 (-1)^n [(2n-1) pi] (psi_n cos psi_n - sin psi_n) / psi_n^3,
/// psi_n = sqrt(4x^2/3 + [(2n-1) pi]^2).
inline double j0_variant_term(double x, std::int64_t n) {
  if (n < 1) throw InvalidArgument("j0_variant_term requires n >= 1");
  const std::int64_t odd = 2 * n - 1;
  const double a = static_cast<double>(odd) * pi;
  const double s = 4.0 * x * x / 3.0;
  const double psi = std::sqrt(s + a * a);
  const double delta = s / (psi + a);
  // cos psi = -cos delta, sin psi = -sin delta for odd multiples of pi.
  const double bracket = -psi * std::cos(delta) + std::sin(delta);
  return 4.0 * detail::sign_power(n) * a * bracket / (psi * psi * psi);
}

/// J_0(x) from the rescaled A-family series at b = sqrt(3)/2. Conditionally
/// convergent with O(1/K) error, so adaptive mode will normally exhaust max_terms.
inline EvalResult eval_j0_variant(double x, const EvalOptions& opts = {}) {
  opts.validate();
  if (!std::isfinite(x)) throw InvalidArgument("eval_j0_variant: non-finite x");
  CompensatedSum<double> sum;
  EvalResult r;
  int quiet_run = 0;
  bool stopped = false;
  for (std::int64_t n = 1; n <= opts.max_terms; ++n) {
    const double t = j0_variant_term(x, n);
    sum += t;
    r.last_index = n;
    ++r.terms_used;
    if (opts.mode == TruncationMode::fixed_terms) continue;
    quiet_run = std::abs(t) < opts.tol ? quiet_run + 1 : 0;
    if (quiet_run >= 2) {
      stopped = true;
      break;
    }
  }
  r.value = r.bessel_value = sum.value();
  r.tail_bound = r.bessel_tail_bound = std::abs(j0_variant_term(x, r.last_index + 1));
  r.converged = opts.mode == TruncationMode::adaptive ? stopped : r.tail_bound <= opts.tol;
  if (opts.mode == TruncationMode::adaptive && !stopped) {
    throw SeriesNoConvergence("J0 variant series did not meet tol within max_terms", r);
  }
  return r;
}

/// J_n(x) through the given family at scale b > 0: the engine evaluates the series
/// at x' = |x| / b so that b x' = |x|, then applies parity.
inline double bessel_j(int n, double x, SeriesFamily family, double b, const EvalOptions& opts = {}) {
  if (!std::isfinite(b) || !(b > 0.0) || b > 1.0) throw InvalidArgument("bessel_j requires b in (0, 1]");
  if (!std::isfinite(x)) throw InvalidArgument("bessel_j: non-finite x");
  const EvalResult r = eval_series({family, n, b, std::abs(x) / b}, opts);
  const double parity = (x < 0.0 && n % 2 == 1) ? -1.0 : 1.0;
  return parity * r.bessel_value;
}

// ---------------------------------------------------------------------------
// Large-k behaviour and truncation bounds

enum class AsymptoteForm {
  /// Leading-order expressions exactly as published.
  published,
  /// Leading order re-derived from the large-argument expansion of j_l; differs
  /// from published only for the A family at odd n (a factor 1/2).
  rederived,
};

namespace detail {

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace detail

/// Leading large-k form of the unmodulated term k: (k pi) f^A_n, f^B_n or f^C_n.
inline double asymptotic_term(SeriesFamily family, int n, double x, std::int64_t k,
                              AsymptoteForm form = AsymptoteForm::published) {
  if (k < 1) throw InvalidArgument("asymptotic_term requires k >= 1");
  if (n < 0) throw InvalidArgument("asymptotic_term requires n >= 0");
  const double kp = static_cast<double>(k) * pi;
  const double r = x / kp;
  switch (family) {
    case SeriesFamily::A: {
      if (n % 2 == 0) {
        const int m = n / 2;
        return 2.0 * detail::sign_power(k + m + 1) * std::pow(r, 2 * m);
      }
      const int m = (n - 1) / 2;
      const double lead = form == AsymptoteForm::published ? 2.0 : 1.0;
      return lead * detail::sign_power(k + m + 1) / kp * std::pow(r, 2 * m + 1) *
             (x * x + (2.0 * m + 2.0) * (2.0 * m + 3.0));
    }
    case SeriesFamily::B: {
      if (n < 1) throw InvalidArgument("asymptotic_term: B family requires n >= 1");
      using detail::factorial;
      switch (n % 4) {
        case 1: {
          const int m = (n - 1) / 4;
          // x^{2m-1} (x/k pi)^{2m+2} folded into x^{4m+1} / (k pi)^{2m+2}.
          return detail::sign_power(k + m) * std::pow(x, 4 * m + 1) / std::pow(kp, 2 * m + 2) /
                 std::pow(2.0, 2 * m + 1) * factorial(2 * m + 1) / factorial(2 * (2 * m + 1)) *
                 (x * x + 4.0 * m * (2.0 * m + 1.0));
        }
        case 2: {
          const int m = (n - 2) / 4;
          return detail::sign_power(k + m) * std::pow(x, 2 * m) / std::pow(2.0, 2 * m) *
                 std::pow(r, 2 * m + 2) * (2.0 * m + 1.0) * factorial(2 * m + 1) /
                 ((4.0 * m + 3.0) * factorial(2 * (2 * m + 1))) *
                 (x * x + 2.0 * m * (4.0 * m + 3.0));
        }
        case 3: {
          const int m = (n - 3) / 4;
          return detail::sign_power(k + m + 1) * std::pow(x, 2 * m + 1) / std::pow(2.0, 2 * m) *
                 std::pow(r, 2 * m + 2) * factorial(2 * m + 2) / factorial(2 * (2 * m + 2));
        }
        default: {
          const int m = (n - 4) / 4;
          return detail::sign_power(k + m + 1) * std::pow(x, 2 * m + 2) / std::pow(2.0, 2 * m) *
                 std::pow(r, 2 * m + 2) * factorial(2 * m + 2) / factorial(2 * (2 * m + 2));
        }
      }
    }
    case SeriesFamily::C: {
      if (n % 2 == 0) {
        const int m = n / 2;
        return detail::sign_power(k + m) / (kp * kp) * std::pow(r, 2 * m) *
               (x * x + 2.0 * m * (2.0 * m + 1.0));
      }
      const int m = (n - 1) / 2;
      return 2.0 * detail::sign_power(k + m + 1) / kp * std::pow(r, 2 * m + 1);
    }
  }
  return 0.0;
}

inline constexpr int tail_bound_lookahead = 8;

/// |term K+1| for a series truncated after index K, valid only when the tail is
/// alternating with decreasing magnitude. That needs b = 1 (g_k == 1) and is
/// checked numerically on terms K+1 .. K+8; otherwise BoundNotApplicable.
/// Throws BoundNotApplicable when no K can carry an alternating tail bound.
inline void require_bound_applicable(const SeriesSpec& spec) {
  try {
    validate(spec);
  } catch (const DomainError& e) {
    throw BoundNotApplicable(std::string("no truncation bound: ") + e.what());
  }
  if (spec.b != 1.0) {
    throw BoundNotApplicable("no truncation bound: for b < 1 the factor g_k changes sign irregularly "
                             "and the series is not alternating");
  }
}

inline double tail_bound(const SeriesSpec& spec, std::int64_t K) {
  require_bound_applicable(spec);
  if (K < first_index(spec.family)) throw InvalidArgument("tail_bound: K below the first index");
  const double x = std::abs(spec.x);
  if (x == 0.0) return 0.0;  // every term past k = 0 vanishes identically

  double previous = 0.0;
  double first = 0.0;
  for (int i = 1; i <= tail_bound_lookahead; ++i) {
    const double t = series_term(spec.family, spec.n, spec.b, x, K + i);
    if (i == 1) {
      first = t;
    } else if (!(t * previous < 0.0 && std::abs(t) < std::abs(previous))) {
      throw BoundNotApplicable("no truncation bound: terms after K = " + std::to_string(K) +
                               " are not alternating with decreasing magnitude");
    }
    previous = t;
  }
  return std::abs(first);
}

}  // namespace bessel_series
