#pragma once

// Composite Gauss-Legendre quadrature with uniform panel doubling.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bessel_series/errors.hpp"
#include "bessel_series/special.hpp"
#include "bessel_series/summation.hpp"

namespace bessel_series {

struct QuadratureOptions {
  /// Gauss-Legendre order per panel.
  int nodes = 20;
  /// Initial number of uniform panels.
  int panels = 1;
  /// Absolute change allowed between the last two panel doublings.
  double target_tol = 1e-13;
  int max_panels = 1 << 14;

  void validate() const {
    if (nodes < 8) throw InvalidArgument("QuadratureOptions.nodes must be >= 8");
    if (panels < 1) throw InvalidArgument("QuadratureOptions.panels must be >= 1");
    if (!(target_tol > 0.0)) throw InvalidArgument("QuadratureOptions.target_tol must be > 0");
    if (max_panels < panels) throw InvalidArgument("QuadratureOptions.max_panels must be >= panels");
  }
};

struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights on [-1, 1] by Newton iteration on P_n.
inline GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre requires n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = t;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-16) break;
    }
    if (n == 1) dp = 1.0;
    const double w = 2.0 / ((1.0 - t * t) * dp * dp);
    rule.nodes[i] = -t;
    rule.nodes[n - 1 - i] = t;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

/// Fixed composite rule: `panels` equal panels of the given Gauss-Legendre rule.
template <typename F>
double integrate_fixed(F&& f, double a, double b, int panels, const GaussLegendreRule& rule) {
  CompensatedSum<double> sum;
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i] * half * f(mid + half * rule.nodes[i]);
    }
  }
  return sum.value();
}

struct QuadratureResult {
  double value = 0.0;
  int panels = 0;
  /// |I(panels) - I(panels / 2)|.
  double change = 0.0;
};

/// Integrates f over [a, b], doubling the panel count until two successive
/// estimates differ by at most q.target_tol.
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureOptions& q) {
  q.validate();
  const GaussLegendreRule rule = gauss_legendre(q.nodes);
  int panels = q.panels;
  double previous = integrate_fixed(f, a, b, panels, rule);
  double change = 0.0;
  while (2 * panels <= q.max_panels) {
    panels *= 2;
    const double current = integrate_fixed(f, a, b, panels, rule);
    change = std::abs(current - previous);
    previous = current;
    if (change <= q.target_tol) return {current, panels, change};
  }
  throw QuadratureNotConverged("quadrature: panel doubling reached " + std::to_string(panels) +
                                   " panels with change " + detail::format_g(change),
                               previous, change);
}

}  // namespace bessel_series
