#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "bessel_series/series.hpp"
#include "bessel_series/verification.hpp"

using namespace bessel_series;

namespace {

const double kRoot3Over2 = std::sqrt(3.0) / 2.0;

struct TermCase {
  SeriesFamily family;
  int n;
  double x;
  std::int64_t k;
  double expected;
};

// mpmath, 40 digits, from the Bessel-function forms (k pi) f^A, f^B, f^C with half-integer orders.
const std::vector<TermCase> kTermTable = {
    {SeriesFamily::A, 0, 1, 1, 1.7089336944276646554},
    {SeriesFamily::A, 1, 2, 3, 0.20107983695044949454},
    {SeriesFamily::A, 3, 7.5, 2, -0.38719421590264907176},
    {SeriesFamily::A, 5, 20, 1, -0.030020842382103085081},
    {SeriesFamily::A, 2, 0.5, 1000, 5.0660508369968829478e-8},
    {SeriesFamily::A, 1, 3, 100000, -4.5594532627722202486e-10},
    {SeriesFamily::C, 0, 1, 1, -0.093840622018636658145},
    {SeriesFamily::C, 1, 2, 3, 0.041213893416697740371},
    {SeriesFamily::C, 3, 7.5, 2, -0.053351641046319971648},
    {SeriesFamily::C, 5, 20, 1, 0.051070257375971219038},
    {SeriesFamily::C, 2, 0.5, 1000, -1.6040596256992332892e-14},
    {SeriesFamily::C, 0, 3, 100000, 9.1189065268749117971e-11},
    {SeriesFamily::C, 4, 0.2, 0, 3.3800913139870448027e-6},
    {SeriesFamily::B, 1, 2, 3, -0.021941975177252079398},
    {SeriesFamily::B, 3, 7.5, 2, 0.11898439433530327225},
    {SeriesFamily::B, 5, 20, 1, -0.059554243040384108743},
    {SeriesFamily::B, 1, 0.5, 1000, 3.1662869483038389334e-9},
    {SeriesFamily::B, 2, 3, 100000, 1.3678359791107532184e-10},
    {SeriesFamily::B, 4, 10, 0, 2.7194494499849218889},
};

EvalOptions fixed(std::int64_t K) {
  EvalOptions o;
  o.mode = TruncationMode::fixed_terms;
  o.max_terms = K;
  return o;
}

EvalResult eval_or_partial(const SeriesSpec& spec, const EvalOptions& opts = {}) {
  try {
    return eval_series(spec, opts);
  } catch (const SeriesNoConvergence& e) {
    return e.partial();
  }
}

}  // namespace

TEST(Phi, Examples) {
  EXPECT_DOUBLE_EQ(phi(0.0, 3), 3.0 * pi);
  EXPECT_EQ(phi(1.0, 0), 1.0);
  EXPECT_DOUBLE_EQ(phi(2.0, 1), std::sqrt(4.0 + pi * pi));
}

TEST(Phi, ShiftedFormMatches) {
  for (std::int64_t k : {1, 7, 1000, 1000000}) {
    for (double x : {0.1, 3.0, 40.0}) {
      const ShiftedAngle a = shifted_phi(x, k);
      EXPECT_NEAR(a.value(), phi(x, k), 4e-16 * phi(x, k));
      EXPECT_GE(a.delta, 0.0);
    }
  }
}

TEST(EpsK, Values) {
  EXPECT_EQ(eps_k(0), 0.5);
  EXPECT_EQ(eps_k(1), 1.0);
  EXPECT_EQ(eps_k(7), 1.0);
}

TEST(GFactors, Examples) {
  for (std::int64_t k : {1, 2, 17}) EXPECT_EQ(g_a(1.0, k), 1.0);
  EXPECT_NEAR(g_a(kRoot3Over2, 1), 2.0 / pi, 1e-15);
  EXPECT_NEAR(g_a(0.5, 2), -0.13706676420458308572, 1e-15);
  for (std::int64_t k : {0, 1, 5, 12}) {
    EXPECT_EQ(g_bc(1.0, k), 1.0);
    EXPECT_NEAR(g_bc(0.0, k), k % 2 == 0 ? 1.0 : -1.0, 1e-15);
  }
  EXPECT_NEAR(g_bc(kRoot3Over2, 1), 0.0, 1e-15);
}

TEST(GFactors, RangeErrors) {
  EXPECT_THROW(g_a(0.0, 1), InvalidArgument);
  EXPECT_THROW(g_a(1.5, 1), InvalidArgument);
  EXPECT_THROW(g_a(0.5, 0), InvalidArgument);
  EXPECT_THROW(g_bc(-0.1, 1), InvalidArgument);
  EXPECT_THROW(g_bc(1.01, 1), InvalidArgument);
}

TEST(GFactors, LargeKStaysAccurate) {
  // k c reduced modulo 2 before the trig call.
  const double c = std::sqrt((1.0 - 0.5) * (1.0 + 0.5));
  const std::int64_t k = 999'983;
  const long double turns = static_cast<long double>(k) * static_cast<long double>(c);
  const long double frac = turns - 2.0L * std::floor(turns / 2.0L);
  EXPECT_NEAR(g_bc(0.5, k), static_cast<double>(std::cos(static_cast<long double>(pi) * frac)), 1e-9);
}

TEST(Terms, TrivialExamples) {
  for (std::int64_t k = 1; k <= 6; ++k) {
    EXPECT_NEAR(term_a(0, 0.0, k), k % 2 == 1 ? 2.0 : -2.0, 1e-14);
    EXPECT_EQ(term_a(1, 0.0, k), 0.0);
    EXPECT_EQ(term_b(1, 0.0, k), 0.0);
  }
  EXPECT_NEAR(term_c(0, 0.0, 1), 0.0, 1e-16);
  EXPECT_EQ(term_c(0, 0.0, 0), 2.0);
  for (double x : {0.3, 1.0, 4.0, 11.0}) {
    EXPECT_NEAR(term_b(1, x, 0), 2.0 / x * (1.0 - std::cos(x)), 1e-15);
  }
}

TEST(Terms, FrozenTable) {
  for (const auto& c : kTermTable) {
    const double got = raw_term(c.family, c.n, c.x, c.k);
    EXPECT_NEAR(got, c.expected, 1e-13 * std::abs(c.expected) + 1e-18)
        << to_string(c.family) << " n=" << c.n << " x=" << c.x << " k=" << c.k;
  }
}

TEST(Terms, NamedExamples) {
  EXPECT_NEAR(term_a(0, 1.0, 1), 1.7089336944276646554, 1e-14);
  EXPECT_NEAR(term_b(2, 1.0, 1), -0.016256243093114172264, 1e-16);
  EXPECT_NEAR(term_c(1, 1.0, 1), 0.17315118468568415163, 1e-15);
}

TEST(Terms, Errors) {
  EXPECT_THROW(term_b(0, 1.0, 1), InvalidArgument);
  EXPECT_THROW(term_a(0, 1.0, 0), InvalidArgument);
  EXPECT_THROW(term_c(0, -1.0, 1), InvalidArgument);
}

TEST(EvalSeries, Examples) {
  EvalOptions tight;
  tight.tol = 1e-12;
  const auto c0 = eval_series({SeriesFamily::C, 0, 1.0, 0.0}, tight);
  EXPECT_NEAR(c0.value, 1.0, 1e-15);
  EXPECT_NEAR(c0.bessel_value, 1.0, 1e-15);
  EXPECT_TRUE(c0.converged);

  const auto b1 = eval_series({SeriesFamily::B, 1, 0.0, 2.0});
  EXPECT_EQ(b1.bessel_value, 1.0);

  const auto c1 = eval_series({SeriesFamily::C, 0, 1.0, 1.0}, fixed(100'000));
  EXPECT_NEAR(c1.bessel_value, 0.7651976866, 1e-7);
  EXPECT_EQ(c1.terms_used, 100'000);
}

TEST(EvalSeries, DegenerateScale) {
  const auto b2 = eval_series({SeriesFamily::B, 2, 0.0, 2.0});
  EXPECT_EQ(b2.value, 2.0);
  EXPECT_EQ(b2.bessel_value, 0.0);
  EXPECT_EQ(eval_series({SeriesFamily::B, 3, 0.0, 2.0}).bessel_value, 0.0);
  EXPECT_EQ(eval_series({SeriesFamily::C, 2, 0.0, 5.0}).value, 0.0);
  // C at n = 0, b = 0 is summed: J_0(0) = 1 through the alternating sin phi / phi series.
  EXPECT_NEAR(eval_series({SeriesFamily::C, 0, 0.0, 1.0}, fixed(100'000)).value, 1.0, 1e-5);
}

TEST(EvalSeries, DomainErrors) {
  EXPECT_THROW(eval_series({SeriesFamily::A, 0, 1.0, 1.0}), DomainError);
  EXPECT_THROW(eval_series({SeriesFamily::B, 0, 0.5, 1.0}), DomainError);
  EXPECT_THROW(eval_series({SeriesFamily::A, 1, 0.0, 1.0}), DomainError);
  EXPECT_THROW(eval_series({SeriesFamily::C, 0, 1.5, 1.0}), InvalidArgument);
  EvalOptions bad;
  bad.tol = 0.0;
  EXPECT_THROW(eval_series({SeriesFamily::C, 0, 1.0, 1.0}, bad), InvalidArgument);
  bad = {};
  bad.max_terms = 0;
  EXPECT_THROW(eval_series({SeriesFamily::C, 0, 1.0, 1.0}, bad), InvalidArgument);
}

TEST(EvalSeries, NoConvergenceCarriesPartialSum) {
  EvalOptions small;
  small.max_terms = 100;
  try {
    eval_series({SeriesFamily::A, 0, 0.5, 1.0}, small);
    FAIL() << "expected SeriesNoConvergence";
  } catch (const SeriesNoConvergence& e) {
    EXPECT_EQ(e.partial().terms_used, 100);
    EXPECT_FALSE(e.partial().converged);
    EXPECT_NEAR(e.partial().bessel_value, 0.9384698072408129, 0.05);
  }
}

TEST(EvalSeries, ConvergedImpliesBoundBelowTol) {
  const EvalOptions opts;
  for (auto fam : {SeriesFamily::A, SeriesFamily::B, SeriesFamily::C})
    for (int n = 1; n <= 4; ++n)
      for (double b : {0.5, 1.0})
        for (double x : {0.5, 3.0, 8.0}) {
          const auto r = eval_series({fam, n, b, x}, opts);
          EXPECT_TRUE(r.converged);
          EXPECT_LE(r.bessel_tail_bound, opts.tol);
          EXPECT_LE(r.terms_used, opts.max_terms);
        }
}

TEST(EvalSeries, SlowModulationDoesNotStopEarly) {
  // g_k at b = 0.25 passes near zero for several consecutive k; stopping on two
  // small terms there used to cost six digits.
  for (auto fam : {SeriesFamily::A, SeriesFamily::C}) {
    for (int n : {2, 4, 5}) {
      for (double x : {5.0, 20.0}) {
        const auto r = eval_series({fam, n, 0.25, x});
        EXPECT_NEAR(r.bessel_value, oracle_bessel_j(n, 0.25 * x), 1e-7) << to_string(fam) << n << " " << x;
      }
    }
  }
}

TEST(EvalSeries, ParityProperty) {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> xs(0.0, 15.0);
  std::uniform_int_distribution<int> ns(1, 5);
  std::uniform_int_distribution<int> fams(0, 2);
  const std::vector<double> bs{0.5, kRoot3Over2, 1.0};
  std::uniform_int_distribution<int> bi(0, 2);
  for (int i = 0; i < 40; ++i) {
    const SeriesSpec spec{static_cast<SeriesFamily>(fams(rng)), ns(rng), bs[bi(rng)], xs(rng)};
    SeriesSpec mirrored = spec;
    mirrored.x = -spec.x;
    const auto plus = eval_series(spec, fixed(500));
    const auto minus = eval_series(mirrored, fixed(500));
    const double sign = spec.n % 2 == 0 ? 1.0 : -1.0;
    EXPECT_EQ(minus.value, sign * plus.value);
    EXPECT_EQ(minus.bessel_value, sign * plus.bessel_value);
  }
}

TEST(EvalSeries, Deterministic) {
  const SeriesSpec spec{SeriesFamily::B, 3, 0.7, 6.5};
  const auto r1 = eval_series(spec);
  const auto r2 = eval_series(spec);
  EXPECT_EQ(r1.value, r2.value);
  EXPECT_EQ(r1.terms_used, r2.terms_used);
}

TEST(EvalSeries, IllConditionedFlag) {
  EXPECT_TRUE(eval_series({SeriesFamily::C, 3, 0.005, 1.0}, fixed(50)).ill_conditioned);
  EXPECT_FALSE(eval_series({SeriesFamily::C, 3, 0.5, 1.0}, fixed(50)).ill_conditioned);
}

TEST(EvalAtB1, Examples) {
  EXPECT_EQ(eval_at_b1(1, 0.0, fixed(100)).value, 0.0);
  EXPECT_NEAR(eval_at_b1(1, 1.0, fixed(10'000)).value, 0.4400505857, 1e-6);
  EXPECT_NEAR(eval_at_b1(2, 5.0, fixed(10'000)).value, 0.04656511628, 1e-6);
  EXPECT_THROW(eval_at_b1(0, 1.0), DomainError);
}

TEST(J0Variant, Examples) {
  EXPECT_NEAR(eval_j0_variant(0.0, fixed(10'000)).value, 1.0, 1e-3);
  EXPECT_NEAR(eval_j0_variant(1.0, fixed(100'000)).value, 0.76519769, 1e-4);
  EXPECT_NEAR(eval_j0_variant(10.0, fixed(100'000)).value, -0.2459358, 1e-3);
  EXPECT_THROW(eval_j0_variant(1.0, [] {
                 EvalOptions o;
                 o.max_terms = 50;
                 return o;
               }()),
               SeriesNoConvergence);
}

TEST(J0Variant, MatchesRescaledAFamily) {
  // J_0(x) = A series at b = sqrt(3)/2 evaluated at x / b; the variant groups the even-k zeros away.
  const double x = 3.0;
  const double direct = eval_series({SeriesFamily::A, 0, kRoot3Over2, x / kRoot3Over2}, fixed(20'000)).value;
  const double variant = eval_j0_variant(x, fixed(10'000)).value;
  EXPECT_NEAR(direct, variant, 1e-9);
}

TEST(BesselJ, Examples) {
  EXPECT_NEAR(bessel_j(1, -2.0, SeriesFamily::C, 1.0), -0.5767248077568733872, 1e-9);
  EXPECT_NEAR(bessel_j(0, 3.0, SeriesFamily::C, 1.0), -0.2600520, 1e-7);
  EXPECT_NEAR(bessel_j(2, -3.0, SeriesFamily::A, 0.5), 0.48609126058589107691, 1e-8);
  EXPECT_THROW(bessel_j(1, 1.0, SeriesFamily::C, 0.0), InvalidArgument);
}

TEST(AsymptoticTerm, PublishedExamples) {
  for (std::int64_t k : {1, 2, 9}) {
    const double sk = k % 2 == 0 ? 1.0 : -1.0;
    const double kp = static_cast<double>(k) * pi;
    EXPECT_DOUBLE_EQ(asymptotic_term(SeriesFamily::A, 0, 3.0, k), -2.0 * sk);
    EXPECT_DOUBLE_EQ(asymptotic_term(SeriesFamily::C, 0, 3.0, k), sk * 9.0 / (kp * kp));
    EXPECT_DOUBLE_EQ(asymptotic_term(SeriesFamily::C, 1, 3.0, k), -2.0 * sk * (3.0 / kp) / kp);
  }
  EXPECT_THROW(asymptotic_term(SeriesFamily::B, 0, 1.0, 5), InvalidArgument);
  EXPECT_THROW(asymptotic_term(SeriesFamily::C, 0, 1.0, 0), InvalidArgument);
}

TEST(AsymptoticTerm, DivergenceProbe) {
  for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    EXPECT_NEAR(std::abs(term_a(0, x, 10'000)), 2.0, 0.02) << x;
  }
}

TEST(TailBound, Examples) {
  const SeriesSpec c0{SeriesFamily::C, 0, 1.0, 1.0};
  const ShiftedAngle p = shifted_phi(1.0, 101);
  EXPECT_NEAR(tail_bound(c0, 100), std::abs(2.0 * p.sin() / p.value()), 1e-18);
  EXPECT_THROW(tail_bound({SeriesFamily::A, 0, 1.0, 1.0}, 100), BoundNotApplicable);
  const double approx = 100.0 / std::pow(1000.0 * pi, 2);
  EXPECT_NEAR(tail_bound({SeriesFamily::C, 0, 1.0, 10.0}, 1000), approx, 0.1 * approx);
  EXPECT_THROW(tail_bound({SeriesFamily::C, 0, 0.5, 10.0}, 1000), BoundNotApplicable);
  EXPECT_EQ(tail_bound({SeriesFamily::C, 2, 1.0, 0.0}, 5), 0.0);
}

TEST(TailBound, BoundsLaterPartialSums) {
  for (auto fam : {SeriesFamily::B, SeriesFamily::C})
    for (int n : {1, 2, 3})
      for (double x : {1.0, 5.0}) {
        const SeriesSpec spec{fam, n, 1.0, x};
        const double bound = tail_bound(spec, 200);
        const double s = partial_sum(spec, 200);
        for (std::int64_t K2 : {202, 333, 800}) EXPECT_LE(std::abs(partial_sum(spec, K2) - s), bound);
      }
}

TEST(FourierIdentityAtZero, ConditionalConvergence) {
  // sum_k g^A_k 2(-1)^{k+1} -> 1 with O(1/K) error.
  for (double b : {0.3, 0.6, 0.9}) {
    for (std::int64_t K : {100, 1'000, 10'000, 100'000}) {
      const double err = std::abs(partial_sum({SeriesFamily::A, 0, b, 0.0}, K) - 1.0);
      EXPECT_LE(err * static_cast<double>(K), 10.0) << "b=" << b << " K=" << K;
    }
  }
}

TEST(CrossFamily, AgreeWithinTailBounds) {
  for (int n = 1; n <= 5; ++n)
    for (double x : {0.5, 2.0, 5.0}) {
      const auto a = eval_series({SeriesFamily::A, n, 1.0, x});
      const auto b = eval_series({SeriesFamily::B, n, 1.0, x});
      const auto c = eval_series({SeriesFamily::C, n, 1.0, x});
      const double floor = 1e-14;
      EXPECT_LE(std::abs(a.bessel_value - c.bessel_value), 2.0 * (a.bessel_tail_bound + c.bessel_tail_bound) + floor);
      EXPECT_LE(std::abs(b.bessel_value - c.bessel_value), 2.0 * (b.bessel_tail_bound + c.bessel_tail_bound) + floor);
      EXPECT_LE(std::abs(a.bessel_value - b.bessel_value), 2.0 * (a.bessel_tail_bound + b.bessel_tail_bound) + floor);
    }
}

TEST(CrossFamily, EvenOrderBRecoversJ2) {
  for (double b : {0.5, kRoot3Over2, 1.0}) {
    for (double x : {1.0, 4.0, 9.0}) {
      const auto bb = eval_or_partial({SeriesFamily::B, 2, b, x});
      const auto cc = eval_or_partial({SeriesFamily::C, 2, b, x});
      EXPECT_NEAR(bb.value, 4.0 / (b * b) * oracle_bessel_j(2, b * x), 1e-9);
      EXPECT_NEAR(bb.bessel_value, cc.bessel_value, 2e-10);
    }
  }
}

TEST(OracleGrid, SmallSubset) {
  for (auto fam : {SeriesFamily::A, SeriesFamily::B, SeriesFamily::C})
    for (int n : {1, 2, 3})
      for (double b : {0.5, 1.0})
        for (double x : {0.0, 1.0, 5.0}) {
          const auto r = eval_or_partial({fam, n, b, x});
          EXPECT_LE(std::abs(r.bessel_value - oracle_bessel_j(n, b * x)), std::max(1e-7, 2.0 * r.bessel_tail_bound));
        }
}
