#include <numbers>

#include "sphfun/cfun.hpp"
#include "sphfun/errors.hpp"
#include "sphfun/rankone.hpp"
#include "test_util.hpp"

namespace sphfun {
namespace {

using test::abs_close;
using test::rel_close;
using C = Complex;
constexpr C I(0.0, 1.0);

const RankOneSpace H2 = hyperbolic_space(2);
const RankOneSpace H3 = hyperbolic_space(3);
const RankOneSpace CH2(2, 1);
const RankOneSpace HH2(4, 3);

TEST(KType, SolveRsExamples) {
  EXPECT_EQ(solve_rs(H2, 0, 0), std::pair(0, 0));
  EXPECT_EQ(solve_rs(H2, -4, 0), std::pair(0, 2));
  EXPECT_EQ(solve_rs(H3, -2, 0), std::pair(0, 1));  // s (s + 1) = 2
  // r^2 = 1 and s (s + 2) = 3 on the complex hyperbolic plane.
  EXPECT_EQ(solve_rs(CH2, -2, -4), std::pair(1, 1));
  EXPECT_EQ(solve_rs(CH2, -7, -4), std::pair(1, 2));
}

TEST(KType, SolveRsErrors) {
  EXPECT_THROW(solve_rs(H2, -2, 0), InvalidInput);   // s^2 = 2
  EXPECT_THROW(solve_rs(H2, 1, 0), InvalidInput);    // s^2 = -1
  EXPECT_THROW(solve_rs(CH2, 0, 4), InvalidInput);   // r^2 = -1
}

TEST(KType, RoundTripThroughRs) {
  for (const RankOneSpace& sp : {H2, H3, CH2, HH2}) {
    for (int s = 0; s <= 3; ++s) {
      for (int r = 0; r <= s; ++r) {
        if (sp.m_2alpha == 0 && r != 0) continue;
        const KTypeRankOne kt = ktype_from_rs(sp, r, s);
        EXPECT_NO_THROW(validate_ktype(sp, kt));
        const KTypeRankOne back = make_ktype(sp, kt.d_alpha, kt.d_2alpha);
        EXPECT_EQ(back.s, s);
      }
    }
  }
}

TEST(KType, ValidationRejectsInconsistentData) {
  KTypeRankOne kt = ktype_from_rs(H2, 0, 2);
  kt.s = 3;
  EXPECT_THROW(validate_ktype(H2, kt), InvalidInput);
  KTypeRankOne bad{0, 0, 2, 1};
  EXPECT_THROW(validate_ktype(CH2, bad), InvalidInput);
}

TEST(CLambdaDelta, TrivialAndClosedForms) {
  for (C Lam : {C(0.4, 0.1), C(2.0, -1.0)}) {
    EXPECT_TRUE(rel_close(c_lambda_delta(H3, KTypeRankOne::trivial(), Lam), 1.0, 1e-15));
    // r = s = 1 on (2, 1): X / 2 with X = iLambda + 2.
    EXPECT_TRUE(rel_close(c_lambda_delta(CH2, ktype_from_rs(CH2, 1, 1), Lam), (I * Lam + 2.0) / 2.0, 1e-14));
    // s = 2 on H^2: (X/2)((X+1)/2) with X = iLambda + 1/2.
    const C X = I * Lam + 0.5;
    EXPECT_TRUE(rel_close(c_lambda_delta(H2, ktype_from_rs(H2, 0, 2), Lam), (X / 2.0) * ((X + 1.0) / 2.0), 1e-14));
  }
}

TEST(PhiTau, LegendreReferenceValues) {
  EXPECT_TRUE(rel_close(phi_zonal(H2, C(0.7, 0.2), 1.3), C(0.73947790961198454468, -0.095505396670429112925), 1e-13));
  EXPECT_TRUE(rel_close(phi_zonal(H2, 1.5, 2.0), -0.18044408554077005509, 1e-12));
  EXPECT_TRUE(rel_close(phi_zonal(H2, C(0.3, -0.6), 0.4), C(1.0007434836590133326, 0.014310639701499049946), 1e-13));
}

TEST(PhiTau, ThreeSpaceReferenceValues) {
  EXPECT_TRUE(rel_close(phi_zonal(H3, C(0.7, 0.2), 1.3), C(0.67068623385703522195, -0.055883843455683472516), 1e-13));
  EXPECT_TRUE(rel_close(phi_zonal(H3, 1.5, 2.0), 0.025939792215243459161, 1e-12));
  EXPECT_TRUE(rel_close(phi_zonal(H3, C(0.3, -0.6), 0.4), C(0.98082252622820022046, 0.0093891110750581944346), 1e-13));
}

TEST(PhiTau, ThreeSpaceElementaryFormula) {
  for (double t : {0.1, 1.0, 5.0, 20.0}) {
    const C Lam(1.3, -0.2);
    EXPECT_TRUE(rel_close(phi_zonal(H3, Lam, t), std::sin(Lam * t) / (Lam * std::sinh(t)), 1e-12)) << t;
  }
}

TEST(PhiTau, ValuesAtOrigin) {
  EXPECT_TRUE(rel_close(phi_zonal(HH2, C(0.9, 0.3), 0.0), 1.0, 1e-15));
  EXPECT_TRUE(abs_close(phi_tau(H2, ktype_from_rs(H2, 0, 1), 0.9, 0.0), 0.0, 0.0));
  EXPECT_THROW(phi_tau(H2, KTypeRankOne::trivial(), 0.9, -1.0), DomainError);
}

TEST(PhiTau, ZonalIsWeylInvariant) {
  for (const RankOneSpace& sp : {H2, H3, CH2, HH2}) {
    for (double t : {0.2, 1.5, 6.0}) {
      const C Lam(0.8, 0.35);
      EXPECT_TRUE(rel_close(phi_zonal(sp, Lam, t), phi_zonal(sp, -Lam, t), 1e-11));
    }
  }
}

TEST(Series, FirstCoefficients) {
  const SeriesCoefficients sc = hc_series_gammas(H2, C(0.7, 0.1), 10);
  ASSERT_EQ(sc.gammas.size(), 11u);
  EXPECT_TRUE(rel_close(sc.gammas[0], 1.0, 0.0));
  EXPECT_TRUE(abs_close(sc.gammas[1], 0.0, 0.0));  // only even A_j are non-zero
  // n = 2: 2 (2 - 2 iLambda) Gamma_2 = -2 m_a mu.
  const C mu = I * C(0.7, 0.1) - 0.5;
  EXPECT_TRUE(rel_close(sc.gammas[2], -2.0 * mu / (2.0 * (2.0 - 2.0 * I * C(0.7, 0.1))), 1e-15));
}

TEST(Series, MatchesClosedForm) {
  for (const RankOneSpace& sp : {H2, H3, CH2}) {
    for (C Lam : {C(0.6, 0), C(1.4, -0.3), C(0.3, 0.7)}) {
      for (double t : {1.0, 2.0, 4.0}) {
        EXPECT_TRUE(rel_close(hc_series_eval(sp, Lam, t, 40), phi_zonal(sp, Lam, t), 1e-8))
            << sp.m_alpha << "," << sp.m_2alpha << " Lam=" << Lam << " t=" << t;
      }
    }
  }
}

TEST(Series, Resonance) {
  try {
    hc_series_gammas(H2, -I, 10);
    FAIL() << "expected resonance";
  } catch (const ResonanceError& e) {
    EXPECT_EQ(e.n(), 2);
  }
  EXPECT_THROW(hc_series_eval(H2, 0.5, 0.0), DomainError);
}

TEST(Series, CoefficientGrowthIsSubexponential) {
  const SeriesCoefficients sc = hc_series_gammas(H3, C(1.1, -0.4), 60);
  double worst = -1e300;
  for (int n = 20; n <= 60; ++n) {
    if (sc.gammas[n] == C(0)) continue;
    worst = std::max(worst, std::log(std::abs(sc.gammas[n])) / n);
  }
  EXPECT_LT(worst, 0.5);
}

TEST(Series, TailEstimate) {
  EXPECT_TRUE(std::isinf(hc_series_tail_estimate(H2, 0.8, 0.5)));
  const double tail = hc_series_tail_estimate(H2, 0.8, 2.0);
  EXPECT_GE(tail, 0.0);
  EXPECT_LT(tail, 1e-8);
}

TEST(CFunctions, CeAndTrivialCsigma) {
  const C Lam(1.2, -0.4);
  EXPECT_TRUE(rel_close(C_e(HH2, Lam), c_alpha(Lam, 4, 3), 1e-15));
  EXPECT_TRUE(rel_close(C_sigma_minus(HH2, KTypeRankOne::trivial(), Lam), c_alpha(Lam, 4, 3), 1e-14));
  const KTypeRankOne kt = ktype_from_rs(H2, 0, 2);
  EXPECT_TRUE(rel_close(C_sigma_minus(H2, kt, Lam),
                        c_lambda_delta(H2, kt, -Lam) / c_lambda_delta(H2, kt, Lam) * c_alpha(Lam, 1, 0),
                        1e-14));
}

TEST(Asymptotics, Factor) {
  EXPECT_DOUBLE_EQ(asymptotic_factor(H2, ktype_from_rs(H2, 0, 2)), 2.0);
  EXPECT_DOUBLE_EQ(asymptotic_factor(H3, ktype_from_rs(H3, 0, 1)), 1.5);
  EXPECT_DOUBLE_EQ(asymptotic_factor(H3, KTypeRankOne::trivial()), 1.0);
}

TEST(Asymptotics, LargeTLimitInDecayingHalfPlane) {
  for (double eta : {-0.5, -0.8}) {
    for (double re : {0.5, 1.2}) {
      const C Lam(re, eta);
      const KTypeRankOne kt = ktype_from_rs(H2, 0, 2);
      EXPECT_TRUE(rel_close(limit_large_t(H2, kt, Lam, 18.0), limit_large_t_value(H2, kt, Lam), 1e-6))
          << Lam;
    }
  }
}

TEST(Asymptotics, LargeTRemainderGrowsInUpperHalfPlane) {
  // For Im Lambda > 0 the second exponential dominates; the normalized value
  // drifts away from the limit as t grows.
  const C Lam(0.5, 0.8);
  const KTypeRankOne kt = ktype_from_rs(H2, 0, 2);
  const C lim = limit_large_t_value(H2, kt, Lam);
  const double e10 = std::abs(limit_large_t(H2, kt, Lam, 10.0) - lim);
  const double e18 = std::abs(limit_large_t(H2, kt, Lam, 18.0) - lim);
  EXPECT_GT(e18, e10);
}

TEST(Asymptotics, LeadingCoefficientsForRealLambda) {
  for (const RankOneSpace& sp : {H2, CH2}) {
    const KTypeRankOne kt = ktype_from_rs(sp, sp.m_2alpha > 0 ? 1 : 0, 1);
    const double Lam = 0.9;
    const auto [k1, k2] = extract_leading_coefficients(sp, kt, Lam, 14.0, 14.7);
    const double af = asymptotic_factor(sp, kt);
    EXPECT_TRUE(rel_close(k1, af * C_e(sp, Lam), 1e-6));
    EXPECT_TRUE(rel_close(k2, af * C_sigma_minus(sp, kt, -Lam), 1e-6));
  }
}

TEST(SmallT, RatioTendsToCLambdaDeltaQuotient) {
  for (const KTypeRankOne& kt : {ktype_from_rs(H2, 0, 1), ktype_from_rs(H2, 0, 2)}) {
    for (C Lam : {C(0.7, 0.0), C(1.3, -0.4)}) {
      const C want = c_lambda_delta(H2, kt, Lam) / c_lambda_delta(H2, kt, -Lam);
      EXPECT_TRUE(rel_close(small_t_ratio(H2, kt, Lam, 1e-3), want, 1e-4));
    }
  }
}

TEST(SmallT, TrivialKTypeAndErrors) {
  EXPECT_TRUE(rel_close(small_t_ratio(H3, KTypeRankOne::trivial(), C(0.4, 0.2), 0.01), 1.0, 1e-12));
  EXPECT_THROW(small_t_ratio(H2, ktype_from_rs(H2, 0, 1), 0.7, 0.0), DomainError);
}

}  // namespace
}  // namespace sphfun
