#include <numbers>

#include "sphfun/cfun.hpp"
#include "sphfun/errors.hpp"
#include "test_util.hpp"

namespace sphfun {
namespace {

using test::rel_close;
using C = Complex;
constexpr C I(0.0, 1.0);

SpectralParam param(std::initializer_list<C> c) { return SpectralParam{std::vector<C>(c)}; }

TEST(CAlpha, OneAtMinusIRho) {
  for (auto [m, m2] : {std::pair{1, 0}, {2, 0}, {3, 0}, {2, 1}, {4, 3}, {8, 7}, {5, 0}}) {
    const double r = 0.5 * m + m2;
    EXPECT_TRUE(rel_close(c_alpha(-I * r, m, m2), 1.0, 1e-14)) << m << "," << m2;
  }
}

TEST(CAlpha, HyperbolicPlaneClosedForm) {
  for (C Lam : {C(0.3, 0), C(1.7, -0.4), C(-2.2, 0.9), C(0.05, -3)}) {
    const C x = I * Lam;
    const C want = gamma(x) / (std::sqrt(std::numbers::pi) * gamma(x + 0.5));
    EXPECT_TRUE(rel_close(c_alpha(Lam, 1, 0), want, 1e-13)) << Lam;
  }
}

TEST(CAlpha, ThreeSpaceIsReciprocal) {
  for (C Lam : {C(2, -0.3), C(0.4, 0.4), C(-1, 0)}) {
    EXPECT_TRUE(rel_close(c_alpha(Lam, 2, 0), 1.0 / (I * Lam), 1e-14));
  }
}

TEST(CAlpha, ReferenceValues) {
  EXPECT_TRUE(rel_close(c_alpha(C(1, -0.5), 1, 0), C(0.44715406076735684629, -0.34231052734203001773), 1e-13));
  EXPECT_TRUE(rel_close(c_alpha(C(2, -0.3), 2, 0), C(0.073349633251833738236, -0.48899755501222493967), 1e-13));
  EXPECT_TRUE(rel_close(c_alpha(C(0.7, 0.2), 3, 0), C(-2.1480970320401027302, -2.4916181978466627106), 1e-13));
  EXPECT_TRUE(rel_close(c_alpha(C(1.1, 0.4), 2, 1), C(-2.3664120340965038859, -1.3541364796722752431), 1e-13));
  EXPECT_TRUE(rel_close(c_alpha(C(0.6, -1.2), 4, 3), C(15.746516362916282433, -23.379645706311920607), 1e-13));
}

TEST(CAlpha, ConjugationSymmetry) {
  for (int k = 0; k < 100; ++k) {
    const C Lam(test::uniform(-3, 3), test::uniform(-3, 3));
    const int m = 1 + k % 5, m2 = k % 3 == 0 ? 1 : 0;
    try {
      const C a = c_alpha(Lam, m, m2);
      const C b = c_alpha(-std::conj(Lam), m, m2);
      EXPECT_TRUE(rel_close(b, std::conj(a), 1e-13));
    } catch (const PoleError&) {
    }
  }
}

TEST(CAlpha, CalibrationIsPositive) {
  for (auto [m, m2] : {std::pair{1, 0}, {2, 1}, {6, 5}}) {
    const double k = c_alpha_calibration_diagnostic(m, m2);
    EXPECT_GT(k, 0.0);
    const C Lam(0.8, -0.3);
    EXPECT_TRUE(rel_close(c_alpha_verbatim(Lam, m, m2), k * c_alpha(Lam, m, m2), 1e-13));
  }
}

TEST(CAlpha, PoleKinds) {
  try {
    c_alpha(0.0, 1, 0);
    FAIL() << "expected a pole";
  } catch (const PoleError& e) {
    EXPECT_EQ(e.kind(), PoleKind::numerator);
  }
  // iLambda = -1/2 on H^2: the second denominator argument is 0.
  try {
    c_alpha(0.5 * I, 1, 0);
    FAIL() << "expected a pole";
  } catch (const PoleError& e) {
    EXPECT_EQ(e.kind(), PoleKind::denominator);
  }
}

TEST(CFull, RankOneAgreesWithCAlpha) {
  const RootDatum d = datum::rank_one(4, 3);
  const C Lam(0.6, -1.2);
  EXPECT_TRUE(rel_close(c_full(d, param({Lam})), c_alpha(Lam, 4, 3), 1e-15));
  EXPECT_TRUE(rel_close(c_full_normalized(d, param({Lam})), c_alpha(Lam, 4, 3), 1e-14));
}

TEST(CFull, ProductOnA1xA1) {
  const RootDatum d = datum::a1xa1({1, 0}, {2, 1});
  const SpectralParam lam = param({C(0.4, -0.2), C(1.3, 0.5)});
  const C want = c_alpha(restrict(d, lam, d.simple_root_index(1)), 1, 0) *
                 c_alpha(restrict(d, lam, d.simple_root_index(2)), 2, 1);
  EXPECT_TRUE(rel_close(c_full(d, lam), want, 1e-14));
}

TEST(CFull, NormalizedIsOneAtMinusIRho) {
  for (const RootDatum& d : {datum::a2(1), datum::a2(4), datum::b2(1, 2, 0), datum::b2(2, 3, 1)}) {
    SpectralParam r = rho(d);
    for (auto& c : r.coords) c *= -I;
    EXPECT_TRUE(rel_close(c_full_normalized(d, r), 1.0, 1e-13)) << d.name();
  }
}

TEST(CSigma, IdentityAndLongest) {
  const RootDatum d = datum::b2(1, 2, 0);
  const SpectralParam lam = param({C(0.7, -0.1), C(1.9, 0.3)});
  EXPECT_TRUE(rel_close(c_sigma(d, WeylElement{}, lam), 1.0, 0.0));
  EXPECT_TRUE(rel_close(c_sigma(d, longest_element(d), lam), c_full(d, lam), 1e-14));
  EXPECT_THROW(c_sigma(d, WeylElement{{1, 1}}, lam), InvalidInput);
}

TEST(CSigma, CocycleOnA2) {
  const RootDatum d = datum::a2(2);
  const SpectralParam lam = param({C(0.35, 0.2), C(-1.1, 0.6)});
  const WeylElement u{{1}}, v{{2, 1}};
  const C lhs = c_sigma(d, u * v, lam);
  const C rhs = c_sigma(d, u, weyl_apply(d, v, lam)) * c_sigma(d, v, lam);
  EXPECT_TRUE(rel_close(lhs, rhs, 1e-12));
}

TEST(CSigma, FlaggedVariantReportsPoles) {
  const RootDatum d = datum::rank_one(1);
  const CFunctionValue v = c_full_flagged(d, param({0.0}));
  EXPECT_TRUE(v.pole_flag);
  EXPECT_TRUE(std::isnan(v.value.real()));
  ASSERT_TRUE(v.pole_kind.has_value());
  EXPECT_EQ(*v.pole_kind, PoleKind::numerator);
  const CFunctionValue ok = c_full_flagged(d, param({C(1.0, -0.5)}));
  EXPECT_FALSE(ok.pole_flag);
  EXPECT_TRUE(rel_close(ok.value, c_alpha(C(1.0, -0.5), 1, 0), 1e-15));
}

TEST(Simplicity, HyperbolicPlane) {
  const RootDatum d = datum::rank_one(1);
  EXPECT_TRUE(is_simple(d, param({1.3})));
  EXPECT_TRUE(is_simple(d, param({C(0.0, -0.5)})));
  // Denominator arguments (3/2 + iLambda)/2 and (1/2 + iLambda)/2.
  EXPECT_FALSE(is_simple(d, param({C(0.0, 0.5)})));
  EXPECT_FALSE(is_simple(d, param({C(0.0, 1.5)})));
  EXPECT_FALSE(is_simple(d, param({C(0.0, 2.5)})));
  EXPECT_TRUE(is_simple(d, param({C(0.0, 1.0)})));
  EXPECT_TRUE(is_simple(d, param({C(1e-6, 0.5)})));
  EXPECT_FALSE(is_simple(d, param({C(1e-6, 0.5)}), 1e-5));
}

TEST(Simplicity, GammaPlusX) {
  const RootDatum d = datum::rank_one(1);
  EXPECT_TRUE(rel_close(gamma_plus_X(d, param({0.0})), std::numbers::pi * std::sqrt(2.0), 1e-14));
  EXPECT_THROW(gamma_plus_X(d, param({C(0.0, 0.5)})), PoleError);
  const auto args = denominator_args(d, param({C(0.2, -0.1)}), 0);
  EXPECT_TRUE(rel_close(args.first, (1.5 + I * C(0.2, -0.1)) / 2.0, 1e-15));
  EXPECT_TRUE(rel_close(args.second, (0.5 + I * C(0.2, -0.1)) / 2.0, 1e-15));
}

TEST(Simplicity, EvenMultiplicity) {
  // m = 2: (2 + iLambda)/2 and (1 + iLambda)/2.
  const RootDatum d = datum::rank_one(2);
  EXPECT_FALSE(is_simple(d, param({C(0.0, 1.0)})));
  EXPECT_FALSE(is_simple(d, param({C(0.0, 2.0)})));
  EXPECT_TRUE(is_simple(d, param({C(0.0, 0.5)})));
  EXPECT_TRUE(is_simple(d, param({C(0.0, -1.0)})));
}

}  // namespace
}  // namespace sphfun
