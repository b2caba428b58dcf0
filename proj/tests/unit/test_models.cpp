#include <array>
#include <numbers>

#include "sphfun/cfun.hpp"
#include "sphfun/errors.hpp"
#include "sphfun/models.hpp"
#include "test_util.hpp"

namespace sphfun {
namespace {

using test::abs_close;
using test::rel_close;
using C = Complex;

Matrix2 random_sl2() {
  const Matrix2 g = rotation(test::uniform(-3, 3)) * a_t(test::uniform(-4, 4)) *
                    n_upper(test::uniform(-5, 5));
  return g;
}

TEST(Iwasawa, Examples) {
  EXPECT_NEAR(iwasawa_H(a_t(1.7)), 1.7, 1e-15);
  EXPECT_NEAR(iwasawa_H(n_upper(3.0)), 0.0, 1e-15);
  EXPECT_NEAR(iwasawa_H(n_bar(2.0)), std::log(5.0), 1e-15);
  EXPECT_NEAR(iwasawa_H(rotation(0.4) * a_t(-2.0) * n_upper(1.5)), -2.0, 1e-14);
}

TEST(Iwasawa, ReconstructsRandomElements) {
  for (int k = 0; k < 1000; ++k) {
    const Matrix2 g = random_sl2();
    const Matrix2 h = reconstruct(iwasawa(g));
    const double scale = std::max({std::abs(g.a), std::abs(g.b), std::abs(g.c), std::abs(g.d)});
    EXPECT_NEAR(h.a, g.a, 1e-12 * scale);
    EXPECT_NEAR(h.b, g.b, 1e-12 * scale);
    EXPECT_NEAR(h.c, g.c, 1e-12 * scale);
    EXPECT_NEAR(h.d, g.d, 1e-12 * scale);
  }
}

TEST(Iwasawa, LeftKInvariance) {
  for (int k = 0; k < 50; ++k) {
    const Matrix2 g = random_sl2();
    EXPECT_NEAR(iwasawa_H(rotation(test::uniform(-3, 3)) * g), iwasawa_H(g), 1e-12);
  }
}

TEST(Iwasawa, RejectsNonUnimodular) {
  EXPECT_THROW(iwasawa(Matrix2{2, 0, 0, 1}), InvalidInput);
  EXPECT_THROW(iwasawa_H(Matrix2{1, 1, 1, 1}), InvalidInput);
}

TEST(Horocycle, Examples) {
  const std::array<double, 3> origin{0, 0, 0};
  const std::array<double, 3> b{0, 1, 0};
  EXPECT_NEAR(horocycle_bracket(3, origin, b), 0.0, 1e-15);
  const double r = 0.6;
  const std::array<double, 3> x{0, r, 0};
  EXPECT_NEAR(horocycle_bracket(3, x, b), 2 * std::atanh(r), 1e-14);
  const std::array<double, 3> xm{0, -r, 0};
  EXPECT_NEAR(horocycle_bracket(3, xm, b), -2 * std::atanh(r), 1e-14);
}

TEST(Horocycle, AgreesWithMatrixModel) {
  // a_t . o lies at distance t along b = 1 in the disk.
  for (double t : {0.3, 1.0, 2.5}) {
    const C z = disk_point(a_t(t));
    const std::array<double, 2> x{z.real(), z.imag()};
    const std::array<double, 2> b{1.0, 0.0};
    EXPECT_NEAR(horocycle_bracket(2, x, b), t, 1e-12);
    EXPECT_NEAR(horocycle_bracket(2, x, b), iwasawa_H(a_t(t)), 1e-12);
  }
  EXPECT_TRUE(abs_close(boundary_point(Matrix2{}), 1.0, 1e-15));
  EXPECT_TRUE(abs_close(cayley(C(0, 1)), 0.0, 1e-15));
}

TEST(Horocycle, DomainErrors) {
  const std::array<double, 2> b{1, 0};
  const std::array<double, 2> out{1.0, 0.0};
  const std::array<double, 2> off{0.5, 0.5};
  const std::array<double, 2> in{0.1, 0.2};
  EXPECT_THROW(horocycle_bracket(2, out, b), DomainError);
  EXPECT_THROW(horocycle_bracket(2, in, off), DomainError);
  const std::array<double, 3> wrong_dim{0, 0, 0};
  EXPECT_THROW(horocycle_bracket(2, wrong_dim, b), InvalidInput);
}

TEST(QuadOracles, ZonalOnHyperbolicPlane) {
  for (C Lam : {C(0.7, 0.0), C(1.3, -0.4)}) {
    for (double t : {0.0, 0.5, 2.0}) {
      const auto q = quad_phi_K(2, Lam, t);
      EXPECT_TRUE(abs_close(q.value, phi_zonal(hyperbolic_space(2), Lam, t), 1e-8)) << Lam << " " << t;
    }
  }
}

TEST(QuadOracles, ZonalOnHigherDimensions) {
  for (int n : {3, 4}) {
    const C Lam(0.9, 0.2);
    EXPECT_TRUE(abs_close(quad_phi_K(n, Lam, 1.1).value, phi_zonal(hyperbolic_space(n), Lam, 1.1), 1e-8));
  }
}

TEST(QuadOracles, CFunctionIntegral) {
  for (int n : {2, 3, 4}) {
    for (C Lam : {C(1.0, -0.5), C(-0.4, -1.1)}) {
      const auto q = quad_c_Nbar(n, Lam);
      EXPECT_TRUE(rel_close(q.value, c_alpha(Lam, n - 1, 0), 1e-6)) << n << " " << Lam;
    }
  }
  EXPECT_THROW(quad_c_Nbar(2, 0.8), DomainError);
}

TEST(QuadOracles, MeasureConstantIsShared) {
  const QuadratureSpec spec;
  const double k = nbar_measure_constant(2, spec);
  EXPECT_TRUE(rel_close(nbar_integral(2, 1.0, spec).value, k, 1e-10));
  // Unnormalized integral of (1 + x^2)^{-1} is pi.
  EXPECT_TRUE(rel_close(k, std::numbers::pi, 1e-9));
}

TEST(QuadOracles, CsigmaOnSL2) {
  for (int ch : {0, 2, 4}) {
    const C Lam(0.8, -0.6);
    const KTypeRankOne kt = character_ktype(ch);
    EXPECT_EQ(kt.s, ch / 2);
    const auto q = quad_Csigma_sl2(ch, Lam);
    EXPECT_TRUE(rel_close(q.value, C_sigma_minus(hyperbolic_space(2), kt, Lam), 1e-6)) << ch;
  }
  // Csigma for -Lambda-bar is the conjugate.
  const C Lam(0.8, -0.6);
  EXPECT_TRUE(rel_close(quad_Csigma_sl2(2, -std::conj(Lam)).value, std::conj(quad_Csigma_sl2(2, Lam).value), 1e-8));
}

TEST(QuadOracles, EisensteinEntryIsProportionalToPhiTau) {
  const C Lam(0.6, 0.1);
  for (int ch : {2, 4}) {
    for (double t : {0.4, 1.5}) {
      const auto q = quad_eisenstein_sl2(ch, Lam, t);
      EXPECT_TRUE(abs_close(q.value, eisenstein_sl2_closed_form(ch, Lam, t), 1e-8));
    }
  }
}

TEST(FunctionalEquation, Zonal) {
  for (auto [t1, t2] : {std::pair{0.0, 1.0}, {1.0, 1.0}, {0.5, 2.0}}) {
    const auto r = functional_equation_check(2, C(0.7, 0.3), t1, t2);
    EXPECT_LT(r.abs_err, 1e-6 * std::max(1.0, std::abs(r.closed_form)));
  }
  const auto r3 = functional_equation_check(3, C(1.1, 0.0), 0.5, 2.0);
  EXPECT_LT(r3.abs_err, 1e-6);
}

TEST(FunctionalEquation, CharacterEntry) {
  const auto r = functional_equation_check_entry(2, C(0.9, -0.2), 0.5, 2.0);
  EXPECT_LT(r.abs_err, 1e-6 * std::max(1.0, std::abs(r.closed_form)));
}

TEST(QuadOracles, Deterministic) {
  const auto a = quad_phi_K(2, C(0.4, 0.1), 1.0);
  const auto b = quad_phi_K(2, C(0.4, 0.1), 1.0);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.nodes, b.nodes);
}

}  // namespace
}  // namespace sphfun
