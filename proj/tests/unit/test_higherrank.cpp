#include "sphfun/cfun.hpp"
#include "sphfun/errors.hpp"
#include "sphfun/higherrank.hpp"
#include "test_util.hpp"

namespace sphfun {
namespace {

using test::rel_close;
using C = Complex;

const RankOneSpace H2 = hyperbolic_space(2);

SpectralParam random_param(std::size_t rank) {
  SpectralParam p;
  for (std::size_t i = 0; i < rank; ++i) {
    p.coords.emplace_back(test::uniform(-2, 2), test::uniform(-1, 1));
  }
  return p;
}

FactorKTypeTable uniform_table(const WeylElement& w, const RankOneSpace& sp,
                               const std::vector<KTypeRankOne>& per_i) {
  std::map<std::pair<int, int>, FactorEntry> e;
  for (int j = 1; j <= static_cast<int>(w.length()); ++j) {
    for (int i = 1; i <= static_cast<int>(per_i.size()); ++i) {
      e[{j, i}] = FactorEntry{sp, per_i[i - 1]};
    }
  }
  return FactorKTypeTable(w, e);
}

TEST(LambdaChain, Examples) {
  const RootDatum d = datum::a2(1);
  const SpectralParam lam{{C(0.3, 0.1), C(-0.7, 0.4)}};
  const auto one = lambda_chain(d, WeylElement{{2}}, lam);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(rel_close(one[0], restrict(d, lam, d.simple_root_index(2)), 1e-15));

  const auto two = lambda_chain(d, WeylElement{{1, 2}}, lam);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_TRUE(rel_close(two[0], restrict(d, reflect(d, 2, lam), d.simple_root_index(1)), 1e-14));
  EXPECT_TRUE(rel_close(two[1], restrict(d, lam, d.simple_root_index(2)), 1e-14));

  EXPECT_THROW(lambda_chain(d, WeylElement{{1, 1}}, lam), InvalidInput);
}

TEST(LambdaChain, CoversTheNegativeSet) {
  // For a reduced word the chain values are the restrictions of lambda to the
  // roots made negative by w, each once.
  const RootDatum d = datum::b2(1, 2, 0);
  const SpectralParam lam = random_param(2);
  const WeylElement w0 = longest_element(d);
  const auto chain = lambda_chain(d, w0, lam);
  ASSERT_EQ(chain.size(), d.positive_roots().size());
  for (std::size_t j = 0; j < d.positive_roots().size(); ++j) {
    const C target = restrict(d, lam, j);
    int hits = 0;
    for (const C& v : chain) hits += std::abs(v - target) < 1e-12 ? 1 : 0;
    EXPECT_EQ(hits, 1) << "root " << j;
  }
}

TEST(DetA, TrivialKTypeGivesPowerOfCsigma) {
  const RootDatum d = datum::a2(1);
  const WeylElement w{{1, 2, 1}};
  const SpectralParam lam = random_param(2);
  EXPECT_TRUE(rel_close(det_A(d, w, lam, trivial_table(d, w, 1)), c_sigma(d, w, lam), 1e-13));
  EXPECT_TRUE(rel_close(det_A(d, w, lam, trivial_table(d, w, 2)), std::pow(c_sigma(d, w, lam), 2), 1e-13));
}

TEST(DetA, RankOneReduction) {
  for (const RankOneSpace& sp : {H2, RankOneSpace(4, 3)}) {
    const RootDatum d = datum::rank_one(sp.m_alpha, sp.m_2alpha);
    const WeylElement w{{1}};
    const KTypeRankOne kt = ktype_from_rs(sp, sp.m_2alpha > 0 ? 1 : 0, 2);
    const C Lam(0.9, -0.3);
    const SpectralParam lam{{Lam}};
    const auto table = uniform_table(w, sp, {kt});
    EXPECT_TRUE(rel_close(det_A(d, w, lam, table), C_sigma_minus(sp, kt, Lam), 1e-12));
    EXPECT_TRUE(rel_close(det_A_factorwise(d, w, lam, table), C_sigma_minus(sp, kt, Lam), 1e-12));
  }
}

TEST(DetA, AgreesWithFactorwiseProduct) {
  const RootDatum d = datum::a2(1);
  const WeylElement w{{1, 2, 1}};
  std::map<std::pair<int, int>, FactorEntry> e;
  const int s[3][2] = {{1, 2}, {0, 3}, {2, 1}};
  for (int j = 1; j <= 3; ++j) {
    for (int i = 1; i <= 2; ++i) e[{j, i}] = FactorEntry{H2, ktype_from_rs(H2, 0, s[j - 1][i - 1])};
  }
  const FactorKTypeTable table(w, e);
  EXPECT_NO_THROW(table.validate(d));
  EXPECT_EQ(table.ell(), 2);
  for (int k = 0; k < 10; ++k) {
    const SpectralParam lam = random_param(2);
    EXPECT_TRUE(rel_close(det_A(d, w, lam, table), det_A_factorwise(d, w, lam, table), 1e-10));
  }
}

TEST(DetA, BraidPathsAgreeForUniformTables) {
  const RootDatum d = datum::a2(1);
  const std::vector<KTypeRankOne> kts{ktype_from_rs(H2, 0, 1), ktype_from_rs(H2, 0, 2)};
  const WeylElement p{{1, 2, 1}}, q{{2, 1, 2}};
  for (int k = 0; k < 10; ++k) {
    const SpectralParam lam = random_param(2);
    EXPECT_TRUE(rel_close(det_A(d, p, lam, uniform_table(p, H2, kts)),
                          det_A(d, q, lam, uniform_table(q, H2, kts)), 1e-10));
  }
}

TEST(DetA, AdjointRelationForTrivialKType) {
  // With trivial delta, det C = (c(-lambda) conj(c_sigma(conj lambda)) / c_sigma(-lambda))^l.
  const RootDatum d = datum::rank_one(1);
  const WeylElement w{{1}};
  const C Lam(0.8, 0.0);
  const SpectralParam lam{{Lam}};
  const C v = det_C_from_adjoint(d, w, lam, trivial_table(d, w));
  EXPECT_TRUE(rel_close(v, std::conj(c_alpha(Lam, 1, 0)), 1e-13));
}

TEST(HsNorm, RealSpectralParameter) {
  const auto a = hs_norm_check(H2, ktype_from_rs(H2, 0, 2), 0.9);
  EXPECT_LT(a.rel_err, 1e-12);
  const RankOneSpace h5 = hyperbolic_space(5);
  const auto b = hs_norm_check(h5, ktype_from_rs(h5, 0, 1), 1.7);
  EXPECT_LT(b.rel_err, 1e-12);
  const RankOneSpace hh(4, 3);
  const auto c = hs_norm_check(hh, ktype_from_rs(hh, 1, 2), 0.45);
  EXPECT_LT(c.rel_err, 1e-12);
}

TEST(FactorTable, ValidationErrors) {
  const RootDatum d = datum::a2(1);
  const WeylElement w{{1, 2}};
  std::map<std::pair<int, int>, FactorEntry> e;
  e[{1, 1}] = FactorEntry{H2, KTypeRankOne::trivial()};
  // Missing (2, 1).
  EXPECT_THROW(FactorKTypeTable(w, e).validate(d), InvalidInput);
  // Wrong multiplicities for the A2(1) roots.
  e[{2, 1}] = FactorEntry{hyperbolic_space(3), KTypeRankOne::trivial()};
  EXPECT_THROW(FactorKTypeTable(w, e).validate(d), InvalidInput);
  // Inconsistent K-type.
  e[{2, 1}] = FactorEntry{H2, KTypeRankOne{-4, 0, 0, 3}};
  EXPECT_THROW(FactorKTypeTable(w, e).validate(d), InvalidInput);
  e[{2, 1}] = FactorEntry{H2, ktype_from_rs(H2, 0, 3)};
  EXPECT_NO_THROW(FactorKTypeTable(w, e).validate(d));
  // Non-reduced word.
  EXPECT_THROW(det_A(d, WeylElement{{1, 1}}, random_param(2), trivial_table(d, WeylElement{{1}})),
               InvalidInput);
}

}  // namespace
}  // namespace sphfun
