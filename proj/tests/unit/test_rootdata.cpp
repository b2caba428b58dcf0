#include <set>

#include "sphfun/errors.hpp"
#include "sphfun/rootdata.hpp"
#include "test_util.hpp"

namespace sphfun {
namespace {

std::vector<RootDatum> all_data() {
  return {datum::rank_one(1), datum::rank_one(4, 3), datum::hyperbolic(5),
          datum::a1xa1({1, 0}, {2, 1}), datum::a2(1), datum::a2(4),
          datum::b2(1, 1, 0), datum::b2(1, 2, 0), datum::b2(2, 3, 1)};
}

SpectralParam random_param(std::size_t rank) {
  SpectralParam p;
  for (std::size_t i = 0; i < rank; ++i) {
    p.coords.emplace_back(test::uniform(-2, 2), test::uniform(-2, 2));
  }
  return p;
}

TEST(RootDatum, RhoOnHyperbolicSpace) {
  for (int n = 2; n <= 7; ++n) {
    const SpectralParam r = rho(datum::hyperbolic(n));
    ASSERT_EQ(r.rank(), 1u);
    EXPECT_DOUBLE_EQ(r.coords[0].real(), 0.5 * (n - 1));
  }
  EXPECT_DOUBLE_EQ(rho(datum::rank_one(4, 3)).coords[0].real(), 5.0);
}

TEST(RootDatum, RhoPairsWithSimpleRoots) {
  // <rho, alpha_0> = m_alpha/2 + m_2alpha on every simple root.
  for (const RootDatum& d : all_data()) {
    const SpectralParam r = rho(d);
    for (int i = 1; i <= static_cast<int>(d.rank()); ++i) {
      const std::size_t j = d.simple_root_index(i);
      EXPECT_NEAR(std::abs(restrict(d, r, j) - d.multiplicity(j).rho_coefficient()), 0.0, 1e-14)
          << d.name() << " root " << i;
    }
  }
}

TEST(RootDatum, A2RhoIsSumOfSimpleRoots) {
  const RootDatum d = datum::a2(1);
  const SpectralParam r = rho(d);
  for (std::size_t k = 0; k < 2; ++k) {
    const double want = d.simple_roots()[0][k] + d.simple_roots()[1][k];
    EXPECT_NEAR(r.coords[k].real(), want, 1e-15);
  }
}

TEST(WeylGroup, Orders) {
  EXPECT_EQ(enumerate_weyl_group(datum::rank_one(2)).size(), 2u);
  EXPECT_EQ(enumerate_weyl_group(datum::a1xa1()).size(), 4u);
  EXPECT_EQ(enumerate_weyl_group(datum::a2()).size(), 6u);
  EXPECT_EQ(enumerate_weyl_group(datum::b2()).size(), 8u);
}

TEST(WeylGroup, LongestElement) {
  EXPECT_EQ(longest_element(datum::rank_one(1)).length(), 1u);
  EXPECT_EQ(longest_element(datum::a1xa1()).length(), 2u);
  EXPECT_EQ(longest_element(datum::a2()).length(), 3u);
  EXPECT_EQ(longest_element(datum::b2(1, 2, 1)).length(), 4u);
  for (const RootDatum& d : all_data()) {
    const WeylElement w0 = longest_element(d);
    EXPECT_EQ(negative_set(d, w0).size(), d.positive_roots().size()) << d.name();
    // w0 = -1 except on A2, where it is minus the diagram flip.
    if (classify(d) == RootSystemType::A2) continue;
    const SpectralParam lam = random_param(d.rank());
    const SpectralParam img = weyl_apply(d, w0, lam);
    for (std::size_t k = 0; k < d.rank(); ++k) {
      EXPECT_NEAR(std::abs(img.coords[k] + lam.coords[k]), 0.0, 1e-13);
    }
  }
}

TEST(WeylGroup, EveryEnumeratedWordIsReducedAndDistinct) {
  for (const RootDatum& d : all_data()) {
    std::set<std::vector<std::size_t>> seen;
    for (const WeylElement& w : enumerate_weyl_group(d)) {
      EXPECT_TRUE(is_reduced(d, w));
      EXPECT_EQ(negative_set(d, w).size(), w.length());
      seen.insert(negative_set(d, w));
    }
    // Distinct elements need not have distinct negative sets in general, but
    // in rank <= 2 the action on a regular vector tells them apart.
    std::set<std::pair<long long, long long>> images;
    const RealVector v = d.rank() == 1 ? RealVector{0.731} : RealVector{0.731, 0.219};
    for (const WeylElement& w : enumerate_weyl_group(d)) {
      const RealVector img = weyl_apply(d, w, v);
      images.emplace(std::llround(img[0] * 1e9), d.rank() > 1 ? std::llround(img[1] * 1e9) : 0);
    }
    EXPECT_EQ(images.size(), enumerate_weyl_group(d).size()) << d.name();
  }
}

TEST(WeylGroup, BraidRelations) {
  const RootDatum a2 = datum::a2(2);
  const RootDatum b2 = datum::b2(1, 2, 0);
  for (int k = 0; k < 20; ++k) {
    const SpectralParam lam = random_param(2);
    const auto x = weyl_apply(a2, WeylElement{{1, 2, 1}}, lam);
    const auto y = weyl_apply(a2, WeylElement{{2, 1, 2}}, lam);
    const auto u = weyl_apply(b2, WeylElement{{1, 2, 1, 2}}, lam);
    const auto v = weyl_apply(b2, WeylElement{{2, 1, 2, 1}}, lam);
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_NEAR(std::abs(x.coords[i] - y.coords[i]), 0.0, 1e-13);
      EXPECT_NEAR(std::abs(u.coords[i] - v.coords[i]), 0.0, 1e-13);
    }
  }
}

TEST(WeylGroup, ReflectionsAreInvolutiveIsometries) {
  for (const RootDatum& d : all_data()) {
    for (int i = 1; i <= static_cast<int>(d.rank()); ++i) {
      RealVector v(d.rank()), w(d.rank());
      for (auto& x : v) x = test::uniform(-3, 3);
      for (auto& x : w) x = test::uniform(-3, 3);
      const RealVector sv = reflect(d, i, v);
      const RealVector ssv = reflect(d, i, sv);
      for (std::size_t k = 0; k < v.size(); ++k) EXPECT_NEAR(ssv[k], v[k], 1e-14);
      EXPECT_NEAR(dot(sv, reflect(d, i, w)), dot(v, w), 1e-13);
    }
  }
}

TEST(WeylGroup, NegativeSetOfSimpleReflection) {
  const RootDatum d = datum::b2(1, 2, 1);
  for (int i = 1; i <= 2; ++i) {
    const auto neg = negative_set(d, WeylElement{{i}});
    ASSERT_EQ(neg.size(), 1u);
    EXPECT_EQ(neg[0], d.simple_root_index(i));
  }
  EXPECT_TRUE(negative_set(d, WeylElement{}).empty());
}

TEST(WeylGroup, NonReducedWords) {
  const RootDatum d = datum::a2();
  EXPECT_FALSE(is_reduced(d, WeylElement{{1, 1}}));
  EXPECT_FALSE(is_reduced(d, WeylElement{{1, 2, 1, 2}}));
  EXPECT_THROW(require_reduced(d, WeylElement{{2, 2}}), InvalidInput);
  EXPECT_THROW(require_reduced(d, WeylElement{{3}}), InvalidInput);
  EXPECT_THROW(require_reduced(d, WeylElement{{0}}), InvalidInput);
  EXPECT_NO_THROW(require_reduced(d, WeylElement{{2, 1}}));
}

TEST(Restrict, DividesByRootLength) {
  const RootDatum d = datum::b2(1, 1, 0);
  SpectralParam lam{{Complex(1.0, 0.5), Complex(-0.25, 2.0)}};
  for (std::size_t j = 0; j < d.positive_roots().size(); ++j) {
    const RealVector& a = d.positive_roots()[j];
    const Complex want = (lam.coords[0] * a[0] + lam.coords[1] * a[1]) / dot(a, a);
    EXPECT_NEAR(std::abs(restrict(d, lam, j) - want), 0.0, 1e-15);
  }
  EXPECT_THROW(require_rank(d, SpectralParam{{1.0}}), InvalidInput);
}

TEST(RootDatum, ValidationErrors) {
  // Simple root missing from the positive list.
  EXPECT_THROW(RootDatum("x", {{1.0}}, {{2.0}}, {{1, 0}}), InvalidInput);
  // m_alpha must be positive.
  EXPECT_THROW(RootDatum("x", {{1.0}}, {{1.0}}, {{0, 0}}), InvalidInput);
  // Multiplicity list length mismatch.
  EXPECT_THROW(RootDatum("x", {{1.0}}, {{1.0}}, {}), InvalidInput);
  // A2 roots must share one multiplicity.
  const double h = std::sqrt(3.0) / 2;
  EXPECT_THROW(RootDatum("x", {{1.0, 0.0}, {-0.5, h}}, {{1.0, 0.0}, {-0.5, h}, {0.5, h}},
                         {{1, 0}, {2, 0}, {1, 0}}),
               InvalidInput);
  // Non-integral Cartan number.
  EXPECT_THROW(RootDatum("x", {{1.0, 0.0}, {-0.3, 1.0}}, {{1.0, 0.0}, {-0.3, 1.0}},
                         {{1, 0}, {1, 0}}),
               InvalidInput);
  EXPECT_NO_THROW(RootDatum("a2", {{1.0, 0.0}, {-0.5, h}}, {{1.0, 0.0}, {-0.5, h}, {0.5, h}},
                            {{2, 0}, {2, 0}, {2, 0}}));
}

TEST(RootDatum, Classification) {
  EXPECT_EQ(classify(datum::rank_one(3, 1)), RootSystemType::A1);
  EXPECT_EQ(classify(datum::a1xa1()), RootSystemType::A1xA1);
  EXPECT_EQ(classify(datum::a2(8)), RootSystemType::A2);
  EXPECT_EQ(classify(datum::b2(1, 2, 1)), RootSystemType::B2);
}

}  // namespace
}  // namespace sphfun
