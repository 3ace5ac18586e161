#include <gtest/gtest.h>

#include <map>
#include <random>

#include "skewlr/hopf.hpp"
#include "skewlr/ribbon.hpp"
#include "skewlr/shapes.hpp"

using namespace skewlr;

namespace {

Element R(std::initializer_list<int> parts) { return Element(Parts(parts)); }

std::vector<Parts> compositions_upto(int n) {
  std::vector<Parts> out;
  for (int d = 0; d <= n; ++d)
    for (const auto& c : enumerate_compositions(d)) out.push_back(c.parts());
  return out;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Ribbon, DescentAndSection) {
  EXPECT_EQ(descent_composition({1, 4, 8, 6, 2, 3, 7, 9, 5}), (Parts{3, 1, 4, 1}));
  EXPECT_EQ(word_section(Parts{3, 1, 4, 1}), (Permutation{7, 8, 9, 6, 2, 3, 4, 5, 1}));
  EXPECT_EQ(word_section(Parts{1, 1}), (Permutation{2, 1}));
  EXPECT_EQ(word_section(Parts{4}), (Permutation{1, 2, 3, 4}));
  EXPECT_EQ(descent_composition({1, 2, 3}), (Parts{3}));
  EXPECT_EQ(descent_composition({3, 2, 1}), (Parts{1, 1, 1}));
  EXPECT_THROW(descent_composition({1, 1}), std::invalid_argument);
  for (const Parts& alpha : compositions_upto(7)) ASSERT_EQ(descent_composition(word_section(alpha)), alpha);
}

TEST(Ribbon, Conjugate) {
  EXPECT_EQ(ribbon_conjugate(Parts{3, 1, 4, 1}), (Parts{2, 1, 1, 3, 1, 1}));
  EXPECT_EQ(ribbon_conjugate(Parts{3}), (Parts{1, 1, 1}));
  EXPECT_EQ(ribbon_conjugate(Parts{1}), (Parts{1}));
  for (const Parts& alpha : compositions_upto(7)) {
    const Parts c = ribbon_conjugate(alpha);
    ASSERT_EQ(ribbon_conjugate(c), alpha);
    ASSERT_EQ(c.degree(), alpha.degree());
    if (!alpha.empty()) ASSERT_EQ(c.size(), alpha.degree() - alpha.size() + 1);
  }
}

TEST(Ribbon, ExtensionsAndFactorizations) {
  EXPECT_EQ(ribbon_extensions(Parts{3, 1, 1}, Parts{3, 1}).front(), (Parts{3, 1, 4, 1}));
  EXPECT_EQ(ribbon_extensions(Parts{3, 1}, Parts{4, 1}).back(), (Parts{3, 1, 4, 1}));
  EXPECT_EQ(ribbon_extensions(Parts{2, 1}, Parts{}), (std::vector<Parts>{Parts{2, 1}}));
  using Cut = std::pair<Parts, Parts>;
  EXPECT_EQ(ribbon_factorizations(Parts{2}),
            (std::vector<Cut>{{Parts{}, Parts{2}}, {Parts{1}, Parts{1}}, {Parts{2}, Parts{}}}));
  EXPECT_EQ(ribbon_factorizations(Parts{1, 1})[1], (Cut{Parts{1}, Parts{1}}));
  EXPECT_EQ(ribbon_factorizations(Parts{}), (std::vector<Cut>{{Parts{}, Parts{}}}));
  for (const Parts& gamma : compositions_upto(6)) {
    const auto cuts = ribbon_factorizations(gamma);
    ASSERT_EQ(cuts.size(), static_cast<std::size_t>(gamma.degree() + 1));
    for (const auto& [a, b] : cuts) {
      const auto ext = ribbon_extensions(a, b);
      ASSERT_NE(std::find(ext.begin(), ext.end(), gamma), ext.end());
    }
  }
}

TEST(Ribbon, ShiftedShuffle) {
  EXPECT_EQ(shifted_shuffle({1}, {1}), (std::vector<Word>{{1, 2}, {2, 1}}));
  EXPECT_EQ(shifted_shuffle({2, 1}, {}), (std::vector<Word>{{2, 1}}));
  EXPECT_EQ(shifted_shuffle({1, 2}, {1}).size(), 3u);
}

TEST(Ribbon, ShuffleCountMatchesEnumeration) {
  for (const Parts& a : compositions_upto(4))
    for (const Parts& b : compositions_upto(4)) {
      std::map<Parts, long> tally;
      for (const Word& w : shifted_shuffle(word_section(a), word_section(b))) ++tally[descent_composition(w)];
      for (const Parts& gamma : compositions_upto(a.degree() + b.degree())) {
        if (gamma.degree() != a.degree() + b.degree()) continue;
        ASSERT_EQ(shuffle_count({a, b}, gamma), tally[gamma]);
      }
    }
}

TEST(Ribbon, CoproductConstants) {
  Tensor one;
  one.add({Parts{1}, Parts{}}, Rational(1));
  one.add({Parts{}, Parts{1}}, Rational(1));
  EXPECT_EQ(ribbon_coproduct_constants(Parts{1}), one);
  EXPECT_EQ(ribbon_coproduct_constants(Parts{2}).coefficient({Parts{1}, Parts{1}}), Rational(1));
  EXPECT_EQ(ribbon_coproduct_constants(Parts{1, 1}).coefficient({Parts{1}, Parts{1}}), Rational(1));
  // Each word of a shuffle has exactly one descent composition.
  for (const Parts& a : compositions_upto(6))
    for (const Parts& b : compositions_upto(6 - a.degree())) {
      const int n = a.degree() + b.degree();
      long total = 0;
      for (const auto& g : enumerate_compositions(n)) total += shuffle_count({a, b}, g.parts());
      ASSERT_EQ(total, binomial(n, a.degree()));
    }
}

TEST(Ribbon, ProductConstants) {
  const auto& b = *ribbon_basis();
  EXPECT_EQ(b.product(Parts{1}, Parts{1}), R({2}) + R({1, 1}));
  for (const Parts& a : compositions_upto(4))
    for (const Parts& c : compositions_upto(4)) {
      Rational total(0);
      for (const auto& [gamma, v] : b.product(a, c)) {
        ASSERT_EQ(v, Rational(1));
        total += v;
      }
      ASSERT_EQ(total, Rational(a.empty() || c.empty() ? 1 : 2));
    }
}

TEST(Ribbon, SkewRibbon) {
  EXPECT_EQ(skew_ribbon(Parts{2, 2, 1}, Parts{1, 1, 1}), R({2}) + R({1, 1}));
  EXPECT_EQ(skew_ribbon(Parts{3, 1}, Parts{}), R({3, 1}));
  EXPECT_EQ(skew_ribbon(Parts{3, 1}, Parts{3, 1}), R({}));
}

TEST(Ribbon, SkewProductForms) {
  SkewSum expected;
  expected.add(SkewIndex{Parts{2}, Parts{}}, Rational(1));
  expected.add(SkewIndex{Parts{1, 1}, Parts{}}, Rational(1));
  EXPECT_EQ(skew_ribbon_product(Parts{}, Parts{1}, Parts{}, Parts{1}), expected);
  EXPECT_EQ(skew_ribbon_product(Parts{1}, Parts{2, 1}, Parts{2}, Parts{2}), SkewSum(SkewIndex{Parts{2, 1}, Parts{1}}));
  const auto& b = *ribbon_basis();
  const Element oracle = multiply(R({2}) + R({1, 1}), R({1}), b);
  EXPECT_EQ(evaluate_skew_sum(skew_ribbon_product(Parts{1, 1, 1}, Parts{2, 2, 1}, Parts{}, Parts{1}), b), oracle);
  for (const Parts& beta : compositions_upto(4))
    for (const Parts& alpha : compositions_upto(beta.degree()))
      for (const Parts& tau : compositions_upto(4))
        for (const Parts& sigma : compositions_upto(tau.degree()))
          ASSERT_EQ(skew_ribbon_product(alpha, beta, sigma, tau), skew_ribbon_product_direct(alpha, beta, sigma, tau));
}

TEST(Ribbon, FundamentalSkew) {
  EXPECT_EQ(fundamental_skew(Parts{3, 1, 4, 1}, Parts{4, 1}), Element(Parts{3, 1}));
  EXPECT_EQ(fundamental_skew(Parts{2, 1}, Parts{}), Element(Parts{2, 1}));
  EXPECT_TRUE(fundamental_skew(Parts{2, 2, 1}, Parts{1, 1, 1}).empty());
  const auto& f = *fundamental_basis();
  for (const Parts& beta : compositions_upto(5))
    for (const Parts& alpha : compositions_upto(beta.degree())) ASSERT_EQ(fundamental_skew(beta, alpha), f.skew(beta, alpha));
}

TEST(Ribbon, CuriousIdentity) {
  EXPECT_TRUE(verify_curious_identity(Parts{}, Parts{}, Parts{}, Parts{}));
  EXPECT_TRUE(verify_curious_identity(Parts{}, Parts{1}, Parts{}, Parts{1}));
  std::mt19937 rng(7);
  const auto pool = compositions_upto(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Parts beta = pool[rng() % pool.size()];
    const Parts tau = pool[rng() % pool.size()];
    const auto cuts_b = ribbon_factorizations(beta);
    const auto cuts_t = ribbon_factorizations(tau);
    const Parts alpha = rng() % 2 ? cuts_b[rng() % cuts_b.size()].second : pool[rng() % pool.size()];
    const Parts sigma = cuts_t[rng() % cuts_t.size()].second;
    ASSERT_TRUE(verify_curious_identity(alpha, beta, sigma, tau)) << trial;
  }
}

TEST(Ribbon, AntipodeIsInvolution) {
  const auto& b = *ribbon_basis();
  for (const Parts& alpha : compositions_upto(7)) ASSERT_EQ(antipode(antipode(Element(alpha), b), b), Element(alpha));
}

TEST(Ribbon, HopfAxioms) {
  const auto r = verify_hopf_axioms(*ribbon_basis(), 5);
  EXPECT_TRUE(r.passed) << r.failed_check << " " << r.witness;
  const auto f = verify_hopf_axioms(*fundamental_basis(), 5);
  EXPECT_TRUE(f.passed) << f.failed_check << " " << f.witness;
}
