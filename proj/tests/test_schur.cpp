#include <gtest/gtest.h>

#include "skewlr/hopf.hpp"
#include "skewlr/schur.hpp"
#include "skewlr/tableau.hpp"

using namespace skewlr;

namespace {

Element s(std::initializer_list<int> parts) { return Element(Parts(parts)); }

std::vector<Parts> partitions_upto(int n) {
  std::vector<Parts> out;
  for (int d = 0; d <= n; ++d)
    for (const auto& p : enumerate_partitions(d)) out.push_back(p.parts());
  return out;
}

}  // namespace

TEST(Schur, ProductMatchesLittlewoodRichardson) {
  const auto& b = *schur_basis();
  EXPECT_EQ(b.product(Parts{1}, Parts{1}), s({2}) + s({1, 1}));
  EXPECT_EQ(b.product_constant(Parts{2, 1}, Parts{2, 1}, Parts{3, 2, 1}), Rational(2));
  for (const Parts& lambda : partitions_upto(4))
    for (const Parts& mu : partitions_upto(4 - lambda.degree()))
      for (const auto& [nu, c] : b.product(lambda, mu))
        ASSERT_EQ(c, Rational(lr_coefficient(Partition(lambda), Partition(mu), Partition(nu))));
}

TEST(Schur, SelfDual) {
  const auto& b = *schur_basis();
  for (int n = 0; n <= 6; ++n)
    for (const Parts& nu : b.basis_cached(n))
      for (const auto& [pair, c] : b.coproduct(nu)) ASSERT_EQ(c, b.product_constant(pair.first, pair.second, nu));
}

TEST(Schur, BasisConvertExamples) {
  EXPECT_EQ(to_schur(classical('h', Parts{1})), s({1}));
  EXPECT_EQ(to_schur(classical('h', Parts{2})), s({2}));
  EXPECT_EQ(to_schur(classical('e', Parts{2})), s({1, 1}));
  EXPECT_EQ(to_schur(classical('p', Parts{2})), s({2}) - s({1, 1}));
  EXPECT_EQ(to_schur(classical('m', Parts{1, 1})), s({1, 1}));
  EXPECT_EQ(to_schur(classical('m', Parts{2})), s({2}) - s({1, 1}));
  EXPECT_THROW(classical('x', Parts{1}), std::invalid_argument);
}

TEST(Schur, BasisConvertRoundTrips) {
  const char tags[] = {'m', 'h', 'e', 'p', 's'};
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (char from : tags)
        for (char to : tags) {
          const ClassicalElement x = classical(from, lambda.parts());
          ASSERT_EQ(basis_convert(basis_convert(x, to), from), x);
        }
}

TEST(Schur, HallPairing) {
  EXPECT_EQ(hall_pair(classical('s', Parts{2}), classical('s', Parts{2})), Rational(1));
  EXPECT_EQ(hall_pair(classical('h', Parts{1, 1}), classical('h', Parts{1, 1})), Rational(2));
  EXPECT_EQ(hall_pair(classical('p', Parts{1}), classical('p', Parts{1})), Rational(1));
  // ⟨h_λ, m_μ⟩ = δ and ⟨p_λ, p_μ⟩ = z_λ δ
  for (const auto& lambda : enumerate_partitions(5))
    for (const auto& mu : enumerate_partitions(5))
      ASSERT_EQ(hall_pair(classical('h', lambda.parts()), classical('m', mu.parts())),
                Rational(lambda == mu ? 1 : 0));
  EXPECT_EQ(hall_pair(classical('p', Parts{2, 1, 1}), classical('p', Parts{2, 1, 1})), Rational(4));
}

TEST(Schur, AntipodeOnCompleteHomogeneous) {
  const auto& b = *schur_basis();
  for (int n = 0; n <= 8; ++n) {
    const Parts row = n == 0 ? Parts{} : Parts{n};
    const Element h = to_schur(classical('h', row));
    const Element e = to_schur(classical('e', row));
    EXPECT_EQ(antipode(h, b), e * Rational(n % 2 == 0 ? 1 : -1));
  }
}

TEST(Schur, CombinatorialSkewRuleExamples) {
  SkewSum expected;
  expected.add(SkewIndex{Parts{3, 1}, Parts{1}}, Rational(1));
  expected.add(SkewIndex{Parts{2, 2}, Parts{1}}, Rational(1));
  expected.add(SkewIndex{Parts{2, 1, 1}, Parts{1}}, Rational(1));
  expected.add(SkewIndex{Parts{2, 1}, Parts{}}, Rational(-1));
  EXPECT_EQ(skew_lr_combinatorial(Partition{1}, Partition{2, 1}, Partition{}, Partition{1}), expected);

  EXPECT_EQ(skew_lr_combinatorial(Partition{}, Partition{2, 1}, Partition{3, 1}, Partition{3, 1}),
            SkewSum(SkewIndex{Parts{2, 1}, Parts{}}));
  SkewSum straight;
  straight.add(SkewIndex{Parts{2}, Parts{}}, Rational(1));
  straight.add(SkewIndex{Parts{1, 1}, Parts{}}, Rational(1));
  EXPECT_EQ(skew_lr_combinatorial(Partition{}, Partition{1}, Partition{}, Partition{1}), straight);
  EXPECT_TRUE(skew_lr_combinatorial(Partition{2}, Partition{1}, Partition{}, Partition{1}).empty());
}

TEST(Schur, CombinatorialRuleAgreesWithEngine) {
  const auto& b = *schur_basis();
  for (const Parts& mu : partitions_upto(4))
    for (const auto& lambda : enumerate_subpartitions(Partition(mu)))
      for (const Parts& tau : partitions_upto(4))
        for (const auto& sigma : enumerate_subpartitions(Partition(tau))) {
          const SkewSum combinatorial = skew_lr_combinatorial(lambda, Partition(mu), sigma, Partition(tau));
          const SkewSum engine = skew_product_theorem(lambda.parts(), mu, sigma.parts(), tau, b);
          ASSERT_EQ(combinatorial, engine);
        }
}

TEST(Schur, CoproductSkewExamples) {
  const Tensor t = coproduct_skew(Partition{2, 1}, Partition{1});
  Tensor expected;
  expected.add({Parts{1}, Parts{1}}, Rational(2));
  expected.add({Parts{2}, Parts{}}, Rational(1));
  expected.add({Parts{1, 1}, Parts{}}, Rational(1));
  expected.add({Parts{}, Parts{2}}, Rational(1));
  expected.add({Parts{}, Parts{1, 1}}, Rational(1));
  EXPECT_EQ(t, expected);
  EXPECT_EQ(coproduct_skew(Partition{2, 1}, Partition{2, 1}), Tensor({Parts{}, Parts{}}));
  Tensor primitive;
  primitive.add({Parts{1}, Parts{}}, Rational(1));
  primitive.add({Parts{}, Parts{1}}, Rational(1));
  EXPECT_EQ(coproduct_skew(Partition{1}, Partition{}), primitive);
}

TEST(Schur, CoproductSkewMatchesEngineAndIsSymmetric) {
  const auto& b = *schur_basis();
  for (const Parts& tau : partitions_upto(6))
    for (const auto& sigma : enumerate_subpartitions(Partition(tau))) {
      const Tensor t = coproduct_skew(Partition(tau), sigma);
      ASSERT_EQ(t, triple_coproduct(tau, sigma.parts(), b));
      for (const auto& [pair, c] : t) ASSERT_EQ(t.coefficient({pair.second, pair.first}), c);
    }
}

TEST(Schur, HopfAxiomsToDegreeSix) {
  const auto report = verify_hopf_axioms(*schur_basis(), 6);
  EXPECT_TRUE(report.passed) << report.failed_check << " " << report.witness;
}
