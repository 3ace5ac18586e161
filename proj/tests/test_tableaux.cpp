#include <gtest/gtest.h>

#include <map>

#include "skewlr/tableau.hpp"

using namespace skewlr;

TEST(Tableau, ValidatesFilling) {
  EXPECT_NO_THROW(Tableau::straight({{1, 1, 2}, {2}}));
  EXPECT_THROW(Tableau::straight({{1, 2}, {1}}), std::invalid_argument);
  EXPECT_THROW(Tableau::straight({{2, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(Tableau(SkewShape(Partition{2, 1}, Partition{1}), {{1}, {1}}));
}

TEST(Tableau, RowWordAndInsertion) {
  const Tableau t = Tableau::straight({{1, 1, 2}, {2, 3}});
  EXPECT_EQ(row_word(t), (Word{2, 3, 1, 1, 2}));
  EXPECT_EQ(insert(row_word(t)), t);
  EXPECT_EQ(insert(Word{3, 2, 1}), Tableau::straight({{1}, {2}, {3}}));
  EXPECT_EQ(insert(Word{}), Tableau::straight({}));
}

TEST(Tableau, RectifySkew) {
  const Tableau t(SkewShape(Partition{2, 1}, Partition{1}), {{1}, {1}});
  EXPECT_EQ(rectify(t), Tableau::straight({{1, 1}}));
  const Tableau u(SkewShape(Partition{2, 2}, Partition{1}), {{1}, {1, 2}});
  EXPECT_EQ(rectify(u).shape().outer(), (Partition{2, 1}));
}

TEST(Tableau, StarConcatenatesRowWords) {
  const Tableau a = Tableau::straight({{1, 2}, {3}});
  const Tableau b = Tableau::straight({{1}, {2}});
  const Tableau ab = star(a, b);
  Word expected = row_word(a);
  for (int x : row_word(b)) expected.push_back(x);
  EXPECT_EQ(row_word(ab), expected);
  EXPECT_EQ(ab.size(), 5);
  EXPECT_EQ(star(Tableau(), b), b);
}

TEST(Tableau, Yamanouchi) {
  EXPECT_EQ(yamanouchi_tableau(Partition{2, 1}), Tableau::straight({{1, 1}, {2}}));
  EXPECT_TRUE(knuth_equivalent(Tableau::straight({{1, 1}, {2}}), insert(Word{2, 1, 1})));
}

TEST(Tableau, StandardCounts) {
  EXPECT_EQ(count_standard_tableaux(Partition{3, 2}), 5);
  EXPECT_EQ(count_standard_tableaux(Partition{3, 2, 1}), 16);
  EXPECT_EQ(count_standard_tableaux(Partition{}), 1);
  const std::vector<int> content = {1, 1, 1};
  EXPECT_EQ(enumerate_tableaux(SkewShape(Partition{2, 1}), content).size(), 2u);
}

TEST(LittlewoodRichardson, KnownValues) {
  EXPECT_EQ(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}), 2);
  EXPECT_EQ(lr_coefficient(Partition{1}, Partition{1}, Partition{2}), 1);
  EXPECT_EQ(lr_coefficient(Partition{1}, Partition{1}, Partition{3}), 0);
  EXPECT_EQ(lr_coefficient_yamanouchi(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}), 2);
  EXPECT_EQ(lr_coefficient(Partition{}, Partition{3, 1}, Partition{3, 1}), 1);
}

TEST(LittlewoodRichardson, TwoAlgorithmsAndSymmetries) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& nu : enumerate_partitions(n))
      for (const auto& lambda : enumerate_subpartitions(nu))
        for (const auto& mu : enumerate_partitions(n - lambda.size())) {
          const long pairs = lr_coefficient(lambda, mu, nu);
          ASSERT_EQ(pairs, lr_coefficient_yamanouchi(lambda, mu, nu));
          ASSERT_EQ(pairs, lr_coefficient(mu, lambda, nu));
          ASSERT_EQ(pairs, lr_coefficient(conjugate(lambda), conjugate(mu), conjugate(nu)));
        }
}

TEST(LittlewoodRichardson, FillingsMatchCoefficients) {
  const Parts nu{3, 2, 1};
  const Parts inner{2, 1};
  std::map<Parts, long> counts;
  for_each_lr_filling(nu, inner, [&](const Parts& c) { ++counts[c]; });
  EXPECT_EQ(counts[(Parts{2, 1})], 2);
  EXPECT_EQ(counts[(Parts{3})], 1);
  EXPECT_EQ(counts[(Parts{1, 1, 1})], 1);
}

TEST(LittlewoodRichardson, Triples) {
  // c^τ_{π,ρ,σ} = Σ_υ c^υ_{π,ρ} c^τ_{υ,σ}
  for (int n = 0; n <= 5; ++n)
    for (const auto& tau : enumerate_partitions(n))
      for (const auto& sigma : enumerate_subpartitions(tau))
        for (int a = 0; a <= n - sigma.size(); ++a)
          for (const auto& pi : enumerate_partitions(a))
            for (const auto& rho : enumerate_partitions(n - sigma.size() - a)) {
              long expected = 0;
              for (const auto& upsilon : enumerate_partitions(n - sigma.size()))
                expected += lr_coefficient(pi, rho, upsilon) * lr_coefficient(upsilon, sigma, tau);
              ASSERT_EQ(lr_triple(pi, rho, sigma, tau), expected);
            }
}
