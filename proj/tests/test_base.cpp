#include <gtest/gtest.h>

#include "skewlr/linear_combination.hpp"
#include "skewlr/notation.hpp"
#include "skewlr/rational.hpp"
#include "skewlr/schur.hpp"
#include "skewlr/shapes.hpp"

using namespace skewlr;

TEST(Rational, ArithmeticIsExact) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(-2, 4).to_string(), "-1/2");
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::pow2(-3), Rational(1, 8));
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
}

TEST(Parts, CapacityIsGuarded) {
  Parts p;
  for (int i = 0; i < Parts::kMaxLength; ++i) p.push_back(1);
  EXPECT_THROW(p.push_back(1), CapacityError);
  EXPECT_THROW(Parts({256}), CapacityError);
}

TEST(Shapes, PartitionValidation) {
  EXPECT_NO_THROW(Partition({3, 1}));
  EXPECT_THROW(Partition({1, 3}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_TRUE(Partition({3, 1}).is_strict());
  EXPECT_FALSE(Partition({2, 2}).is_strict());
  EXPECT_THROW(Composition({2, 0, 1}), std::invalid_argument);
  EXPECT_THROW(SkewShape(Partition{2}, Partition{1, 1}), std::invalid_argument);
}

TEST(Shapes, Conjugate) {
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Shapes, EnumerationCounts) {
  const int partition_counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(enumerate_partitions(n).size(), static_cast<std::size_t>(partition_counts[n]));
  EXPECT_EQ(enumerate_compositions(0).size(), 1u);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_compositions(n).size(), std::size_t{1} << (n - 1));
  PartitionConstraints strict;
  strict.strict = true;
  EXPECT_EQ(enumerate_partitions(8, strict).size(), 6u);
  EXPECT_EQ(enumerate_subpartitions(Partition{2, 1}).size(), 5u);
}

TEST(Shapes, CanonicalOrderIsGradedReverseLex) {
  const auto p4 = enumerate_partitions(4);
  ASSERT_EQ(p4.front(), (Partition{4}));
  ASSERT_EQ(p4.back(), (Partition{1, 1, 1, 1}));
  GradedRevLex less;
  EXPECT_TRUE(less(Parts{1, 1}, Parts{3}));
  EXPECT_TRUE(less(Parts{3}, Parts{2, 1}));
}

TEST(Shapes, Strips) {
  EXPECT_TRUE(is_horizontal_strip(Partition{2, 1}, Partition{3, 1, 1}, 2));
  EXPECT_FALSE(is_horizontal_strip(Partition{1}, Partition{1, 1}, 2));
  EXPECT_FALSE(is_horizontal_strip(Partition{1}, Partition{2, 2}, 3));
  EXPECT_TRUE(is_horizontal_strip(Partition{2}, Partition{2, 2}, 2));
  EXPECT_TRUE(is_vertical_strip(Partition{2}, Partition{2, 1, 1}, 2));
  EXPECT_FALSE(is_vertical_strip(Partition{1}, Partition{3}, 2));
  const auto ext = horizontal_strip_extensions(Partition{1}, 1);
  EXPECT_EQ(ext, (std::vector<Partition>{Partition{2}, Partition{1, 1}}));
  EXPECT_EQ(horizontal_strip_extensions(Partition{}, 2), (std::vector<Partition>{Partition{2}}));
  EXPECT_TRUE(horizontal_strip_extensions(Partition{2}, 3, 2).empty());
}

TEST(Shapes, Dominance) {
  EXPECT_TRUE(dominates(Parts{3, 1}, Parts{2, 2}));
  EXPECT_FALSE(dominates(Parts{2, 2}, Parts{3, 1}));
  EXPECT_FALSE(dominates(Parts{3, 1, 1, 1}, Parts{2, 2, 2}));
  EXPECT_FALSE(dominates(Parts{2, 2, 2}, Parts{3, 1, 1, 1}));
}

TEST(Notation, ParsesAndFormats) {
  const auto& s = *schur_basis();
  EXPECT_EQ(parse_parts("[2,1]"), (Parts{2, 1}));
  EXPECT_EQ(parse_parts("(3, 1, 4, 1)"), (Parts{3, 1, 4, 1}));
  EXPECT_EQ(format_parts(Parts{}), "[]");
  const Element x = parse_element("s[2,1] - 2 s[3] + 1/2*s[]", s);
  EXPECT_EQ(x.coefficient(Parts{2, 1}), Rational(1));
  EXPECT_EQ(x.coefficient(Parts{3}), Rational(-2));
  EXPECT_EQ(x.coefficient(Parts{}), Rational(1, 2));
  EXPECT_EQ(format_element(Element(Parts{2}), s), "1\ts[2]");
  EXPECT_EQ(format_element(Element(), s), "0");
  EXPECT_THROW(parse_element("R(2)", s), ParseError);
  EXPECT_THROW(parse_element("s[1,2]", s), ParseError);
  EXPECT_THROW(parse_element("s[2,1", s), ParseError);
  EXPECT_THROW(parse_element("s[300]", s), CapacityError);
  const SkewIndex idx = parse_skew_index("[2,1]/[1]", s);
  EXPECT_EQ(idx.outer, (Parts{2, 1}));
  EXPECT_EQ(idx.inner, (Parts{1}));
  EXPECT_EQ(parse_skew_index("[2]", s).inner, Parts{});
}

TEST(Notation, JsonRoundTrip) {
  const auto& s = *schur_basis();
  const Element x = parse_element("3/4 s[2,1] - s[1,1,1] + s[]", s);
  const std::string json = element_to_json(x, s);
  EXPECT_EQ(element_from_json(json, s), x);
  EXPECT_NE(json.find("\"3/4\""), std::string::npos);
  EXPECT_THROW(element_from_json("{\"terms\": 3}", s), ParseError);
  EXPECT_THROW(element_from_json("not json", s), ParseError);
}
