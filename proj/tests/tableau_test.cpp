#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

using namespace lrcones;
using namespace lrcones::testing;

namespace {

SkewTableau section2_example() {
  return SkewTableau(SkewShape(Partition({6, 4, 4, 3}), Partition({3, 2})),
                     {{1, 1, 7}, {1, 4}, {1, 4, 5, 7}, {3, 5, 7}});
}

SkewTableau small_example() {
  // lambda = (3,2,1), mu = (2,1); word 1,1,2.
  return SkewTableau(SkewShape(Partition({3, 2, 1}), Partition({2, 1})), {{1}, {1}, {2}});
}

}  // namespace

TEST(Tableau, WordExamples) {
  EXPECT_EQ(word(section2_example()), (std::vector<std::int64_t>{7, 1, 1, 4, 1, 7, 5, 4, 1, 7, 5, 3}));
  SkewTableau empty(SkewShape(Partition({2, 1}), Partition({2, 1})), {});
  EXPECT_TRUE(word(empty).empty());
  SkewTableau single(SkewShape(Partition({1}), Partition{}), {{1}});
  EXPECT_EQ(word(single), (std::vector<std::int64_t>{1}));
}

TEST(Tableau, ContentExamples) {
  EXPECT_EQ(content(section2_example()), (std::vector<std::int64_t>{4, 0, 1, 2, 2, 0, 3}));
  EXPECT_EQ(content(fig1()), (std::vector<std::int64_t>{16, 11, 10, 5, 2}));
  EXPECT_TRUE(content(SkewTableau(SkewShape(Partition({1}), Partition({1})), {})).empty());
}

TEST(Tableau, SemistandardExamples) {
  EXPECT_TRUE(is_semistandard(section2_example()));
  EXPECT_TRUE(is_semistandard(fig1()));
  SkewTableau stacked(SkewShape(Partition({1, 1}), Partition{}), {{1}, {1}});
  auto r = semistandard_check(stacked);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.condition, "column strictly increasing");
  SkewTableau descending(SkewShape(Partition({2}), Partition{}), {{2, 1}});
  EXPECT_FALSE(is_semistandard(descending));
}

TEST(Tableau, LatticePermutationExamples) {
  EXPECT_FALSE(is_lattice_permutation(word(section2_example())));
  EXPECT_TRUE(is_lattice_permutation({1, 1, 2}));
  EXPECT_TRUE(is_lattice_permutation({1, 2, 1}));
  EXPECT_TRUE(is_lattice_permutation({}));
  EXPECT_FALSE(is_lattice_permutation({2, 1}));
  EXPECT_FALSE(is_lattice_permutation({1, 2, 2}));
  EXPECT_FALSE(is_lattice_permutation({1, 3}));
}

TEST(Tableau, LRTableauExamples) {
  EXPECT_TRUE(is_lr_tableau(fig1()));
  EXPECT_FALSE(is_lr_tableau(section2_example()));
  auto r = lr_tableau_check(section2_example());
  EXPECT_EQ(r.condition, "lattice word");
  EXPECT_EQ(r.i, 1);
  EXPECT_TRUE(is_lr_tableau(SkewTableau(SkewShape(Partition({2}), Partition({2})), {})));
}

TEST(Tableau, ConstructionRejectsBadInput) {
  EXPECT_THROW(SkewShape(Partition({2}), Partition({3})), usage_error);
  SkewShape shape(Partition({2, 1}), Partition({1}));
  EXPECT_THROW(SkewTableau(shape, {{1, 1}, {2}}), usage_error);
  EXPECT_THROW(SkewTableau(shape, {{0}, {1}}), usage_error);
  EXPECT_THROW(SkewTableau(shape, {{1}, {2}, {3}}), usage_error);
}

TEST(TableauCoding, Figure1GivesFigure3) {
  EXPECT_EQ(convert_array<Rational>(tableau_to_triangle(fig1(), 5)), fig3());
  EXPECT_EQ(triangle_to_tableau(fig3()), fig1());
}

TEST(TableauCoding, SmallExampleByHand) {
  auto a = tableau_to_triangle(small_example(), 3);
  TriangularArray<std::int64_t> expected(3);
  expected(0, 1) = 2;
  expected(0, 2) = 1;
  expected(1, 1) = 1;
  expected(1, 2) = 1;
  expected(2, 3) = 1;
  EXPECT_EQ(a, expected);
  EXPECT_EQ(lr_type(a), (IntegralType{{3, 2, 1}, {2, 1, 0}, {2, 1, 0}}));
  EXPECT_EQ(triangle_to_tableau(a), small_example());
}

TEST(TableauCoding, EmptyAndZeroCases) {
  SkewTableau empty(SkewShape(Partition({0}), Partition{}), {});
  auto a = tableau_to_triangle(empty, 1);
  EXPECT_EQ(a, TriangularArray<std::int64_t>(1));
  auto t = triangle_to_tableau(TriangularArray<std::int64_t>(4));
  EXPECT_TRUE(word(t).empty());
}

TEST(TableauCoding, RejectsNonMembers) {
  EXPECT_THROW(tableau_to_triangle(section2_example(), 4), validation_error);
  auto bad = fig3();
  bad(1, 2) = -1;
  EXPECT_THROW(triangle_to_tableau(bad), validation_error);
  auto frac = fig3();
  frac(2, 2) = Rational(9, 2);
  EXPECT_THROW(triangle_to_tableau(frac), usage_error);
}

TEST(TableauEnumeration, KnownCounts) {
  EXPECT_EQ(count_lr_tableaux(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})).count, 2u);
  EXPECT_EQ(count_lr_tableaux(Partition({4, 2}), Partition({4, 2}), Partition{}).count, 1u);
  EXPECT_EQ(count_lr_tableaux(Partition({2, 1}), Partition({1}), Partition({1, 1})).count, 1u);
  EXPECT_EQ(count_lr_tableaux(Partition({3, 1}), Partition({2, 2}), Partition{}).count, 0u);
  EXPECT_THROW(count_lr_tableaux(Partition({2}), Partition({1}), Partition({2})), usage_error);
}

TEST(TableauEnumeration, LimitTruncates) {
  auto full = count_lr_tableaux(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1}));
  auto capped = count_lr_tableaux(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1}), 1);
  EXPECT_FALSE(full.truncated);
  EXPECT_TRUE(capped.truncated);
  EXPECT_EQ(capped.count, 1u);
  auto exact = count_lr_tableaux(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1}), 2);
  EXPECT_FALSE(exact.truncated);
}

TEST(TableauEnumeration, AgreesWithBruteForceOnAllFillings) {
  Rng rng(21);
  int checked = 0;
  for (int n = 0; n < 120; ++n) {
    auto t = random_type(rng, std::size_t(uniform(rng, 1, 3)), 3);
    Partition lambda(t.lambda), mu(t.mu), nu(t.nu);
    if (lambda.size() - mu.size() > 6) continue;
    EXPECT_EQ(count_lr_tableaux(lambda, mu, nu).count, brute_force_lr_tableaux(lambda, mu, nu))
        << lambda.to_string() << " / " << mu.to_string() << " content " << nu.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(TableauEnumeration, AgreesWithAlternantOracle) {
  Rng rng(22);
  for (int n = 0; n < 150; ++n) {
    auto t = random_type(rng, std::size_t(uniform(rng, 1, 4)), 6);
    EXPECT_EQ(std::int64_t(count_lr_tableaux(Partition(t.lambda), Partition(t.mu), Partition(t.nu)).count),
              lr_coefficient_oracle(t));
  }
}

TEST(TableauEnumeration, EmittedTableauxAreDistinctLRWithPartitionContent) {
  Rng rng(23);
  for (int n = 0; n < 60; ++n) {
    auto t = random_type(rng, std::size_t(uniform(rng, 2, 4)), 5);
    std::set<SkewTableau> seen;
    enumerate_lr_tableaux(Partition(t.lambda), Partition(t.mu), Partition(t.nu), [&](const SkewTableau& tab) {
      EXPECT_TRUE(is_lr_tableau(tab));
      auto c = content(tab);
      EXPECT_TRUE(is_weakly_decreasing(c));
      c.resize(t.k(), 0);
      EXPECT_EQ(c, t.nu);
      EXPECT_TRUE(seen.insert(tab).second);
      auto a = tableau_to_triangle(tab, t.k());
      EXPECT_EQ(triangle_to_tableau(a), tab);
      return true;
    });
  }
}
