#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace lrcones;
using namespace lrcones::testing;

namespace {

// (P), (CS), (LR) written out as printed, one inequality at a time.
bool naive_lr_member(const TriangularArray<Rational>& a) {
  const std::size_t k = a.k();
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j)
      if (a(i, j) < 0) return false;
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Rational left = 0, right = 0;
      for (std::size_t p = 0; p <= i - 1; ++p) left += a(p, j);
      for (std::size_t p = 0; p <= i; ++p) right += a(p, j + 1);
      if (left < right) return false;
      left = right = 0;
      for (std::size_t q = i; q <= j; ++q) left += a(i, q);
      for (std::size_t q = i + 1; q <= j + 1; ++q) right += a(i + 1, q);
      if (left < right) return false;
    }
  return true;
}

}  // namespace

TEST(LRValidate, Figure3IsMember) { EXPECT_TRUE(lr_validate(fig3())); }

TEST(LRValidate, ZeroArrayIsApex) {
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_TRUE(lr_validate(TriangularArray<Rational>(k)));
}

TEST(LRValidate, NegativeOffDiagonalViolatesP) {
  auto a = fig3();
  a(1, 2) = -1;
  auto r = lr_validate(a);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.condition, "P");
  EXPECT_EQ(r.i, 1);
  EXPECT_EQ(r.j, 2);
  EXPECT_EQ(r.describe().rfind("violates (P) at i=1, j=2", 0), 0u);
}

TEST(LRValidate, NegativeDiagonalAndMuAreNotSignConstrained) {
  // No inequality constrains k = 1 arrays.
  TriangularArray<Rational> a(1);
  a(0, 1) = -3;
  a(1, 1) = Rational(-1, 2);
  EXPECT_TRUE(lr_validate(a));
}

TEST(LRValidate, ReportsCSAndLRViolations) {
  auto a = fig3();
  a(0, 1) = 1;  // a_01 = 1 < a_02 + a_12 = 13
  auto r = lr_validate(a);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.condition, "CS");
  EXPECT_EQ(r.i, 1);
  EXPECT_EQ(r.j, 1);

  auto b = fig3();
  b(1, 1) = 0;  // a_11 = 0 < a_22 = 5
  auto rb = lr_validate(b);
  ASSERT_FALSE(rb);
  EXPECT_EQ(rb.condition, "LR");
  EXPECT_EQ(rb.i, 1);
  EXPECT_EQ(rb.j, 1);
}

TEST(LRValidate, AgreesWithLiteralInequalities) {
  Rng rng(31);
  int members = 0;
  for (int n = 0; n < 2000; ++n) {
    auto k = std::size_t(uniform(rng, 1, 5));
    TriangularArray<Rational> a = n % 2 ? random_lr_member(rng, k) : random_rational_array(rng, k);
    if (n % 4 == 1) a(std::size_t(uniform(rng, 0, std::int64_t(k) - 1)), k) += random_rational(rng, 3);
    bool member = naive_lr_member(a);
    members += member;
    EXPECT_EQ(bool(lr_validate(a)), member) << format_triangle(a);
  }
  EXPECT_GT(members, 500);
}

TEST(LRType, Figure3HasEq1Type) {
  EXPECT_EQ(lr_type(fig3()), convert_type<Rational>(eq1_type()));
}

TEST(LRType, ZeroArrayHasZeroType) {
  auto t = lr_type(TriangularArray<Rational>(3));
  EXPECT_EQ(t.lambda, (WeightVector<Rational>(3, 0)));
  EXPECT_EQ(t.mu, t.lambda);
  EXPECT_EQ(t.nu, t.lambda);
}

TEST(LRType, RejectsNonMembersButSumsStayAvailable) {
  auto a = fig3();
  a(1, 2) = -1;
  EXPECT_THROW(lr_type(a), validation_error);
  EXPECT_EQ(lr_boundary_sums(a).mu, convert_type<Rational>(eq1_type()).mu);
}

TEST(LRType, MembersHavePartitionLikeBalancedTypes) {
  Rng rng(32);
  for (int n = 0; n < 300; ++n) {
    auto a = random_lr_member(rng, std::size_t(uniform(rng, 1, 5)));
    auto t = lr_type(a);
    EXPECT_TRUE(type_sum_check(t));
    EXPECT_TRUE(is_weakly_decreasing(t.lambda));
    EXPECT_TRUE(is_weakly_decreasing(t.nu));
  }
}

TEST(RedundantInequality, ImpliedByMembership) {
  EXPECT_TRUE(redundant_inequality_check(fig3()));
  EXPECT_TRUE(redundant_inequality_check(TriangularArray<Rational>(4)));
  Rng rng(33);
  for (int n = 0; n < 500; ++n) {
    auto a = random_lr_member(rng, std::size_t(uniform(rng, 1, 5)));
    ASSERT_TRUE(lr_validate(a));
    EXPECT_TRUE(redundant_inequality_check(a)) << format_triangle(a);
  }
}
