#include <gtest/gtest.h>

#include <numeric>

#include "test_support.hpp"

using namespace lrcones;
using namespace lrcones::testing;

namespace {

std::vector<std::vector<BigInt>> phi_integer_rows(std::size_t k) { return to_integer_rows(phi_matrix(k)); }

// Leibniz expansion; feasible only for tiny matrices.
BigInt leibniz_determinant(const std::vector<std::vector<BigInt>>& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  BigInt det = 0;
  do {
    int sign = 1;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) sign = -sign;
    BigInt term = sign;
    for (std::size_t r = 0; r < perm.size() && term != 0; ++r) term *= m[r][perm[r]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST(Phi, Figure3ToFigure5) { EXPECT_EQ(phi(fig3()), fig5()); }

TEST(Phi, ZeroAndSingleEntry) {
  EXPECT_EQ(phi(TriangularArray<Rational>(4)), Hive<Rational>(4));
  TriangularArray<Rational> a(1);
  a(0, 1) = 7;
  a(1, 1) = Rational(-2, 3);
  auto h = phi(a);
  EXPECT_EQ(h(0, 1), 7);
  EXPECT_EQ(h(1, 1), Rational(19, 3));
}

TEST(Phi, MatchesLiteralDoubleSum) {
  Rng rng(61);
  for (int n = 0; n < 500; ++n) {
    auto a = random_rational_array(rng, std::size_t(uniform(rng, 1, 7)));
    EXPECT_EQ(phi(a), naive_phi(a));
  }
}

TEST(PhiInv, Figure5ToFigure3) { EXPECT_EQ(phi_inv(fig5()), fig3()); }

TEST(PhiInv, ZeroHive) { EXPECT_EQ(phi_inv(Hive<Rational>(3)), TriangularArray<Rational>(3)); }

TEST(PhiInv, IntegerRoundTrips) {
  Rng rng(62);
  for (int n = 0; n < 1000; ++n) {
    auto a = random_integer_array(rng, std::size_t(uniform(rng, 1, 6)));
    EXPECT_EQ(phi_inv(phi(a)), a);
    EXPECT_EQ(phi(phi_inv(a)), a);
  }
}

TEST(PhiInv, RationalRoundTrips) {
  Rng rng(63);
  for (int n = 0; n < 1000; ++n) {
    auto a = random_rational_array(rng, std::size_t(uniform(rng, 1, 6)));
    EXPECT_EQ(phi_inv(phi(a)), a);
    EXPECT_EQ(phi(phi_inv(a)), a);
  }
}

TEST(Psi, Figure5ToFigure7) {
  auto x = psi(fig5());
  EXPECT_EQ(x, fig7());
  EXPECT_EQ(x.x(1, 1), 2);
}

TEST(Psi, ZeroHiveAndSmallSize) {
  EXPECT_EQ(psi(Hive<Rational>(3)), BZLabeling<Rational>(2));
  EXPECT_THROW(psi(Hive<Rational>(1)), usage_error);
}

TEST(Psi, MatchesLiteralFormulaAndLandsInW) {
  Rng rng(64);
  for (int n = 0; n < 500; ++n) {
    auto h = random_rational_array(rng, std::size_t(uniform(rng, 2, 7)));
    auto x = psi(h);
    EXPECT_EQ(x, naive_psi(h));
    EXPECT_TRUE(in_Wk(x));
  }
}

TEST(PsiPhi, Figure3ToFigure7) {
  auto x = psi_phi(fig3());
  EXPECT_EQ(x, fig7());
  EXPECT_EQ(x.y(2, 2), 5);
}

TEST(PsiPhi, ZeroArray) { EXPECT_EQ(psi_phi(TriangularArray<Rational>(5)), BZLabeling<Rational>(4)); }

TEST(PsiPhi, EqualsComposition) {
  Rng rng(65);
  for (int n = 0; n < 500; ++n) {
    auto a = random_rational_array(rng, std::size_t(uniform(rng, 2, 7)));
    EXPECT_EQ(psi_phi(a), psi(phi(a)));
  }
}

TEST(Omega, ZeroAndFigure7) {
  EXPECT_EQ(omega(BZLabeling<Rational>(3)), TriangularArray<Rational>(4));
  auto a = omega(fig7());
  EXPECT_EQ(a(0, 5), 0);
  EXPECT_EQ(a(5, 5), 0);
  EXPECT_EQ(psi_phi(a), fig7());
  FiberParams<Rational> origin;
  EXPECT_EQ(a, fiber_element(fig7(), origin));
}

TEST(Omega, SectionOfPsiPhi) {
  Rng rng(66);
  for (int n = 0; n < 300; ++n) {
    WkSampler sampler(std::size_t(uniform(rng, 1, 5)));
    auto x = sampler.sample(rng);
    EXPECT_EQ(psi_phi(omega(x)), x);
  }
}

TEST(Omega, MapsTypedBZPointsIntoLRWhenLastPartsVanish) {
  Rng rng(67);
  int checked = 0;
  for (int n = 0; n < 200; ++n) {
    auto t = random_type(rng, std::size_t(uniform(rng, 2, 4)), 5);
    if (t.mu.back() != 0 || t.nu.back() != 0) continue;
    enumerate_bz_points(t, [&](const BZLabeling<std::int64_t>& x) {
      auto a = omega(x);
      EXPECT_TRUE(lr_validate(a));
      EXPECT_EQ(lr_type(a), t);
      ++checked;
      return true;
    });
  }
  EXPECT_GT(checked, 20);
}

TEST(Omega, RejectsLabelingsOutsideW) {
  auto x = fig7();
  x.y(1, 1) = 5;
  EXPECT_THROW(omega(x), validation_error);
}

TEST(Fiber, Figure7AtFigure3Parameters) {
  // Figure 3 has a_05 = 0 and a_55 = 2, which pin (s, t) = (0, 2).
  FiberParams<Rational> p{0, 2};
  EXPECT_EQ(fiber_element(fig7(), p), fig3());
  FiberParams<Rational> q{15, 2};
  auto other = fiber_element(fig7(), q);
  EXPECT_EQ(other(0, 5), 15);
  EXPECT_NE(other, fig3());
  EXPECT_EQ(psi_phi(other), fig7());
}

TEST(Fiber, ZeroLabelingAtOrigin) {
  EXPECT_EQ(fiber_element(BZLabeling<Rational>(2), FiberParams<Rational>{}), TriangularArray<Rational>(3));
}

TEST(Fiber, EveryFiberElementMapsBack) {
  Rng rng(68);
  for (int n = 0; n < 300; ++n) {
    WkSampler sampler(std::size_t(uniform(rng, 1, 5)));
    auto x = sampler.sample(rng);
    FiberParams<Rational> p{random_rational(rng), random_rational(rng)};
    EXPECT_EQ(psi_phi(fiber_element(x, p)), x);
  }
}

TEST(Fiber, DistinctParametersGiveDistinctTypes) {
  Rng rng(69);
  for (int n = 0; n < 200; ++n) {
    WkSampler sampler(std::size_t(uniform(rng, 1, 4)));
    auto x = sampler.sample(rng);
    FiberParams<Rational> p{random_rational(rng), random_rational(rng)};
    FiberParams<Rational> q{p.s + random_rational(rng, 3), p.t + random_rational(rng, 3)};
    if (p.s == q.s && p.t == q.t) continue;
    auto tp = lr_boundary_sums(fiber_element(x, p));
    auto tq = lr_boundary_sums(fiber_element(x, q));
    EXPECT_NE(tp, tq);
    // The type moves as (lambda + (s + t), mu + s, nu + t).
    for (std::size_t j = 0; j < tp.k(); ++j) {
      EXPECT_EQ(tq.lambda[j] - tp.lambda[j], (q.s - p.s) + (q.t - p.t));
      EXPECT_EQ(tq.mu[j] - tp.mu[j], q.s - p.s);
      EXPECT_EQ(tq.nu[j] - tp.nu[j], q.t - p.t);
    }
  }
}

TEST(Fiber, FullPreimageDescription) {
  // Any preimage of x differs from omega(x) only in (s, t).
  Rng rng(70);
  for (int n = 0; n < 300; ++n) {
    auto a = random_rational_array(rng, std::size_t(uniform(rng, 2, 6)));
    const std::size_t k = a.k();
    FiberParams<Rational> p{a(0, k), a(k, k)};
    EXPECT_EQ(fiber_element(psi_phi(a), p), a);
  }
}

TEST(ConeCorrespondence, PhiMapsLRConeOntoHiveCone) {
  Rng rng(71);
  int members = 0;
  for (int n = 0; n < 1000; ++n) {
    auto k = std::size_t(uniform(rng, 1, 5));
    auto a = n % 2 ? random_lr_member(rng, k) : random_rational_array(rng, k);
    bool member = bool(lr_validate(a));
    members += member;
    EXPECT_EQ(bool(hive_validate(phi(a))), member);
    auto h = n % 2 ? phi(random_lr_member(rng, k)) : random_rational_array(rng, k);
    EXPECT_EQ(bool(lr_validate(phi_inv(h))), bool(hive_validate(h)));
  }
  EXPECT_GT(members, 400);
}

TEST(ConeCorrespondence, TypesPreservedAcrossAllModels) {
  Rng rng(72);
  for (int n = 0; n < 300; ++n) {
    auto a = random_lr_member(rng, std::size_t(uniform(rng, 2, 5)));
    auto t = lr_type(a);
    EXPECT_EQ(hive_type(phi(a)), t);
    auto x = psi_phi(a);
    EXPECT_TRUE(bz_validate(x));
    EXPECT_TRUE(bz_type_match(x, t));
  }
}

TEST(LatticePreservation, IntegerArraysStayInteger) {
  Rng rng(73);
  for (int n = 0; n < 200; ++n) {
    auto a = random_integer_array(rng, std::size_t(uniform(rng, 1, 6)));
    auto h = phi(convert_array<Rational>(a));
    for (const auto& v : h.values()) EXPECT_TRUE(is_integer(v));
    auto back = phi_inv(convert_array<Rational>(a));
    for (const auto& v : back.values()) EXPECT_TRUE(is_integer(v));
  }
}

TEST(Unimodularity, CertificateForSmallK) {
  for (std::size_t k = 1; k <= 6; ++k) {
    auto cert = phi_unimodularity_certificate(k);
    EXPECT_TRUE(cert.holds()) << k;
    EXPECT_EQ(cert.dimension, (k + 1) * (k + 2) / 2 - 1);
    EXPECT_EQ(cert.determinant, 1);
  }
  auto one = phi_matrix(1);
  EXPECT_EQ(one.rows(), 2u);
  EXPECT_EQ(one(0, 0), 1);
  EXPECT_EQ(one(0, 1), 0);
  EXPECT_EQ(one(1, 0), 1);
  EXPECT_EQ(one(1, 1), 1);
  EXPECT_EQ(phi_matrix(3).rows(), 9u);
  EXPECT_EQ(phi_matrix(5).rows(), 20u);
}

TEST(Unimodularity, IndependentDeterminants) {
  for (std::size_t k = 1; k <= 2; ++k) EXPECT_EQ(leibniz_determinant(phi_integer_rows(k)), 1);
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(bareiss_determinant(phi_integer_rows(k)), 1);
  // The matrix is not merely triangular by accident of ordering: phi_inv's
  // matrix is its exact inverse.
  auto m = phi_matrix(4);
  auto basis = lex_basis(4);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    TriangularArray<Rational> column(4);
    for (std::size_t r = 0; r < basis.size(); ++r) column(basis[r].first, basis[r].second) = m(r, c);
    auto e = phi_inv(column);
    for (std::size_t r = 0; r < basis.size(); ++r)
      EXPECT_EQ(e(basis[r].first, basis[r].second), r == c ? 1 : 0);
  }
}

TEST(OperationCounts, BoundedWorkPerEntry) {
  // Additions and subtractions per output entry stay bounded as k grows.
  for (std::size_t k : {4u, 8u, 16u, 32u}) {
    TriangularArray<Counted<std::int64_t>> a(k);
    Counted<std::int64_t>::reset();
    auto h = phi(a);
    EXPECT_LE(Counted<std::int64_t>::tally(), 2 * h.dimension());
    Counted<std::int64_t>::reset();
    phi_inv(h);
    EXPECT_LE(Counted<std::int64_t>::tally(), 3 * h.dimension());
    Counted<std::int64_t>::reset();
    auto x = psi(h);
    EXPECT_LE(Counted<std::int64_t>::tally(), 3 * x.values().size());
    Counted<std::int64_t>::reset();
    psi_phi(a);
    EXPECT_LE(Counted<std::int64_t>::tally(), 2 * x.values().size());
    Counted<std::int64_t>::reset();
    // omega and fiber_element also pay for the membership check in W.
    auto o = omega(x);
    EXPECT_LE(Counted<std::int64_t>::tally(), 8 * o.dimension());
    Counted<std::int64_t>::reset();
    fiber_element(x, FiberParams<Counted<std::int64_t>>{1, 2});
    EXPECT_LE(Counted<std::int64_t>::tally(), 8 * o.dimension());
  }
}
