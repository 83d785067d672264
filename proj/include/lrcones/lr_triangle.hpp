#pragma once

#include <cstddef>
#include <vector>

#include "lrcones/core.hpp"
#include "lrcones/triangular_array.hpp"
#include "lrcones/validation.hpp"

namespace lrcones {

namespace detail {

// Row prefix sums S(i, j) = sum_{p=0}^{i} a_pj.
template <class T>
TriangularArray<T> row_prefix_sums(const TriangularArray<T>& a) {
  TriangularArray<T> s(a.k());
  for (std::size_t j = 1; j <= a.k(); ++j) {
    s(0, j) = a(0, j);
    for (std::size_t i = 1; i <= j; ++i) s(i, j) = s(i - 1, j) + a(i, j);
  }
  return s;
}

// Letter sums D(i, j) = sum_{q=i}^{j} a_iq for 1 <= i <= j.
template <class T>
TriangularArray<T> letter_prefix_sums(const TriangularArray<T>& a) {
  TriangularArray<T> d(a.k());
  for (std::size_t i = 1; i <= a.k(); ++i) {
    d(i, i) = a(i, i);
    for (std::size_t j = i + 1; j <= a.k(); ++j) d(i, j) = d(i, j - 1) + a(i, j);
  }
  return d;
}

}  // namespace detail

/// Membership in the LR cone: (P), then (CS), then (LR), each scanned in
/// lexicographic (i, j) order; the first violation is reported.
template <class T>
ValidationReport lr_validate(const TriangularArray<T>& a) {
  const std::size_t k = a.k();
  if (a(0, 0) != T(0)) return ValidationReport::fail("apex", 0, 0, "a_00 must be 0");

  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j)
      if (a(i, j) < T(0))
        return ValidationReport::fail("P", int(i), int(j), "a_ij = " + to_string(a(i, j)) + " < 0");

  auto s = detail::row_prefix_sums(a);
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      if (s(i - 1, j) < s(i, j + 1))
        return ValidationReport::fail("CS", int(i), int(j),
                                      to_string(s(i - 1, j)) + " < " + to_string(s(i, j + 1)));

  auto d = detail::letter_prefix_sums(a);
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      if (d(i, j) < d(i + 1, j + 1))
        return ValidationReport::fail("LR", int(i), int(j),
                                      to_string(d(i, j)) + " < " + to_string(d(i + 1, j + 1)));
  return ValidationReport::pass();
}

/// The sums of (B1)-(B3) evaluated without checking membership. Outside the
/// LR cone the vectors carry no guarantee of being weakly decreasing.
template <class T>
TriangleType<T> lr_boundary_sums(const TriangularArray<T>& a) {
  const std::size_t k = a.k();
  TriangleType<T> t{WeightVector<T>(k, T(0)), WeightVector<T>(k, T(0)), WeightVector<T>(k, T(0))};
  for (std::size_t j = 1; j <= k; ++j) {
    t.mu[j - 1] = a(0, j);
    T col(0);
    for (std::size_t p = 0; p <= j; ++p) col += a(p, j);
    t.lambda[j - 1] = col;
  }
  for (std::size_t i = 1; i <= k; ++i) {
    T row(0);
    for (std::size_t q = i; q <= k; ++q) row += a(i, q);
    t.nu[i - 1] = row;
  }
  return t;
}

/// Type (lambda, mu, nu) of an LR triangle. Throws validation_error on non-members.
template <class T>
TriangleType<T> lr_type(const TriangularArray<T>& a) {
  if (auto r = lr_validate(a); !r) throw validation_error("not an LR triangle", r);
  return lr_boundary_sums(a);
}

/// sum_{p<=j} a_pj >= sum_{p<=j+1} a_{p,j+1} for 1 <= j < k. Implied by (CS) and (LR).
template <class T>
bool redundant_inequality_check(const TriangularArray<T>& a) {
  auto s = detail::row_prefix_sums(a);
  for (std::size_t j = 1; j < a.k(); ++j)
    if (s(j, j) < s(j + 1, j + 1)) return false;
  return true;
}

}  // namespace lrcones
