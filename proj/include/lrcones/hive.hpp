#pragma once

#include <cstddef>

#include "lrcones/core.hpp"
#include "lrcones/triangular_array.hpp"
#include "lrcones/validation.hpp"

namespace lrcones {

/// Hives share storage with LR triangles; only the inequality system differs.
template <class T = Rational>
using Hive = TriangularArray<T>;

/// Rhombus inequalities. Each family is scanned in lexicographic (i, j)
/// order, families in the order (R), (V), (L).
template <class T>
ValidationReport hive_validate(const Hive<T>& h) {
  const std::size_t k = h.k();
  if (h(0, 0) != T(0)) return ValidationReport::fail("apex", 0, 0, "h_00 must be 0");

  auto fail = [](const char* name, std::size_t i, std::size_t j, const T& lhs, const T& rhs) {
    return ValidationReport::fail(name, int(i), int(j), to_string(lhs) + " < " + to_string(rhs));
  };

  // (R) h_ij - h_{i,j-1} >= h_{i-1,j} - h_{i-1,j-1}
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j) {
      T lhs = h(i, j) - h(i, j - 1);
      T rhs = h(i - 1, j) - h(i - 1, j - 1);
      if (lhs < rhs) return fail("R", i, j, lhs, rhs);
    }
  // (V) h_{i-1,j} - h_{i-1,j-1} >= h_{i,j+1} - h_ij
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      T lhs = h(i - 1, j) - h(i - 1, j - 1);
      T rhs = h(i, j + 1) - h(i, j);
      if (lhs < rhs) return fail("V", i, j, lhs, rhs);
    }
  // (L) h_ij - h_{i-1,j} >= h_{i+1,j+1} - h_{i,j+1}
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      T lhs = h(i, j) - h(i - 1, j);
      T rhs = h(i + 1, j + 1) - h(i, j + 1);
      if (lhs < rhs) return fail("L", i, j, lhs, rhs);
    }
  return ValidationReport::pass();
}

/// Boundary differences (B1')-(B3') without a membership check.
template <class T>
TriangleType<T> hive_boundary_differences(const Hive<T>& h) {
  const std::size_t k = h.k();
  TriangleType<T> t{WeightVector<T>(k, T(0)), WeightVector<T>(k, T(0)), WeightVector<T>(k, T(0))};
  for (std::size_t j = 1; j <= k; ++j) {
    t.mu[j - 1] = h(0, j) - h(0, j - 1);
    t.lambda[j - 1] = h(j, j) - h(j - 1, j - 1);
    t.nu[j - 1] = h(j, k) - h(j - 1, k);
  }
  return t;
}

/// Type of a hive. Throws validation_error on non-members.
template <class T>
TriangleType<T> hive_type(const Hive<T>& h) {
  if (auto r = hive_validate(h); !r) throw validation_error("not a hive", r);
  return hive_boundary_differences(h);
}

}  // namespace lrcones
