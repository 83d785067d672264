#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lrcones/core.hpp"
#include "lrcones/exact_matrix.hpp"
#include "lrcones/validation.hpp"

namespace lrcones {

/// Labeling of the BZ graph of size k: triangle i on level j (1 <= i <= j <= k)
/// carries the triple (x_ij, y_ij, z_ij).
template <class T = Rational>
class BZLabeling {
 public:
  BZLabeling() : BZLabeling(1) {}
  explicit BZLabeling(std::size_t k) : k_(k), data_(3 * (k * (k + 1) / 2), T(0)) {}

  std::size_t k() const { return k_; }

  T& x(std::size_t i, std::size_t j) { return data_[slot(i, j)]; }
  T& y(std::size_t i, std::size_t j) { return data_[slot(i, j) + 1]; }
  T& z(std::size_t i, std::size_t j) { return data_[slot(i, j) + 2]; }
  const T& x(std::size_t i, std::size_t j) const { return data_[slot(i, j)]; }
  const T& y(std::size_t i, std::size_t j) const { return data_[slot(i, j) + 1]; }
  const T& z(std::size_t i, std::size_t j) const { return data_[slot(i, j) + 2]; }

  /// All 3*C(k+1,2) scalars in the order x11, y11, z11, x12, y12, z12, x22, ...
  const std::vector<T>& values() const { return data_; }

  /// Position of x_ij in values(); y_ij and z_ij follow it.
  static std::size_t slot(std::size_t i, std::size_t j) { return 3 * ((j - 1) * j / 2 + (i - 1)); }

  friend bool operator==(const BZLabeling&, const BZLabeling&) = default;
  friend bool operator<(const BZLabeling& a, const BZLabeling& b) {
    if (a.k_ != b.k_) return a.k_ < b.k_;
    return a.data_ < b.data_;
  }

 private:
  std::size_t k_;
  std::vector<T> data_;
};

template <class To, class From>
BZLabeling<To> convert_labeling(const BZLabeling<From>& x) {
  BZLabeling<To> out(x.k());
  for (std::size_t j = 1; j <= x.k(); ++j)
    for (std::size_t i = 1; i <= j; ++i) {
      out.x(i, j) = To(x.x(i, j));
      out.y(i, j) = To(x.y(i, j));
      out.z(i, j) = To(x.z(i, j));
    }
  return out;
}

/// Hexagon relations (BZ1)-(BZ3). All three are checked per hexagon even
/// though any two imply the third; hexagons are scanned in (i, j) order.
template <class T>
ValidationReport in_Wk(const BZLabeling<T>& x) {
  const std::size_t k = x.k();
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      T l1 = x.y(i, j) + x.z(i, j), r1 = x.y(i + 1, j + 1) + x.z(i, j + 1);
      if (l1 != r1)
        return ValidationReport::fail("BZ1", int(i), int(j), to_string(l1) + " != " + to_string(r1));
      T l2 = x.x(i, j + 1) + x.y(i, j), r2 = x.x(i + 1, j + 1) + x.y(i + 1, j + 1);
      if (l2 != r2)
        return ValidationReport::fail("BZ2", int(i), int(j), to_string(l2) + " != " + to_string(r2));
      T l3 = x.x(i, j + 1) + x.z(i, j + 1), r3 = x.x(i + 1, j + 1) + x.z(i, j);
      if (l3 != r3)
        return ValidationReport::fail("BZ3", int(i), int(j), to_string(l3) + " != " + to_string(r3));
    }
  return ValidationReport::pass();
}

/// BZ triangle: a W_k point with every label nonnegative.
template <class T>
ValidationReport bz_validate(const BZLabeling<T>& x) {
  if (auto r = in_Wk(x); !r) return r;
  for (std::size_t j = 1; j <= x.k(); ++j)
    for (std::size_t i = 1; i <= j; ++i) {
      if (x.x(i, j) < T(0)) return ValidationReport::fail("nonnegative x", int(i), int(j), to_string(x.x(i, j)));
      if (x.y(i, j) < T(0)) return ValidationReport::fail("nonnegative y", int(i), int(j), to_string(x.y(i, j)));
      if (x.z(i, j) < T(0)) return ValidationReport::fail("nonnegative z", int(i), int(j), to_string(x.z(i, j)));
    }
  return ValidationReport::pass();
}

/// Boundary conditions (B1'')-(B3'') against a candidate type of length k+1.
/// Only consecutive differences of the type are constrained, so one BZ
/// triangle matches many types.
template <class T>
bool bz_type_match(const BZLabeling<T>& x, const TriangleType<T>& t) {
  const std::size_t k = x.k();
  if (!t.same_length() || t.k() != k + 1)
    throw usage_error("BZ labeling of size " + std::to_string(k) + " needs a type of length " +
                      std::to_string(k + 1));
  for (std::size_t j = 1; j <= k; ++j) {
    if (x.x(1, j) + x.y(1, j) != t.mu[j - 1] - t.mu[j]) return false;
    if (x.x(j, j) + x.z(j, j) != t.lambda[j - 1] - t.lambda[j]) return false;
    if (x.y(j, k) + x.z(j, k) != t.nu[j - 1] - t.nu[j]) return false;
  }
  return true;
}

/// Coefficient matrix of (BZ2) and (BZ3) over one hexagon per row pair,
/// variables ordered as in BZLabeling::values().
inline RationalMatrix hexagon_system(std::size_t k) {
  const std::size_t vars = 3 * (k * (k + 1) / 2);
  const std::size_t hexagons = k * (k - 1) / 2;
  RationalMatrix m(2 * hexagons, vars);
  auto x = [](std::size_t i, std::size_t j) { return BZLabeling<>::slot(i, j); };
  auto y = [](std::size_t i, std::size_t j) { return BZLabeling<>::slot(i, j) + 1; };
  auto z = [](std::size_t i, std::size_t j) { return BZLabeling<>::slot(i, j) + 2; };
  std::size_t row = 0;
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      // x_{i,j+1} + y_ij - x_{i+1,j+1} - y_{i+1,j+1} = 0
      m(row, x(i, j + 1)) += 1;
      m(row, y(i, j)) += 1;
      m(row, x(i + 1, j + 1)) -= 1;
      m(row, y(i + 1, j + 1)) -= 1;
      ++row;
      // x_{i,j+1} + z_{i,j+1} - x_{i+1,j+1} - z_ij = 0
      m(row, x(i, j + 1)) += 1;
      m(row, z(i, j + 1)) += 1;
      m(row, x(i + 1, j + 1)) -= 1;
      m(row, z(i, j)) -= 1;
      ++row;
    }
  return m;
}

/// Dimension of W_k: number of variables minus the exact rank of the
/// hexagon system.
inline std::size_t dim_Wk(std::size_t k) {
  if (k < 1) throw usage_error("dim_Wk needs k >= 1");
  auto m = hexagon_system(k);
  return m.cols() - rank(m);
}

}  // namespace lrcones
