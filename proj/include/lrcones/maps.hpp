#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lrcones/bz_triangle.hpp"
#include "lrcones/exact_matrix.hpp"
#include "lrcones/hive.hpp"
#include "lrcones/triangular_array.hpp"
#include "lrcones/validation.hpp"

// Linear maps between LR triangles, hives and BZ labelings. Every map here
// runs on running sums, so the work per output entry is bounded by a constant.

namespace lrcones {

/// Parameters of the two-dimensional fiber of Psi∘Phi over a W point.
template <class T = Rational>
struct FiberParams {
  T s{0};
  T t{0};
};

/// Phi: h_ij = sum_{p<=i} sum_{p<=q<=j} a_pq.
/// Built column by column from h_{i-1,j} plus the running letter sum of row i.
template <class T>
Hive<T> phi(const TriangularArray<T>& a) {
  const std::size_t k = a.k();
  Hive<T> h(k);
  T top = a(0, 1);
  h(0, 1) = top;
  for (std::size_t j = 2; j <= k; ++j) {
    top += a(0, j);
    h(0, j) = top;
  }
  for (std::size_t i = 1; i <= k; ++i) {
    T letter = a(i, i);
    h(i, i) = h(i - 1, i) + letter;
    for (std::size_t j = i + 1; j <= k; ++j) {
      letter += a(i, j);
      h(i, j) = h(i - 1, j) + letter;
    }
  }
  return h;
}

/// Inverse of phi; a second difference with the boundary cases i = 0 and i = j.
template <class T>
TriangularArray<T> phi_inv(const Hive<T>& h) {
  const std::size_t k = h.k();
  TriangularArray<T> a(k);
  for (std::size_t j = 1; j <= k; ++j) {
    a(0, j) = h(0, j) - h(0, j - 1);
    a(j, j) = h(j, j) - h(j - 1, j);
    for (std::size_t i = 1; i < j; ++i) a(i, j) = h(i, j) - h(i, j - 1) - h(i - 1, j) + h(i - 1, j - 1);
  }
  return a;
}

/// Psi: T_k -> W_{k-1}; x, y, z are the slacks of the (V), (R) shifted by one
/// in j, and (L) rhombus inequalities.
template <class T>
BZLabeling<T> psi(const Hive<T>& h) {
  const std::size_t k = h.k();
  if (k < 2) throw usage_error("psi needs a hive of size k >= 2");
  BZLabeling<T> out(k - 1);
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = 1; i <= j; ++i) {
      out.x(i, j) = h(i, j) + h(i - 1, j) - h(i - 1, j - 1) - h(i, j + 1);
      out.y(i, j) = h(i - 1, j) + h(i, j + 1) - h(i, j) - h(i - 1, j + 1);
      out.z(i, j) = h(i, j) + h(i, j + 1) - h(i - 1, j) - h(i + 1, j + 1);
    }
  return out;
}

/// Psi∘Phi in closed form: x and z are the (CS) and (LR) slacks, y_ij = a_{i,j+1}.
template <class T>
BZLabeling<T> psi_phi(const TriangularArray<T>& a) {
  const std::size_t k = a.k();
  if (k < 2) throw usage_error("psi_phi needs an array of size k >= 2");
  // prefix(p, j) = sum_{r<=p} a_rj for p < j; letters(i, j) = sum_{i<=q<=j} a_iq.
  TriangularArray<T> prefix(k);
  TriangularArray<T> letters(k);
  for (std::size_t j = 1; j <= k; ++j) {
    prefix(0, j) = a(0, j);
    for (std::size_t p = 1; p < j; ++p) prefix(p, j) = prefix(p - 1, j) + a(p, j);
  }
  for (std::size_t i = 1; i <= k; ++i) {
    letters(i, i) = a(i, i);
    for (std::size_t j = i + 1; j <= k; ++j) letters(i, j) = letters(i, j - 1) + a(i, j);
  }
  BZLabeling<T> out(k - 1);
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = 1; i <= j; ++i) {
      out.x(i, j) = prefix(i - 1, j) - prefix(i, j + 1);
      out.y(i, j) = a(i, j + 1);
      out.z(i, j) = letters(i, j) - letters(i + 1, j + 1);
    }
  return out;
}

/// Preimage A_{s,t} of a W_{k-1} point under Psi∘Phi. The whole preimage is
/// exactly {A_{s,t} : s, t}; (0, 0) is the section omega.
template <class T>
TriangularArray<T> fiber_element(const BZLabeling<T>& x, const FiberParams<T>& params) {
  if (auto r = in_Wk(x); !r) throw validation_error("labeling is not in W", r);
  const std::size_t k = x.k() + 1;
  TriangularArray<T> a(k);
  a(0, k) = params.s;
  a(k, k) = params.t;
  T top = params.s;
  T diag = params.t;
  for (std::size_t j = k - 1; j >= 1; --j) {
    top += x.x(1, j) + x.y(1, j);
    diag += x.z(j, j);
    a(0, j) = top;
    a(j, j) = diag;
  }
  for (std::size_t j = 2; j <= k; ++j)
    for (std::size_t i = 1; i < j; ++i) a(i, j) = x.y(i, j - 1);
  return a;
}

/// Omega: the section of Psi∘Phi with a_0k = a_kk = 0.
template <class T>
TriangularArray<T> omega(const BZLabeling<T>& x) {
  return fiber_element(x, FiberParams<T>{});
}

/// Lexicographic basis E_01, ..., E_0k, E_11, ..., E_kk of T_k.
inline std::vector<std::pair<std::size_t, std::size_t>> lex_basis(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = std::max<std::size_t>(i, 1); j <= k; ++j) basis.emplace_back(i, j);
  return basis;
}

/// Matrix of phi in the lexicographic basis; column c is phi(E_c).
inline RationalMatrix phi_matrix(std::size_t k) {
  auto basis = lex_basis(k);
  RationalMatrix m(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    TriangularArray<Rational> e(k);
    e(basis[c].first, basis[c].second) = 1;
    auto image = phi(e);
    for (std::size_t r = 0; r < basis.size(); ++r) m(r, c) = image(basis[r].first, basis[r].second);
  }
  return m;
}

struct UnimodularityCertificate {
  std::size_t k = 0;
  std::size_t dimension = 0;
  bool lower_triangular = false;
  bool unit_diagonal = false;
  Rational determinant{0};

  bool holds() const { return lower_triangular && unit_diagonal && determinant == 1; }
};

/// Checks that phi's matrix is lower unitriangular and that its determinant,
/// computed by elimination rather than read off the diagonal, is exactly 1.
inline UnimodularityCertificate phi_unimodularity_certificate(std::size_t k) {
  if (k < 1) throw usage_error("certificate needs k >= 1");
  auto m = phi_matrix(k);
  UnimodularityCertificate cert;
  cert.k = k;
  cert.dimension = m.rows();
  cert.lower_triangular = m.is_lower_triangular();
  cert.unit_diagonal = m.has_unit_diagonal();
  cert.determinant = determinant(m);
  return cert;
}

}  // namespace lrcones
