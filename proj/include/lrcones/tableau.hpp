#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lrcones/core.hpp"
#include "lrcones/lattice_search.hpp"
#include "lrcones/lr_triangle.hpp"
#include "lrcones/triangular_array.hpp"
#include "lrcones/validation.hpp"

namespace lrcones {

/// Skew diagram lambda/mu; both partitions carry the same number of rows.
class SkewShape {
 public:
  SkewShape() = default;
  /// Pads both partitions to a common length (at least rows).
  SkewShape(const Partition& lambda, const Partition& mu, std::size_t rows = 0) {
    rows = std::max({rows, lambda.length(), mu.length()});
    lambda_ = lambda.padded(rows);
    mu_ = mu.padded(rows);
    if (!contains(mu_, lambda_))
      throw usage_error("mu = (" + mu_.to_string() + ") is not contained in lambda = (" +
                        lambda_.to_string() + ")");
  }

  const Partition& lambda() const { return lambda_; }
  const Partition& mu() const { return mu_; }
  std::size_t rows() const { return lambda_.length(); }
  std::size_t row_length(std::size_t r) const { return std::size_t(lambda_[r] - mu_[r]); }
  std::int64_t cell_count() const { return lambda_.size() - mu_.size(); }

  /// Whether the 1-based column c of 0-based row r is a skew cell.
  bool has_cell(std::size_t r, std::int64_t c) const {
    return r < rows() && c > mu_[r] && c <= lambda_[r];
  }

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.rows() == b.rows() && a.lambda_ == b.lambda_ && a.mu_ == b.mu_;
  }

 private:
  Partition lambda_;
  Partition mu_;
};

/// Filling of a skew shape with positive integers. rows[r] lists the skew
/// entries of row r from left to right; mu cells carry nothing.
class SkewTableau {
 public:
  SkewTableau() = default;
  SkewTableau(SkewShape shape, std::vector<std::vector<std::int64_t>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() < shape_.rows()) rows_.resize(shape_.rows());
    if (rows_.size() != shape_.rows())
      throw usage_error("tableau has " + std::to_string(rows_.size()) + " rows but the shape has " +
                        std::to_string(shape_.rows()));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].size() != shape_.row_length(r))
        throw usage_error("row " + std::to_string(r + 1) + " has " + std::to_string(rows_[r].size()) +
                          " entries, shape needs " + std::to_string(shape_.row_length(r)));
      for (auto e : rows_[r])
        if (e < 1) throw usage_error("tableau entries must be positive integers");
    }
  }

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  /// Entry at 0-based row r, 1-based column c (which must be a skew cell).
  std::int64_t at(std::size_t r, std::int64_t c) const {
    return rows_[r][std::size_t(c - shape_.mu()[r] - 1)];
  }

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
  friend bool operator<(const SkewTableau& a, const SkewTableau& b) { return a.rows_ < b.rows_; }

 private:
  SkewShape shape_;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Reading word: each row right to left, rows top to bottom.
inline std::vector<std::int64_t> word(const SkewTableau& t) {
  std::vector<std::int64_t> w;
  for (const auto& row : t.rows()) w.insert(w.end(), row.rbegin(), row.rend());
  return w;
}

/// gamma_i = number of i's, for i = 1 .. largest entry.
inline std::vector<std::int64_t> content(const SkewTableau& t) {
  std::vector<std::int64_t> gamma;
  for (const auto& row : t.rows())
    for (auto e : row) {
      if (std::size_t(e) > gamma.size()) gamma.resize(std::size_t(e), 0);
      ++gamma[std::size_t(e - 1)];
    }
  return gamma;
}

inline ValidationReport semistandard_check(const SkewTableau& t) {
  const auto& shape = t.shape();
  for (std::size_t r = 0; r < shape.rows(); ++r) {
    const auto& row = t.rows()[r];
    for (std::size_t c = 1; c < row.size(); ++c)
      if (row[c - 1] > row[c])
        return ValidationReport::fail("row weakly increasing", int(r + 1),
                                      int(shape.mu()[r] + std::int64_t(c) + 1));
  }
  for (std::size_t r = 1; r < shape.rows(); ++r)
    for (std::int64_t c = shape.mu()[r] + 1; c <= shape.lambda()[r]; ++c)
      if (shape.has_cell(r - 1, c) && t.at(r - 1, c) >= t.at(r, c))
        return ValidationReport::fail("column strictly increasing", int(r + 1), int(c));
  return ValidationReport::pass();
}

inline bool is_semistandard(const SkewTableau& t) { return bool(semistandard_check(t)); }

/// Every prefix has at least as many i's as (i+1)'s.
inline bool is_lattice_permutation(const std::vector<std::int64_t>& w) {
  std::vector<std::int64_t> seen;
  for (auto letter : w) {
    if (letter < 1) return false;
    if (std::size_t(letter) > seen.size()) seen.resize(std::size_t(letter), 0);
    auto& n = seen[std::size_t(letter - 1)];
    ++n;
    if (letter > 1 && n > seen[std::size_t(letter - 2)]) return false;
  }
  return true;
}

/// Semistandard checks first, then the lattice condition on the word. The
/// lattice failure is reported at the 1-based word position where it occurs.
inline ValidationReport lr_tableau_check(const SkewTableau& t) {
  if (auto r = semistandard_check(t); !r) return r;
  auto w = word(t);
  std::vector<std::int64_t> seen;
  for (std::size_t n = 0; n < w.size(); ++n) {
    auto letter = std::size_t(w[n]);
    if (letter > seen.size()) seen.resize(letter, 0);
    if (++seen[letter - 1] > (letter > 1 ? seen[letter - 2] : seen[0]))
      return ValidationReport::fail("lattice word", int(n + 1), int(letter));
  }
  return ValidationReport::pass();
}

inline bool is_lr_tableau(const SkewTableau& t) {
  return is_semistandard(t) && is_lattice_permutation(word(t));
}

/// a_0j = mu_j and a_ij = number of i's in row j.
inline TriangularArray<std::int64_t> tableau_to_triangle(const SkewTableau& t, std::size_t k) {
  if (auto r = lr_tableau_check(t); !r) throw validation_error("not an LR tableau", r);
  const auto& shape = t.shape();
  for (std::size_t r = k; r < shape.rows(); ++r)
    if (shape.lambda()[r] != 0)
      throw usage_error("tableau has more than k = " + std::to_string(k) + " nonzero rows");
  TriangularArray<std::int64_t> a(k);
  for (std::size_t j = 1; j <= k; ++j) {
    a(0, j) = shape.mu()[j - 1];
    if (j - 1 >= shape.rows()) continue;
    for (auto e : t.rows()[j - 1]) {
      // In an LR tableau the letter i only occurs in rows i and below.
      if (std::size_t(e) > j) throw usage_error("letter exceeds its row index");
      ++a(std::size_t(e), j);
    }
  }
  return a;
}

/// Row j receives a_1j ones, a_2j twos, ..., a_jj j's, in that order.
inline SkewTableau triangle_to_tableau(const TriangularArray<std::int64_t>& a) {
  if (auto r = lr_validate(a); !r) throw validation_error("not an LR triangle", r);
  auto type = lr_boundary_sums(a);
  if (!is_partition(type.lambda) || !is_partition(type.mu) || !is_partition(type.nu))
    throw usage_error("LR triangle type is not a triple of partitions");
  const std::size_t k = a.k();
  std::vector<std::vector<std::int64_t>> rows(k);
  for (std::size_t j = 1; j <= k; ++j)
    for (std::size_t i = 1; i <= j; ++i) {
      if (a(i, j) < 0) throw usage_error("negative letter count a_" + std::to_string(i) + std::to_string(j));
      rows[j - 1].insert(rows[j - 1].end(), std::size_t(a(i, j)), std::int64_t(i));
    }
  return SkewTableau(SkewShape(Partition(type.lambda), Partition(type.mu), k), std::move(rows));
}

inline SkewTableau triangle_to_tableau(const TriangularArray<Rational>& a) {
  TriangularArray<std::int64_t> ints(a.k());
  for (std::size_t j = 1; j <= a.k(); ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      auto v = to_int64(a(i, j));
      if (!v) throw usage_error("entry a_" + std::to_string(i) + std::to_string(j) + " is not an integer");
      ints(i, j) = *v;
    }
  return triangle_to_tableau(ints);
}

namespace detail {

class TableauFiller {
 public:
  TableauFiller(const SkewShape& shape, const Partition& content)
      : shape_(shape), content_(content.parts()), used_(content.length(), 0), rows_(shape.rows()) {
    for (std::size_t r = 0; r < shape.rows(); ++r) rows_[r].assign(shape.row_length(r), 0);
  }

  template <class Visitor>
  EnumerationResult run(Visitor& visit, const PointLimit& limit) {
    EnumerationResult result;
    fill(0, shape_.lambda()[0], visit, limit, result);
    return result;
  }

 private:
  std::int64_t& cell(std::size_t r, std::int64_t c) { return rows_[r][std::size_t(c - shape_.mu()[r] - 1)]; }

  // Cells are filled in reading-word order: row by row, right to left.
  template <class Visitor>
  bool fill(std::size_t r, std::int64_t c, Visitor& visit, const PointLimit& limit,
            EnumerationResult& result) {
    while (r < shape_.rows() && c <= shape_.mu()[r]) {
      ++r;
      c = r < shape_.rows() ? shape_.lambda()[r] : 0;
    }
    if (r == shape_.rows()) {
      if (limit && result.count >= *limit) {
        result.truncated = true;
        return false;
      }
      ++result.count;
      return visit(SkewTableau(shape_, rows_));
    }
    std::int64_t hi = std::int64_t(content_.size());
    if (c < shape_.lambda()[r]) hi = std::min(hi, cell(r, c + 1));
    std::int64_t lo = 1;
    if (r > 0 && shape_.has_cell(r - 1, c)) lo = cell(r - 1, c) + 1;
    for (std::int64_t v = lo; v <= hi; ++v) {
      auto idx = std::size_t(v - 1);
      if (used_[idx] == content_[idx]) continue;
      if (v > 1 && used_[idx] + 1 > used_[idx - 1]) continue;
      ++used_[idx];
      cell(r, c) = v;
      bool go_on = fill(r, c - 1, visit, limit, result);
      --used_[idx];
      if (!go_on) return false;
    }
    return true;
  }

  const SkewShape& shape_;
  std::vector<std::int64_t> content_;
  std::vector<std::int64_t> used_;
  std::vector<std::vector<std::int64_t>> rows_;
};

}  // namespace detail

/// Streams every LR tableau of shape lambda/mu and content nu to visit
/// (returning false stops the stream). The count is c^lambda_{mu nu}.
/// An empty stream results when mu is not contained in lambda; a size
/// mismatch |lambda| != |mu| + |nu| is a usage error.
template <class Visitor>
EnumerationResult enumerate_lr_tableaux(const Partition& lambda, const Partition& mu,
                                        const Partition& nu, Visitor&& visit,
                                        PointLimit limit = std::nullopt) {
  if (lambda.size() != mu.size() + nu.size())
    throw usage_error("|lambda| = " + std::to_string(lambda.size()) + " but |mu| + |nu| = " +
                      std::to_string(mu.size() + nu.size()));
  if (!contains(mu, lambda)) return {};
  std::size_t rows = std::max({lambda.length(), mu.length(), std::size_t{1}});
  SkewShape shape(lambda, mu, rows);
  Partition content = nu.padded(nu.nonzero_length());
  if (content.nonzero_length() > rows) return {};
  detail::TableauFiller filler(shape, content);
  return filler.run(visit, limit);
}

inline EnumerationResult count_lr_tableaux(const Partition& lambda, const Partition& mu,
                                           const Partition& nu, PointLimit limit = std::nullopt) {
  return enumerate_lr_tableaux(lambda, mu, nu, [](const SkewTableau&) { return true; }, limit);
}

}  // namespace lrcones
