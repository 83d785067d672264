#pragma once

#include <cassert>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lrcones/rational.hpp"

namespace lrcones {

/// Labeling (a_ij), 0 <= i <= j <= k, of the vertices of the size-k hive graph.
///
/// Stored by rows: row j holds (a_0j, ..., a_jj). The apex a_00 is pinned to
/// zero; it is readable but writes to it are rejected by set(). LR triangles
/// and hives share this representation.
template <class T = Rational>
class TriangularArray {
 public:
  TriangularArray() : TriangularArray(1) {}
  explicit TriangularArray(std::size_t k) : k_(k), data_((k + 1) * (k + 2) / 2, T(0)) {}

  std::size_t k() const { return k_; }

  /// Number of free coordinates, C(k+2,2) - 1.
  std::size_t dimension() const { return data_.size() - 1; }

  const T& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }

  /// Mutable access for every vertex except the apex.
  T& operator()(std::size_t i, std::size_t j) {
    assert(!(i == 0 && j == 0));
    return data_[index(i, j)];
  }

  void set(std::size_t i, std::size_t j, T value) {
    if (i == 0 && j == 0 && value != T(0))
      throw std::invalid_argument("a_00 is fixed at 0");
    data_[index(i, j)] = std::move(value);
  }

  /// Flat storage in row order; entry 0 is the apex.
  const std::vector<T>& values() const { return data_; }

  static std::size_t index(std::size_t i, std::size_t j) {
    assert(i <= j);
    return j * (j + 1) / 2 + i;
  }

  friend bool operator==(const TriangularArray&, const TriangularArray&) = default;
  friend bool operator<(const TriangularArray& a, const TriangularArray& b) {
    if (a.k_ != b.k_) return a.k_ < b.k_;
    return a.data_ < b.data_;
  }

 private:
  std::size_t k_;
  std::vector<T> data_;
};

template <class To, class From>
TriangularArray<To> convert_array(const TriangularArray<From>& a) {
  TriangularArray<To> out(a.k());
  for (std::size_t j = 1; j <= a.k(); ++j)
    for (std::size_t i = 0; i <= j; ++i) out(i, j) = To(a(i, j));
  return out;
}

/// Text format: a line "k=<n>", then rows 0..n, row j holding j+1
/// space-separated rationals a_0j ... a_jj.
template <class T>
std::string format_triangle(const TriangularArray<T>& a) {
  std::string out = "k=" + std::to_string(a.k()) + "\n";
  for (std::size_t j = 0; j <= a.k(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      if (i) out += ' ';
      out += to_string(a(i, j));
    }
    out += '\n';
  }
  return out;
}

inline TriangularArray<Rational> parse_triangle(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& dst) {
    while (std::getline(in, dst)) {
      if (!dst.empty() && dst.back() == '\r') dst.pop_back();
      if (dst.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) throw parse_error("empty triangle document");
  auto first = line.find_first_not_of(" \t");
  auto last = line.find_last_not_of(" \t");
  std::string header = line.substr(first, last - first + 1);
  if (header.rfind("k=", 0) != 0) throw parse_error("expected 'k=<n>' header, got '" + header + "'");
  auto kval = to_int64(parse_rational(header.substr(2)));
  if (!kval || *kval < 1) throw parse_error("size k must be a positive integer");
  auto k = static_cast<std::size_t>(*kval);

  TriangularArray<Rational> a(k);
  for (std::size_t j = 0; j <= k; ++j) {
    if (!next_line(line)) throw parse_error("missing row " + std::to_string(j));
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.size() != j + 1)
      throw parse_error("row " + std::to_string(j) + " must have " + std::to_string(j + 1) +
                        " entries, found " + std::to_string(tokens.size()));
    for (std::size_t i = 0; i <= j; ++i) {
      Rational v = parse_rational(tokens[i]);
      if (i == 0 && j == 0) {
        if (v != 0) throw parse_error("apex a_00 must be 0");
        continue;
      }
      a(i, j) = v;
    }
  }
  if (next_line(line)) throw parse_error("trailing content after row " + std::to_string(k));
  return a;
}

inline TriangularArray<Rational> parse_triangle(const std::string& text) {
  std::istringstream in(text);
  return parse_triangle(in);
}

}  // namespace lrcones
