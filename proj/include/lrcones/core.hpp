#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lrcones/rational.hpp"

namespace lrcones {

/// A k-tuple of scalars; a member of D_k when weakly decreasing.
template <class T>
using WeightVector = std::vector<T>;

template <class T>
bool is_weakly_decreasing(const WeightVector<T>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

template <class T>
T total(const WeightVector<T>& v) {
  T sum(0);
  for (const auto& e : v) sum += e;
  return sum;
}

/// True iff every entry is a nonnegative integer and the entries weakly decrease.
template <class T>
bool is_partition(const WeightVector<T>& v) {
  for (const auto& e : v)
    if (!is_integer(e) || e < T(0)) return false;
  return is_weakly_decreasing(v);
}

/// Weakly decreasing nonnegative integers. Length is meaningful: it is the
/// number of rows the partition is considered to have, trailing zeros included.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    if (!is_partition(parts_))
      throw usage_error("not a partition: " + to_string());
  }

  Partition(std::initializer_list<std::int64_t> parts)
      : Partition(std::vector<std::int64_t>(parts)) {}

  std::size_t length() const { return parts_.size(); }
  std::int64_t size() const { return total(parts_); }
  std::int64_t operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  const std::vector<std::int64_t>& parts() const { return parts_; }

  /// Pads with zeros up to length k. Refuses to drop nonzero parts.
  Partition padded(std::size_t k) const {
    if (k < parts_.size()) {
      for (std::size_t i = k; i < parts_.size(); ++i)
        if (parts_[i] != 0)
          throw usage_error("partition " + to_string() + " has more than " +
                            std::to_string(k) + " nonzero parts");
      return Partition(std::vector<std::int64_t>(parts_.begin(), parts_.begin() + k));
    }
    auto p = parts_;
    p.resize(k, 0);
    return Partition(std::move(p));
  }

  /// Number of nonzero parts.
  std::size_t nonzero_length() const {
    std::size_t n = 0;
    while (n < parts_.size() && parts_[n] != 0) ++n;
    return n;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    auto k = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

 private:
  std::vector<std::int64_t> parts_;
};

/// mu ⊆ lambda after padding both to their common length.
inline bool contains(const Partition& mu, const Partition& lambda) {
  auto k = std::max(mu.length(), lambda.length());
  for (std::size_t i = 0; i < k; ++i)
    if (mu[i] > lambda[i]) return false;
  return true;
}

/// Parses "23,18,15,11,8". The empty string is the empty partition.
inline Partition parse_partition(std::string_view text) {
  std::vector<std::int64_t> parts;
  if (text.empty()) return Partition{};
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    Rational r = parse_rational(field);
    auto v = to_int64(r);
    if (!v) throw parse_error("partition part is not an integer: '" + std::string(field) + "'");
    parts.push_back(*v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (!is_partition(parts)) throw parse_error("not a partition: '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

/// Boundary data (lambda, mu, nu) of a triangle, hive or BZ labeling.
/// The balance |lambda| = |mu| + |nu| is checked by type_sum_check rather than
/// enforced here, so unbalanced candidates can still be matched and reported.
template <class T = Rational>
struct TriangleType {
  WeightVector<T> lambda;
  WeightVector<T> mu;
  WeightVector<T> nu;

  std::size_t k() const { return lambda.size(); }
  bool same_length() const { return mu.size() == lambda.size() && nu.size() == lambda.size(); }

  TriangleType<T> swapped() const { return {lambda, nu, mu}; }

  friend bool operator==(const TriangleType&, const TriangleType&) = default;
};

using IntegralType = TriangleType<std::int64_t>;

template <class T>
bool type_sum_check(const TriangleType<T>& t) {
  return total(t.lambda) == total(t.mu) + total(t.nu);
}

template <class To, class From>
TriangleType<To> convert_type(const TriangleType<From>& t) {
  auto conv = [](const WeightVector<From>& v) {
    WeightVector<To> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(To(e));
    return out;
  };
  return {conv(t.lambda), conv(t.mu), conv(t.nu)};
}

/// Integral type of length k from partitions; k = 0 means the longest input length.
inline IntegralType make_type(const Partition& lambda, const Partition& mu,
                              const Partition& nu, std::size_t k = 0) {
  if (k == 0) k = std::max({lambda.length(), mu.length(), nu.length(), std::size_t{1}});
  return {lambda.padded(k).parts(), mu.padded(k).parts(), nu.padded(k).parts()};
}

/// Same as make_type but refuses |lambda| != |mu| + |nu|.
inline IntegralType make_balanced_type(const Partition& lambda, const Partition& mu,
                                       const Partition& nu, std::size_t k = 0) {
  auto t = make_type(lambda, mu, nu, k);
  if (!type_sum_check(t))
    throw usage_error("|lambda| = " + std::to_string(lambda.size()) + " but |mu| + |nu| = " +
                      std::to_string(mu.size() + nu.size()));
  return t;
}

}  // namespace lrcones
