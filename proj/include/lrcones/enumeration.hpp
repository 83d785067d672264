#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "lrcones/bz_triangle.hpp"
#include "lrcones/core.hpp"
#include "lrcones/hive.hpp"
#include "lrcones/lattice_search.hpp"
#include "lrcones/lr_triangle.hpp"
#include "lrcones/maps.hpp"
#include "lrcones/tableau.hpp"

namespace lrcones {

enum class Model { tableau, lr, hive, bz };

inline std::string to_string(Model m) {
  switch (m) {
    case Model::tableau: return "tableau";
    case Model::lr: return "lr";
    case Model::hive: return "hive";
    case Model::bz: return "bz";
  }
  return "?";
}

inline Model parse_model(std::string_view name) {
  if (name == "tableau") return Model::tableau;
  if (name == "lr") return Model::lr;
  if (name == "hive") return Model::hive;
  if (name == "bz") return Model::bz;
  throw usage_error("unknown model '" + std::string(name) + "' (expected tableau, lr, hive or bz)");
}

/// Rejects types that are not three equal-length partitions with
/// |lambda| = |mu| + |nu|. Containment mu ⊆ lambda is not required here.
inline void require_integral_type(const IntegralType& t) {
  if (!t.same_length() || t.k() == 0) throw usage_error("type vectors must share a length k >= 1");
  if (!is_partition(t.lambda) || !is_partition(t.mu) || !is_partition(t.nu))
    throw usage_error("type vectors must be partitions");
  if (!type_sum_check(t))
    throw usage_error("|lambda| = " + std::to_string(total(t.lambda)) + " but |mu| + |nu| = " +
                      std::to_string(total(t.mu) + total(t.nu)));
}

/// Thread cap from LRCONES_THREADS, else the hardware concurrency.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("LRCONES_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return unsigned(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

// Backtracking over a_ij (1 <= i <= j <= k) in row order, a_0j = mu_j fixed.
// Row prefix sums give the (CS) bounds and the lambda targets; letter sums
// give the (LR) bounds and the nu targets. Diagonal entries and the last row
// are forced by the targets.
class LRPointSearch {
 public:
  explicit LRPointSearch(const IntegralType& t)
      : type_(t), k_(t.k()), a_(k_), prefix_(k_), letters_(k_) {
    for (std::size_t j = 1; j <= k_; ++j) {
      a_(0, j) = t.mu[j - 1];
      prefix_(0, j) = t.mu[j - 1];
      for (std::size_t i = 1; i <= j; ++i) cells_.emplace_back(i, j);
    }
  }

  /// When stride > 1, only branches whose first genuinely free entry is
  /// congruent to offset modulo stride are explored.
  template <class Visitor>
  EnumerationResult run(Visitor& visit, const PointLimit& limit, std::int64_t stride = 1,
                        std::int64_t offset = 0) {
    stride_ = stride;
    offset_ = offset;
    EnumerationResult result;
    place(0, true, visit, limit, result);
    return result;
  }

 private:
  template <class Visitor>
  bool place(std::size_t pos, bool first_free_pending, Visitor& visit, const PointLimit& limit,
             EnumerationResult& result) {
    if (pos == cells_.size()) {
      // A branch without any free entry belongs to worker 0 alone.
      if (first_free_pending && offset_ != 0) return true;
      if (limit && result.count >= *limit) {
        result.truncated = true;
        return false;
      }
      ++result.count;
      return visit(static_cast<const TriangularArray<std::int64_t>&>(a_));
    }
    auto [i, j] = cells_[pos];
    const std::int64_t nu_i = type_.nu[i - 1];

    if (i == j) {
      std::int64_t v = type_.lambda[j - 1] - prefix_(j - 1, j);
      if (j >= 2 && a_(j - 1, j - 1) < v) return true;  // (LR) at (j-1, j-1)
      if (j < k_ ? v > nu_i : v != nu_i) return true;
      set(i, j, v);
      return place(pos + 1, first_free_pending, visit, limit, result);
    }

    // i < j: (P) lower bound, (CS) at (i, j-1), (LR) at (i-1, j-1), nu_i target.
    std::int64_t hi = prefix_(i - 1, j - 1) - prefix_(i - 1, j);
    const std::int64_t before = j - 1 >= i ? letters_(i, j - 1) : 0;
    if (i >= 2) hi = std::min(hi, letters_(i - 1, j - 1) - before);
    hi = std::min(hi, nu_i - before);
    if (j == k_) {
      std::int64_t v = nu_i - before;
      if (v < 0 || v > hi) return true;
      set(i, j, v);
      return place(pos + 1, first_free_pending, visit, limit, result);
    }
    for (std::int64_t v = 0; v <= hi; ++v) {
      if (first_free_pending && stride_ > 1 && v % stride_ != offset_) continue;
      set(i, j, v);
      if (!place(pos + 1, false, visit, limit, result)) return false;
    }
    return true;
  }

  void set(std::size_t i, std::size_t j, std::int64_t v) {
    a_(i, j) = v;
    prefix_(i, j) = prefix_(i - 1, j) + v;
    letters_(i, j) = (j > i ? letters_(i, j - 1) : 0) + v;
  }

  const IntegralType& type_;
  std::size_t k_;
  TriangularArray<std::int64_t> a_;
  TriangularArray<std::int64_t> prefix_;
  TriangularArray<std::int64_t> letters_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::int64_t stride_ = 1;
  std::int64_t offset_ = 0;
};

// BZ labelings of size k-1 with a fixed type of length k. The y labels are
// searched level by level from the bottom; z follows from (B3'') on the bottom
// level and (BZ1) above it, x from (B1'') on the left edge and (BZ2) inside.
// (B2'') and (BZ3) are checked once their labels are known.
class BZPointSearch {
 public:
  explicit BZPointSearch(const IntegralType& t) : type_(t), m_(t.k() - 1), x_(m_ == 0 ? 1 : m_) {}

  template <class Visitor>
  EnumerationResult run(Visitor& visit, const PointLimit& limit) {
    EnumerationResult result;
    if (m_ == 0) {
      // Size-0 BZ graph: a single empty labeling, no conditions.
      if (limit && *limit == 0) return {0, true};
      result.count = 1;
      visit(BZLabeling<std::int64_t>(0));
      return result;
    }
    x_ = BZLabeling<std::int64_t>(m_);
    place(m_, 1, visit, limit, result);
    return result;
  }

 private:
  std::int64_t dmu(std::size_t j) const { return type_.mu[j - 1] - type_.mu[j]; }
  std::int64_t dlambda(std::size_t j) const { return type_.lambda[j - 1] - type_.lambda[j]; }
  std::int64_t dnu(std::size_t i) const { return type_.nu[i - 1] - type_.nu[i]; }

  template <class Visitor>
  bool place(std::size_t j, std::size_t i, Visitor& visit, const PointLimit& limit,
             EnumerationResult& result) {
    if (i > j) {
      --j;
      i = 1;
      if (j == 0) {
        if (limit && result.count >= *limit) {
          result.truncated = true;
          return false;
        }
        ++result.count;
        return visit(static_cast<const BZLabeling<std::int64_t>&>(x_));
      }
    }
    // y_ij + z_ij is fixed by what lies below.
    const std::int64_t yz = j == m_ ? dnu(i) : x_.y(i + 1, j + 1) + x_.z(i, j + 1);
    std::int64_t lo = 0;
    std::int64_t hi = yz;
    if (i == 1) hi = std::min(hi, dmu(j));
    if (j < m_) lo = std::max(lo, x_.y(i + 1, j + 1) - x_.x(i, j + 1));  // x_{i+1,j+1} >= 0

    for (std::int64_t v = lo; v <= hi; ++v) {
      x_.y(i, j) = v;
      x_.z(i, j) = yz - v;
      if (i == 1) x_.x(1, j) = dmu(j) - v;
      if (j < m_) {
        x_.x(i + 1, j + 1) = x_.x(i, j + 1) + v - x_.y(i + 1, j + 1);
        if (x_.x(i, j + 1) + x_.z(i, j + 1) != x_.x(i + 1, j + 1) + x_.z(i, j)) continue;  // (BZ3)
        if (i == j && x_.x(j + 1, j + 1) + x_.z(j + 1, j + 1) != dlambda(j + 1)) continue;
      }
      if (j == 1 && x_.x(1, 1) + x_.z(1, 1) != dlambda(1)) continue;
      if (!place(j, i + 1, visit, limit, result)) return false;
    }
    return true;
  }

  const IntegralType& type_;
  std::size_t m_;
  BZLabeling<std::int64_t> x_;
};

inline BacktrackingSearch make_hive_search(const IntegralType& t) {
  const std::size_t k = t.k();
  const std::size_t n = (k + 1) * (k + 2) / 2;
  auto idx = [](std::size_t i, std::size_t j) { return TriangularArray<>::index(i, j); };

  std::vector<std::optional<std::int64_t>> fixed(n);
  std::int64_t run = 0;
  fixed[idx(0, 0)] = 0;
  for (std::size_t j = 1; j <= k; ++j) fixed[idx(0, j)] = run += t.mu[j - 1];
  run = 0;
  for (std::size_t j = 1; j <= k; ++j) fixed[idx(j, j)] = run += t.lambda[j - 1];
  run = total(t.mu);
  // h_kk is reached from both sides; the values agree for balanced types.
  for (std::size_t i = 1; i <= k; ++i) fixed[idx(i, k)] = run += t.nu[i - 1];

  std::vector<std::size_t> order;
  for (std::size_t j = 2; j < k; ++j)
    for (std::size_t i = 1; i < j; ++i) order.push_back(idx(i, j));

  std::vector<LinearInequality> rhombi;
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j)  // (R)
      rhombi.push_back({{{idx(i, j), 1}, {idx(i, j - 1), -1}, {idx(i - 1, j), -1}, {idx(i - 1, j - 1), 1}}, 0});
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      // (V)
      rhombi.push_back({{{idx(i - 1, j), 1}, {idx(i - 1, j - 1), -1}, {idx(i, j + 1), -1}, {idx(i, j), 1}}, 0});
      // (L)
      rhombi.push_back({{{idx(i, j), 1}, {idx(i - 1, j), -1}, {idx(i + 1, j + 1), -1}, {idx(i, j + 1), 1}}, 0});
    }
  return BacktrackingSearch(n, std::move(fixed), std::move(order), std::move(rhombi));
}

}  // namespace detail

/// Integer points of LR_k(lambda, mu, nu). The visitor gets each point and
/// returns false to stop early.
template <class Visitor>
EnumerationResult enumerate_lr_points(const IntegralType& t, Visitor&& visit,
                                      PointLimit limit = std::nullopt) {
  require_integral_type(t);
  detail::LRPointSearch search(t);
  return search.run(visit, limit);
}

/// Counts LR_k(lambda, mu, nu) on up to `threads` workers by splitting on the
/// residue of the first free entry. The total does not depend on the split.
inline EnumerationResult count_lr_points(const IntegralType& t, unsigned threads = 1) {
  require_integral_type(t);
  if (threads <= 1) {
    auto ignore = [](const TriangularArray<std::int64_t>&) { return true; };
    return detail::LRPointSearch(t).run(ignore, std::nullopt);
  }
  std::vector<std::future<std::uint64_t>> parts;
  for (unsigned w = 0; w < threads; ++w)
    parts.push_back(std::async(std::launch::async, [&t, w, threads] {
      auto ignore = [](const TriangularArray<std::int64_t>&) { return true; };
      detail::LRPointSearch search(t);
      return search.run(ignore, std::nullopt, threads, w).count;
    }));
  EnumerationResult total_result;
  for (auto& p : parts) total_result.count += p.get();
  return total_result;
}

/// Integer points of H_k(lambda, mu, nu) found by searching the hive polytope
/// directly: boundary fixed by the type, interior labels bounded by (R) and (V).
template <class Visitor>
EnumerationResult enumerate_hive_points(const IntegralType& t, Visitor&& visit,
                                        PointLimit limit = std::nullopt) {
  require_integral_type(t);
  auto search = detail::make_hive_search(t);
  const std::size_t k = t.k();
  return search.run(
      [&](const std::vector<std::int64_t>& values) {
        Hive<std::int64_t> h(k);
        for (std::size_t j = 1; j <= k; ++j)
          for (std::size_t i = 0; i <= j; ++i) h(i, j) = values[TriangularArray<>::index(i, j)];
        return visit(static_cast<const Hive<std::int64_t>&>(h));
      },
      limit);
}

/// Hive points obtained as phi-images of the LR points.
template <class Visitor>
EnumerationResult enumerate_hive_points_via_lr(const IntegralType& t, Visitor&& visit,
                                               PointLimit limit = std::nullopt) {
  return enumerate_lr_points(
      t, [&](const TriangularArray<std::int64_t>& a) { return visit(phi(a)); }, limit);
}

/// Integer points of BZ_{k-1}(lambda, mu, nu) for a type of length k.
template <class Visitor>
EnumerationResult enumerate_bz_points(const IntegralType& t, Visitor&& visit,
                                      PointLimit limit = std::nullopt) {
  require_integral_type(t);
  detail::BZPointSearch search(t);
  return search.run(visit, limit);
}

struct CountRequest {
  Model model = Model::tableau;
  IntegralType type;
  PointLimit limit;
  unsigned threads = 1;
};

/// Number of integer points of the requested model's polytope.
/// mu ⊄ lambda yields zero; malformed or unbalanced types are usage errors.
inline EnumerationResult count_points(const CountRequest& req) {
  require_integral_type(req.type);
  const auto& t = req.type;
  auto ignore = [](const auto&) { return true; };
  switch (req.model) {
    case Model::tableau:
      return count_lr_tableaux(Partition(t.lambda), Partition(t.mu), Partition(t.nu), req.limit);
    case Model::lr:
      if (!req.limit && req.threads > 1) return count_lr_points(t, req.threads);
      return enumerate_lr_points(t, ignore, req.limit);
    case Model::hive:
      return enumerate_hive_points(t, ignore, req.limit);
    case Model::bz:
      return enumerate_bz_points(t, ignore, req.limit);
  }
  return {};
}

struct CrossModelReport {
  std::uint64_t tableau_count = 0;
  std::uint64_t lr_count = 0;
  std::uint64_t hive_count = 0;
  std::uint64_t bz_count = 0;
  std::vector<std::string> mismatches;

  bool counts_agree() const {
    return tableau_count == lr_count && lr_count == hive_count && hive_count == bz_count;
  }
  bool ok() const { return counts_agree() && mismatches.empty(); }
};

/// Pushes every LR point of the type through phi and psi∘phi and checks the
/// images against direct enumerations of the hive and BZ polytopes. Also
/// checks that the tableau coding lands exactly on the LR points.
inline CrossModelReport verify_cross_model(const IntegralType& t) {
  require_integral_type(t);
  CrossModelReport report;
  const std::size_t k = t.k();

  std::set<TriangularArray<std::int64_t>> lr_points, hive_images, hive_direct, from_tableaux;
  std::set<BZLabeling<std::int64_t>> bz_images, bz_direct;

  auto describe = [](const TriangularArray<std::int64_t>& a) {
    auto s = format_triangle(a);
    std::replace(s.begin(), s.end(), '\n', ';');
    return s;
  };

  report.lr_count = enumerate_lr_points(t, [&](const TriangularArray<std::int64_t>& a) {
    lr_points.insert(a);
    if (auto r = lr_validate(a); !r || lr_boundary_sums(a) != t)
      report.mismatches.push_back("LR point fails its own model: " + describe(a));
    auto h = phi(a);
    if (auto r = hive_validate(h); !r)
      report.mismatches.push_back("phi image is not a hive (" + r.describe() + "): " + describe(a));
    else if (hive_boundary_differences(h) != t)
      report.mismatches.push_back("phi image has a different type: " + describe(a));
    if (!hive_images.insert(h).second) report.mismatches.push_back("phi collision at " + describe(a));
    if (k >= 2) {
      auto x = psi_phi(a);
      if (auto r = bz_validate(x); !r)
        report.mismatches.push_back("psi_phi image is not a BZ triangle (" + r.describe() + "): " + describe(a));
      else if (!bz_type_match(x, t))
        report.mismatches.push_back("psi_phi image has a different type: " + describe(a));
      if (!bz_images.insert(x).second) report.mismatches.push_back("psi_phi collision at " + describe(a));
    }
    return true;
  }).count;

  report.hive_count = enumerate_hive_points(t, [&](const Hive<std::int64_t>& h) {
    hive_direct.insert(h);
    return true;
  }).count;
  if (hive_direct != hive_images)
    report.mismatches.push_back("phi(LR points) differs from the directly enumerated hive points");

  report.bz_count = enumerate_bz_points(t, [&](const BZLabeling<std::int64_t>& x) {
    if (k >= 2) bz_direct.insert(x);
    return true;
  }).count;
  if (k >= 2 && bz_direct != bz_images)
    report.mismatches.push_back("psi_phi(LR points) differs from the directly enumerated BZ points");

  if (contains(Partition(t.mu), Partition(t.lambda))) {
    report.tableau_count = enumerate_lr_tableaux(
        Partition(t.lambda), Partition(t.mu), Partition(t.nu), [&](const SkewTableau& tab) {
          auto a = tableau_to_triangle(tab, k);
          if (!from_tableaux.insert(a).second)
            report.mismatches.push_back("two tableaux code to " + describe(a));
          return true;
        }).count;
    if (from_tableaux != lr_points)
      report.mismatches.push_back("tableau coding differs from the LR points");
  } else if (!lr_points.empty()) {
    report.mismatches.push_back("LR points exist although mu is not contained in lambda");
  }
  return report;
}

struct SymmetryReport {
  bool applicable = false;
  std::uint64_t forward = 0;   // c^lambda_{mu nu}
  std::uint64_t backward = 0;  // c^lambda_{nu mu}

  bool symmetric() const { return !applicable || forward == backward; }
};

/// c^lambda_{mu nu} = c^lambda_{nu mu}, both sides counted with the tableau
/// oracle. Not applicable unless mu ⊆ lambda and nu ⊆ lambda.
inline SymmetryReport check_mu_nu_symmetry(const IntegralType& t) {
  require_integral_type(t);
  SymmetryReport report;
  Partition lambda(t.lambda), mu(t.mu), nu(t.nu);
  if (!contains(mu, lambda) || !contains(nu, lambda)) return report;
  report.applicable = true;
  report.forward = count_lr_tableaux(lambda, mu, nu).count;
  report.backward = count_lr_tableaux(lambda, nu, mu).count;
  return report;
}

}  // namespace lrcones
