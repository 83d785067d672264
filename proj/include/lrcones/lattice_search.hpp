#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lrcones {

/// Result of a (possibly capped) lattice-point enumeration. When truncated is
/// set, count is the number of points seen before the cap, not the total.
struct EnumerationResult {
  std::uint64_t count = 0;
  bool truncated = false;

  friend bool operator==(const EnumerationResult&, const EnumerationResult&) = default;
};

/// Cap on emitted points; nullopt means unbounded.
using PointLimit = std::optional<std::uint64_t>;

/// sum_v coeff_v * x_v + constant >= 0 over integer variables.
struct LinearInequality {
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
  std::int64_t constant = 0;
};

/// Depth-first search for the integer points of {x : every inequality holds},
/// with some variables fixed up front and the rest assigned in a given order.
///
/// Each inequality is attached to the last free variable it mentions in the
/// search order. If that variable has coefficient +1 or -1 the inequality
/// becomes a lower or upper bound for it, evaluated from already-assigned
/// variables; otherwise it is checked after assignment. Every free variable
/// must end up with both a lower and an upper bound; construction fails
/// otherwise, since the search would not terminate.
class BacktrackingSearch {
 public:
  BacktrackingSearch(std::size_t variables, std::vector<std::optional<std::int64_t>> fixed,
                     std::vector<std::size_t> order, std::vector<LinearInequality> inequalities)
      : values_(variables, 0), order_(std::move(order)), attached_(order_.size()) {
    if (fixed.size() != variables) throw std::invalid_argument("fixed vector has wrong size");
    std::vector<std::size_t> position(variables, npos);
    for (std::size_t p = 0; p < order_.size(); ++p) {
      if (fixed[order_[p]]) throw std::invalid_argument("a fixed variable appears in the search order");
      position[order_[p]] = p;
    }
    for (std::size_t v = 0; v < variables; ++v) {
      if (fixed[v])
        values_[v] = *fixed[v];
      else if (position[v] == npos)
        throw std::invalid_argument("free variable missing from the search order");
    }
    for (auto& ineq : inequalities) {
      std::size_t last = npos;
      for (auto [v, c] : ineq.terms)
        if (c != 0 && position[v] != npos && (last == npos || position[v] > last)) last = position[v];
      if (last == npos) {
        if (evaluate(ineq) < 0) infeasible_ = true;
        continue;
      }
      attached_[last].push_back(std::move(ineq));
    }
    for (std::size_t p = 0; p < order_.size(); ++p) {
      bool lower = false, upper = false;
      for (const auto& ineq : attached_[p]) {
        auto c = coefficient(ineq, order_[p]);
        lower |= c == 1;
        upper |= c == -1;
      }
      if (!lower || !upper) throw std::invalid_argument("search variable is not bounded by earlier ones");
    }
  }

  /// Visits every integer point; the visitor receives the full variable vector
  /// and returns false to stop. At most limit points are visited.
  template <class Visitor>
  EnumerationResult run(Visitor&& visit, PointLimit limit = std::nullopt) {
    EnumerationResult result;
    if (infeasible_) return result;
    descend(0, visit, limit, result);
    return result;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::int64_t evaluate(const LinearInequality& ineq) const {
    std::int64_t s = ineq.constant;
    for (auto [v, c] : ineq.terms) s += c * values_[v];
    return s;
  }

  static std::int64_t coefficient(const LinearInequality& ineq, std::size_t var) {
    std::int64_t c = 0;
    for (auto [v, cv] : ineq.terms)
      if (v == var) c += cv;
    return c;
  }

  template <class Visitor>
  bool descend(std::size_t p, Visitor& visit, const PointLimit& limit, EnumerationResult& result) {
    if (p == order_.size()) {
      if (limit && result.count >= *limit) {
        result.truncated = true;
        return false;
      }
      ++result.count;
      return visit(static_cast<const std::vector<std::int64_t>&>(values_));
    }
    const std::size_t var = order_[p];
    std::int64_t lo = std::numeric_limits<std::int64_t>::min();
    std::int64_t hi = std::numeric_limits<std::int64_t>::max();
    values_[var] = 0;
    std::vector<const LinearInequality*> checks;
    for (const auto& ineq : attached_[p]) {
      auto c = coefficient(ineq, var);
      // Value of the inequality with this variable at zero.
      std::int64_t rest = evaluate(ineq);
      if (c == 1)
        lo = std::max(lo, -rest);
      else if (c == -1)
        hi = std::min(hi, rest);
      else
        checks.push_back(&ineq);
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      values_[var] = v;
      bool ok = true;
      for (auto* ineq : checks)
        if (evaluate(*ineq) < 0) {
          ok = false;
          break;
        }
      if (ok && !descend(p + 1, visit, limit, result)) return false;
    }
    return true;
  }

  std::vector<std::int64_t> values_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<LinearInequality>> attached_;
  bool infeasible_ = false;
};

}  // namespace lrcones
