#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "lrcones/bz_triangle.hpp"
#include "lrcones/core.hpp"
#include "lrcones/tableau.hpp"

// JSON documents for tableaux, BZ labelings and types. Objects are written
// with sorted keys and no whitespace so that output is byte-stable.
// Rationals are JSON integers when integral (and within int64) and strings
// "p/q" otherwise; JSON floating-point numbers are rejected on input.

namespace lrcones {

using json = nlohmann::json;

inline json rational_to_json(const Rational& r) {
  if (auto v = to_int64(r)) return *v;
  return to_string(r);
}

inline json rational_to_json(std::int64_t v) { return v; }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(BigInt(j.get<std::uint64_t>()));
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) throw parse_error("floating-point value " + j.dump() + " is not allowed; use \"p/q\"");
  throw parse_error("expected a rational, got " + j.dump());
}

inline std::int64_t integer_from_json(const json& j, const char* what) {
  auto v = to_int64(rational_from_json(j));
  if (!v) throw parse_error(std::string(what) + " must be an integer, got " + j.dump());
  return *v;
}

inline json parse_json_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string format_json(const json& j) { return j.dump() + "\n"; }

template <class T>
json weights_to_json(const WeightVector<T>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(rational_to_json(e));
  return out;
}

template <class T>
json type_to_json(const TriangleType<T>& t) {
  return json{{"lambda", weights_to_json(t.lambda)}, {"mu", weights_to_json(t.mu)}, {"nu", weights_to_json(t.nu)}};
}

inline Partition partition_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  std::vector<std::int64_t> parts;
  for (const auto& e : j) parts.push_back(integer_from_json(e, what));
  if (!is_partition(parts)) throw parse_error(std::string(what) + " is not a partition: " + j.dump());
  return Partition(std::move(parts));
}

/// {"lambda":[...],"mu":[...],"rows":[[...],...]}; rows hold skew entries only.
inline json tableau_to_json(const SkewTableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return json{{"lambda", t.shape().lambda().parts()}, {"mu", t.shape().mu().parts()}, {"rows", rows}};
}

inline SkewTableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("rows"))
    throw parse_error("tableau document needs \"lambda\" and \"rows\"");
  Partition lambda = partition_from_json(j.at("lambda"), "lambda");
  Partition mu = j.contains("mu") ? partition_from_json(j.at("mu"), "mu") : Partition{};
  const auto& rows_json = j.at("rows");
  if (!rows_json.is_array()) throw parse_error("\"rows\" must be an array of arrays");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : rows_json) {
    if (!row.is_array()) throw parse_error("\"rows\" must be an array of arrays");
    auto& out = rows.emplace_back();
    for (const auto& e : row) out.push_back(integer_from_json(e, "tableau entry"));
  }
  if (rows.size() > std::max(lambda.length(), mu.length()))
    throw parse_error("more rows than lambda has parts");
  try {
    return SkewTableau(SkewShape(lambda, mu), std::move(rows));
  } catch (const usage_error& e) {
    throw parse_error(e.what());
  }
}

/// {"k":n,"levels":[...]} where level j lists j triples [x,y,z] for i = 1..j.
template <class T>
json bz_to_json(const BZLabeling<T>& x) {
  json levels = json::array();
  for (std::size_t j = 1; j <= x.k(); ++j) {
    json level = json::array();
    for (std::size_t i = 1; i <= j; ++i)
      level.push_back(json::array({rational_to_json(x.x(i, j)), rational_to_json(x.y(i, j)),
                                   rational_to_json(x.z(i, j))}));
    levels.push_back(level);
  }
  return json{{"k", x.k()}, {"levels", levels}};
}

inline BZLabeling<Rational> bz_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("levels"))
    throw parse_error("BZ document needs \"k\" and \"levels\"");
  auto k = integer_from_json(j.at("k"), "k");
  if (k < 1) throw parse_error("BZ size k must be >= 1");
  const auto& levels = j.at("levels");
  if (!levels.is_array() || levels.size() != std::size_t(k))
    throw parse_error("\"levels\" must hold exactly k levels");
  BZLabeling<Rational> x{std::size_t(k)};
  for (std::size_t lj = 1; lj <= std::size_t(k); ++lj) {
    const auto& level = levels[lj - 1];
    if (!level.is_array() || level.size() != lj)
      throw parse_error("level " + std::to_string(lj) + " must hold " + std::to_string(lj) + " triples");
    for (std::size_t i = 1; i <= lj; ++i) {
      const auto& triple = level[i - 1];
      if (!triple.is_array() || triple.size() != 3)
        throw parse_error("BZ labels come in [x,y,z] triples");
      x.x(i, lj) = rational_from_json(triple[0]);
      x.y(i, lj) = rational_from_json(triple[1]);
      x.z(i, lj) = rational_from_json(triple[2]);
    }
  }
  return x;
}

}  // namespace lrcones
