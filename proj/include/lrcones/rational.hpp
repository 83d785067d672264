#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrcones {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Values are kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

/// Parses "[+-]digits[/digits]". Whitespace, decimals and exponents are rejected.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!detail::all_digits(den))
      throw parse_error("malformed rational '" + std::string(text) + "'");
  }
  if (!detail::all_digits(num))
    throw parse_error("malformed rational '" + std::string(text) + "'");

  BigInt n{std::string(num)};
  BigInt d = den.empty() ? BigInt(1) : BigInt(std::string(den));
  if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

/// Canonical text: "n" for integers, "n/d" otherwise, always lowest terms.
inline std::string to_string(const Rational& r) {
  const auto& n = boost::multiprecision::numerator(r);
  const auto& d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

inline std::string to_string(std::int64_t v) { return std::to_string(v); }

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline bool is_integer(std::int64_t) { return true; }

/// Narrows an integral rational to int64; nullopt when non-integral or out of range.
inline std::optional<std::int64_t> to_int64(const Rational& r) {
  if (!is_integer(r)) return std::nullopt;
  const BigInt& n = boost::multiprecision::numerator(r);
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return n.convert_to<std::int64_t>();
}

}  // namespace lrcones
