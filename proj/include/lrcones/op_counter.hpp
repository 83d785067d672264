#pragma once

#include <cstdint>
#include <string>

#include "lrcones/rational.hpp"

namespace lrcones {

/// Scalar wrapper that counts additive and multiplicative operations on a
/// thread-local tally. Used to measure the per-entry cost of the linear maps.
template <class T>
class Counted {
 public:
  Counted() = default;
  Counted(T v) : value_(v) {}  // NOLINT: implicit, mirrors T

  const T& value() const { return value_; }

  static std::uint64_t& tally() {
    thread_local std::uint64_t ops = 0;
    return ops;
  }
  static void reset() { tally() = 0; }

  friend Counted operator+(const Counted& a, const Counted& b) { ++tally(); return Counted(a.value_ + b.value_); }
  friend Counted operator-(const Counted& a, const Counted& b) { ++tally(); return Counted(a.value_ - b.value_); }
  friend Counted operator*(const Counted& a, const Counted& b) { ++tally(); return Counted(a.value_ * b.value_); }
  Counted operator-() const { ++tally(); return Counted(-value_); }
  Counted& operator+=(const Counted& b) { ++tally(); value_ += b.value_; return *this; }
  Counted& operator-=(const Counted& b) { ++tally(); value_ -= b.value_; return *this; }

  friend bool operator==(const Counted& a, const Counted& b) { return a.value_ == b.value_; }
  friend bool operator<(const Counted& a, const Counted& b) { return a.value_ < b.value_; }

 private:
  T value_{};
};

template <class T>
std::string to_string(const Counted<T>& c) {
  return to_string(c.value());
}

}  // namespace lrcones
