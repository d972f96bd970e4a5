#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include "numsg/error.hpp"

namespace numsg {

/// Semigroup elements are nonnegative integers; every sum and product that
/// can grow goes through the checked helpers below.
using Int = std::uint64_t;

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    fail(ErrorCode::Overflow, "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(ErrorCode::Overflow, "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

inline Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

/// Inverse of a modulo m (m > 1, gcd(a, m) = 1).
inline Int mod_inverse(Int a, Int m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t = t - quotient * new_t;
    std::swap(t, new_t);
    r = r - quotient * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<Int>(t);
}

}  // namespace numsg
