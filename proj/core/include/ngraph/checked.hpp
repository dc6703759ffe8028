#pragma once

#include <cstdint>

#include "ngraph/errors.hpp"

namespace ngraph {

using Int = std::int64_t;
using Count = std::uint64_t;

namespace checked {

template <typename T>
T add(T a, T b) {
  T out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

template <typename T>
T sub(T a, T b) {
  T out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

template <typename T>
T mul(T a, T b) {
  T out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

/// 2^k as a Count, throwing once k no longer fits.
inline Count pow2(std::uint64_t k) {
  if (k >= 64) throw OverflowError("2^k exceeds 64 bits");
  return Count{1} << k;
}

}  // namespace checked

/// Least nonnegative residue of a modulo m (m >= 1).
constexpr Int residue(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace ngraph
