#pragma once

#include <cstdint>
#include <stdexcept>

namespace multiplane {

// Integer arithmetic on intersection numbers and parameters. Every helper
// throws std::overflow_error instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

// Exact halving; odd input is a logic error in the caller.
inline Int exact_half(Int a) {
  if (a % 2 != 0) throw std::logic_error("exact_half of an odd integer");
  return a / 2;
}

}  // namespace multiplane
