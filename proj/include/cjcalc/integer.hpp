#pragma once

#include <cstdint>

#include "cjcalc/error.hpp"

namespace cjcalc {

/// Exact integer used for weight coordinates and multiplicities.
/// Every arithmetic step goes through the checked helpers below; an
/// overflow throws OverflowError instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_pow(Int base, Int exp) {
  if (exp < 0) throw InputError("negative exponent");
  Int out = 1;
  for (Int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

// Floor division for a positive divisor.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_prime(Int n);

}  // namespace cjcalc
