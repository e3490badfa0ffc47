#pragma once

#include <cstdint>
#include <string>

#include "ramsum/error.hpp"

namespace ramsum {

// Exact moment values. GCC/Clang provide __int128 natively and the
// overflow builtins accept it, so every operation below is checked.
using WideInt = __int128;

inline WideInt checked_add(WideInt a, WideInt b) {
  WideInt r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("128-bit accumulation overflow; reduce k, x or y");
  }
  return r;
}

inline WideInt checked_mul(WideInt a, WideInt b) {
  WideInt r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("128-bit multiplication overflow; reduce k, x or y");
  }
  return r;
}

inline WideInt checked_pow(WideInt base, unsigned k) {
  WideInt r = 1;
  for (unsigned i = 0; i < k; ++i) r = checked_mul(r, base);
  return r;
}

std::string to_string(WideInt v);

// Nearest double; exact for |v| < 2^53.
inline double to_double(WideInt v) { return static_cast<double>(v); }

}  // namespace ramsum
