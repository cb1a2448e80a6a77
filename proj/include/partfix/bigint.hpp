#pragma once

#include <gmpxx.h>

namespace partfix {

/// Exact integer used for all counts and series coefficients.
using BigInt = mpz_class;

/// gmpxx defines no long long overloads, so mixing long long with mpz_class
/// is ambiguous.  Convert through long, which is 64-bit on every platform
/// this project targets.
inline BigInt to_bigint(long long v) {
  static_assert(sizeof(long) == sizeof(long long));
  return BigInt(static_cast<long>(v));
}

}  // namespace partfix
