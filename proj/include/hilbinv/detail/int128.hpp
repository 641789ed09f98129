#pragma once

#include <cmath>

#include "hilbinv/bigint.hpp"

namespace hilbinv::detail {

using i128 = __int128;

inline constexpr i128 kI128Limit = static_cast<i128>(1) << 124;

inline bool fits_fast(const BigInt& v) { return v < BigInt(kI128Limit) && v > BigInt(-kI128Limit); }

inline i128 to_i128(const BigInt& v) { return static_cast<i128>(v); }

inline BigInt to_big(i128 v) { return BigInt(v); }

// floor(sqrt(v)) for 0 <= v < 2^124.
inline i128 floor_sqrt(i128 v) {
  if (v < 2) return v;
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline BigInt floor_sqrt(const BigInt& v) { return boost::multiprecision::sqrt(v); }

}  // namespace hilbinv::detail
