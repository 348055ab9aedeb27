// Binomial coefficients and small bitmask utilities shared across modules.
//
// Binomial convention used everywhere (it makes the boundary indices of the
// displayed sums well defined): C(a,0) = 1 for every a, and C(a,b) = 0
// whenever b < 0 or b > max(a,0).

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "matx/bigint.hpp"

namespace matx {

using mask_t = std::uint32_t;
using Vec = std::vector<std::int64_t>;  // exact integer vectors (f, h, ...)

inline constexpr int kMaxGroundSet = 24;

inline int popcount(mask_t m) { return std::popcount(m); }

inline bool subset_of(mask_t a, mask_t b) { return (a & ~b) == 0; }

// 0-based index of the lowest set bit; undefined for 0
inline int lowest_bit(mask_t m) { return std::countr_zero(m); }

inline mask_t full_mask(int n) { return n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1u); }

// next subset of the same cardinality in colex order (Gosper's hack);
// returns 0 when exhausted within `bits` bits
inline mask_t next_same_popcount(mask_t v, int bits) {
  if (v == 0) return 0;
  mask_t c = v & (~v + 1);
  mask_t r = v + c;
  mask_t next = (((r ^ v) >> 2) / c) | r;
  return next < (1u << bits) ? next : 0;
}

inline BigInt binom_big(std::int64_t a, std::int64_t b) {
  if (b < 0) return BigInt{0};
  if (b == 0) return BigInt{1};
  if (a < b) return BigInt{0};
  b = std::min(b, a - b);
  BigInt num{1};
  for (std::int64_t i = 0; i < b; ++i) {
    num *= BigInt{a - i};
    num = BigInt::div_exact(num, BigInt{i + 1});
  }
  return num;
}

// int64 binomial; throws on overflow so a silently wrong count is impossible
inline std::int64_t binom64(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a < b) return 0;
  b = std::min(b, a - b);
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    if (__builtin_mul_overflow(r, a - i, &r)) throw std::overflow_error("binom64 overflow");
    r /= (i + 1);
  }
  return r;
}

// all subsets of `universe` with exactly k bits, ascending numeric order
inline std::vector<mask_t> k_subsets_of(mask_t universe, int k) {
  std::vector<mask_t> out;
  int bits[32];
  int n = 0;
  for (mask_t m = universe; m;) {
    int b = lowest_bit(m);
    bits[n++] = b;
    m &= m - 1;
  }
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    mask_t m = 0;
    for (int i = 0; i < k; ++i) m |= mask_t{1} << bits[idx[i]];
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace matx
