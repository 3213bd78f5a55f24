#ifndef XSET_INTS_HPP
#define XSET_INTS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xset {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Largest universe a BoundedSet may span.  Counts fit in 64 bits,
// squared counts in 128 bits; both facts rely on this cap.
inline constexpr u64 kMaxUniverse = 2147483647;  // 2^31 - 1

inline constexpr u128 u128_max() { return ~static_cast<u128>(0); }

inline u128 checked_add(u128 a, u128 b) {
  if (a > u128_max() - b) throw std::overflow_error("128-bit addition overflow");
  return a + b;
}

inline u128 checked_mul(u128 a, u128 b) {
  if (b != 0 && a > u128_max() / b) throw std::overflow_error("128-bit multiplication overflow");
  return a * b;
}

inline u128 sq(u128 a) { return checked_mul(a, a); }

inline u128 ceil_div(u128 num, u128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  return num / den + (num % den != 0 ? 1 : 0);
}

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int i = 40;
  while (v > 0) {
    buf[--i] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  return std::string(buf + i, buf + 40);
}

// Largest r with r^k <= x, by integer arithmetic only.  Floating-point
// powering is off by one at perfect-power boundaries.
inline u64 integer_kth_root(u64 x, unsigned k) {
  if (k == 0) throw std::domain_error("integer_kth_root: k must be >= 1");
  if (k == 1 || x <= 1) return x;
  u64 lo = 0, hi = x;
  // shrink hi to a coarse bound: 2^(64/k + 1)
  unsigned bits = 64 / k + 1;
  if (bits < 64 && (static_cast<u64>(1) << bits) < hi) hi = static_cast<u64>(1) << bits;
  while (lo < hi) {
    u64 mid = lo + (hi - lo + 1) / 2;
    u128 p = 1;
    bool over = false;
    for (unsigned i = 0; i < k; ++i) {
      p *= mid;
      if (p > x) { over = true; break; }
    }
    if (over) hi = mid - 1; else lo = mid;
  }
  return lo;
}

}  // namespace xset

#endif
