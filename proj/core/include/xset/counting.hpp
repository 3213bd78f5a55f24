#ifndef XSET_COUNTING_HPP
#define XSET_COUNTING_HPP

#include <vector>

#include "xset/bounded_set.hpp"
#include "xset/ints.hpp"

namespace xset {

// Difference profile rho(m) = #{(c, d) : c in (C)_{2N}^{3N}, d in (D)_0^N,
// c - d = m}.  Every pair lands in (N, 3N), so the window (N, 3N] is stored
// densely, index m - (N + 1).  At large N this array is the dominant
// allocation (2N words).
struct DiffProfile {
  u64 n_scale = 0;          // N
  std::vector<u64> rho;     // length 2N, rho[m - (N+1)] for m in (N, 3N]
  u64 total = 0;            // sum rho(m) = |C slice| * |D slice|
  u64 support = 0;          // #{m : rho(m) >= 1}
  u128 sum_sq = 0;          // sum rho(m)^2

  u64 at(u64 m) const {
    if (m <= n_scale || m > 3 * n_scale) return 0;
    return rho[static_cast<std::size_t>(m - n_scale - 1)];
  }
};

// Builds the profile by iterating the sparser slice in the outer loop.
// Requires C's universe >= 3N and D's universe >= N.  The squared-sum
// Cauchy relation total^2 <= support * sum_sq is asserted on every build.
DiffProfile diff_profile(const BoundedSet& c, const BoundedSet& d, u64 n);

// Correlation count and its diagonal split:
//   upsilon     = sum_m rho(m)^2
//   diagonal    = |C|_{2N}^{3N} * |D|_0^N      (pairs with c1 = c2, d1 = d2)
//   upsilon_hat = upsilon - diagonal           (pairs with c1 != c2)
struct UpsilonResult {
  u128 upsilon = 0;
  u128 diagonal = 0;
  u128 upsilon_hat = 0;
  u64 c_slice_count = 0;
  u64 d_slice_count = 0;
  DiffProfile profile;
};

UpsilonResult upsilon(const BoundedSet& c, const BoundedSet& d, u64 n);

// r_s(m) = #{(x_1..x_s, y_1..y_s) in [1,P]^{2s} : sum (x_i^3 - y_i^3) = m},
// dense over m in [-s(P^3-1), s(P^3-1)].  Built from the s = 1 array by
// exact integer self-convolution.  s outside {1, 2, 3} is rejected; larger
// s exceeds desk memory.
struct CubeDiffReps {
  unsigned s = 1;
  u64 p = 1;                // variable bound P
  i64 max_abs = 0;          // s * (P^3 - 1)
  std::vector<u64> counts;  // length 2 * max_abs + 1, index m + max_abs

  u64 at(i64 m) const {
    if (m < -max_abs || m > max_abs) return 0;
    return counts[static_cast<std::size_t>(m + max_abs)];
  }
};

CubeDiffReps cube_diff_reps(unsigned s, u64 p);

// #{(n1, n2, x, y) : n1, n2 in (Z)_{2N}^{3N}, n1 - n2 = sum (x_i^3 - y_i^3),
// x_i, y_i in [1, P]} with P = floor(N^{1/3}); equals sum_m zeta(m) r_s(m)
// where zeta(m) counts slice pairs with difference m.  Exact integers only.
u128 mean_value_count(const BoundedSet& z, unsigned s, u64 n);

}  // namespace xset

#endif
