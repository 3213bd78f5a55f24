#ifndef XSET_GENERATORS_HPP
#define XSET_GENERATORS_HPP

#include <span>
#include <utility>
#include <vector>

#include "xset/ap_union.hpp"
#include "xset/bounded_set.hpp"

namespace xset {

struct PowerSpec {
  unsigned k = 1;   // exponent, >= 1
  u64 limit = 1;    // universe bound
};

// {n^k : n >= 1, n^k <= limit} over [0, limit].
BoundedSet kth_powers(PowerSpec spec);

// All primes <= limit, segmented sieve.  limit < 2 yields the empty set.
BoundedSet primes(u64 limit);

// {p^3 <= limit : p prime, p > min_prime_exclusive}.
BoundedSet prime_cubes(u64 limit, u64 min_prime_exclusive);

// S ∩ L as a BoundedSet over S's universe.
BoundedSet residue_filter(const BoundedSet& s, const APUnion& l);

// Least-squares fit of log(count) against log(N).
struct DensityFit {
  std::vector<std::pair<u64, u64>> checkpoints;  // all rows, zero counts included
  double fitted_exponent = 0.0;                  // slope in log-log coordinates
  double intercept = 0.0;
  double residual = 0.0;                         // sum of squared log residuals
  std::size_t used = 0;                          // rows with count > 0
};

// Checkpoints must be strictly increasing in N.  Zero-count rows are
// reported but excluded from the fit; fewer than two positive rows throws
// FitUndefinedError carrying the raw table.
DensityFit fit_density_exponent(std::span<const std::pair<u64, u64>> counts);

}  // namespace xset

#endif
