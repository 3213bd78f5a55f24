#include "xset/generators.hpp"

#include <algorithm>
#include <cmath>

#include "xset/parallel.hpp"

namespace xset {

BoundedSet kth_powers(PowerSpec spec) {
  if (spec.k == 0) throw DomainError("kth_powers: k must be >= 1");
  if (spec.limit == 0) throw DomainError("kth_powers: limit must be >= 1");
  if (spec.k == 1) {
    // identity powers: all of [1, limit]
    return BoundedSet::range(spec.limit, 1, spec.limit);
  }
  std::vector<u64> elems;
  for (u64 n = 1;; ++n) {
    u128 p = 1;
    bool over = false;
    for (unsigned i = 0; i < spec.k; ++i) {
      p *= n;
      if (p > spec.limit) { over = true; break; }
    }
    if (over) break;
    elems.push_back(static_cast<u64>(p));
  }
  return BoundedSet::from_elements(spec.limit, elems);
}

namespace {

// Odd primes up to root by a plain sieve; used as the base of the
// segmented pass.
std::vector<u64> base_odd_primes(u64 root) {
  std::vector<char> is_prime(static_cast<std::size_t>(root) + 1, 1);
  std::vector<u64> out;
  for (u64 i = 3; i <= root; i += 2) {
    if (!is_prime[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= root; j += 2 * i) is_prime[static_cast<std::size_t>(j)] = 0;
  }
  return out;
}

}  // namespace

BoundedSet primes(u64 limit) {
  if (limit < 2) return BoundedSet::empty(limit);
  const u64 root = integer_kth_root(limit, 2);
  const std::vector<u64> base = base_odd_primes(root);

  std::vector<u64> words(BoundedSet::words_for(limit), 0);
  words[0] |= u64{1} << 2;  // the even prime

  // Word-aligned segments; workers write disjoint word ranges.
  const std::size_t total_words = words.size();
  parallel_chunks(total_words, 1 << 12, [&](std::size_t w_begin, std::size_t w_end) {
    const u64 lo = static_cast<u64>(w_begin) * 64;
    const u64 hi = std::min(static_cast<u64>(w_end) * 64 - 1, limit);  // inclusive
    if (hi < 3) return;
    const u64 span = hi - lo + 1;
    std::vector<char> composite(static_cast<std::size_t>(span), 0);
    for (u64 p : base) {
      u64 start = p * p;
      if (start > hi) break;
      if (start < lo) {
        const u64 k = (lo + p - 1) / p;
        start = k * p;
        if (start % 2 == 0) start += p;  // odd multiples only
      }
      for (u64 m = start; m <= hi; m += 2 * p) composite[static_cast<std::size_t>(m - lo)] = 1;
    }
    u64 n = std::max<u64>(lo | 1, 3);  // first odd >= max(lo, 3)
    for (; n <= hi; n += 2) {
      if (!composite[static_cast<std::size_t>(n - lo)])
        words[n >> 6] |= u64{1} << (n & 63);
    }
  });
  return BoundedSet::from_words(limit, std::move(words));
}

BoundedSet prime_cubes(u64 limit, u64 min_prime_exclusive) {
  if (limit == 0) throw DomainError("prime_cubes: limit must be >= 1");
  const u64 max_p = integer_kth_root(limit, 3);
  std::vector<u64> elems;
  if (max_p >= 2) {
    const BoundedSet ps = primes(max_p);
    ps.for_each_in(Slice(min_prime_exclusive, max_p),
                   [&](u64 p) { elems.push_back(p * p * p); });
  }
  return BoundedSet::from_elements(limit, elems);
}

BoundedSet residue_filter(const BoundedSet& s, const APUnion& l) {
  const u64 q = l.modulus();
  const u64 universe = s.universe_max();
  std::vector<u64> out(s.words().size(), 0);

  // The residue pattern repeats every lcm(q, 64) bits; for small moduli a
  // periodic word table turns the filter into a word-wise AND.
  const u64 pattern_bits = lcm_modulus(q, 64);
  if (pattern_bits / 64 <= 4096) {
    const std::size_t pattern_words = static_cast<std::size_t>(pattern_bits / 64);
    std::vector<u64> pattern(pattern_words, 0);
    for (u64 j = 0; j < pattern_bits; ++j)
      if (l.has_residue(j % q)) pattern[static_cast<std::size_t>(j >> 6)] |= u64{1} << (j & 63);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.words()[i] & pattern[i % pattern_words];
  } else {
    s.for_each_in(Slice(0, universe), [&](u64 n) {
      if (l.contains(n)) out[n >> 6] |= u64{1} << (n & 63);
    });
    if (s.contains(0) && l.contains(0)) out[0] |= 1;
  }
  return BoundedSet::from_words(universe, std::move(out));
}

DensityFit fit_density_exponent(std::span<const std::pair<u64, u64>> counts) {
  DensityFit fit;
  fit.checkpoints.assign(counts.begin(), counts.end());
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i].first <= counts[i - 1].first)
      throw DomainError("fit_density_exponent: checkpoints must be strictly increasing in N");

  std::vector<double> xs, ys;
  for (const auto& [n, count] : counts) {
    if (n == 0) throw DomainError("fit_density_exponent: N must be positive");
    if (count == 0) continue;  // excluded from the fit, kept in the table
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(static_cast<double>(count)));
  }
  fit.used = xs.size();
  if (fit.used < 2) {
    std::vector<std::pair<unsigned long long, unsigned long long>> table;
    for (const auto& [n, c] : counts) table.emplace_back(n, c);
    throw FitUndefinedError("fit requires at least two positive checkpoints", std::move(table));
  }

  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.fitted_exponent = sxy / sxx;
  fit.intercept = my - fit.fitted_exponent * mx;
  double rss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.fitted_exponent * xs[i]);
    rss += r * r;
  }
  fit.residual = rss;
  return fit;
}

}  // namespace xset
