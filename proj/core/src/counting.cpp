#include "xset/counting.hpp"

#include <algorithm>
#include <mutex>

#include "xset/parallel.hpp"

namespace xset {

namespace {

// Accumulates pair counts over outer[begin, end) x inner into rho.
// base(c, d) index arithmetic is passed in so the same kernel serves both
// orientations of the outer loop.
template <typename Index>
void accumulate_pairs(const std::vector<u64>& outer, const std::vector<u64>& inner,
                      std::vector<u64>& rho, std::size_t begin, std::size_t end,
                      Index&& index) {
  for (std::size_t i = begin; i < end; ++i) {
    const u64 o = outer[i];
    for (const u64 in : inner) ++rho[index(o, in)];
  }
}

}  // namespace

DiffProfile diff_profile(const BoundedSet& c, const BoundedSet& d, u64 n) {
  if (n == 0) throw DomainError("diff_profile: N must be >= 1");
  if (3 * n > c.universe_max()) throw RangeError("diff_profile: C universe smaller than 3N");
  if (n > d.universe_max()) throw RangeError("diff_profile: D universe smaller than N");

  const std::vector<u64> cs = c.elements_in(Slice(2 * n, 3 * n));
  const std::vector<u64> ds = d.elements_in(Slice(0, n));

  DiffProfile prof;
  prof.n_scale = n;
  prof.rho.assign(static_cast<std::size_t>(2 * n), 0);

  // m = c - d lies in (N, 3N); index m - (N + 1).
  const bool c_outer = cs.size() <= ds.size();
  const std::vector<u64>& outer = c_outer ? cs : ds;
  const std::vector<u64>& inner = c_outer ? ds : cs;
  const u64 off = n + 1;
  auto index_c_outer = [off](u64 cv, u64 dv) { return static_cast<std::size_t>(cv - dv - off); };
  auto index_d_outer = [off](u64 dv, u64 cv) { return static_cast<std::size_t>(cv - dv - off); };

  const std::size_t pair_count = outer.size() * inner.size();
  if (pair_count >= (1u << 22) && worker_count() > 1 && outer.size() > 1) {
    // Private windows per chunk, merged by elementwise addition.
    std::vector<std::vector<u64>> partial;
    std::mutex m;
    parallel_chunks(outer.size(), 1, [&](std::size_t begin, std::size_t end) {
      std::vector<u64> local(prof.rho.size(), 0);
      if (c_outer)
        accumulate_pairs(outer, inner, local, begin, end, index_c_outer);
      else
        accumulate_pairs(outer, inner, local, begin, end, index_d_outer);
      std::lock_guard<std::mutex> lock(m);
      partial.push_back(std::move(local));
    });
    for (const auto& local : partial)
      for (std::size_t i = 0; i < prof.rho.size(); ++i) prof.rho[i] += local[i];
  } else {
    if (c_outer)
      accumulate_pairs(outer, inner, prof.rho, 0, outer.size(), index_c_outer);
    else
      accumulate_pairs(outer, inner, prof.rho, 0, outer.size(), index_d_outer);
  }

  u128 sum_sq = 0;
  u64 total = 0, support = 0;
  for (u64 r : prof.rho) {
    if (r == 0) continue;
    total += r;
    ++support;
    sum_sq += static_cast<u128>(r) * r;
  }
  prof.total = total;
  prof.support = support;
  prof.sum_sq = sum_sq;

  if (total != cs.size() * ds.size())
    throw TheoremViolation("diff_profile: mass does not match slice product");
  if (sq(static_cast<u128>(total)) > checked_mul(support, sum_sq) && total > 0)
    throw TheoremViolation("diff_profile: Cauchy relation violated");
  return prof;
}

UpsilonResult upsilon(const BoundedSet& c, const BoundedSet& d, u64 n) {
  UpsilonResult res;
  res.profile = diff_profile(c, d, n);
  res.c_slice_count = c.slice_count(Slice(2 * n, 3 * n));
  res.d_slice_count = d.slice_count(Slice(0, n));
  res.upsilon = res.profile.sum_sq;
  res.diagonal = checked_mul(res.c_slice_count, res.d_slice_count);
  if (res.upsilon < res.diagonal)
    throw TheoremViolation("upsilon: count below its diagonal");
  res.upsilon_hat = res.upsilon - res.diagonal;
  return res;
}

namespace {

// Sparse exact convolution: out[i + j - off] += a[i] * b[j] over nonzero
// entries.  Arrays are symmetric and mostly zero away from small P.
std::vector<u64> convolve(const std::vector<u64>& a, const std::vector<u64>& b,
                          std::size_t out_len) {
  std::vector<std::pair<std::size_t, u64>> nz;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j] != 0) nz.emplace_back(j, b[j]);
  std::vector<u64> out(out_len, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const u64 av = a[i];
    if (av == 0) continue;
    for (const auto& [j, bv] : nz) out[i + j] += av * bv;
  }
  return out;
}

}  // namespace

CubeDiffReps cube_diff_reps(unsigned s, u64 p) {
  if (s < 1 || s > 3) throw DomainError("cube_diff_reps: s must be in {1, 2, 3}");
  if (p == 0) throw DomainError("cube_diff_reps: P must be >= 1");
  // Entries are bounded by the total mass P^{2s}, which must stay in 64
  // bits, and the dense window 2s(P^3 - 1) + 1 must fit in desk memory.
  u128 mass = 1;
  for (unsigned i = 0; i < 2 * s; ++i) mass *= p;
  if (mass > static_cast<u128>(~u64{0}))
    throw RangeError("cube_diff_reps: counts would overflow 64 bits");
  u128 window = 2 * static_cast<u128>(s) * (static_cast<u128>(p) * p * p - 1) + 1;
  if (window > (u128{1} << 28))
    throw RangeError("cube_diff_reps: dense window exceeds desk-scale memory");

  const u64 span1 = p * p * p - 1;             // P^3 - 1
  const std::size_t len1 = static_cast<std::size_t>(2 * span1 + 1);
  std::vector<u64> r1(len1, 0);
  for (u64 x = 1; x <= p; ++x) {
    const u64 xc = x * x * x;
    for (u64 y = 1; y <= p; ++y) {
      const i64 m = static_cast<i64>(xc) - static_cast<i64>(y * y * y);
      ++r1[static_cast<std::size_t>(m + static_cast<i64>(span1))];
    }
  }

  CubeDiffReps reps;
  reps.s = s;
  reps.p = p;
  reps.max_abs = static_cast<i64>(s * span1);
  reps.counts = r1;
  for (unsigned fold = 2; fold <= s; ++fold) {
    const std::size_t out_len = static_cast<std::size_t>(2 * fold * span1 + 1);
    reps.counts = convolve(reps.counts, r1, out_len);
  }
  return reps;
}

u128 mean_value_count(const BoundedSet& z, unsigned s, u64 n) {
  if (s < 1 || s > 3) throw DomainError("mean_value_count: s must be in {1, 2, 3}");
  if (n == 0) throw DomainError("mean_value_count: N must be >= 1");
  if (3 * n > z.universe_max())
    throw RangeError("mean_value_count: Z universe smaller than 3N");

  const std::vector<u64> zs = z.elements_in(Slice(2 * n, 3 * n));
  if (zs.empty()) return 0;

  const u64 p = integer_kth_root(n, 3);
  const CubeDiffReps reps = cube_diff_reps(s, p);

  // zeta(m) = #{(n1, n2) slice pairs : n1 - n2 = m}, m in [-(N-1), N-1]
  const i64 zoff = static_cast<i64>(n) - 1;
  std::vector<u64> zeta(static_cast<std::size_t>(2 * n - 1), 0);
  for (const u64 z1 : zs)
    for (const u64 z2 : zs)
      ++zeta[static_cast<std::size_t>(static_cast<i64>(z1) - static_cast<i64>(z2) + zoff)];

  u128 count = 0;
  const i64 lo = std::max<i64>(-zoff, -reps.max_abs);
  const i64 hi = std::min<i64>(zoff, reps.max_abs);
  for (i64 m = lo; m <= hi; ++m) {
    const u64 zm = zeta[static_cast<std::size_t>(m + zoff)];
    if (zm == 0) continue;
    const u64 rm = reps.at(m);
    if (rm == 0) continue;
    count = checked_add(count, checked_mul(zm, rm));
  }
  return count;
}

}  // namespace xset
