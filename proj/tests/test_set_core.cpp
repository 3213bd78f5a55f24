#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "xset/ap_union.hpp"
#include "xset/bounded_set.hpp"
#include "xset/generators.hpp"
#include "xset/parallel.hpp"

using namespace xset;

TEST_SUITE_BEGIN("set_core");

TEST_CASE("slice_count on cubes") {
  const BoundedSet s = BoundedSet::from_elements(64, std::vector<u64>{1, 8, 27, 64});
  CHECK(s.slice_count(Slice(0, 30)) == 3);
  CHECK(s.slice_count(Slice(8, 8)) == 0);
  CHECK(s.slice_count(Slice(0, 64)) == 4);
  CHECK(s.slice_count(Slice(7, 8)) == 1);
  CHECK(s.slice_count(Slice(8, 27)) == 1);   // lower endpoint excluded
  CHECK_THROWS_AS(s.slice_count(Slice(0, 65)), RangeError);
}

TEST_CASE("slice_count of cubes in a mid window") {
  // count of n with 2000 < n^3 <= 3000, frozen from direct enumeration
  const BoundedSet cubes = kth_powers({3, 10000});
  CHECK(cubes.slice_count(Slice(2000, 3000)) == 2);   // 13^3, 14^3
}

TEST_CASE("complement_slice basics") {
  const BoundedSet s = BoundedSet::from_elements(27, std::vector<u64>{1, 8, 27});
  const BoundedSet comp = s.complement_slice(Slice(0, 10));
  CHECK(comp.universe_max() == 10);
  CHECK(comp.elements() == std::vector<u64>{2, 3, 4, 5, 6, 7, 9, 10});

  const BoundedSet full = BoundedSet::range(100, 1, 100);
  CHECK(full.complement_slice(Slice(0, 100)).cardinality() == 0);

  // 0 is never a member of a complement
  const BoundedSet empty = BoundedSet::empty(10);
  const BoundedSet c2 = empty.complement_slice(Slice(0, 10));
  CHECK_FALSE(c2.contains(0));
  CHECK(c2.cardinality() == 10);
}

TEST_CASE("complement of 4-fold cube sumset matches the quadruple sieve") {
  const BoundedSet four = h_fold(kth_powers({3, 1000}), 4, 1000);
  const BoundedSet comp = four.complement_slice(Slice(0, 1000));
  CHECK(comp.cardinality() == 716);   // frozen from the recursive oracle
  CHECK(comp.cardinality() == oracle::exceptional_count(3, 4, 1000));
}

TEST_CASE("sumset hand examples") {
  const BoundedSet a = BoundedSet::from_elements(10, std::vector<u64>{1, 2});
  const BoundedSet b = BoundedSet::from_elements(10, std::vector<u64>{1});
  CHECK(sumset(a, b, 10).elements() == std::vector<u64>{2, 3});

  const BoundedSet none = BoundedSet::empty(10);
  CHECK(sumset(none, a, 10).cardinality() == 0);

  const BoundedSet cubes = kth_powers({3, 100});
  const BoundedSet twofold = sumset(cubes, cubes, 100);
  CHECK(twofold.elements() == std::vector<u64>{2, 9, 16, 28, 35, 54, 65, 72, 91});
  CHECK_FALSE(twofold.contains(3));
}

TEST_CASE("sumset respects zero as a summand") {
  const BoundedSet shifts = BoundedSet::from_elements(1, std::vector<u64>{0, 1});
  const BoundedSet evens = BoundedSet::from_elements(10, std::vector<u64>{2, 4, 6});
  CHECK(sumset(evens, shifts, 10).elements() == std::vector<u64>{2, 3, 4, 5, 6, 7});
}

TEST_CASE("h_fold basics") {
  const BoundedSet one = BoundedSet::from_elements(10, std::vector<u64>{1});
  CHECK(h_fold(one, 5, 10).elements() == std::vector<u64>{5});

  const BoundedSet cubes = kth_powers({3, 30});
  CHECK(h_fold(cubes, 2, 30).elements() == std::vector<u64>{2, 9, 16, 28});
  CHECK_THROWS_AS(h_fold(cubes, 0, 30), DomainError);
}

TEST_CASE("h_fold complement count matches the straight sieve") {
  const BoundedSet six = h_fold(kth_powers({3, 100000}), 6, 100000);
  const u64 e6 = six.complement_slice(Slice(0, 100000)).cardinality();
  CHECK(e6 == 492);   // frozen from the recursive oracle
  CHECK(e6 == oracle::exceptional_count(3, 6, 100000));
}

TEST_CASE("ap_sum and subset") {
  const APUnion odd(2, {1});
  const APUnion even(2, {0});
  CHECK(ap_sum(odd, even).residues() == std::vector<u64>{1});

  // two applications of the biquadrate shift classes
  const APUnion two_l(16, {0, 1, 2});
  APUnion n(16, {1, 2, 3, 4, 5, 6, 7, 8});
  n = ap_sum(n, two_l);
  CHECK(n.residues() == std::vector<u64>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});

  CHECK_FALSE(ap_subset(APUnion(2, {0}), APUnion(2, {1})));
  CHECK_FALSE(ap_subset(APUnion(9, {0, 1, 2, 3, 4, 5, 6, 7, 8}), APUnion(9, {0, 1})));
  CHECK(ap_subset(APUnion(9, {0, 1}), APUnion(9, {0, 1, 2})));
  CHECK_THROWS_AS(ap_sum(odd, APUnion(3, {0})), DomainError);
}

TEST_CASE("lift and project between moduli") {
  const APUnion odd(2, {1});
  const APUnion lifted = odd.lifted_to(6);
  CHECK(lifted.residues() == std::vector<u64>{1, 3, 5});
  CHECK(lifted.projected_to(2) == odd);
  CHECK_THROWS_AS(odd.lifted_to(5), DomainError);
  CHECK_THROWS_AS(odd.projected_to(4), DomainError);
  CHECK(lcm_modulus(9, 14) == 126);
}

TEST_CASE("wedge_min examples") {
  const BoundedSet c = BoundedSet::from_elements(100, std::vector<u64>{1, 8, 27, 64});
  const APUnion l(9, {0, 1});
  // residue 0 holds {27}, residue 1 holds {1, 64}
  CHECK(wedge_min(c, l, Slice(0, 100)) == 1);

  // the full integers collapse the wedge to a slice count
  CHECK(wedge_min(c, APUnion::integers(), Slice(0, 100)) == c.slice_count(Slice(0, 100)));

  CHECK_THROWS_AS(wedge_min(c, APUnion(9, {}), Slice(0, 100)), DomainError);
}

TEST_CASE("wedge of prime cubes against the mod-126 summand classes") {
  // frozen: bucket counts over {1, 55, 71, 125} are 4/6/5/6 at this scale
  const BoundedSet pc = prime_cubes(1000000, 7);
  const APUnion l(126, {1, 55, 71, 125});
  CHECK(wedge_min(pc, l, Slice(0, 1000000)) == 4);

  // per-residue recount with a direct scan
  std::vector<u64> bucket(126, 0);
  for (u64 n = 1; n <= 1000000; ++n)
    if (pc.contains(n)) ++bucket[n % 126];
  u64 expect = ~u64{0};
  for (u64 r : l.residues()) expect = std::min(expect, bucket[r]);
  CHECK(expect == 4);
}

TEST_CASE("wedge relation against the residue filter") {
  // wedge * #residues <= |C ∩ L| on the same window
  std::mt19937_64 rng(41);
  for (int it = 0; it < 20; ++it) {
    const BoundedSet c = oracle::random_set(rng, 0, 500, 0.3);
    const APUnion l = APUnion::from_predicate(12, [&](u64 r) { return (r + it) % 3 != 0; });
    const u64 w = wedge_min(c, l, Slice(0, 500));
    const u64 filtered = residue_filter(c, l).slice_count(Slice(0, 500));
    CHECK(w * l.residue_count() <= filtered);
  }
}

TEST_CASE("slice additivity and complement partition") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 30; ++it) {
    const BoundedSet s = oracle::random_set(rng, 0, 400, 0.4);
    std::uniform_int_distribution<u64> pick(0, 400);
    u64 a = pick(rng), b = pick(rng), c = pick(rng);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    CHECK(s.slice_count(Slice(a, b)) + s.slice_count(Slice(b, c)) ==
          s.slice_count(Slice(a, c)));
    // counting within the positive integers: window (a, b] never holds 0
    CHECK(s.slice_count(Slice(a, b)) + s.complement_slice(Slice(a, b)).cardinality() ==
          b - a);
  }
}

TEST_CASE("sumset monotonicity in the first operand") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 10; ++it) {
    const BoundedSet a = oracle::random_set(rng, 0, 300, 0.2);
    const BoundedSet b = oracle::random_set(rng, 0, 300, 0.2);
    // a' = a with a few extra members
    auto elems = a.elements_in(Slice(0, 300), true);
    std::uniform_int_distribution<u64> pick(0, 300);
    for (int j = 0; j < 5; ++j) elems.push_back(pick(rng));
    const BoundedSet a_sup = BoundedSet::from_elements(300, elems);

    const BoundedSet small = sumset(a, b, 500);
    const BoundedSet big = sumset(a_sup, b, 500);
    small.for_each_in(Slice(0, 500), [&](u64 n) { CHECK(big.contains(n)); });
    if (small.contains(0)) CHECK(big.contains(0));
  }
}

TEST_CASE("h_fold splits as a sumset of partial folds") {
  std::mt19937_64 rng(44);
  for (int it = 0; it < 10; ++it) {
    const BoundedSet d = oracle::random_set(rng, 1, 60, 0.3);
    const unsigned h1 = 1 + static_cast<unsigned>(it % 3);
    const unsigned h2 = 1 + static_cast<unsigned>((it / 3) % 3);
    const u64 limit = 200;
    const BoundedSet whole = h_fold(d, h1 + h2, limit);
    const BoundedSet split = sumset(h_fold(d, h1, limit), h_fold(d, h2, limit), limit);
    CHECK(whole == split);
  }
}

TEST_CASE("ap_sum is commutative and associative") {
  std::mt19937_64 rng(45);
  for (int it = 0; it < 20; ++it) {
    const u64 q = 2 + static_cast<u64>(rng() % 30);
    auto rand_ap = [&] {
      std::vector<u64> rs;
      for (u64 r = 0; r < q; ++r)
        if (rng() % 3 == 0) rs.push_back(r);
      return APUnion(q, rs);
    };
    const APUnion x = rand_ap(), y = rand_ap(), z = rand_ap();
    CHECK(ap_sum(x, y) == ap_sum(y, x));
    CHECK(ap_sum(ap_sum(x, y), z) == ap_sum(x, ap_sum(y, z)));
  }
}

TEST_CASE("brute-force equivalence for small universes") {
  std::mt19937_64 rng(46);
  for (int it = 0; it < 40; ++it) {
    const u64 u = 32 + rng() % 481;   // universe max <= 512
    const double da = 0.05 + 0.9 * (it % 7) / 7.0;
    const BoundedSet a = oracle::random_set(rng, 0, u, da);
    const BoundedSet b = oracle::random_set(rng, 0, u, 0.3);
    const oracle::Members ma = oracle::to_members(a);
    const oracle::Members mb = oracle::to_members(b);

    std::uniform_int_distribution<u64> pick(0, u);
    u64 lo = pick(rng), hi = pick(rng);
    if (lo > hi) std::swap(lo, hi);
    CHECK(a.slice_count(Slice(lo, hi)) == oracle::slice_count(ma, lo, hi));
    CHECK(a.complement_slice(Slice(lo, hi)).elements() ==
          oracle::complement_slice(ma, lo, hi));

    const u64 limit = u;
    CHECK(sumset(a, b, limit) == oracle::to_set(oracle::sumset(ma, mb, limit)));
    const unsigned h = 1 + static_cast<unsigned>(rng() % 3);
    CHECK(h_fold(b, h, limit) == oracle::to_set(oracle::h_fold(mb, h, limit)));
  }
}

TEST_CASE("parallel sumset agrees with element-pair enumeration") {
  // enough words that the kernel splits into several output ranges
  std::mt19937_64 rng(47);
  const u64 limit = 4000000;
  std::uniform_int_distribution<u64> pick(0, limit);
  for (int it = 0; it < 3; ++it) {
    std::vector<u64> ea, eb;
    for (int j = 0; j < 300; ++j) { ea.push_back(pick(rng)); eb.push_back(pick(rng)); }
    ea.push_back(0);   // exercise the zero shift and word-straddling carries
    eb.push_back(limit);
    const BoundedSet a = BoundedSet::from_elements(limit, ea);
    const BoundedSet b = BoundedSet::from_elements(limit, eb);

    std::vector<u64> expect;
    for (u64 x : a.elements())
      for (u64 y : b.elements())
        if (x + y <= limit) expect.push_back(x + y);
    const BoundedSet naive = BoundedSet::from_elements(limit, expect);

    set_worker_count(8);
    const BoundedSet fast = sumset(a, b, limit);
    set_worker_count(0);
    CHECK(fast == naive);
  }
}

TEST_CASE("sumset is identical for any worker count") {
  // 4e6 spans enough words that the shift kernel actually partitions
  const u64 limit = 4000000;
  const BoundedSet cubes = kth_powers({3, limit});
  set_worker_count(1);
  const BoundedSet s1 = h_fold(cubes, 4, limit);
  set_worker_count(2);
  const BoundedSet s2 = h_fold(cubes, 4, limit);
  set_worker_count(8);
  const BoundedSet s8 = h_fold(cubes, 4, limit);
  set_worker_count(0);
  CHECK(s1 == s2);
  CHECK(s1 == s8);
  CHECK(s1.cardinality() > 0);
}

TEST_CASE("capacity guard") {
  CHECK_THROWS_AS(BoundedSet::empty(kMaxUniverse + 1), RangeError);
  CHECK_NOTHROW(BoundedSet::empty(1));
}

TEST_CASE("128-bit helpers") {
  // (2^64) * 3 + 7 renders past the 64-bit boundary
  const u128 big = (static_cast<u128>(1) << 64) * 3 + 7;
  CHECK(to_string(big) == "55340232221128654855");
  CHECK(to_string(u128{0}) == "0");
  CHECK(sq(u128{1} << 62) == (u128{1} << 124));
  CHECK_THROWS_AS(checked_mul(u128{1} << 64, u128{1} << 64), std::overflow_error);
  CHECK_THROWS_AS(checked_add(u128_max(), u128{1}), std::overflow_error);
  CHECK(ceil_div(u128{10}, u128{3}) == 4);
  CHECK(ceil_div(u128{9}, u128{3}) == 3);
  CHECK_THROWS_AS(ceil_div(u128{1}, u128{0}), std::domain_error);
}

TEST_SUITE_END();
