#ifndef XSET_BOUNDED_SET_HPP
#define XSET_BOUNDED_SET_HPP

#include <bit>
#include <span>
#include <vector>

#include "xset/errors.hpp"
#include "xset/ints.hpp"
#include "xset/slice.hpp"

namespace xset {

// Dense set of integers over the universe [0, universe_max], one bit per
// integer (64 per word, LSB first).  Immutable after construction; every
// query is read-only, so instances may be shared freely across threads.
//
// Complements are always taken inside the positive integers: 0 can be a
// member of a set (it is needed as a summand) but never of a complement.
class BoundedSet {
 public:
  BoundedSet() : universe_max_(0), words_(1, 0), cardinality_(0) {}

  static BoundedSet empty(u64 universe_max);
  static BoundedSet from_elements(u64 universe_max, std::span<const u64> elements);
  // Takes ownership of a raw bitmap; words.size() must equal
  // words_for(universe_max).  Tail bits past universe_max are cleared.
  static BoundedSet from_words(u64 universe_max, std::vector<u64> words);
  // The contiguous range [lo, hi] as a set over [0, universe_max].
  static BoundedSet range(u64 universe_max, u64 lo, u64 hi);

  u64 universe_max() const { return universe_max_; }
  u64 cardinality() const { return cardinality_; }
  const std::vector<u64>& words() const { return words_; }

  bool contains(u64 n) const {
    if (n > universe_max_) return false;
    return (words_[n >> 6] >> (n & 63)) & 1;
  }

  // |S ∩ (w.lo, w.hi]|.  Throws RangeError when w.hi > universe_max.
  u64 slice_count(Slice w) const;

  // {n in (w.lo, w.hi] : n not in S, n >= 1}, materialized over [0, w.hi].
  BoundedSet complement_slice(Slice w) const;

  // Same members, new universe; elements above new_max are dropped.
  BoundedSet resized(u64 new_max) const;

  std::vector<u64> elements() const { return elements_in(Slice(0, universe_max_), true); }
  // Members in (w.lo, w.hi]; include_zero additionally reports 0 when
  // w.lo == 0 and 0 is a member (slices proper never contain 0).
  std::vector<u64> elements_in(Slice w, bool include_zero = false) const;

  // Calls f(n) for every member n in (w.lo, w.hi], ascending.
  template <typename F>
  void for_each_in(Slice w, F&& f) const {
    if (w.hi > universe_max_) throw RangeError("for_each_in: window exceeds universe");
    if (w.lo >= w.hi) return;
    const u64 first = w.lo + 1, last = w.hi;
    const std::size_t wf = first >> 6, wl = last >> 6;
    for (std::size_t i = wf; i <= wl; ++i) {
      u64 word = words_[i];
      if (i == wf) word &= ~u64{0} << (first & 63);
      if (i == wl) {
        const unsigned top = last & 63;
        if (top != 63) word &= (u64{1} << (top + 1)) - 1;
      }
      while (word) {
        f((static_cast<u64>(i) << 6) + static_cast<unsigned>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  // FNV-1a over the universe bound and bitmap; use for instance descriptors.
  u64 fingerprint() const;

  friend bool operator==(const BoundedSet&, const BoundedSet&) = default;

  static std::size_t words_for(u64 universe_max) {
    return static_cast<std::size_t>(universe_max / 64 + 1);
  }

 private:
  BoundedSet(u64 universe_max, std::vector<u64> words, u64 cardinality)
      : universe_max_(universe_max), words_(std::move(words)), cardinality_(cardinality) {}

  u64 universe_max_;
  std::vector<u64> words_;
  u64 cardinality_;
};

// {a + b : a in A, b in B, a + b <= limit} over [0, limit].  Shift-OR over
// the sparser operand's elements; deterministic for any worker count.
BoundedSet sumset(const BoundedSet& a, const BoundedSet& b, u64 limit);

// h-fold iterated sumset, truncated at limit after every fold.  Truncation
// is lossless for the final result since all elements are nonnegative.
BoundedSet h_fold(const BoundedSet& d, unsigned h, u64 limit);

}  // namespace xset

#endif
