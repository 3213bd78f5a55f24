#include "xset/bounded_set.hpp"

#include <algorithm>
#include <bit>

#include "xset/parallel.hpp"

namespace xset {

namespace {

void check_universe(u64 universe_max) {
  if (universe_max > kMaxUniverse)
    throw RangeError("universe exceeds capacity (" + std::to_string(universe_max) + " > " +
                     std::to_string(kMaxUniverse) + ")");
}

u64 popcount_words(const std::vector<u64>& words) {
  u64 c = 0;
  for (u64 w : words) c += static_cast<u64>(std::popcount(w));
  return c;
}

// Clears bits above universe_max in the final word.
void mask_tail(std::vector<u64>& words, u64 universe_max) {
  const unsigned top = universe_max & 63;
  if (top != 63) words.back() &= (u64{1} << (top + 1)) - 1;
}

}  // namespace

BoundedSet BoundedSet::empty(u64 universe_max) {
  check_universe(universe_max);
  return BoundedSet(universe_max, std::vector<u64>(words_for(universe_max), 0), 0);
}

BoundedSet BoundedSet::from_words(u64 universe_max, std::vector<u64> words) {
  check_universe(universe_max);
  if (words.size() != words_for(universe_max))
    throw DomainError("from_words: word count does not match universe");
  mask_tail(words, universe_max);
  const u64 card = popcount_words(words);
  return BoundedSet(universe_max, std::move(words), card);
}

BoundedSet BoundedSet::from_elements(u64 universe_max, std::span<const u64> elements) {
  check_universe(universe_max);
  std::vector<u64> words(words_for(universe_max), 0);
  for (u64 e : elements) {
    if (e > universe_max) throw RangeError("from_elements: element exceeds universe");
    words[e >> 6] |= u64{1} << (e & 63);
  }
  const u64 card = popcount_words(words);
  return BoundedSet(universe_max, std::move(words), card);
}

BoundedSet BoundedSet::range(u64 universe_max, u64 lo, u64 hi) {
  check_universe(universe_max);
  if (lo > hi || hi > universe_max) throw RangeError("range: bad bounds");
  std::vector<u64> words(words_for(universe_max), 0);
  const std::size_t wl = lo >> 6, wh = hi >> 6;
  for (std::size_t i = wl; i <= wh; ++i) {
    u64 w = ~u64{0};
    if (i == wl) w &= ~u64{0} << (lo & 63);
    if (i == wh) {
      const unsigned top = hi & 63;
      if (top != 63) w &= (u64{1} << (top + 1)) - 1;
    }
    words[i] = w;
  }
  const u64 card = hi - lo + 1;
  return BoundedSet(universe_max, std::move(words), card);
}

u64 BoundedSet::slice_count(Slice w) const {
  if (w.hi > universe_max_) throw RangeError("slice_count: window exceeds universe");
  if (w.lo >= w.hi) return 0;
  const u64 first = w.lo + 1, last = w.hi;
  const std::size_t wf = first >> 6, wl = last >> 6;
  const u64 mf = ~u64{0} << (first & 63);
  const unsigned top = last & 63;
  const u64 ml = top == 63 ? ~u64{0} : (u64{1} << (top + 1)) - 1;
  if (wf == wl) return static_cast<u64>(std::popcount(words_[wf] & mf & ml));
  u64 c = static_cast<u64>(std::popcount(words_[wf] & mf)) +
          static_cast<u64>(std::popcount(words_[wl] & ml));
  for (std::size_t i = wf + 1; i < wl; ++i) c += static_cast<u64>(std::popcount(words_[i]));
  return c;
}

BoundedSet BoundedSet::complement_slice(Slice w) const {
  if (w.hi > universe_max_) throw RangeError("complement_slice: window exceeds universe");
  std::vector<u64> out(words_for(w.hi), 0);
  // complements live in the positive integers: never emit 0
  const u64 first = std::max<u64>(w.lo + 1, 1);
  const u64 last = w.hi;
  if (first <= last && !w.empty()) {
    const std::size_t wf = first >> 6, wl = last >> 6;
    for (std::size_t i = wf; i <= wl; ++i) {
      u64 m = ~u64{0};
      if (i == wf) m &= ~u64{0} << (first & 63);
      if (i == wl) {
        const unsigned top = last & 63;
        if (top != 63) m &= (u64{1} << (top + 1)) - 1;
      }
      out[i] = ~words_[i] & m;
    }
  }
  return from_words(w.hi, std::move(out));
}

BoundedSet BoundedSet::resized(u64 new_max) const {
  check_universe(new_max);
  std::vector<u64> out(words_for(new_max), 0);
  const std::size_t n = std::min(out.size(), words_.size());
  std::copy(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(n), out.begin());
  return from_words(new_max, std::move(out));
}

std::vector<u64> BoundedSet::elements_in(Slice w, bool include_zero) const {
  std::vector<u64> out;
  if (include_zero && w.lo == 0 && contains(0)) out.push_back(0);
  for_each_in(w, [&](u64 n) { out.push_back(n); });
  return out;
}

u64 BoundedSet::fingerprint() const {
  u64 h = 14695981039346656037ull;
  auto mix = [&h](u64 v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(universe_max_);
  for (u64 w : words_) mix(w);
  return h;
}

namespace {

// OR the source bitmap shifted by each element of `shifts` into dst,
// restricted to dst word range [w_begin, w_end).  Workers own disjoint
// output ranges, so any partition gives identical results.
void shift_or_range(const std::vector<u64>& src, const std::vector<u64>& shifts,
                    std::vector<u64>& dst, std::size_t w_begin, std::size_t w_end) {
  const std::size_t src_words = src.size();
  for (u64 e : shifts) {
    const std::size_t ws = static_cast<std::size_t>(e >> 6);
    const unsigned bs = static_cast<unsigned>(e & 63);
    std::size_t w = std::max(w_begin, ws);
    if (bs == 0) {
      for (; w < w_end; ++w) {
        const std::size_t i = w - ws;
        if (i >= src_words) break;
        dst[w] |= src[i];
      }
    } else {
      for (; w < w_end; ++w) {
        const std::size_t i = w - ws;
        if (i >= src_words + 1) break;
        u64 v = 0;
        if (i < src_words) v = src[i] << bs;
        if (i >= 1 && i - 1 < src_words) v |= src[i - 1] >> (64 - bs);
        dst[w] |= v;
      }
    }
  }
}

}  // namespace

BoundedSet sumset(const BoundedSet& a, const BoundedSet& b, u64 limit) {
  check_universe(limit);
  const BoundedSet& sparse = a.cardinality() <= b.cardinality() ? a : b;
  const BoundedSet& dense = a.cardinality() <= b.cardinality() ? b : a;

  std::vector<u64> shifts;
  shifts.reserve(static_cast<std::size_t>(sparse.cardinality()));
  const u64 hi = std::min(limit, sparse.universe_max());
  if (sparse.contains(0)) shifts.push_back(0);
  sparse.for_each_in(Slice(0, hi), [&](u64 e) { shifts.push_back(e); });

  std::vector<u64> out(BoundedSet::words_for(limit), 0);
  if (!shifts.empty() && dense.cardinality() > 0) {
    parallel_chunks(out.size(), 1 << 14, [&](std::size_t begin, std::size_t end) {
      shift_or_range(dense.words(), shifts, out, begin, end);
    });
  }
  return BoundedSet::from_words(limit, std::move(out));
}

BoundedSet h_fold(const BoundedSet& d, unsigned h, u64 limit) {
  if (h == 0) throw DomainError("h_fold: h must be >= 1");
  check_universe(limit);
  BoundedSet acc = d.universe_max() == limit ? d : d.resized(limit);
  for (unsigned i = 1; i < h; ++i) acc = sumset(acc, d, limit);
  return acc;
}

}  // namespace xset
