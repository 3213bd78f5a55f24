#ifndef XSET_SLICE_HPP
#define XSET_SLICE_HPP

#include "xset/errors.hpp"
#include "xset/ints.hpp"

namespace xset {

// Half-open integer window (lo, hi]: lo excluded, hi included.
// All windowed counts in this library use this convention.
struct Slice {
  u64 lo = 0;
  u64 hi = 0;

  Slice() = default;
  Slice(u64 lo_, u64 hi_) : lo(lo_), hi(hi_) {
    if (lo > hi) throw DomainError("slice: lo must not exceed hi");
  }

  u64 length() const { return hi - lo; }
  bool empty() const { return lo == hi; }
  bool contains(u64 n) const { return n > lo && n <= hi; }

  friend bool operator==(const Slice&, const Slice&) = default;
};

}  // namespace xset

#endif
