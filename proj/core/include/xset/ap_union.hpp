#ifndef XSET_AP_UNION_HPP
#define XSET_AP_UNION_HPP

#include <functional>
#include <numeric>
#include <vector>

#include "xset/bounded_set.hpp"
#include "xset/errors.hpp"
#include "xset/ints.hpp"
#include "xset/slice.hpp"

namespace xset {

// Union of arithmetic progressions modulo q: membership of n depends only
// on n mod q.  The full integers are q = 1, residues = {0}.
class APUnion {
 public:
  APUnion(u64 modulus, std::vector<u64> residues);
  static APUnion from_predicate(u64 modulus, const std::function<bool(u64)>& keep);
  static APUnion integers() { return APUnion(1, {0}); }

  u64 modulus() const { return modulus_; }
  const std::vector<u64>& residues() const { return residues_; }
  bool empty() const { return residues_.empty(); }
  std::size_t residue_count() const { return residues_.size(); }

  bool contains(u64 n) const { return flags_[static_cast<std::size_t>(n % modulus_)]; }
  bool has_residue(u64 r) const { return r < modulus_ && flags_[static_cast<std::size_t>(r)]; }

  // Same set, expressed modulo new_modulus (requires modulus | new_modulus).
  APUnion lifted_to(u64 new_modulus) const;

  // Coarsest AP-union superset modulo new_modulus (requires
  // new_modulus | modulus): keeps every class that meets this set.
  APUnion projected_to(u64 new_modulus) const;

  friend bool operator==(const APUnion&, const APUnion&) = default;

 private:
  u64 modulus_;
  std::vector<bool> flags_;      // size modulus_
  std::vector<u64> residues_;    // sorted
};

inline u64 lcm_modulus(u64 a, u64 b) { return std::lcm(a, b); }

// Residue sumset {(l + m) mod q}.  Equal moduli required; callers lift to
// a common modulus first (lifted_to / lcm_modulus).
APUnion ap_sum(const APUnion& l, const APUnion& m);

// n.residues ⊆ lm.residues, equal moduli required.
bool ap_subset(const APUnion& n, const APUnion& lm);

// min over residues r of L of |C ∩ {n ≡ r (mod q)}| within the window.
// Throws DomainError on an empty residue family.
u64 wedge_min(const BoundedSet& c, const APUnion& l, Slice w);

// The AP union materialized as a BoundedSet over [0, limit].
BoundedSet materialize(const APUnion& l, u64 limit);

}  // namespace xset

#endif
