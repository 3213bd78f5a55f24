#include "xset/ap_union.hpp"

#include <algorithm>

namespace xset {

APUnion::APUnion(u64 modulus, std::vector<u64> residues) : modulus_(modulus) {
  if (modulus == 0) throw DomainError("ap_union: modulus must be >= 1");
  flags_.assign(static_cast<std::size_t>(modulus), false);
  for (u64 r : residues) {
    if (r >= modulus) throw DomainError("ap_union: residue >= modulus");
    flags_[static_cast<std::size_t>(r)] = true;
  }
  residues_.clear();
  for (u64 r = 0; r < modulus; ++r)
    if (flags_[static_cast<std::size_t>(r)]) residues_.push_back(r);
}

APUnion APUnion::from_predicate(u64 modulus, const std::function<bool(u64)>& keep) {
  if (modulus == 0) throw DomainError("ap_union: modulus must be >= 1");
  std::vector<u64> rs;
  for (u64 r = 0; r < modulus; ++r)
    if (keep(r)) rs.push_back(r);
  return APUnion(modulus, std::move(rs));
}

APUnion APUnion::lifted_to(u64 new_modulus) const {
  if (new_modulus == 0 || new_modulus % modulus_ != 0)
    throw DomainError("lifted_to: target modulus must be a multiple of the modulus");
  std::vector<u64> rs;
  rs.reserve(residues_.size() * static_cast<std::size_t>(new_modulus / modulus_));
  for (u64 base = 0; base < new_modulus; base += modulus_)
    for (u64 r : residues_) rs.push_back(base + r);
  return APUnion(new_modulus, std::move(rs));
}

APUnion APUnion::projected_to(u64 new_modulus) const {
  if (new_modulus == 0 || modulus_ % new_modulus != 0)
    throw DomainError("projected_to: target modulus must divide the modulus");
  std::vector<u64> rs;
  for (u64 r : residues_) rs.push_back(r % new_modulus);
  return APUnion(new_modulus, std::move(rs));
}

APUnion ap_sum(const APUnion& l, const APUnion& m) {
  if (l.modulus() != m.modulus())
    throw DomainError("ap_sum: modulus mismatch; lift to a common modulus first");
  const u64 q = l.modulus();
  std::vector<bool> seen(static_cast<std::size_t>(q), false);
  for (u64 a : l.residues())
    for (u64 b : m.residues()) seen[static_cast<std::size_t>((a + b) % q)] = true;
  std::vector<u64> rs;
  for (u64 r = 0; r < q; ++r)
    if (seen[static_cast<std::size_t>(r)]) rs.push_back(r);
  return APUnion(q, std::move(rs));
}

bool ap_subset(const APUnion& n, const APUnion& lm) {
  if (n.modulus() != lm.modulus()) throw DomainError("ap_subset: modulus mismatch");
  return std::all_of(n.residues().begin(), n.residues().end(),
                     [&](u64 r) { return lm.has_residue(r); });
}

u64 wedge_min(const BoundedSet& c, const APUnion& l, Slice w) {
  if (l.empty()) throw DomainError("wedge_min: minimum over empty residue family");
  if (w.hi > c.universe_max()) throw RangeError("wedge_min: window exceeds universe");
  std::vector<u64> bucket(static_cast<std::size_t>(l.modulus()), 0);
  const u64 q = l.modulus();
  c.for_each_in(w, [&](u64 n) { ++bucket[static_cast<std::size_t>(n % q)]; });
  u64 best = ~u64{0};
  for (u64 r : l.residues()) best = std::min(best, bucket[static_cast<std::size_t>(r)]);
  return best;
}

BoundedSet materialize(const APUnion& l, u64 limit) {
  std::vector<u64> elems;
  for (u64 n = 0; n <= limit; ++n)
    if (l.contains(n)) elems.push_back(n);
  return BoundedSet::from_elements(limit, elems);
}

}  // namespace xset
