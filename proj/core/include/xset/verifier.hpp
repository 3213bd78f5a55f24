#ifndef XSET_VERIFIER_HPP
#define XSET_VERIFIER_HPP

#include <string>
#include <utility>
#include <vector>

#include "xset/ap_union.hpp"
#include "xset/bounded_set.hpp"
#include "xset/counting.hpp"
#include "xset/ints.hpp"

namespace xset {

// Both sides of a checked inequality plus every constituent count.  All
// checked statements are proven, so holds == false is a defect alarm, not
// a mathematical discovery.
struct InequalityReport {
  std::string name;
  u128 lhs = 0;
  u128 rhs = 0;
  bool holds = false;
  std::vector<std::pair<std::string, u128>> components;
  std::vector<std::pair<std::string, std::string>> instance;

  u128 component(const std::string& key) const;
  // Integer fields are emitted as decimal strings so 64-bit JSON consumers
  // cannot mangle 128-bit values.
  std::string to_json_string(int indent = 2) const;
};

struct InclusionWitness {
  bool holds = true;
  // populated on failure: n in comp(A+B) slice, b in B slice, n - b in A
  u64 n = 0;
  u64 b = 0;
  u64 diff = 0;
  u64 pairs_checked = 0;
};

// Verifies ((comp(A+B))_{2N}^{3N} - (B)_0^N) ∩ ℕ ⊆ comp(A) by direct
// membership scan.  Requires A's universe >= 3N, B's >= N.
InclusionWitness check_inclusion_basic(const BoundedSet& a, const BoundedSet& b, u64 n);

// ( |B|_0^N * |comp(A+B)|_{2N}^{3N} )^2  <=  |compA|_N^{3N} * Υ(comp(A+B), B; N)
InequalityReport check_theorem_1_1(const BoundedSet& a, const BoundedSet& b, u64 n);

// Residue-class refinement.  L, M, Ncal share a modulus q and must satisfy
// Ncal ⊆ L + M (hypothesis, checked first):
//   ( ⟨B∧L⟩_0^N * |comp(A+B)∩Ncal|_{2N}^{3N} )^2
//       <=  q * |compA∩M|_N^{3N} * Υ(comp(A+B)∩Ncal, B∩L; N)
// With q = 1 and all classes the full integers this reduces exactly to
// check_theorem_1_1.
InequalityReport check_theorem_2_1(const BoundedSet& a, const BoundedSet& b,
                                   const APUnion& l, const APUnion& m,
                                   const APUnion& ncal, u64 n);

// Either  |B|_0^N |comp(A+B)|_{2N}^{3N} <= 2 |compA|_N^{3N}
// or      ( same )^2 <= 2 |compA|_N^{3N} * Υ̂.   At least one always holds.
struct DichotomyReport {
  InequalityReport first;
  InequalityReport second;
  bool any_holds = false;
};

DichotomyReport check_dichotomy_6_1(const BoundedSet& a, const BoundedSet& b, u64 n);

// Numeric probe of the diagonal-dominance conjecture: reports
// Υ̂ * N / (|comp(A+B)|_{2N}^{3N} * |B|_0^N)^2.  Data only, no pass/fail.
// The ratio is the one double-precision value in this module; it is formed
// from exact integers, relative error <= 2^-50.
struct ConjectureProbe {
  bool defined = false;
  double ratio = 0.0;
  std::string undefined_reason;
  u128 upsilon_hat = 0;
  u64 comp_ab_count = 0;
  u64 b_count = 0;
  u64 n_scale = 0;
  std::string to_json_string(int indent = 2) const;
};

ConjectureProbe probe_conjecture_6_2(const BoundedSet& a, const BoundedSet& b, u64 n);

// Packages the deduction step: from the verified residue inequality,
// |comp(A+B)∩Ncal|_{2N}^{3N} <= ceil(rhs / wedge^2).  Ceiling division so
// the implied bound is never understated.  direct <= implied is asserted.
struct TransferBound {
  InequalityReport theorem;
  bool defined = false;   // false when the wedge is 0
  u128 implied = 0;
  u64 direct = 0;
};

TransferBound transfer_bound(const BoundedSet& a, const BoundedSet& b,
                             const APUnion& l, const APUnion& m,
                             const APUnion& ncal, u64 n);

}  // namespace xset

#endif
