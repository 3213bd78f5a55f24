#ifndef XSET_WARING_HPP
#define XSET_WARING_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xset/ap_union.hpp"
#include "xset/bounded_set.hpp"
#include "xset/generators.hpp"

namespace xset {

enum class GeneratorKind { Powers, PrimeCubes };

struct WaringConfig {
  unsigned k = 3;                        // power
  unsigned s = 1;                        // number of summands
  u64 limit = 0;                         // table bound
  GeneratorKind generator = GeneratorKind::Powers;
  u64 min_prime_exclusive = 7;           // prime-cube generator bound
  std::optional<APUnion> class_filter;   // modulus 126 (prime cubes) or 16 (k = 4)
  std::vector<u64> checkpoints;
};

struct TableRow {
  u64 n = 0;             // checkpoint N
  u64 count = 0;         // |comp(s*gen) ∩ filter|_0^N
  u64 window_lo = 0;
  u64 window_hi = 0;
  double elapsed_ms = 0.0;
};

struct ExceptionalTable {
  WaringConfig config;
  std::vector<TableRow> rows;   // sorted by N; counts nondecreasing
  double build_ms = 0.0;        // shared sumset construction time
};

// One full sumset bitmap pass, then a slice count per checkpoint.
ExceptionalTable exceptional_table(const WaringConfig& cfg);

// The mod-126 class system for sums of prime cubes (p > 7): the summand
// classes L and the admissible target classes for s >= 5.  They satisfy
// class_for(s + 1) = ap_sum(L, class_for(s)).
struct WaringGoldbachClasses {
  APUnion l;
  APUnion n5, n6, n7, n8;
  // s >= 5; s >= 8 is the parity class of s.
  APUnion class_for(unsigned s) const;
};

WaringGoldbachClasses waring_goldbach_classes();

// Fourth powers are 0 or 1 mod 16, hence the mod-16 system: targets
// {1..min(s,15)}; the definition saturates at s = 16 (all residues).
// s = 0 or s > 16 is a domain error.
APUnion biquadrate_class(unsigned s, bool* saturated = nullptr);
APUnion biquadrate_l();   // {0, 1} mod 16

// N_0 = ceil(N/2), N_{j+1} = ceil(2 N_j / 3), stopping at the first term
// equal to 2 (index J).  The windows (2 N_j, 3 N_j], j = 1..J, cover
// (4, N]; covering holds the merged interval list.
struct DyadicSchedule {
  u64 n_top = 0;
  std::vector<u64> terms;                        // N_0 .. N_J
  std::size_t j_final = 0;                       // J
  std::vector<std::pair<u64, u64>> covering;     // merged (lo, hi] intervals
  bool covers(u64 lo_excl, u64 hi_incl) const;
};

// Requires N >= 4.  Asserts J <= ceil(log_{3/2} N) + 2.
DyadicSchedule dyadic_schedule(u64 n);

// 4 + sum_{j=1}^{J} counter(N_j) where counter evaluates a per-window
// count.  The base constant is 4, not 3: the smallest window is (4, 6],
// which leaves n = 4 uncovered, so 4 is folded into the base.  When the
// counter dominates the true per-window counts the bound dominates the
// directly computed exceptional count on (4, N] plus 4; a violation throws
// TheoremViolation.
struct DyadicBound {
  u64 bound = 0;
  u64 direct = 0;        // |comp ∩ filter|_4^N
  u64 base = 4;
  std::vector<std::pair<u64, u64>> window_counts;   // (N_j, counter(N_j))
};

DyadicBound dyadic_sum_bound(const WaringConfig& cfg,
                             const std::function<u64(u64)>& window_counter);

// The canonical counter for cfg: N_j -> |comp(s*gen) ∩ filter|_{2N_j}^{3N_j}.
std::function<u64(u64)> window_counter_for(const WaringConfig& cfg);

// For s < 16: if 16 | n and n is a sum of s biquadrates, then n / 16 is
// too.  Scans every multiple of 16 up to limit; counterexamples indicate a
// defect.
struct DescentCheck {
  bool holds = true;
  std::vector<u64> counterexamples;
  u64 scanned = 0;
};

DescentCheck biquadrate_descent_check(unsigned s, u64 limit);

// Finite-scale exponent fit next to an asymptotic reference exponent.
// The comparison carries no pass/fail: the reference is an asymptotic
// claim and is not verifiable at desk scale.
struct ExponentReport {
  DensityFit fit;
  long reference_num = 0;
  long reference_den = 1;
  std::string annotation;
  std::string to_json_string(int indent = 2) const;
};

ExponentReport exponent_report(const ExceptionalTable& table, long reference_num,
                               long reference_den);

}  // namespace xset

#endif
