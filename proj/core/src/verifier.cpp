#include "xset/verifier.hpp"

#include <cstdio>

#include <json.hpp>

#include "xset/generators.hpp"

namespace xset {

namespace {

// Exceptional count of A in the window, within the positive integers.
// Windows here never contain 0, so this is just the window length minus
// the members present.
u64 complement_count(const BoundedSet& a, Slice w) {
  return w.length() - a.slice_count(w);
}

std::vector<std::pair<std::string, std::string>> instance_of(const BoundedSet& a,
                                                             const BoundedSet& b, u64 n,
                                                             u64 q) {
  char fa[32], fb[32];
  std::snprintf(fa, sizeof fa, "%016llx", static_cast<unsigned long long>(a.fingerprint()));
  std::snprintf(fb, sizeof fb, "%016llx", static_cast<unsigned long long>(b.fingerprint()));
  return {{"N", std::to_string(n)},
          {"q", std::to_string(q)},
          {"A", fa},
          {"B", fb}};
}

nlohmann::json report_json(const InequalityReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["holds"] = r.holds;
  nlohmann::json comp;
  for (const auto& [k, v] : r.components) comp[k] = to_string(v);
  j["components"] = comp;
  nlohmann::json inst;
  for (const auto& [k, v] : r.instance) inst[k] = v;
  j["instance"] = inst;
  return j;
}

}  // namespace

u128 InequalityReport::component(const std::string& key) const {
  for (const auto& [k, v] : components)
    if (k == key) return v;
  throw DomainError("report has no component '" + key + "'");
}

std::string InequalityReport::to_json_string(int indent) const {
  return report_json(*this).dump(indent);
}

InclusionWitness check_inclusion_basic(const BoundedSet& a, const BoundedSet& b, u64 n) {
  if (n == 0) throw DomainError("check_inclusion_basic: N must be >= 1");
  if (3 * n > a.universe_max()) throw RangeError("check_inclusion_basic: A universe < 3N");
  if (n > b.universe_max()) throw RangeError("check_inclusion_basic: B universe < N");

  const BoundedSet ab = sumset(a, b, 3 * n);
  const BoundedSet comp_ab = ab.complement_slice(Slice(2 * n, 3 * n));
  const std::vector<u64> bs = b.elements_in(Slice(0, n));

  InclusionWitness w;
  bool failed = false;
  comp_ab.for_each_in(Slice(2 * n, 3 * n), [&](u64 nn) {
    if (failed) return;
    for (const u64 bv : bs) {
      ++w.pairs_checked;
      const u64 diff = nn - bv;   // in (N, 3N), always a positive integer
      if (a.contains(diff)) {
        w.holds = false;
        w.n = nn;
        w.b = bv;
        w.diff = diff;
        failed = true;
        return;
      }
    }
  });
  return w;
}

InequalityReport check_theorem_1_1(const BoundedSet& a, const BoundedSet& b, u64 n) {
  if (n == 0) throw DomainError("check_theorem_1_1: N must be >= 1");
  if (3 * n > a.universe_max()) throw RangeError("check_theorem_1_1: A universe < 3N");
  if (n > b.universe_max()) throw RangeError("check_theorem_1_1: B universe < N");

  const BoundedSet ab = sumset(a, b, 3 * n);
  const BoundedSet comp_ab = ab.complement_slice(Slice(0, 3 * n));
  const u64 b_count = b.slice_count(Slice(0, n));
  const u64 comp_ab_count = comp_ab.slice_count(Slice(2 * n, 3 * n));
  const u64 comp_a_count = complement_count(a, Slice(n, 3 * n));
  const UpsilonResult ups = upsilon(comp_ab, b, n);

  InequalityReport r;
  r.name = "thm1.1";
  r.lhs = sq(checked_mul(b_count, comp_ab_count));
  r.rhs = checked_mul(comp_a_count, ups.upsilon);
  r.holds = r.lhs <= r.rhs;
  r.components = {{"b_0N", b_count},
                  {"comp_ab_2N_3N", comp_ab_count},
                  {"comp_a_N_3N", comp_a_count},
                  {"upsilon", ups.upsilon},
                  {"diagonal", ups.diagonal},
                  {"upsilon_hat", ups.upsilon_hat}};
  r.instance = instance_of(a, b, n, 1);
  return r;
}

InequalityReport check_theorem_2_1(const BoundedSet& a, const BoundedSet& b,
                                   const APUnion& l, const APUnion& m,
                                   const APUnion& ncal, u64 n) {
  if (n == 0) throw DomainError("check_theorem_2_1: N must be >= 1");
  const u64 q = l.modulus();
  if (m.modulus() != q || ncal.modulus() != q)
    throw DomainError("check_theorem_2_1: class moduli differ");
  if (3 * n > a.universe_max()) throw RangeError("check_theorem_2_1: A universe < 3N");
  if (n > b.universe_max()) throw RangeError("check_theorem_2_1: B universe < N");
  if (!ap_subset(ncal, ap_sum(l, m)))
    throw HypothesisError("check_theorem_2_1: target classes not contained in L + M");

  const BoundedSet ab = sumset(a, b, 3 * n);
  const BoundedSet comp_ab_n = residue_filter(ab.complement_slice(Slice(0, 3 * n)), ncal);
  const BoundedSet comp_a_m = residue_filter(a.complement_slice(Slice(n, 3 * n)), m);
  const BoundedSet b_l = residue_filter(b, l);

  const u64 wedge = l.empty() ? 0 : wedge_min(b, l, Slice(0, n));
  const u64 comp_ab_n_count = comp_ab_n.slice_count(Slice(2 * n, 3 * n));
  const u64 comp_a_m_count = comp_a_m.slice_count(Slice(n, 3 * n));
  const UpsilonResult ups = upsilon(comp_ab_n, b_l, n);

  InequalityReport r;
  r.name = "thm2.1";
  r.lhs = sq(checked_mul(wedge, comp_ab_n_count));
  r.rhs = checked_mul(q, checked_mul(comp_a_m_count, ups.upsilon));
  r.holds = r.lhs <= r.rhs;
  r.components = {{"wedge_b_l_0N", wedge},
                  {"comp_ab_ncal_2N_3N", comp_ab_n_count},
                  {"comp_a_m_N_3N", comp_a_m_count},
                  {"q", q},
                  {"upsilon", ups.upsilon},
                  {"diagonal", ups.diagonal},
                  {"upsilon_hat", ups.upsilon_hat}};
  r.instance = instance_of(a, b, n, q);
  return r;
}

DichotomyReport check_dichotomy_6_1(const BoundedSet& a, const BoundedSet& b, u64 n) {
  if (n == 0) throw DomainError("check_dichotomy_6_1: N must be >= 1");
  if (3 * n > a.universe_max()) throw RangeError("check_dichotomy_6_1: A universe < 3N");
  if (n > b.universe_max()) throw RangeError("check_dichotomy_6_1: B universe < N");

  const BoundedSet ab = sumset(a, b, 3 * n);
  const BoundedSet comp_ab = ab.complement_slice(Slice(0, 3 * n));
  const u64 b_count = b.slice_count(Slice(0, n));
  const u64 comp_ab_count = comp_ab.slice_count(Slice(2 * n, 3 * n));
  const u64 comp_a_count = complement_count(a, Slice(n, 3 * n));
  const UpsilonResult ups = upsilon(comp_ab, b, n);
  const u128 product = checked_mul(b_count, comp_ab_count);

  DichotomyReport rep;
  rep.first.name = "thm6.1(i)";
  rep.first.lhs = product;
  rep.first.rhs = checked_mul(u128{2}, comp_a_count);
  rep.first.holds = rep.first.lhs <= rep.first.rhs;
  rep.second.name = "thm6.1(ii)";
  rep.second.lhs = sq(product);
  rep.second.rhs = checked_mul(u128{2}, checked_mul(comp_a_count, ups.upsilon_hat));
  rep.second.holds = rep.second.lhs <= rep.second.rhs;
  for (auto* r : {&rep.first, &rep.second}) {
    r->components = {{"b_0N", b_count},
                     {"comp_ab_2N_3N", comp_ab_count},
                     {"comp_a_N_3N", comp_a_count},
                     {"upsilon_hat", ups.upsilon_hat}};
    r->instance = instance_of(a, b, n, 1);
  }
  rep.any_holds = rep.first.holds || rep.second.holds;
  return rep;
}

ConjectureProbe probe_conjecture_6_2(const BoundedSet& a, const BoundedSet& b, u64 n) {
  if (n == 0) throw DomainError("probe_conjecture_6_2: N must be >= 1");
  if (3 * n > a.universe_max()) throw RangeError("probe_conjecture_6_2: A universe < 3N");
  if (n > b.universe_max()) throw RangeError("probe_conjecture_6_2: B universe < N");

  const BoundedSet ab = sumset(a, b, 3 * n);
  const BoundedSet comp_ab = ab.complement_slice(Slice(0, 3 * n));
  const UpsilonResult ups = upsilon(comp_ab, b, n);

  ConjectureProbe probe;
  probe.n_scale = n;
  probe.comp_ab_count = comp_ab.slice_count(Slice(2 * n, 3 * n));
  probe.b_count = b.slice_count(Slice(0, n));
  probe.upsilon_hat = ups.upsilon_hat;
  if (probe.comp_ab_count == 0 || probe.b_count == 0) {
    probe.defined = false;
    probe.undefined_reason = probe.comp_ab_count == 0 ? "comp(A+B) window is empty"
                                                      : "B window is empty";
    return probe;
  }
  probe.defined = true;
  const long double num =
      static_cast<long double>(ups.upsilon_hat) * static_cast<long double>(n);
  const long double den = sq(checked_mul(probe.comp_ab_count, probe.b_count));
  probe.ratio = static_cast<double>(num / den);
  return probe;
}

std::string ConjectureProbe::to_json_string(int indent) const {
  nlohmann::json j;
  j["name"] = "conjecture6.2";
  j["defined"] = defined;
  if (defined)
    j["ratio"] = ratio;
  else
    j["undefined_reason"] = undefined_reason;
  j["upsilon_hat"] = to_string(upsilon_hat);
  j["comp_ab_2N_3N"] = std::to_string(comp_ab_count);
  j["b_0N"] = std::to_string(b_count);
  j["N"] = std::to_string(n_scale);
  return j.dump(indent);
}

TransferBound transfer_bound(const BoundedSet& a, const BoundedSet& b, const APUnion& l,
                             const APUnion& m, const APUnion& ncal, u64 n) {
  TransferBound t;
  t.theorem = check_theorem_2_1(a, b, l, m, ncal, n);
  const u128 wedge = t.theorem.component("wedge_b_l_0N");
  t.direct = static_cast<u64>(t.theorem.component("comp_ab_ncal_2N_3N"));
  if (wedge == 0) {
    t.defined = false;
    return t;
  }
  t.defined = true;
  t.implied = ceil_div(t.theorem.rhs, sq(wedge));
  if (static_cast<u128>(t.direct) > t.implied)
    throw TheoremViolation("transfer_bound: direct count " + std::to_string(t.direct) +
                           " exceeds implied bound " + to_string(t.implied));
  return t;
}

}  // namespace xset
