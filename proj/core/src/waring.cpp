#include "xset/waring.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include <json.hpp>

namespace xset {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

BoundedSet generator_set(const WaringConfig& cfg, u64 limit) {
  switch (cfg.generator) {
    case GeneratorKind::Powers:
      return kth_powers({cfg.k, limit});
    case GeneratorKind::PrimeCubes:
      return prime_cubes(limit, cfg.min_prime_exclusive);
  }
  throw DomainError("unknown generator kind");
}

void validate(const WaringConfig& cfg) {
  if (cfg.s == 0) throw DomainError("waring: s must be >= 1");
  if (cfg.limit == 0) throw DomainError("waring: limit must be >= 1");
  for (u64 n : cfg.checkpoints)
    if (n > cfg.limit) throw RangeError("waring: checkpoint exceeds limit");
  if (cfg.class_filter) {
    const u64 q = cfg.class_filter->modulus();
    const u64 expected = cfg.generator == GeneratorKind::PrimeCubes ? 126 : 16;
    if (cfg.generator == GeneratorKind::PrimeCubes || cfg.k == 4) {
      if (expected % q != 0)
        throw DomainError("waring: class filter modulus must divide " +
                          std::to_string(expected));
    }
  }
}

// comp(s * gen) ∩ filter over (0, limit], built once and sliced per
// checkpoint afterwards.
BoundedSet exceptional_set(const WaringConfig& cfg, u64 limit) {
  const BoundedSet gen = generator_set(cfg, limit);
  const BoundedSet fold = h_fold(gen, cfg.s, limit);
  BoundedSet comp = fold.complement_slice(Slice(0, limit));
  if (cfg.class_filter) comp = residue_filter(comp, *cfg.class_filter);
  return comp;
}

}  // namespace

ExceptionalTable exceptional_table(const WaringConfig& cfg) {
  validate(cfg);
  ExceptionalTable table;
  table.config = cfg;

  const auto t0 = clock_type::now();
  const BoundedSet comp = exceptional_set(cfg, cfg.limit);
  table.build_ms = ms_since(t0);

  std::vector<u64> cps = cfg.checkpoints;
  std::sort(cps.begin(), cps.end());
  cps.erase(std::unique(cps.begin(), cps.end()), cps.end());

  u64 prev = 0;
  for (u64 n : cps) {
    const auto r0 = clock_type::now();
    TableRow row;
    row.n = n;
    row.count = comp.slice_count(Slice(0, n));
    row.window_lo = 0;
    row.window_hi = n;
    row.elapsed_ms = ms_since(r0);
    if (row.count < prev)
      throw TheoremViolation("exceptional_table: count decreased as N grew");
    prev = row.count;
    table.rows.push_back(row);
  }
  return table;
}

APUnion WaringGoldbachClasses::class_for(unsigned s) const {
  switch (s) {
    case 5: return n5;
    case 6: return n6;
    case 7: return n7;
    default:
      if (s < 5) throw DomainError("waring_goldbach class is defined for s >= 5");
      // s >= 8: the parity class of s
      return s % 2 == 0 ? n8 : APUnion::from_predicate(126, [](u64 r) { return r % 2 == 1; });
  }
}

WaringGoldbachClasses waring_goldbach_classes() {
  // Cubes of primes p > 7 are odd and lie in ±1 both mod 9 and mod 7,
  // which pins everything down modulo 126 = 2 * 9 * 7.
  auto mod9_pm1 = [](u64 r) { return r % 9 == 1 || r % 9 == 8; };
  auto mod7_pm1 = [](u64 r) { return r % 7 == 1 || r % 7 == 6; };
  return WaringGoldbachClasses{
      APUnion::from_predicate(
          126, [&](u64 r) { return r % 2 == 1 && mod9_pm1(r) && mod7_pm1(r); }),
      APUnion::from_predicate(126,
                              [&](u64 r) {
                                const u64 m9 = r % 9;
                                return r % 2 == 1 && m9 != 0 && m9 != 2 && m9 != 7 &&
                                       r % 7 != 0;
                              }),
      APUnion::from_predicate(126, [&](u64 r) { return r % 2 == 0 && !mod9_pm1(r); }),
      APUnion::from_predicate(126, [&](u64 r) { return r % 2 == 1 && r % 9 != 0; }),
      APUnion::from_predicate(126, [](u64 r) { return r % 2 == 0; })};
}

APUnion biquadrate_class(unsigned s, bool* saturated) {
  if (s == 0) throw DomainError("biquadrate_class: s must be >= 1");
  if (s > 16) throw DomainError("biquadrate_class: classes saturate at s = 16");
  if (saturated) *saturated = (s == 16);
  std::vector<u64> rs;
  for (u64 r = 1; r <= std::min<u64>(s, 15); ++r) rs.push_back(r);
  if (s == 16) rs.push_back(0);   // every residue qualifies
  return APUnion(16, std::move(rs));
}

APUnion biquadrate_l() { return APUnion(16, {0, 1}); }

bool DyadicSchedule::covers(u64 lo_excl, u64 hi_incl) const {
  if (hi_incl <= lo_excl) return true;
  for (const auto& [lo, hi] : covering)
    if (lo <= lo_excl && hi_incl <= hi) return true;
  return false;
}

DyadicSchedule dyadic_schedule(u64 n) {
  if (n < 4) throw DomainError("dyadic_schedule: N must be >= 4");
  DyadicSchedule sched;
  sched.n_top = n;
  u64 t = (n + 1) / 2;   // ceil(N / 2)
  sched.terms.push_back(t);
  while (t != 2) {
    t = (2 * t + 2) / 3;  // ceil(2t / 3)
    sched.terms.push_back(t);
  }
  sched.j_final = sched.terms.size() - 1;

  const double bound = std::ceil(std::log(static_cast<double>(n)) / std::log(1.5)) + 2;
  if (static_cast<double>(sched.j_final) > bound)
    throw TheoremViolation("dyadic_schedule: J exceeds its logarithmic bound");

  // merged union of (2 N_j, 3 N_j], j = 1..J; terms shrink, so merging
  // back-to-front keeps intervals sorted
  std::vector<std::pair<u64, u64>> ivs;
  for (std::size_t j = 1; j <= sched.j_final; ++j)
    ivs.emplace_back(2 * sched.terms[j], 3 * sched.terms[j]);
  std::sort(ivs.begin(), ivs.end());
  for (const auto& [lo, hi] : ivs) {
    if (!sched.covering.empty() && lo <= sched.covering.back().second)
      sched.covering.back().second = std::max(sched.covering.back().second, hi);
    else
      sched.covering.emplace_back(lo, hi);
  }
  return sched;
}

DyadicBound dyadic_sum_bound(const WaringConfig& cfg,
                             const std::function<u64(u64)>& window_counter) {
  validate(cfg);
  const DyadicSchedule sched = dyadic_schedule(cfg.limit);

  DyadicBound out;
  out.base = 4;  // covers n <= 4, which the windows (2 N_j, 3 N_j] miss
  u64 sum = out.base;
  for (std::size_t j = 1; j <= sched.j_final; ++j) {
    const u64 wc = window_counter(sched.terms[j]);
    out.window_counts.emplace_back(sched.terms[j], wc);
    sum += wc;
  }
  out.bound = sum;

  const BoundedSet comp = exceptional_set(cfg, cfg.limit);
  out.direct = comp.slice_count(Slice(4, cfg.limit));
  if (out.bound < out.direct + out.base)
    throw TheoremViolation("dyadic_sum_bound: window sum fails to dominate the direct count");
  return out;
}

std::function<u64(u64)> window_counter_for(const WaringConfig& cfg) {
  validate(cfg);
  // Windows reach 3 * N_1, which can slightly exceed the table bound.
  const DyadicSchedule sched = dyadic_schedule(cfg.limit);
  u64 needed = cfg.limit;
  if (sched.j_final >= 1) needed = std::max(needed, 3 * sched.terms[1]);
  auto comp = std::make_shared<BoundedSet>(exceptional_set(cfg, needed));
  return [comp](u64 nj) { return comp->slice_count(Slice(2 * nj, 3 * nj)); };
}

DescentCheck biquadrate_descent_check(unsigned s, u64 limit) {
  if (s == 0) throw DomainError("biquadrate_descent_check: s must be >= 1");
  if (s >= 16) throw DomainError("biquadrate_descent_check: requires s < 16");
  if (limit == 0) throw DomainError("biquadrate_descent_check: limit must be >= 1");

  const BoundedSet fold = h_fold(kth_powers({4, limit}), s, limit);
  DescentCheck check;
  for (u64 n = 16; n <= limit; n += 16) {
    ++check.scanned;
    if (fold.contains(n) && !fold.contains(n / 16)) {
      check.holds = false;
      check.counterexamples.push_back(n);
    }
  }
  return check;
}

ExponentReport exponent_report(const ExceptionalTable& table, long reference_num,
                               long reference_den) {
  if (reference_den == 0) throw DomainError("exponent_report: zero denominator");
  std::vector<std::pair<u64, u64>> counts;
  for (const TableRow& row : table.rows) counts.emplace_back(row.n, row.count);

  ExponentReport rep;
  rep.fit = fit_density_exponent(counts);
  rep.reference_num = reference_num;
  rep.reference_den = reference_den;
  rep.annotation =
      "reference exponent is an asymptotic claim and is not verifiable at finite scale";
  return rep;
}

std::string ExponentReport::to_json_string(int indent) const {
  nlohmann::json j;
  j["fitted_exponent"] = fit.fitted_exponent;
  j["intercept"] = fit.intercept;
  j["residual"] = fit.residual;
  j["checkpoints_used"] = fit.used;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [n, c] : fit.checkpoints)
    rows.push_back({{"N", std::to_string(n)}, {"count", std::to_string(c)}});
  j["checkpoints"] = rows;
  j["reference_exponent"] =
      std::to_string(reference_num) + "/" + std::to_string(reference_den);
  j["reference_exponent_value"] =
      static_cast<double>(reference_num) / static_cast<double>(reference_den);
  j["annotation"] = annotation;
  return j.dump(indent);
}

}  // namespace xset
