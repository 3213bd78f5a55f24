// xset: command-line front door for the exceptional-set laboratory.
//
// Exit codes: 0 success, 1 checked-statement violation (witness printed),
// 2 usage error, 3 capacity/range error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xset/ap_union.hpp"
#include "xset/bounded_set.hpp"
#include "xset/counting.hpp"
#include "xset/generators.hpp"
#include "xset/parallel.hpp"
#include "xset/set_io.hpp"
#include "xset/verifier.hpp"
#include "xset/waring.hpp"

namespace {

using xset::u64;

std::vector<u64> parse_u64_list(const std::string& text) {
  std::vector<u64> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoull(item));
  }
  return out;
}

// All file output goes through here; content is deterministic and ends
// with a newline.
void emit(const std::string& out_path, std::string text) {
  if (text.empty() || text.back() != '\n') text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary | std::ios::trunc);
  if (!os) throw xset::FormatError("cannot open for writing: " + out_path);
  os << text;
}

xset::BoundedSet load_required(const std::string& path, const char* role) {
  if (path.empty()) throw xset::DomainError(std::string("missing required set: ") + role);
  return xset::load_xset(path);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct GenOpts {
  unsigned powers_k = 0;
  bool primes = false;
  bool prime_cubes = false;
  bool ap = false;
  u64 min_prime = 7;
  u64 limit = 0;
  u64 mod = 0;
  std::string residues;
  std::string out;
};

void run_gen(const GenOpts& o) {
  const int picked = (o.powers_k > 0) + o.primes + o.prime_cubes + o.ap;
  if (picked != 1)
    throw xset::DomainError("gen: choose exactly one of --powers, --primes, --prime-cubes, --ap");
  if (o.limit == 0) throw xset::DomainError("gen: --limit is required");
  if (o.out.empty()) throw xset::DomainError("gen: --out is required");

  xset::BoundedSet s;
  if (o.powers_k > 0) {
    s = xset::kth_powers({o.powers_k, o.limit});
  } else if (o.primes) {
    s = xset::primes(o.limit);
  } else if (o.prime_cubes) {
    s = xset::prime_cubes(o.limit, o.min_prime);
  } else {
    if (o.mod == 0) throw xset::DomainError("gen --ap: --mod is required");
    s = xset::materialize(xset::APUnion(o.mod, parse_u64_list(o.residues)), o.limit);
  }
  xset::save_xset(s, o.out);
  std::cerr << "wrote " << o.out << " (" << s.cardinality() << " elements, universe "
            << s.universe_max() << ")\n";
}

void run_info(const std::string& path) {
  const xset::BoundedSet s = xset::load_xset(path);
  nlohmann::json j;
  j["path"] = path;
  j["universe_max"] = std::to_string(s.universe_max());
  j["cardinality"] = std::to_string(s.cardinality());
  j["contains_zero"] = s.contains(0);
  const auto elems = s.elements_in(xset::Slice(0, s.universe_max()), true);
  if (!elems.empty()) {
    j["min"] = std::to_string(elems.front());
    j["max"] = std::to_string(elems.back());
  }
  char fp[32];
  std::snprintf(fp, sizeof fp, "%016llx", static_cast<unsigned long long>(s.fingerprint()));
  j["fingerprint"] = fp;
  emit("", j.dump(2));
}

struct SumsetOpts {
  std::string a, b, out;
  u64 limit = 0;
  unsigned fold = 0;
};

void run_sumset(const SumsetOpts& o) {
  if (o.limit == 0) throw xset::DomainError("sumset: --limit is required");
  if (o.out.empty()) throw xset::DomainError("sumset: --out is required");
  const xset::BoundedSet a = load_required(o.a, "--A");
  xset::BoundedSet result;
  if (o.fold > 0) {
    if (!o.b.empty())
      throw xset::DomainError("sumset: --fold folds --A with itself; drop --B");
    result = xset::h_fold(a, o.fold, o.limit);
  } else {
    const xset::BoundedSet b = load_required(o.b, "--B");
    result = xset::sumset(a, b, o.limit);
  }
  xset::save_xset(result, o.out);
  std::cerr << "wrote " << o.out << " (" << result.cardinality() << " elements)\n";
}

struct UpsilonOpts {
  std::string a, b, z, out, profile_out, format = "json";
  u64 n = 0;
  unsigned s = 0;
};

void run_upsilon(const UpsilonOpts& o) {
  if (o.n == 0) throw xset::DomainError("upsilon: --N is required");
  if (!o.z.empty()) {
    // representation-weighted variant: pairs from the --Z slice against
    // s-fold signed cube sums with variables up to N^(1/3)
    if (o.s == 0) throw xset::DomainError("upsilon: --Z needs --s");
    const xset::BoundedSet zset = load_required(o.z, "--Z");
    const xset::u128 count = xset::mean_value_count(zset, o.s, o.n);
    nlohmann::json j;
    j["N"] = std::to_string(o.n);
    j["s"] = o.s;
    j["P"] = std::to_string(xset::integer_kth_root(o.n, 3));
    j["mean_value"] = xset::to_string(count);
    emit(o.out, j.dump(2));
    return;
  }
  const xset::BoundedSet c = load_required(o.a, "--A");
  const xset::BoundedSet d = load_required(o.b, "--B");
  const xset::UpsilonResult r = xset::upsilon(c, d, o.n);

  if (o.format == "json") {
    nlohmann::json j;
    j["N"] = std::to_string(o.n);
    j["upsilon"] = xset::to_string(r.upsilon);
    j["diagonal"] = xset::to_string(r.diagonal);
    j["upsilon_hat"] = xset::to_string(r.upsilon_hat);
    j["c_2N_3N"] = std::to_string(r.c_slice_count);
    j["d_0N"] = std::to_string(r.d_slice_count);
    j["profile_total"] = std::to_string(r.profile.total);
    j["profile_support"] = std::to_string(r.profile.support);
    emit(o.out, j.dump(2));
  } else if (o.format == "csv") {
    std::string text = "N,upsilon,diagonal,upsilon_hat,c_2N_3N,d_0N\n";
    text += std::to_string(o.n) + "," + xset::to_string(r.upsilon) + "," +
            xset::to_string(r.diagonal) + "," + xset::to_string(r.upsilon_hat) + "," +
            std::to_string(r.c_slice_count) + "," + std::to_string(r.d_slice_count) + "\n";
    emit(o.out, text);
  } else {
    throw xset::DomainError("upsilon: --format must be csv or json");
  }

  if (!o.profile_out.empty()) {
    std::string text = "m,rho\n";
    for (u64 m = o.n + 1; m <= 3 * o.n; ++m)
      text += std::to_string(m) + "," + std::to_string(r.profile.at(m)) + "\n";
    emit(o.profile_out, text);
  }
}

struct VerifyOpts {
  std::string statement;
  std::string a, b, out;
  u64 n = 0;
  u64 mod = 0;
  std::string l, m, ncal;
  unsigned s = 0;
  u64 limit = 0;
};

int run_verify(const VerifyOpts& o) {
  if (o.statement == "incl") {
    const auto a = load_required(o.a, "--A");
    const auto b = load_required(o.b, "--B");
    const xset::InclusionWitness w = xset::check_inclusion_basic(a, b, o.n);
    nlohmann::json j;
    j["name"] = "inclusion";
    j["holds"] = w.holds;
    j["pairs_checked"] = std::to_string(w.pairs_checked);
    if (!w.holds) {
      j["witness"] = {{"n", std::to_string(w.n)},
                      {"b", std::to_string(w.b)},
                      {"n_minus_b", std::to_string(w.diff)}};
    }
    emit(o.out, j.dump(2));
    return w.holds ? 0 : 1;
  }
  if (o.statement == "thm1.1") {
    const auto a = load_required(o.a, "--A");
    const auto b = load_required(o.b, "--B");
    const xset::InequalityReport r = xset::check_theorem_1_1(a, b, o.n);
    emit(o.out, r.to_json_string(2));
    return r.holds ? 0 : 1;
  }
  if (o.statement == "thm2.1" || o.statement == "transfer") {
    if (o.mod == 0) throw xset::DomainError("verify: --mod is required for this statement");
    const auto a = load_required(o.a, "--A");
    const auto b = load_required(o.b, "--B");
    const xset::APUnion l(o.mod, parse_u64_list(o.l));
    const xset::APUnion m(o.mod, parse_u64_list(o.m));
    const xset::APUnion ncal(o.mod, parse_u64_list(o.ncal));
    if (o.statement == "thm2.1") {
      const xset::InequalityReport r = xset::check_theorem_2_1(a, b, l, m, ncal, o.n);
      emit(o.out, r.to_json_string(2));
      return r.holds ? 0 : 1;
    }
    const xset::TransferBound t = xset::transfer_bound(a, b, l, m, ncal, o.n);
    nlohmann::json j = nlohmann::json::parse(t.theorem.to_json_string(2));
    j["transfer"] = {{"defined", t.defined},
                     {"implied_bound", t.defined ? xset::to_string(t.implied) : "undefined"},
                     {"direct_count", std::to_string(t.direct)}};
    emit(o.out, j.dump(2));
    return t.theorem.holds ? 0 : 1;
  }
  if (o.statement == "thm6.1") {
    const auto a = load_required(o.a, "--A");
    const auto b = load_required(o.b, "--B");
    const xset::DichotomyReport r = xset::check_dichotomy_6_1(a, b, o.n);
    nlohmann::json j;
    j["name"] = "thm6.1";
    j["any_holds"] = r.any_holds;
    j["first"] = nlohmann::json::parse(r.first.to_json_string(2));
    j["second"] = nlohmann::json::parse(r.second.to_json_string(2));
    emit(o.out, j.dump(2));
    return r.any_holds ? 0 : 1;
  }
  if (o.statement == "descent") {
    if (o.s == 0 || o.limit == 0)
      throw xset::DomainError("verify descent: --s and --limit are required");
    const xset::DescentCheck c = xset::biquadrate_descent_check(o.s, o.limit);
    nlohmann::json j;
    j["name"] = "biquadrate-descent";
    j["holds"] = c.holds;
    j["scanned"] = std::to_string(c.scanned);
    nlohmann::json bad = nlohmann::json::array();
    for (u64 v : c.counterexamples) bad.push_back(std::to_string(v));
    j["counterexamples"] = bad;
    emit(o.out, j.dump(2));
    return c.holds ? 0 : 1;
  }
  if (o.statement == "dyadic") {
    if (o.n == 0) throw xset::DomainError("verify dyadic: --N is required");
    const xset::DyadicSchedule sched = xset::dyadic_schedule(o.n);
    const bool covered = o.n <= 4 || sched.covers(4, o.n);
    nlohmann::json j;
    j["name"] = "dyadic-schedule";
    j["N"] = std::to_string(o.n);
    j["J"] = sched.j_final;
    nlohmann::json terms = nlohmann::json::array();
    for (u64 t : sched.terms) terms.push_back(std::to_string(t));
    j["terms"] = terms;
    nlohmann::json cov = nlohmann::json::array();
    for (const auto& [lo, hi] : sched.covering)
      cov.push_back({{"lo", std::to_string(lo)}, {"hi", std::to_string(hi)}});
    j["covering"] = cov;
    j["covers_4_to_N"] = covered;
    emit(o.out, j.dump(2));
    return covered ? 0 : 1;
  }
  throw xset::DomainError("verify: unknown statement '" + o.statement +
                          "' (expected incl, thm1.1, thm2.1, thm6.1, transfer, descent, dyadic)");
}

struct WaringOpts {
  unsigned k = 3;
  unsigned s = 1;
  std::string generator = "powers";
  std::string checkpoints;
  u64 limit = 0;
  std::string filter = "none";
  u64 min_prime = 7;
  std::string format = "csv";
  std::string out;
  bool timing = false;
};

xset::WaringConfig waring_config(const WaringOpts& o) {
  xset::WaringConfig cfg;
  cfg.k = o.k;
  cfg.s = o.s;
  cfg.min_prime_exclusive = o.min_prime;
  cfg.checkpoints = parse_u64_list(o.checkpoints);
  if (cfg.checkpoints.empty()) throw xset::DomainError("waring: --checkpoints is required");
  cfg.limit = o.limit;
  if (cfg.limit == 0)
    cfg.limit = *std::max_element(cfg.checkpoints.begin(), cfg.checkpoints.end());

  if (o.generator == "powers") {
    cfg.generator = xset::GeneratorKind::Powers;
  } else if (o.generator == "prime-cubes") {
    cfg.generator = xset::GeneratorKind::PrimeCubes;
  } else {
    throw xset::DomainError("waring: --generator must be powers or prime-cubes");
  }

  if (o.filter == "auto") {
    if (cfg.generator == xset::GeneratorKind::PrimeCubes) {
      if (cfg.s < 5)
        throw xset::DomainError("waring: the mod-126 class system starts at s = 5");
      cfg.class_filter = xset::waring_goldbach_classes().class_for(cfg.s);
    } else if (cfg.k == 4) {
      cfg.class_filter = xset::biquadrate_class(cfg.s);
    } else {
      throw xset::DomainError("waring: --filter auto needs prime-cubes or k = 4");
    }
  } else if (o.filter != "none") {
    throw xset::DomainError("waring: --filter must be none or auto");
  }
  return cfg;
}

void run_waring(const WaringOpts& o) {
  if (o.generator == "prime-cubes" && o.s < 5)
    std::cerr << "note: s < 5 lies outside the admissible-class discussion for "
                 "prime cubes; table reported as configured\n";
  const xset::ExceptionalTable table = xset::exceptional_table(waring_config(o));
  if (o.format == "csv") {
    std::string text = "N,count,window_lo,window_hi,elapsed_ms\n";
    for (const auto& row : table.rows) {
      char line[160];
      std::snprintf(line, sizeof line, "%llu,%llu,%llu,%llu,%.3f\n",
                    static_cast<unsigned long long>(row.n),
                    static_cast<unsigned long long>(row.count),
                    static_cast<unsigned long long>(row.window_lo),
                    static_cast<unsigned long long>(row.window_hi),
                    o.timing ? row.elapsed_ms : 0.0);
      text += line;
    }
    emit(o.out, text);
  } else if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows)
      rows.push_back({{"N", std::to_string(row.n)},
                      {"count", std::to_string(row.count)},
                      {"window_lo", std::to_string(row.window_lo)},
                      {"window_hi", std::to_string(row.window_hi)},
                      {"elapsed_ms", o.timing ? row.elapsed_ms : 0.0}});
    nlohmann::json j;
    j["k"] = o.k;
    j["s"] = o.s;
    j["generator"] = o.generator;
    j["filter"] = o.filter;
    j["rows"] = rows;
    emit(o.out, j.dump(2));
  } else {
    throw xset::DomainError("waring: --format must be csv or json");
  }
  if (o.timing) std::cerr << "build: " << table.build_ms << " ms\n";
}

struct FitOpts {
  std::string in;
  std::string exponent;   // "num/den"
  std::string out;
};

void run_fit(const FitOpts& o) {
  if (o.in.empty()) throw xset::DomainError("fit: --in is required");
  std::ifstream is(o.in);
  if (!is) throw xset::FormatError("cannot open: " + o.in);
  std::string line;
  std::vector<std::pair<u64, u64>> counts;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (first && line.rfind("N,", 0) == 0) { first = false; continue; }
    first = false;
    const auto fields = [&] {
      std::vector<std::string> f;
      std::stringstream ss(line);
      std::string item;
      while (std::getline(ss, item, ',')) f.push_back(item);
      return f;
    }();
    if (fields.size() < 2) throw xset::FormatError("fit: malformed CSV row: " + line);
    counts.emplace_back(std::stoull(fields[0]), std::stoull(fields[1]));
  }

  long num = 0, den = 1;
  if (!o.exponent.empty()) {
    const auto slash = o.exponent.find('/');
    num = std::stol(o.exponent.substr(0, slash));
    den = slash == std::string::npos ? 1 : std::stol(o.exponent.substr(slash + 1));
  }

  try {
    const xset::DensityFit fit = xset::fit_density_exponent(counts);
    nlohmann::json j;
    j["fitted_exponent"] = fit.fitted_exponent;
    j["intercept"] = fit.intercept;
    j["residual"] = fit.residual;
    j["checkpoints_used"] = fit.used;
    if (!o.exponent.empty()) {
      j["reference_exponent"] = o.exponent;
      j["reference_exponent_value"] = static_cast<double>(num) / static_cast<double>(den);
      j["annotation"] =
          "reference exponent is an asymptotic claim and is not verifiable at finite scale";
    }
    emit(o.out, j.dump(2));
  } catch (const xset::FitUndefinedError& e) {
    nlohmann::json j;
    j["error"] = e.what();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [n, c] : e.table)
      rows.push_back({{"N", std::to_string(n)}, {"count", std::to_string(c)}});
    j["checkpoints"] = rows;
    emit(o.out, j.dump(2));
    throw;
  }
}

struct ProbeOpts {
  std::string a, b, out;
  u64 n = 0;
};

void run_probe(const ProbeOpts& o) {
  if (o.n == 0) throw xset::DomainError("probe: --N is required");
  const auto a = load_required(o.a, "--A");
  const auto b = load_required(o.b, "--B");
  const xset::ConjectureProbe p = xset::probe_conjecture_6_2(a, b, o.n);
  emit(o.out, p.to_json_string(2));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xset: exact sumset, exceptional-set and correlation experiments"};
  app.require_subcommand(1);

  unsigned threads = 0;
  u64 seed = 0;
  app.add_option("--threads", threads, "worker threads (0 = hardware)")
      ->envname("XSET_THREADS");
  app.add_option("--seed", seed, "seed for randomized suites");

  GenOpts gen;
  auto* cmd_gen = app.add_subcommand("gen", "generate a set and save it as XSET1");
  cmd_gen->add_option("--powers", gen.powers_k, "k-th powers up to --limit");
  cmd_gen->add_flag("--primes", gen.primes, "primes up to --limit");
  cmd_gen->add_flag("--prime-cubes", gen.prime_cubes, "cubes of primes > --min-prime");
  cmd_gen->add_flag("--ap", gen.ap, "arithmetic-progression union (--mod, --residues)");
  cmd_gen->add_option("--min-prime", gen.min_prime, "exclusive lower prime bound");
  cmd_gen->add_option("--limit", gen.limit, "universe bound");
  cmd_gen->add_option("--mod", gen.mod, "modulus for --ap");
  cmd_gen->add_option("--residues", gen.residues, "comma list of residues for --ap");
  cmd_gen->add_option("--out", gen.out, "output path");

  std::string info_path;
  auto* cmd_info = app.add_subcommand("info", "describe an XSET1 file");
  cmd_info->add_option("path", info_path, "XSET1 file")->required();

  SumsetOpts sum;
  auto* cmd_sum = app.add_subcommand("sumset", "sumset or h-fold of saved sets");
  cmd_sum->add_option("--A", sum.a, "first operand (XSET1)");
  cmd_sum->add_option("--B", sum.b, "second operand (XSET1)");
  cmd_sum->add_option("--fold", sum.fold, "h-fold --A with itself");
  cmd_sum->add_option("--limit", sum.limit, "truncation bound");
  cmd_sum->add_option("--out", sum.out, "output path");

  UpsilonOpts ups;
  auto* cmd_ups = app.add_subcommand("upsilon", "correlation count over the standard windows");
  cmd_ups->add_option("--A", ups.a, "C set (XSET1), sliced to (2N, 3N]");
  cmd_ups->add_option("--B", ups.b, "D set (XSET1), sliced to (0, N]");
  cmd_ups->add_option("--Z", ups.z, "mean-value variant: Z set (XSET1), with --s");
  cmd_ups->add_option("--s", ups.s, "summand count for the --Z variant");
  cmd_ups->add_option("--N", ups.n, "scale parameter");
  cmd_ups->add_option("--format", ups.format, "csv or json");
  cmd_ups->add_option("--out", ups.out, "output path");
  cmd_ups->add_option("--profile-out", ups.profile_out, "difference profile CSV path");

  VerifyOpts ver;
  auto* cmd_ver = app.add_subcommand("verify", "check a proven statement on concrete sets");
  cmd_ver->add_option("statement", ver.statement,
                      "incl | thm1.1 | thm2.1 | thm6.1 | transfer | descent | dyadic")
      ->required();
  cmd_ver->add_option("--A", ver.a, "A set (XSET1)");
  cmd_ver->add_option("--B", ver.b, "B set (XSET1)");
  cmd_ver->add_option("--N", ver.n, "scale parameter");
  cmd_ver->add_option("--mod", ver.mod, "class modulus (thm2.1, transfer)");
  cmd_ver->add_option("--L", ver.l, "L residues, comma list");
  cmd_ver->add_option("--M", ver.m, "M residues, comma list");
  cmd_ver->add_option("--Ncal", ver.ncal, "target residues, comma list");
  cmd_ver->add_option("--s", ver.s, "summand count (descent)");
  cmd_ver->add_option("--limit", ver.limit, "scan bound (descent)");
  cmd_ver->add_option("--out", ver.out, "output path");

  WaringOpts war;
  auto* cmd_war = app.add_subcommand("waring", "exceptional-set table for s-fold k-th powers");
  cmd_war->add_option("--k", war.k, "power (3 or 4)");
  cmd_war->add_option("--s", war.s, "number of summands");
  cmd_war->add_option("--generator", war.generator, "powers | prime-cubes");
  cmd_war->add_option("--checkpoints", war.checkpoints, "comma list of N values");
  cmd_war->add_option("--limit", war.limit, "table bound (default: max checkpoint)");
  cmd_war->add_option("--filter", war.filter, "none | auto (class system)");
  cmd_war->add_option("--min-prime", war.min_prime, "exclusive lower prime bound");
  cmd_war->add_option("--format", war.format, "csv or json");
  cmd_war->add_option("--out", war.out, "output path");
  cmd_war->add_flag("--timing", war.timing, "emit real wall times (breaks rerun determinism)");

  FitOpts fit;
  auto* cmd_fit = app.add_subcommand("fit", "log-log exponent fit of a table CSV");
  cmd_fit->add_option("--in", fit.in, "CSV with N,count columns");
  cmd_fit->add_option("--exponent", fit.exponent, "reference exponent, e.g. 3/7");
  cmd_fit->add_option("--out", fit.out, "output path");

  ProbeOpts probe;
  auto* cmd_probe = app.add_subcommand("probe", "diagonal-dominance conjecture ratio");
  cmd_probe->add_option("--A", probe.a, "A set (XSET1)");
  cmd_probe->add_option("--B", probe.b, "B set (XSET1)");
  cmd_probe->add_option("--N", probe.n, "scale parameter");
  cmd_probe->add_option("--out", probe.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  xset::set_worker_count(threads);
  (void)seed;  // reserved for randomized experiment drivers

  try {
    if (cmd_gen->parsed()) run_gen(gen);
    else if (cmd_info->parsed()) run_info(info_path);
    else if (cmd_sum->parsed()) run_sumset(sum);
    else if (cmd_ups->parsed()) run_upsilon(ups);
    else if (cmd_ver->parsed()) return run_verify(ver);
    else if (cmd_war->parsed()) run_waring(war);
    else if (cmd_fit->parsed()) run_fit(fit);
    else if (cmd_probe->parsed()) run_probe(probe);
    return 0;
  } catch (const xset::TheoremViolation& e) {
    std::cerr << "defect alarm: " << e.what() << "\n";
    return 1;
  } catch (const xset::RangeError& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return 3;
  } catch (const xset::HypothesisError& e) {
    std::cerr << "hypothesis error: " << e.what() << "\n";
    return 2;
  } catch (const xset::FitUndefinedError& e) {
    std::cerr << "fit undefined: " << e.what() << "\n";
    return 2;
  } catch (const xset::FormatError& e) {
    std::cerr << "file error: " << e.what() << "\n";
    return 2;
  } catch (const xset::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
