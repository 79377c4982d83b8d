// setpart: enumerate avoidance classes, compute statistics and generating
// functions, verify formulas against brute force, and cross-check integer
// sequences with OEIS.
//
// Exit codes: 0 success, 1 unexpected verification failure or internal
// error, 2 usage error, 3 OEIS access error.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "setpart/bijections.hpp"
#include "setpart/genfun.hpp"
#include "setpart/oeis.hpp"
#include "setpart/partition.hpp"
#include "setpart/patterns.hpp"
#include "setpart/serialize.hpp"
#include "setpart/stats.hpp"

namespace {

using nlohmann::json;
using namespace setpart;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitService = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "text";
  unsigned jobs = 0;
  bool json() const { return format == "json"; }
  ParallelOptions parallel() const { return {jobs}; }
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

/// "5" or "0..8".
std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  std::pair<int, int> r;
  if (dots == std::string::npos) {
    r.first = r.second = parse_int(text, "n");
  } else {
    r.first = parse_int(std::string_view(text).substr(0, dots), "range start");
    r.second = parse_int(std::string_view(text).substr(dots + 2), "range end");
  }
  if (r.first < 0 || r.second < r.first) throw UsageError("range must satisfy 0 <= lo <= hi: '" + text + "'");
  return r;
}

/// "q=2,t=1" -> values for the named variables; unnamed ones stay 1.
void parse_point(const std::string& text, SequenceSpec& spec) {
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("expected var=value in '" + text + "'");
    const Var v = parse_var(item.substr(0, eq));
    const MultiPoly::Coeff value = parse_int(item.substr(eq + 1), "value");
    (v == Var::q ? spec.q : v == Var::t ? spec.t : spec.x) = value;
  }
}

std::string join(const std::vector<MultiPoly::Coeff>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateArgs {
  std::string patterns;
  int n = 0;
  bool with_perm = false;
};

int cmd_enumerate(const Global& g, const EnumerateArgs& a) {
  if (a.n < 0) throw UsageError("n must be non-negative");
  const PatternSet ps = PatternSet::parse(a.patterns);
  json rows = json::array();
  if (!g.json()) {
    std::cout << "partition\trgf\tblock\tspread\tdim";
    if (a.with_perm) std::cout << "\tballot\tperm";
    std::cout << '\n';
  }
  for_each_avoider(a.n, ps, [&](const Rgf& w) {
    const std::string part = format_partition(from_rgf(w));
    std::string ballot = "-";
    std::string perm = "-";
    if (a.with_perm && is_noncrossing(w)) {
      const BallotPair b = to_ballot(w);
      ballot = b.to_string();
      perm = format_permutation(ballot_to_perm(b));
    }
    if (g.json()) {
      json row{{"partition", part}, {"rgf", format_rgf(w)}, {"block", block(w)}, {"spread", spread(w)}, {"dim", dim(w)}};
      if (a.with_perm) {
        row["ballot"] = ballot;
        row["perm"] = perm;
      }
      rows.push_back(std::move(row));
    } else {
      std::cout << (part.empty() ? "-" : part) << '\t' << (w.empty() ? "-" : format_rgf(w)) << '\t' << block(w)
                << '\t' << spread(w) << '\t' << dim(w);
      if (a.with_perm) std::cout << '\t' << ballot << '\t' << perm;
      std::cout << '\n';
    }
  });
  if (g.json()) print_json(rows);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// stats

struct StatsArgs {
  std::string partition;
  std::string rgf;
  std::string perm;
};

json index_json(const IndexSet& s) { return json(s); }

int cmd_stats(const Global& g, const StatsArgs& a) {
  const int given = !a.partition.empty() + !a.rgf.empty() + !a.perm.empty();
  if (given != 1) throw UsageError("give exactly one of --partition, --rgf, --perm");
  json out;
  if (!a.perm.empty()) {
    const Permutation p = parse_permutation(a.perm);
    out = to_json(perm_stats(p));
    out["perm"] = format_permutation(p);
    out["lrm_indices"] = index_json(lrm_indices(p));
    out["fixed_points"] = index_json(fixed_points(p));
    out["descents"] = index_json(descents(p));
    out["avoids_321"] = avoids_321(p);
  } else {
    const Rgf w = a.rgf.empty() ? to_rgf(parse_partition(a.partition)) : parse_rgf(a.rgf);
    out = to_json(partition_stats(w));
    out["partition"] = format_partition(from_rgf(w));
    out["rgf"] = format_rgf(w);
    const FirstsLasts fl = firsts_lasts(w);
    out["firsts"] = index_json(fl.firsts);
    out["lasts"] = index_json(fl.lasts);
    out["checkpoints"] = index_json(checkpoints(w));
    out["apices"] = index_json(apices(w));
    out["noncrossing"] = is_noncrossing(w);
  }
  if (g.json()) {
    print_json(out);
  } else {
    for (const auto& [k, v] : out.items()) std::cout << k << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// genfun

struct GenfunArgs {
  std::string id;
  std::string patterns;
  bool patterns_given = false;
  std::string stats = "spread,block";
  std::string domain = "partitions";
  int n = 0;
  bool oracle = false;
};

int cmd_genfun(const Global& g, const GenfunArgs& a) {
  if (a.n < 0) throw UsageError("n must be non-negative");
  if (a.id.empty() == !a.patterns_given && a.domain == "partitions") {
    throw UsageError("give either --id or --patterns");
  }
  MultiPoly p;
  json out{{"n", a.n}};
  if (!a.id.empty()) {
    const FormulaId id = parse_formula_id(a.id);
    out["id"] = std::string(formula_info(id).name);
    if (a.oracle) {
      p = oracle(id, a.n, g.parallel());
      out["source"] = "oracle";
    } else {
      FormulaValue v = formula(id, a.n, g.parallel());
      p = std::move(v.poly);
      out["source"] = "formula";
      out["mode"] = std::string(to_string(v.mode));
    }
  } else if (a.domain == "av321") {
    p = av321_genfun(a.n, StatTuple::parse(a.stats));
    out["domain"] = "av321";
    out["stats"] = a.stats;
  } else {
    p = partition_genfun(a.n, PatternSet::parse(a.patterns), StatTuple::parse(a.stats), g.parallel());
    out["patterns"] = a.patterns;
    out["stats"] = a.stats;
  }
  if (g.json()) {
    out["poly"] = to_json(p);
    out["text"] = p.to_string();
    print_json(out);
  } else {
    std::cout << p.to_string() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string id;
  bool all = false;
  int n_max = 8;
  int max_spread_n = 0;
};

int cmd_verify(const Global& g, const VerifyArgs& a) {
  if (a.n_max < 0) throw UsageError("--n-max must be non-negative");
  if (a.all == !a.id.empty() && a.max_spread_n == 0) throw UsageError("give either --id or --all");
  std::vector<FormulaId> ids;
  if (a.all) {
    for (const auto& info : formula_catalog()) ids.push_back(info.id);
  } else if (!a.id.empty()) {
    ids.push_back(parse_formula_id(a.id));
  }

  bool ok = true;
  json reports = json::array();
  for (FormulaId id : ids) {
    const VerifyReport r = verify(id, a.n_max, g.parallel());
    ok = ok && r.acceptable();
    if (g.json()) {
      reports.push_back(to_json(r));
      continue;
    }
    std::cout << r.name << ": ";
    if (r.all_equal()) {
      std::cout << "pass n=0.." << a.n_max;
    } else {
      const int n = *r.first_failure();
      std::cout << "FAIL at n=" << n << ", formula - oracle = " << r.records[n].difference.to_string();
    }
    if (!r.expected_pass) std::cout << " (expected failure, not gating)";
    std::cout << '\n';
  }

  json spreads = json::array();
  for (int n = 1; n <= a.max_spread_n; ++n) {
    const MaxSpreadReport m = max_spread_report(n);
    ok = ok && m.max_matches;
    if (g.json()) {
      spreads.push_back(to_json(m));
      continue;
    }
    std::cout << "max spread n=" << n << ": " << m.max_spread << " (expected " << m.expected_max << ")"
              << " prefix_form=" << m.prefix_form << " family_exact=" << m.family_exact;
    if (m.odd_family_exact) std::cout << " odd_family_exact=" << *m.odd_family_exact;
    std::cout << '\n';
  }

  if (g.json()) {
    json out{{"ok", ok}, {"n_max", a.n_max}, {"reports", reports}};
    if (a.max_spread_n > 0) out["max_spread"] = spreads;
    print_json(out);
  }
  return ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// sequence / oeis-check

struct SequenceArgs {
  bool count = false;
  bool evaluate = false;
  std::string triangle;
  std::string formula;
  std::string patterns;
  std::string stats = "spread,block";
  std::string at;
  std::string order = "asc";
  std::string range = "0..8";
};

struct SequenceResult {
  std::pair<int, int> range;
  std::vector<MultiPoly::Coeff> terms;
};

SequenceResult compute_sequence(const Global& g, const SequenceArgs& a) {
  SequenceSpec spec;
  const int kinds = a.count + a.evaluate + !a.triangle.empty();
  if (kinds != 1) throw UsageError("give exactly one of --count, --evaluate, --triangle");
  spec.kind = a.count ? SequenceSpec::Kind::kCount
              : a.evaluate ? SequenceSpec::Kind::kEvaluate
                           : SequenceSpec::Kind::kTriangle;
  if (!a.triangle.empty()) spec.triangle_var = parse_var(a.triangle);
  if (a.order == "asc") {
    spec.order = SequenceSpec::Order::kAscending;
  } else if (a.order == "desc") {
    spec.order = SequenceSpec::Order::kDescending;
  } else if (a.order == "full") {
    spec.order = SequenceSpec::Order::kFull;
  } else {
    throw UsageError("--order must be asc, desc or full");
  }
  if (!a.formula.empty()) spec.formula = parse_formula_id(a.formula);
  spec.patterns = PatternSet::parse(a.patterns);
  spec.stats = StatTuple::parse(a.stats);
  parse_point(a.at, spec);
  SequenceResult r;
  r.range = parse_range(a.range);
  r.terms = sequence(spec, r.range.first, r.range.second, g.parallel());
  return r;
}

int cmd_sequence(const Global& g, const SequenceArgs& a) {
  const SequenceResult r = compute_sequence(g, a);
  if (g.json()) {
    print_json({{"first_index", r.range.first}, {"terms", r.terms}});
  } else {
    std::cout << join(r.terms) << '\n';
  }
  return kExitOk;
}

struct OeisArgs {
  std::string id;
  int window = 3;
  std::string cache_dir;
  std::string base_url;
  int timeout = 10;
  bool offline = false;
};

int cmd_oeis_check(const Global& g, const SequenceArgs& sa, const OeisArgs& oa) {
  const SequenceResult r = compute_sequence(g, sa);
  OeisClientOptions opts = default_client_options();
  if (!oa.cache_dir.empty()) opts.cache_dir = oa.cache_dir;
  if (!oa.base_url.empty()) opts.base_url = oa.base_url;
  opts.timeout = std::chrono::seconds(oa.timeout);
  opts.allow_network = !oa.offline;
  const OeisClient client(opts);
  // Triangles are flattened, so their alignment is by position.
  const std::int64_t first = sa.triangle.empty() ? r.range.first : 0;
  const CrosscheckReport rep = crosscheck(r.terms, first, oa.id, client, oa.window);
  if (g.json()) {
    json out = to_json(rep);
    out["computed"] = r.terms;
    print_json(out);
  } else if (rep.matched) {
    std::cout << rep.id << ": matched at offset " << rep.offset << " (" << rep.compared_terms << " terms compared)\n";
  } else {
    std::cout << rep.id << ": no match within offset window " << oa.window << '\n';
  }
  return kExitOk;
}

void add_sequence_options(CLI::App* cmd, SequenceArgs& a) {
  cmd->add_flag("--count", a.count, "Class sizes (polynomial at q=t=x=1)");
  cmd->add_flag("--evaluate", a.evaluate, "Polynomial values at the --at point");
  cmd->add_option("--triangle", a.triangle, "Coefficient rows in this variable (q, t or x)");
  cmd->add_option("--formula", a.formula, "Formula id as the source");
  cmd->add_option("--patterns", a.patterns, "Pattern set for a brute-force source, e.g. '123;13/24'");
  cmd->add_option("--stats", a.stats, "Statistics bound to q,t,x")->capture_default_str();
  cmd->add_option("--at", a.at, "Variable values, e.g. 'q=1,t=2'; unnamed variables are 1");
  cmd->add_option("--order", a.order, "Triangle row order: asc, desc or full")->capture_default_str();
  cmd->add_option("--n", a.range, "Index or range lo..hi")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern-avoiding set partitions: statistics, generating functions and checks", "setpart"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("-j,--jobs", g.jobs, "Worker threads for brute-force sums (0 = all cores)")->capture_default_str();

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "List the partitions of [n] avoiding a pattern set");
  enumerate->add_option("--patterns", ea.patterns, "Pattern set, e.g. '13/24' or '1/2/3;1/23'");
  enumerate->add_option("-n", ea.n, "Size")->required();
  enumerate->add_flag("--with-perm", ea.with_perm, "Add ballot pair and 321-avoiding permutation columns");

  StatsArgs sa;
  auto* stats = app.add_subcommand("stats", "Statistics of one partition or permutation");
  stats->add_option("--partition", sa.partition, "Partition, e.g. 14/25/378/6");
  stats->add_option("--rgf", sa.rgf, "Restricted growth word, e.g. 12312433");
  stats->add_option("--perm", sa.perm, "Permutation in one-line notation, e.g. 231");

  GenfunArgs ga;
  auto* genfun = app.add_subcommand("genfun", "Generating function from a formula or by brute force");
  genfun->add_option("--id", ga.id, "Formula id, e.g. SB_13/2, I, M");
  genfun->add_option("--patterns", ga.patterns, "Pattern set for a brute-force sum over partitions");
  genfun->add_option("--stats", ga.stats, "Statistics bound to q,t,x")->capture_default_str();
  genfun->add_option("--domain", ga.domain, "Brute-force domain")
      ->check(CLI::IsMember({"partitions", "av321"}))
      ->capture_default_str();
  genfun->add_option("-n", ga.n, "Size")->required();
  genfun->add_flag("--oracle", ga.oracle, "With --id: print the brute-force oracle instead");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Compare formulas with brute force");
  verify_cmd->add_option("--id", va.id, "Formula id");
  verify_cmd->add_flag("--all", va.all, "Every formula in the catalog");
  verify_cmd->add_option("--n-max", va.n_max, "Largest n checked")->capture_default_str();
  verify_cmd->add_option("--max-spread", va.max_spread_n, "Also report spread maximizers for n=1..N");

  SequenceArgs qa;
  auto* seq = app.add_subcommand("sequence", "Emit an integer sequence");
  add_sequence_options(seq, qa);

  SequenceArgs oqa;
  OeisArgs oa;
  auto* oeis = app.add_subcommand("oeis-check", "Compare a computed sequence with an OEIS entry");
  add_sequence_options(oeis, oqa);
  oeis->add_option("--id", oa.id, "OEIS id, e.g. A000108")->required();
  oeis->add_option("--window", oa.window, "Largest index shift tried")->capture_default_str();
  oeis->add_option("--cache-dir", oa.cache_dir, "b-file cache (default: $SETPART_OEIS_CACHE or ~/.cache/setpart/oeis)");
  oeis->add_option("--base-url", oa.base_url, "OEIS server")->capture_default_str();
  oeis->add_option("--timeout", oa.timeout, "Network timeout in seconds")->capture_default_str();
  oeis->add_flag("--offline", oa.offline, "Never touch the network");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  ga.patterns_given = genfun->count("--patterns") > 0;

  try {
    if (*enumerate) return cmd_enumerate(g, ea);
    if (*stats) return cmd_stats(g, sa);
    if (*genfun) return cmd_genfun(g, ga);
    if (*verify_cmd) return cmd_verify(g, va);
    if (*seq) return cmd_sequence(g, qa);
    if (*oeis) return cmd_oeis_check(g, oqa, oa);
  } catch (const OeisError& e) {
    std::cerr << "setpart: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == OeisErrorKind::kMalformedId ? kExitUsage : kExitService;
  } catch (const UsageError& e) {
    std::cerr << "setpart: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "setpart: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "setpart: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
