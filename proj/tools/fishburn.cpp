// fishburn: counts, enumerations, verification batteries and asymptotic
// diagnostics for interval orders and Fishburn matrices.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <fishburn/fishburn.hpp>

namespace {

using namespace fishburn;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format;  // empty: the command's default
  std::string out;
};

std::string resolve_format(const Global& g, const std::string& fallback, std::initializer_list<const char*> allowed) {
  std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("format '" + f + "' is not available for this command");
}

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(g.out, std::ios::binary);
  if (!os) throw UsageError("cannot open " + g.out + " for writing");
  os << text;
}

// ---------------------------------------------------------------------------
// count

// (family, grading) -> sequence
const std::map<std::pair<std::string, std::string>, FamilyKind>& count_table() {
  static const std::map<std::pair<std::string, std::string>, FamilyKind> table{
      {{"interval-orders", "size"}, FamilyKind::zagier},
      {{"primitive-interval-orders", "size"}, FamilyKind::primitive_by_size},
      {{"primitive-interval-orders", "magnitude"}, FamilyKind::primitive_by_magnitude},
      {{"self-dual", "size"}, FamilyKind::selfdual_by_size},
      {{"self-dual", "reduced-size"}, FamilyKind::selfdual_reduced_general},
      {{"primitive-self-dual", "size"}, FamilyKind::selfdual_primitive_by_size},
      {{"primitive-self-dual", "magnitude"}, FamilyKind::selfdual_primitive_by_magnitude},
      {{"primitive-self-dual", "reduced-size"}, FamilyKind::selfdual_reduced_primitive},
      {{"row-fishburn", "size"}, FamilyKind::row_fishburn_general},
      {{"primitive-row-fishburn", "size"}, FamilyKind::row_fishburn_primitive},
  };
  return table;
}

struct CountArgs {
  std::string family;
  std::string by = "size";
  bool by_given = false;
  unsigned max = 0;
  std::string mean_of;
};

int cmd_count(const Global& g, const CountArgs& a) {
  if (a.max < 1) throw UsageError("--max must be at least 1");
  if (!a.mean_of.empty()) {
    std::vector<MomentRow> rows;
    try {
      rows = moment_table(a.family, a.mean_of, a.max);
    } catch (const error& e) {
      throw UsageError(e.what());
    }
    std::string fmt = resolve_format(g, "csv", {"csv", "json"});
    if (fmt == "json") {
      nlohmann::json items = nlohmann::json::array();
      for (const auto& r : rows)
        items.push_back(
            {{"n", r.n}, {"count", r.count.get_str()}, {"total", r.total.get_str()}, {"mean", r.mean.get_str()}});
      emit(g, nlohmann::json{{"family", a.family}, {"statistic", a.mean_of}, {"rows", items}}.dump(2) + "\n");
    } else {
      std::string out = "n,count,total,mean\n";
      for (const auto& r : rows)
        out += std::to_string(r.n) + "," + r.count.get_str() + "," + r.total.get_str() + "," + r.mean.get_str() + "\n";
      emit(g, out);
    }
    return 0;
  }

  std::optional<FamilyKind> kind;
  std::string grading = a.by;
  if (auto it = count_table().find({a.family, a.by}); it != count_table().end()) {
    kind = it->second;
  } else {
    bool known_family = false;
    for (const auto& [key, k] : count_table()) known_family |= key.first == a.family;
    if (known_family) throw UsageError("family " + a.family + " cannot be counted by " + a.by);
    // Sequence names, in their own grading.
    try {
      kind = parse_family(a.family);
    } catch (const error&) {
      throw UsageError("unknown family '" + a.family + "'");
    }
    if (is_bivariate(*kind)) throw UsageError("family " + a.family + " has two variables; use the series command");
    if (a.by_given) throw UsageError("--by does not apply to sequence name " + a.family);
    grading = "natural";
  }
  if (a.max > kLongSequenceMax) throw UsageError("--max above " + std::to_string(kLongSequenceMax));
  SequenceTable table = long_sequence(*kind, a.max);
  // Tables start at n = 1; the empty object is left out.
  if (table.offset == 0) {
    table.values.erase(table.values.begin());
    table.offset = 1;
  }
  std::string fmt = resolve_format(g, "csv", {"csv", "json"});
  if (fmt == "json") {
    nlohmann::json j = to_json(table);
    j["family"] = a.family;
    j["sequence"] = to_string(*kind);
    j["by"] = grading;
    emit(g, j.dump(2) + "\n");
  } else {
    emit(g, to_csv(table));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateArgs {
  std::string kind;
  std::vector<std::string> rest;  // [n] or [grading, n]
  std::optional<unsigned> max_cell_sum;
};

std::string flat_rows(const TriMatrix& m) {
  std::string out;
  for (unsigned i = 1; i <= m.dim(); ++i) {
    if (i > 1) out += ';';
    for (unsigned j = 1; j <= m.dim(); ++j) out += (j > 1 ? " " : "") + std::to_string(m(i, j));
  }
  return out;
}

unsigned parse_count(const std::string& s) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("expected a nonnegative integer, got '" + s + "'");
  return static_cast<unsigned>(std::stoul(s));
}

int cmd_enumerate(const Global& g, const EnumerateArgs& a) {
  std::string grading = "size";
  unsigned n = 0;
  if (a.rest.size() == 1) {
    n = parse_count(a.rest[0]);
  } else if (a.rest.size() == 2) {
    grading = a.rest[0];
    n = parse_count(a.rest[1]);
  } else {
    throw UsageError("usage: enumerate KIND [GRADING] N");
  }
  if (n < 1) throw UsageError("N must be at least 1");
  if (grading != "size" && grading != "dim" && grading != "reduced-size")
    throw UsageError("unknown grading '" + grading + "'");

  std::string fmt = resolve_format(g, "text", {"text", "json", "csv"});

  if (a.kind == "posets") {
    if (grading != "size") throw UsageError("posets are graded by size only");
    std::vector<Poset> posets;
    try {
      posets = enum_interval_order_posets(n);
    } catch (const error& e) {
      throw UsageError(e.what());
    }
    std::string out;
    if (fmt == "json") {
      nlohmann::json items = nlohmann::json::array();
      for (const auto& p : posets) items.push_back(to_json(p));
      out = nlohmann::json{{"kind", a.kind}, {"grading", grading}, {"n", n}, {"count", posets.size()}, {"items", items}}
                .dump(2) +
            "\n";
    } else if (fmt == "csv") {
      out = "index,n,relations\n";
      for (std::size_t i = 0; i < posets.size(); ++i) {
        out += std::to_string(i) + "," + std::to_string(posets[i].size()) + ",";
        bool first = true;
        for (auto [x, y] : posets[i].relations()) {
          out += (first ? "" : " ") + std::to_string(x) + "<" + std::to_string(y);
          first = false;
        }
        out += "\n";
      }
    } else {
      for (const auto& p : posets) {
        out += std::to_string(p.size()) + ":";
        for (auto [x, y] : p.relations()) out += " " + std::to_string(x) + "<" + std::to_string(y);
        out += "\n";
      }
    }
    emit(g, out);
    return 0;
  }

  bool primitive = a.kind.starts_with("primitive-");
  std::string base = primitive ? a.kind.substr(10) : a.kind;
  std::vector<TriMatrix> ms;
  try {
    if (base == "fishburn") {
      if (grading == "size")
        ms = enum_fishburn_by_size(n, primitive);
      else if (grading == "dim")
        // Without a cell-sum bound only the 0/1 matrices form a finite set.
        ms = enum_fishburn_dim(n, primitive || !a.max_cell_sum, a.max_cell_sum);
      else
        throw UsageError("fishburn matrices are graded by size or dim");
    } else if (base == "row-fishburn") {
      if (grading != "size") throw UsageError("row-fishburn matrices are graded by size only");
      ms = enum_row_fishburn_by_size(n, primitive);
    } else if (base == "self-dual") {
      SelfDualGrading sg = grading == "size"  ? SelfDualGrading::by_size
                           : grading == "dim" ? SelfDualGrading::by_dim
                                              : SelfDualGrading::by_reduced_size;
      bool prim = primitive || (sg == SelfDualGrading::by_dim && !a.max_cell_sum);
      ms = enum_selfdual(sg, n, prim, a.max_cell_sum);
    } else {
      throw UsageError("unknown kind '" + a.kind + "'");
    }
  } catch (const error& e) {
    throw UsageError(e.what());
  }

  std::string out;
  if (fmt == "json") {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& m : ms) {
      nlohmann::json j = to_json(m);
      j["stats"] = to_json(stats(m));
      items.push_back(j);
    }
    out = nlohmann::json{{"kind", a.kind}, {"grading", grading}, {"n", n}, {"count", ms.size()}, {"items", items}}
              .dump(2) +
          "\n";
  } else if (fmt == "csv") {
    out = "index,dim,size,rows\n";
    for (std::size_t i = 0; i < ms.size(); ++i)
      out += std::to_string(i) + "," + std::to_string(ms[i].dim()) + "," + std::to_string(ms[i].total()) + "," +
             flat_rows(ms[i]) + "\n";
  } else {
    for (std::size_t i = 0; i < ms.size(); ++i) out += (i ? "\n" : "") + to_text(ms[i]);
  }
  emit(g, out);
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string suite = "all";
  std::string fixture_dir;
  std::string report;
};

int cmd_verify(const Global& g, const VerifyArgs& a) {
  VerifyOptions opts;
  if (!a.fixture_dir.empty()) opts.fixture_dir = a.fixture_dir;
  bool known = a.suite == "all";
  for (const auto& s : suite_names()) known |= s == a.suite;
  if (!known) throw UsageError("unknown suite '" + a.suite + "'");

  Report rep = verify_suite(a.suite, opts);
  nlohmann::json j = to_json(rep);
  if (!a.report.empty()) {
    std::ofstream os(a.report, std::ios::binary);
    if (!os) throw UsageError("cannot open " + a.report + " for writing");
    os << j.dump(2) << "\n";
  }
  std::string fmt = resolve_format(g, "text", {"text", "json", "csv"});
  std::string out;
  if (fmt == "json") {
    out = j.dump(2) + "\n";
  } else if (fmt == "csv") {
    out = "id,expected,actual,pass\n";
    for (const auto& c : rep.cases) out += c.id + "," + c.expected + "," + c.actual + "," + (c.pass ? "1" : "0") + "\n";
  } else {
    for (const auto& c : rep.cases)
      if (!c.pass) out += "FAIL " + c.id + ": expected " + c.expected + ", got " + c.actual + "\n";
    out += rep.suite + ": " + std::to_string(rep.pass_count()) + " passed, " + std::to_string(rep.fail_count()) +
           " failed\n";
  }
  emit(g, out);
  return rep.ok() ? 0 : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// asymptotics

struct AsymptoticsArgs {
  std::string target;
  unsigned max = kDefaultAsymptoticN;
  std::string mode;  // ratio | growth
};

int cmd_asymptotics(const Global& g, const AsymptoticsArgs& a) {
  Target target;
  try {
    target = parse_target(a.target);
  } catch (const error& e) {
    throw UsageError(e.what());
  }
  if (a.max < 5 || a.max > kLongSequenceMax)
    throw UsageError("--max must lie in 5.." + std::to_string(kLongSequenceMax));
  std::string mode = a.mode.empty() ? (target == Target::fact_gn ? "growth" : "ratio") : a.mode;
  if (mode == "ratio" && target == Target::fact_gn) throw UsageError("fact_gn has only the growth mode");

  Diagnostics d = mode == "ratio" ? ratio_diagnostics(target, a.max) : normalized_growth(target, a.max);
  std::string fmt = resolve_format(g, "csv", {"csv", "json"});
  if (fmt == "csv") {
    emit(g, diagnostics_csv(d));
    return 0;
  }
  nlohmann::json j = diagnostics_summary(d);
  j["mode"] = mode;
  j["constants"] = constants_json();
  if (target == Target::fact_gn) {
    AlphaReading r = alpha_reading(d);
    j["alpha"] = {{"empirical", decimal(r.empirical, 30)},
                  {"reading_a", decimal(r.reading_a, 30)},
                  {"reading_b", decimal(r.reading_b, 30)},
                  {"rel_distance_a", decimal(r.distance_a, 6)},
                  {"rel_distance_b", decimal(r.distance_b, 6)},
                  {"supported", r.supported}};
  }
  if (target == Target::fact_ratio_primitive) {
    // p_n a second way: binomial transform of g_n.
    unsigned n = std::min(a.max, 200u);
    auto via_g = binomial_transform(long_sequence(FamilyKind::zagier, n));
    auto p = long_sequence(FamilyKind::primitive_by_size, n);
    bool agree = true;
    for (unsigned k = 1; k <= n; ++k) agree &= via_g[k - 1] == p.at(k);
    j["binomial_transform"] = {{"n_max", n}, {"agrees", agree}};
  }
  emit(g, j.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// series

struct SeriesSpec {
  const char* default_profile;
  std::function<MultiSeries(const TruncationProfile&)> build;
};

const std::map<std::string, SeriesSpec>& series_table() {
  static const std::map<std::string, SeriesSpec> table{
      {"pp", {"t=6,v=6,w=6,x=6,y=6", [](const TruncationProfile& p) { return pp_closed(p); }}},
      {"gp", {"t=6,v=6,w=6,x=6,y=6", [](const TruncationProfile& p) { return gp_closed(p); }}},
      {"sp", {"t=7,v=6,w=6,z=6", [](const TruncationProfile& p) { return sp_closed(p); }}},
      {"spp", {"t=7,v=6,w=6,x=6,z=6", [](const TruncationProfile& p) { return spp_closed(p); }}},
      {"sgp", {"t=7,v=6,w=6,x=6,z=6", [](const TruncationProfile& p) { return sgp_closed(p); }}},
      {"row-fishburn", {"v=6,w=6,x=6,y=6", [](const TruncationProfile& p) { return row_fishburn_series(p); }}},
      {"selfdual-rs",
       {"v=6,w=6,x=6,z=6", [](const TruncationProfile& p) { return selfdual_rs_series(DiagonalKind::all, p); }}},
      {"selfdual-rs-diag-zero",
       {"v=6,w=6,x=6,z=6",
        [](const TruncationProfile& p) { return selfdual_rs_series(DiagonalKind::diag_zero, p); }}},
      {"selfdual-rs-diag-nonzero",
       {"v=6,w=6,x=6,z=6",
        [](const TruncationProfile& p) { return selfdual_rs_series(DiagonalKind::diag_nonzero, p); }}},
      {"kitaev_remmel", {"r+s=10", [](const TruncationProfile& p) { return kitaev_remmel_series(p); }}},
      {"conjecture_form", {"r+s=10", [](const TruncationProfile& p) { return conjecture_form_series(p); }}},
      {"gen_min2", {"r+s=10", [](const TruncationProfile& p) { return gen_min2_series(p); }}},
      {"general_full", {"r+s=10", [](const TruncationProfile& p) { return gen_min_series(p); }}},
  };
  return table;
}

struct SeriesArgs {
  std::string name;
  std::string profile;
};

int cmd_series(const Global& g, const SeriesArgs& a) {
  auto it = series_table().find(a.name);
  if (it == series_table().end()) throw UsageError("unknown series '" + a.name + "'");
  TruncationProfile profile;
  try {
    profile = TruncationProfile::parse(a.profile.empty() ? it->second.default_profile : a.profile);
  } catch (const error& e) {
    throw UsageError(e.what());
  }
  MultiSeries f(profile);
  try {
    f = it->second.build(profile);
  } catch (const error& e) {
    throw UsageError(e.what());
  }
  std::string fmt = resolve_format(g, "json", {"json", "csv"});
  if (fmt == "json") {
    emit(g, nlohmann::json{{"series", a.name}, {"profile", profile.str()}, {"terms", to_json(f)}}.dump(2) + "\n");
  } else {
    std::string out = "monomial,coeff\n";
    for (const auto& [m, c] : f.terms()) out += m.str() + "," + c.get_str() + "\n";
    emit(g, out);
  }
  return 0;
}

std::string join_keys(const auto& table) {
  std::string out;
  for (const auto& [k, v] : table) out += (out.empty() ? "" : ", ") + std::string(k);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of interval orders and Fishburn matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  Global global;
  app.add_option("--format", global.format, "Output format: json, csv or text (default depends on the command)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", global.out, "Write output to FILE instead of stdout");

  CountArgs count;
  auto* c = app.add_subcommand("count", "Sequence of counts for a family");
  std::string families;
  {
    std::set<std::string> names;
    for (const auto& [key, kind] : count_table()) names.insert(key.first);
    for (const auto& n : names) families += (families.empty() ? "" : ", ") + n;
  }
  c->add_option("--family", count.family, "Family: " + families + ", or a sequence name")->required();
  auto* by = c->add_option("--by", count.by, "Grading: size, magnitude or reduced-size");
  c->add_option("--max", count.max, "Largest index")->required();
  c->add_option("--mean-of", count.mean_of,
                "Average a statistic instead: interval-orders (minimal, maximal, magnitude), "
                "primitive-fishburn (entry-sum, minimal)");

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "List matrices or posets by brute force");
  e->add_option("kind", en.kind,
                "fishburn, primitive-fishburn, row-fishburn, primitive-row-fishburn, self-dual, "
                "primitive-self-dual or posets")
      ->required();
  e->add_option("args", en.rest, "[GRADING] N; grading is size (default), dim or reduced-size")->required();
  e->add_option("--max-cell-sum", en.max_cell_sum,
                "Cell-sum bound for dim grading; without it dim grading lists 0/1 matrices");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  std::string suites = "all";
  for (const auto& s : suite_names()) suites += ", " + s;
  v->add_option("suite", ver.suite, "Suite: " + suites);
  v->add_option("--fixture-dir", ver.fixture_dir, "Directory holding the sequence fixtures");
  v->add_option("--report", ver.report, "Write the JSON report to FILE");

  AsymptoticsArgs as;
  auto* a = app.add_subcommand("asymptotics", "Limit diagnostics for long sequences");
  a->add_option("target", as.target,
                "fact_gn, fact_ratio_primitive, conjecture_reduced or conjecture_symsize")
      ->required();
  a->add_option("--max", as.max, "Largest n (at most 500)");
  a->add_option("--mode", as.mode, "ratio or growth")->check(CLI::IsMember({"ratio", "growth"}));

  SeriesArgs se;
  auto* s = app.add_subcommand("series", "Dump a truncated generating function");
  s->add_option("name", se.name, "One of: " + join_keys(series_table()))->required();
  s->add_option("--profile", se.profile, "Truncation caps such as t=8,x=12 or r+s=10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    count.by_given = by->count() > 0;
    if (*c) return cmd_count(global, count);
    if (*e) return cmd_enumerate(global, en);
    if (*v) return cmd_verify(global, ver);
    if (*a) return cmd_asymptotics(global, as);
    if (*s) return cmd_series(global, se);
  } catch (const UsageError& err) {
    std::cerr << "fishburn: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "fishburn: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
