#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "arbormid/canonical.hpp"
#include "arbormid/edge_list.hpp"
#include "arbormid/error.hpp"
#include "arbormid/extremal.hpp"
#include "arbormid/middles.hpp"
#include "arbormid/path_star.hpp"
#include "arbormid/perturb.hpp"
#include "arbormid/subtree_count.hpp"
#include "arbormid/verify.hpp"

namespace arbormid::cli {

namespace {

using json = nlohmann::ordered_json;

struct GlobalOptions {
  bool json = false;
  unsigned jobs = 0;
  std::uint64_t seed = 1;
  std::string out_path;
};

unsigned resolve_jobs(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("ARBORMID_JOBS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

json ids(const MiddleSet& m) { return json(m.vertices); }
std::string bool_text(bool b) { return b ? "true" : "false"; }

// Property violations found by a subcommand (exit code 2).
class Findings {
 public:
  void flag() { violated_ = true; }
  int exit_code() const { return violated_ ? kExitViolation : kExitOk; }

 private:
  bool violated_ = false;
};

// ---- analyze ---------------------------------------------------------------

struct AnalyzeOptions {
  std::string in;
  bool counts = false;
};

int analyze(const AnalyzeOptions& opt, const GlobalOptions& g, std::ostream& out) {
  Tree t = read_edge_list_file(opt.in);
  CountTable table = count_all_vertices(t);
  Middles m{center(t), centroid(t), subtree_core(table)};
  MiddleDistances d = middle_distances(t, m);
  const bool between = centroid_between(t, m);

  if (g.json) {
    json doc;
    doc["n"] = t.order();
    doc["center"] = ids(m.center);
    doc["centroid"] = ids(m.centroid);
    doc["subtree_core"] = ids(m.core);
    doc["d_center_centroid"] = d.center_centroid;
    doc["d_center_core"] = d.center_core;
    doc["d_centroid_core"] = d.centroid_core;
    doc["centroid_between"] = between;
    if (opt.counts) {
      json rows = json::array();
      for (Vertex v = 1; v <= t.order(); ++v) rows.push_back({{"v", v}, {"count", table.at(v).str()}});
      doc["counts"] = rows;
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "n\t" << t.order() << '\n'
      << "center\t" << join_ids(m.center.vertices) << '\n'
      << "centroid\t" << join_ids(m.centroid.vertices) << '\n'
      << "subtree_core\t" << join_ids(m.core.vertices) << '\n'
      << "d_center_centroid\t" << d.center_centroid << '\n'
      << "d_center_core\t" << d.center_core << '\n'
      << "d_centroid_core\t" << d.centroid_core << '\n'
      << "centroid_between\t" << bool_text(between) << '\n';
  if (opt.counts) {
    out << "vertex\tcount\n";
    write_count_table(out, table);
  }
  return kExitOk;
}

// ---- pathstar --------------------------------------------------------------

struct PathStarOptions {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> g;
  std::optional<std::uint64_t> n_max;
  bool closed_only = false;
};

int pathstar(const PathStarOptions& opt, const GlobalOptions& g, std::ostream& out) {
  const std::uint64_t last = opt.n_max.value_or(opt.n);
  if (last < opt.n) throw Error(ErrorKind::InvalidParams, "--n-max below --n");
  std::vector<PathStarParams> grid;
  for (std::uint64_t n = opt.n; n <= last; ++n) {
    if (opt.g) {
      grid.push_back({n, *opt.g});
    } else {
      for (std::uint64_t k = 2; k + 3 <= n; ++k) grid.push_back({n, k});
    }
  }
  for (const auto& p : grid) {
    if (!in_gamma(p)) {
      throw Error(ErrorKind::InvalidParams,
                  "(n=" + std::to_string(p.n) + ", g=" + std::to_string(p.g) + ") outside n >= 5, 2 <= g <= n-3");
    }
  }

  Findings findings;
  json rows = json::array();
  if (!g.json) out << "n\tg\tcenter\tcentroid\tsubtree_core\td_c_sc\td_cd_sc\td_c_cd\tclosed_eq_direct\n";
  for (const auto& p : grid) {
    PathStarRow row = compare_path_star(p, !opt.closed_only);
    if (row.has_direct && !row.closed_equals_direct) findings.flag();
    const std::string agreement = row.has_direct ? bool_text(row.closed_equals_direct) : "na";
    if (g.json) {
      json r;
      r["n"] = p.n;
      r["g"] = p.g;
      r["center"] = ids(row.closed.center);
      r["centroid"] = ids(row.closed.centroid);
      r["subtree_core"] = ids(row.closed.core);
      r["d_c_sc"] = row.closed_distances.center_core;
      r["d_cd_sc"] = row.closed_distances.centroid_core;
      r["d_c_cd"] = row.closed_distances.center_centroid;
      r["closed_eq_direct"] = row.has_direct ? json(row.closed_equals_direct) : json(nullptr);
      rows.push_back(r);
    } else {
      out << p.n << '\t' << p.g << '\t' << join_ids(row.closed.center.vertices) << '\t'
          << join_ids(row.closed.centroid.vertices) << '\t' << join_ids(row.closed.core.vertices) << '\t'
          << row.closed_distances.center_core << '\t' << row.closed_distances.centroid_core << '\t'
          << row.closed_distances.center_centroid << '\t' << agreement << '\n';
    }
  }
  if (g.json) out << rows.dump(2) << '\n';
  return findings.exit_code();
}

// ---- sweep -----------------------------------------------------------------

struct SweepOptions {
  std::size_t n_min = 5;
  std::size_t n_max = 12;
  std::string metric = "c-sc";
};

int sweep(const SweepOptions& opt, const GlobalOptions& g, std::ostream& out) {
  const Metric metric = parse_metric(opt.metric);
  if (opt.n_max < opt.n_min) throw Error(ErrorKind::InvalidParams, "--n-max below --n-min");
  const unsigned jobs = resolve_jobs(g.jobs);
  Findings findings;
  json rows = json::array();
  if (!g.json) out << "n\ttree_count\tmax_value\tpaper_bound\tbound_ok\tmaximizer_count\tpathstar_attains\n";
  for (std::size_t n = opt.n_min; n <= opt.n_max; ++n) {
    ExtremalRecord rec = survey(n, metric, jobs);
    if (!rec.bound_ok) findings.flag();
    if (g.json) {
      json r;
      r["n"] = n;
      r["metric"] = std::string(to_string(metric));
      r["tree_count"] = rec.tree_count;
      r["max_value"] = rec.max_value;
      r["paper_bound"] = rec.bound;
      r["bound_ok"] = rec.bound_ok;
      r["maximizer_count"] = rec.maximizers.size();
      r["pathstar_attains"] = rec.pathstar_attains;
      json codes = json::array();
      for (const auto& c : rec.maximizers) codes.push_back(c.code);
      r["maximizers"] = codes;
      rows.push_back(r);
    } else {
      out << n << '\t' << rec.tree_count << '\t' << rec.max_value << '\t' << rec.bound << '\t'
          << bool_text(rec.bound_ok) << '\t' << rec.maximizers.size() << '\t' << bool_text(rec.pathstar_attains)
          << '\n';
    }
  }
  if (g.json) out << rows.dump(2) << '\n';
  return findings.exit_code();
}

// ---- verify ----------------------------------------------------------------

struct VerifyCliOptions {
  bool all = false;
  std::vector<std::string> suites;
  std::size_t n_max = 12;
};

int verify(const VerifyCliOptions& opt, const GlobalOptions& g, std::ostream& out) {
  VerifyOptions vo{opt.n_max, g.seed, resolve_jobs(g.jobs)};
  using Suite = SuiteResult (*)(const VerifyOptions&);
  const std::vector<std::pair<std::string, Suite>> known = {
      {"structure", verify_structure},   {"counts", verify_counts},
      {"path-stars", verify_path_stars}, {"extremal", verify_extremal},
      {"perturbations", verify_perturbations}, {"examples", verify_examples},
      {"generation", verify_generation},
  };
  if (!opt.all && opt.suites.empty()) throw Error(ErrorKind::InvalidParams, "verify needs --all or --suite");
  std::vector<SuiteResult> results;
  for (const auto& [name, fn] : known) {
    bool wanted = opt.all || std::find(opt.suites.begin(), opt.suites.end(), name) != opt.suites.end();
    if (wanted) results.push_back(fn(vo));
  }
  for (const auto& s : opt.suites) {
    bool ok = std::any_of(known.begin(), known.end(), [&](const auto& k) { return k.first == s; });
    if (!ok) throw Error(ErrorKind::InvalidParams, "unknown suite '" + s + "'");
  }

  Findings findings;
  json rows = json::array();
  if (!g.json) out << "suite\tcases\tresult\n";
  for (const auto& r : results) {
    if (!r.passed) findings.flag();
    if (g.json) {
      rows.push_back({{"suite", r.name}, {"cases", r.cases}, {"passed", r.passed}, {"failures", r.failures}});
    } else {
      out << r.name << '\t' << r.cases << '\t' << (r.passed ? "PASS" : "FAIL") << '\n';
      for (const auto& f : r.failures) out << "  " << f << '\n';
    }
  }
  if (g.json) out << rows.dump(2) << '\n';
  return findings.exit_code();
}

// ---- perturb ---------------------------------------------------------------

struct PerturbOptions {
  std::string in;
  std::string move;
};

std::vector<Vertex> parse_ids(std::istringstream& ss) {
  std::vector<Vertex> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v == 0 || v > 0xFFFFFFFFul) {
      throw Error(ErrorKind::Parse, "move: '" + tok + "' is not a vertex id");
    }
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

int perturb(const PerturbOptions& opt, const GlobalOptions& g, std::ostream& out) {
  Tree t = read_edge_list_file(opt.in);
  std::istringstream ss(opt.move);
  std::string kind;
  ss >> kind;
  std::vector<Vertex> nums = parse_ids(ss);

  struct Check {
    std::string name;
    std::string subject;
    bool holds;
  };
  std::vector<Check> checks;
  std::optional<Tree> result;

  if (kind == "leaf") {
    if (nums.size() != 2) throw Error(ErrorKind::Parse, "leaf move format is 'leaf y w'");
    LeafMove mv{nums[0], nums[1]};
    result = relocate_leaf(t, mv);
    for (Vertex a = 1; a <= t.order(); ++a) {
      if (a == mv.y) continue;
      checks.push_back({"leaf_identity", "a=" + std::to_string(a), verify_leaf_identity(t, mv, a)});
      checks.push_back({"intermediate_identities", "a=" + std::to_string(a), intermediate_identities(t, mv, a).all()});
    }
    if (subtree_core(t).contains(mv.w)) {
      bool ok = true;
      try {
        core_after_leaf_move(t, mv.w, mv);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CoreMismatch) throw;
        ok = false;
      }
      checks.push_back({"core_after_leaf_move", "v=" + std::to_string(mv.w), ok});
    }
  } else if (kind == "path") {
    if (nums.size() < 3) throw Error(ErrorKind::Parse, "path move format is 'path y y1 .. ym z'");
    PathMove mv{nums.front(), std::vector<Vertex>(nums.begin() + 1, nums.end() - 1), nums.back()};
    result = relocate_path(t, mv);
    for (Vertex a = 1; a <= t.order(); ++a) {
      if (std::find(mv.path.begin(), mv.path.end(), a) != mv.path.end()) continue;
      checks.push_back({"path_identity", "a=" + std::to_string(a), verify_path_identity(t, mv, a)});
    }
    for (Vertex v : subtree_core(t).vertices) {
      for (Vertex u : t.neighbors(v)) {
        if (path_lemma_applies(t, v, u, mv)) {
          checks.push_back({"path_lemma", "v=" + std::to_string(v) + ",u=" + std::to_string(u),
                            path_lemma_conclusion(t, v, u, mv)});
        }
      }
    }
  } else {
    throw Error(ErrorKind::Parse, "move must start with 'leaf' or 'path'");
  }

  Findings findings;
  for (const auto& c : checks) {
    if (!c.holds) findings.flag();
  }
  if (g.json) {
    json doc;
    doc["n"] = result->order();
    json edges = json::array();
    for (const Edge& e : result->edges()) edges.push_back({e.u, e.v});
    doc["edges"] = edges;
    json report = json::array();
    for (const auto& c : checks) report.push_back({{"check", c.name}, {"subject", c.subject}, {"holds", c.holds}});
    doc["checks"] = report;
    out << doc.dump(2) << '\n';
  } else {
    write_edge_list(out, *result);
    for (const auto& c : checks) out << "# " << c.name << '\t' << c.subject << '\t' << bool_text(c.holds) << '\n';
  }
  return findings.exit_code();
}

// ---- violations ------------------------------------------------------------

struct ViolationOptions {
  std::optional<std::size_t> exhaustive;
  std::vector<std::size_t> family;
  std::optional<std::size_t> family_scan;
};

int violations(const ViolationOptions& opt, const GlobalOptions& g, std::ostream& out) {
  const int modes = opt.exhaustive.has_value() + !opt.family.empty() + opt.family_scan.has_value();
  if (modes != 1) throw Error(ErrorKind::InvalidParams, "choose exactly one of --exhaustive, --family, --family-scan");
  Findings findings;

  if (opt.exhaustive) {
    auto codes = find_betweenness_violations(*opt.exhaustive, resolve_jobs(g.jobs));
    if (g.json) {
      json list = json::array();
      for (const auto& c : codes) list.push_back(c.code);
      out << json{{"n", *opt.exhaustive}, {"violations", list}}.dump(2) << '\n';
    } else {
      out << "n\tviolations\n" << *opt.exhaustive << '\t' << codes.size() << '\n';
      for (const auto& c : codes) out << c.code << '\n';
    }
    return kExitOk;
  }

  if (!opt.family.empty()) {
    if (opt.family.size() != 4) throw Error(ErrorKind::InvalidParams, "--family takes L p-pos p q");
    DoubleBroom b{opt.family[0], opt.family[1], opt.family[2], opt.family[3]};
    Tree t = build_double_broom(b);
    Middles m = analyze_middles(t);
    const bool between = centroid_between(t, m);
    if (b.p == 0 && !between) findings.flag();
    if (g.json) {
      out << json{{"L", b.spine_length}, {"p_pos", b.p_pos}, {"p", b.p}, {"q", b.q}, {"n", b.order()},
                  {"center", ids(m.center)}, {"centroid", ids(m.centroid)}, {"subtree_core", ids(m.core)},
                  {"violation", !between}}
                 .dump(2)
          << '\n';
    } else {
      out << "L\tp_pos\tp\tq\tn\tcenter\tcentroid\tsubtree_core\tviolation\n"
          << b.spine_length << '\t' << b.p_pos << '\t' << b.p << '\t' << b.q << '\t' << b.order() << '\t'
          << join_ids(m.center.vertices) << '\t' << join_ids(m.centroid.vertices) << '\t'
          << join_ids(m.core.vertices) << '\t' << bool_text(!between) << '\n';
    }
    return findings.exit_code();
  }

  auto found = find_family_violations(*opt.family_scan);
  for (const auto& b : found) {
    if (b.p == 0) findings.flag();
  }
  if (g.json) {
    json list = json::array();
    for (const auto& b : found) list.push_back({{"L", b.spine_length}, {"p_pos", b.p_pos}, {"p", b.p}, {"q", b.q}});
    out << json{{"n", *opt.family_scan}, {"violations", list}}.dump(2) << '\n';
  } else {
    out << "L\tp_pos\tp\tq\n";
    for (const auto& b : found) out << b.spine_length << '\t' << b.p_pos << '\t' << b.p << '\t' << b.q << '\n';
  }
  return findings.exit_code();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"arbormid: center, centroid and subtree core of trees", "arbormid"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--json", g.json, "Emit JSON instead of TSV");
  app.add_option("--jobs", g.jobs, "Worker threads (default: $ARBORMID_JOBS or 1)");
  app.add_option("--seed", g.seed, "Seed for randomized suites");
  app.add_option("--out", g.out_path, "Write the report to FILE instead of stdout");

  AnalyzeOptions analyze_opt;
  auto* analyze_cmd = app.add_subcommand("analyze", "Middle parts and distances of one tree");
  analyze_cmd->add_option("--in", analyze_opt.in, "Edge-list file")->required();
  analyze_cmd->add_flag("--counts", analyze_opt.counts, "Include per-vertex subtree counts");

  PathStarOptions ps_opt;
  auto* ps_cmd = app.add_subcommand("pathstar", "Closed forms for path-star trees vs direct computation");
  ps_cmd->add_option("--n", ps_opt.n, "Order n (>= 5)")->required();
  ps_cmd->add_option("--g", ps_opt.g, "Pendant count g (default: every g in 2..n-3)");
  ps_cmd->add_option("--n-max", ps_opt.n_max, "Sweep orders n..n-max");
  ps_cmd->add_flag("--closed-only", ps_opt.closed_only, "Skip the direct computation");

  SweepOptions sweep_opt;
  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive extremal survey over free trees");
  sweep_cmd->add_option("--n-min", sweep_opt.n_min, "Smallest order (>= 5)");
  sweep_cmd->add_option("--n-max", sweep_opt.n_max, "Largest order (<= 18)");
  sweep_cmd->add_option("--metric", sweep_opt.metric, "c-sc, cd-sc or c-cd");

  VerifyCliOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
  verify_cmd->add_flag("--all", verify_opt.all, "Run every suite");
  verify_cmd->add_option("--suite", verify_opt.suites, "Suite name (repeatable)");
  verify_cmd->add_option("--n-max", verify_opt.n_max, "Largest order for exhaustive suites");

  PerturbOptions perturb_opt;
  auto* perturb_cmd = app.add_subcommand("perturb", "Apply a leaf or path move and check its identities");
  perturb_cmd->add_option("--in", perturb_opt.in, "Edge-list file")->required();
  perturb_cmd->add_option("--move", perturb_opt.move, "'leaf y w' or 'path y y1 .. ym z'")->required();

  ViolationOptions viol_opt;
  auto* viol_cmd = app.add_subcommand("violations", "Search for trees whose centroid is off the center-core path");
  viol_cmd->add_option("--exhaustive", viol_opt.exhaustive, "All free trees of order n (<= 18)");
  viol_cmd->add_option("--family", viol_opt.family, "One double broom: L p-pos p q")->expected(4);
  viol_cmd->add_option("--family-scan", viol_opt.family_scan, "Every double broom of order n");

  std::vector<const char*> argv{"arbormid"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!g.out_path.empty()) {
    file.open(g.out_path);
    if (!file) {
      err << "error: cannot write '" << g.out_path << "'\n";
      return kExitInvalid;
    }
    sink = &file;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(analyze_opt, g, *sink);
    if (ps_cmd->parsed()) return pathstar(ps_opt, g, *sink);
    if (sweep_cmd->parsed()) return sweep(sweep_opt, g, *sink);
    if (verify_cmd->parsed()) return verify(verify_opt, g, *sink);
    if (perturb_cmd->parsed()) return perturb(perturb_opt, g, *sink);
    if (viol_cmd->parsed()) return violations(viol_opt, g, *sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace arbormid::cli
