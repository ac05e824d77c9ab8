// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "arbormid/canonical.hpp"
#include "arbormid/error.hpp"
#include "arbormid/extremal.hpp"
#include "arbormid/free_trees.hpp"
#include "arbormid/metrics.hpp"
#include "arbormid/middles.hpp"
#include "arbormid/path_star.hpp"
#include "arbormid/perturb.hpp"
#include "arbormid/random_tree.hpp"
#include "arbormid/subtree_count.hpp"
#include "oracles.hpp"

using namespace arbormid;

namespace {

constexpr unsigned kWorkers = 4;

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  // Returns an empty string on success, otherwise the first failure.
  std::function<std::string()> check;
};

std::string at(std::size_t n, const std::string& what) { return "n=" + std::to_string(n) + ": " + what; }

bool among(const std::vector<CanonicalCode>& codes, const Tree& t) {
  return std::binary_search(codes.begin(), codes.end(), canonical_code(t));
}

std::string oracle_equivalence() {
  std::size_t trees = 0;
  std::string failure;
  for (std::size_t n = 1; n <= 10 && failure.empty(); ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      ++trees;
      CountTable table = count_all_vertices(t);
      for (Vertex v = 1; v <= n && failure.empty(); ++v) {
        const Count brute = brute_force_count(t, std::vector<Vertex>{v});
        if (count_at_vertex(t, v) != brute || table.at(v) != brute) failure = at(n, "count mismatch at v=" + std::to_string(v));
      }
    });
  }
  if (failure.empty() && trees != 201) failure = "expected 201 trees, saw " + std::to_string(trees);
  return failure;
}

std::string structural_invariants() {
  std::string failure;
  auto fail = [&](std::size_t n, const std::string& what) {
    if (failure.empty()) failure = at(n, what);
  };
  auto shape_ok = [](const Tree& t, const MiddleSet& m) {
    if (m.vertices.size() == 1) return true;
    return m.vertices.size() == 2 && t.adjacent(m.vertices[0], m.vertices[1]);
  };
  for (std::size_t n = 1; n <= 12; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      const MiddleSet c = center(t);
      const MiddleSet cd = centroid(t);
      CountTable f = count_all_vertices(t);
      const MiddleSet sc = subtree_core(f);
      if (c.vertices != oracle::center(t)) fail(n, "center differs from oracle");
      if (cd.vertices != oracle::centroid(t)) fail(n, "centroid differs from oracle");
      if (!shape_ok(t, c) || !shape_ok(t, cd) || !shape_ok(t, sc)) fail(n, "middle set shape");
      for (Vertex v = 1; v <= n; ++v) {
        auto nb = t.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
          for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (2 * f.at(v) <= f.at(nb[i]) + f.at(nb[j])) fail(n, "concavity at v=" + std::to_string(v));
          }
        }
        if (n >= 3 && t.is_pendant(v)) {
          if (c.contains(v) || cd.contains(v) || sc.contains(v)) fail(n, "pendant in a middle set");
          const Vertex w = nb.front();
          const Count reduced = f.at(w) - count_with_set(t, std::vector<Vertex>{v, w});
          if (f.at(v) != 1 + reduced || f.at(w) != 2 * reduced) fail(n, "pendant count identity");
        }
      }
    });
  }
  return failure;
}

std::string closed_form_conformance() {
  for (std::uint64_t n = 5; n <= 40; ++n) {
    for (std::uint64_t g = 2; g + 3 <= n; ++g) {
      const PathStarParams p{n, g};
      Tree t = build_path_star(p);
      const MiddleSet c = center(t);
      const MiddleSet cd = centroid(t);
      const MiddleSet sc = subtree_core(t);
      const std::string tag = "g=" + std::to_string(g) + " ";
      if (subtree_core_closed(p) != sc) return at(n, tag + "subtree core");
      if (center_closed(p) != c) return at(n, tag + "center");
      if (centroid_closed(p) != cd) return at(n, tag + "centroid");
      if (dist_center_score_closed(p) != set_distance(t, c, sc)) return at(n, tag + "d(C,S_c)");
      if (dist_centroid_score_closed(p) != set_distance(t, cd, sc)) return at(n, tag + "d(C_d,S_c)");
    }
  }
  return {};
}

std::string attained_bounds() {
  for (std::size_t n = 5; n <= 16; ++n) {
    const std::uint64_t g0 = g_zero(n).g0;
    const Tree extremal = build_path_star({n, g0});
    ExtremalRecord c = survey(n, Metric::CenterCore, kWorkers);
    ExtremalRecord cd = survey(n, Metric::CentroidCore, kWorkers);
    const std::int64_t bc = static_cast<std::int64_t>((n - g0) / 2) - 1;
    const std::int64_t bcd = static_cast<std::int64_t>((n - 1) / 2) - static_cast<std::int64_t>(g0);
    if (static_cast<std::int64_t>(c.max_value) != bc) return at(n, "max d(C,S_c)=" + std::to_string(c.max_value));
    if (static_cast<std::int64_t>(cd.max_value) != bcd) return at(n, "max d(C_d,S_c)=" + std::to_string(cd.max_value));
    if (!among(c.maximizers, extremal)) return at(n, "P_{n-g0,g0} not a d(C,S_c) maximizer");
    if (!among(cd.maximizers, extremal)) return at(n, "P_{n-g0,g0} not a d(C_d,S_c) maximizer");
    if (n == 9 || n == 10) {
      if (c.max_value != 2 || cd.max_value != 1) return at(n, "spot value");
    }
  }
  return {};
}

std::string center_centroid_bound() {
  for (std::size_t n = 5; n <= 16; ++n) {
    ExtremalRecord r = survey(n, Metric::CenterCentroid, kWorkers);
    const std::int64_t bound = static_cast<std::int64_t>((n - 3) / 4);
    if (static_cast<std::int64_t>(r.max_value) > bound) return at(n, "max d(C,C_d) above bound");
    const Tree p = build_path_star({n, n / 2});
    if (set_distance(p, center(p), centroid(p)) != r.max_value) return at(n, "g=n/2 path-star misses the maximum");
    if (!among(r.maximizers, p)) return at(n, "g=n/2 path-star not among maximizers");
  }
  return {};
}

std::string lemma_identities() {
  std::size_t leaf_checks = 0;
  std::string failure;
  for (std::size_t n = 3; n <= 9; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      for (Vertex y = 1; y <= n; ++y) {
        if (!t.is_pendant(y)) continue;
        for (Vertex w = 1; w <= n; ++w) {
          if (w == y || t.adjacent(y, w)) continue;
          for (Vertex a = 1; a <= n; ++a) {
            if (a == y) continue;
            ++leaf_checks;
            if (!verify_leaf_identity(t, {y, w}, a) && failure.empty()) failure = at(n, "leaf identity");
          }
        }
      }
    });
  }
  if (!failure.empty()) return failure;
  if (leaf_checks == 0) return "no leaf moves checked";

  std::mt19937_64 rng(2024);
  std::size_t path_moves = 0;
  while (path_moves < 200) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(5, 14)(rng);
    Tree t = random_tree(n, rng);
    std::vector<PathMove> candidates;
    for (Vertex x = 1; x <= n; ++x) {
      if (!t.is_pendant(x)) continue;
      for (Vertex z = 1; z <= n; ++z) {
        try {
          candidates.push_back(hanging_path_move(t, x, z));
        } catch (const Error&) {
        }
      }
    }
    if (candidates.empty()) continue;
    const PathMove mv = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    for (Vertex a = 1; a <= n; ++a) {
      if (std::find(mv.path.begin(), mv.path.end(), a) != mv.path.end()) continue;
      if (!verify_path_identity(t, mv, a)) return at(n, "path identity");
    }
    ++path_moves;
  }

  for (std::size_t n = 3; n <= 10 && failure.empty(); ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      for (Vertex v : subtree_core(t).vertices) {
        for (Vertex y = 1; y <= n; ++y) {
          if (y == v || !t.is_pendant(y) || t.adjacent(y, v)) continue;
          if (subtree_core(relocate_leaf(t, {y, v})).vertices != std::vector<Vertex>{v} && failure.empty()) {
            failure = at(n, "core did not collapse onto v=" + std::to_string(v));
          }
        }
      }
    });
  }
  return failure;
}

std::string example_reconstruction() {
  Tree t = broom_counterexample();
  if (t.order() != 27) return "order";
  if (center(t).vertices != std::vector<Vertex>{9}) return "C != {9}";
  if (centroid(t).vertices != std::vector<Vertex>{10}) return "C_d != {10}";
  if (subtree_core(t).vertices != std::vector<Vertex>{9}) return "S_c != {9}";
  if (component_count(t, 9, 10) != 144) return "f_M(9) != 144";
  if (component_count(t, 10, 9) != 134) return "f_N(10) != 134";
  if (centroid_between(t)) return "betweenness holds";
  CounterexampleReport r = verify_broom_counterexample();
  if (r.f_diff != 10) return "f_T(9) - f_T(10) != 10";
  return {};
}

std::string distinct_middles_fingerprint() {
  std::size_t trees = 0;
  bool found = false;
  for_each_free_tree(9, [&](const Tree& t) {
    ++trees;
    Middles m = analyze_middles(t);
    const bool disjoint = set_distance(t, m.center, m.centroid) > 0 && set_distance(t, m.center, m.core) > 0 &&
                          set_distance(t, m.centroid, m.core) > 0;
    if (disjoint && count_all_vertices(t).max() == 48) found = true;
  });
  if (trees != 47) return "expected 47 trees, saw " + std::to_string(trees);
  if (!found) return "no disjoint-middles tree with max count 48";
  DistinctMiddlesResult r = distinct_middles_exists(9);
  const bool lib_48 = std::any_of(r.witnesses.begin(), r.witnesses.end(),
                                  [](const DistinctMiddlesWitness& w) { return w.max_count == 48; });
  if (!r.found || !lib_48) return "library search disagrees";
  return {};
}

std::string path_star_betweenness() {
  for (std::uint64_t n = 5; n <= 40; ++n) {
    for (std::uint64_t g = 2; g + 3 <= n; ++g) {
      if (!centroid_between(PathStarParams{n, g})) return at(n, "g=" + std::to_string(g));
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence, all free trees n <= 10", 10.0, oracle_equivalence},
      {2, "structural invariants, all free trees n <= 12", 60.0, structural_invariants},
      {3, "closed forms vs direct, 5 <= n <= 40", 60.0, closed_form_conformance},
      {4, "attained core-distance bounds, 5 <= n <= 16", 600.0, attained_bounds},
      {5, "center-centroid bound, 5 <= n <= 16", 600.0, center_centroid_bound},
      {6, "leaf and path identities, core stability", 600.0, lemma_identities},
      {7, "27-vertex counterexample reconstruction", 10.0, example_reconstruction},
      {8, "9-vertex disjoint middles with max count 48", 10.0, distinct_middles_fingerprint},
      {9, "path-star betweenness, 5 <= n <= 40", 60.0, path_star_betweenness},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds > c.limit_seconds) failure = "over time limit";
    std::printf("[%s] %d %s (%.2f s, limit %.0f s)%s%s\n", failure.empty() ? "PASS" : "FAIL", c.id, c.name.c_str(),
                seconds, c.limit_seconds, failure.empty() ? "" : ": ", failure.c_str());
    if (!failure.empty()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
