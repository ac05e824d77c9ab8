#include "arbormid/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "arbormid/canonical.hpp"
#include "arbormid/error.hpp"
#include "arbormid/extremal.hpp"
#include "arbormid/free_trees.hpp"
#include "arbormid/middles.hpp"
#include "arbormid/path_star.hpp"
#include "arbormid/perturb.hpp"
#include "arbormid/random_tree.hpp"
#include "arbormid/subtree_count.hpp"

namespace arbormid {

void SuiteResult::fail(std::string what) {
  passed = false;
  if (failures.size() < 8) failures.push_back(std::move(what));
}

namespace {

constexpr std::size_t kPathStarMaxOrder = 40;

std::string tree_tag(const Tree& t) { return "tree " + canonical_code(t).code; }

bool well_shaped(const Tree& t, const MiddleSet& m) {
  if (m.vertices.empty() || m.vertices.size() > 2) return false;
  if (!std::is_sorted(m.vertices.begin(), m.vertices.end())) return false;
  return m.vertices.size() == 1 || t.adjacent(m.vertices[0], m.vertices[1]);
}

void check_structure(const Tree& t, SuiteResult& res) {
  ++res.cases;
  const std::size_t n = t.order();
  CountTable table = count_all_vertices(t);
  Middles m{center(t), centroid(t), subtree_core(table)};
  for (const MiddleSet* s : {&m.center, &m.centroid, &m.core}) {
    if (!well_shaped(t, *s)) res.fail(tree_tag(t) + ": " + std::string(to_string(s->kind)) + " malformed");
    if (n >= 3) {
      for (Vertex v : s->vertices) {
        if (t.is_pendant(v)) res.fail(tree_tag(t) + ": pendant in " + std::string(to_string(s->kind)));
      }
    }
  }
  if (m.center != center_of_diametral_path(t)) res.fail(tree_tag(t) + ": center differs from diametral middle");
  if (m.centroid.vertices.size() == 2) {
    auto w = branch_weights(t);
    if (n % 2 != 0 || 2 * w[m.centroid.vertices[0]] != n || 2 * w[m.centroid.vertices[1]] != n) {
      res.fail(tree_tag(t) + ": bicentroid weights not n/2");
    }
  }
  auto ecc = eccentricities(t);
  const std::size_t rad = *std::min_element(ecc.begin() + 1, ecc.end());
  const std::size_t diam = *std::max_element(ecc.begin() + 1, ecc.end());
  std::size_t farthest = 0;
  for (Vertex u = 1; u <= n; ++u) {
    auto d = distances_from(t, u);
    farthest = std::max(farthest, *std::max_element(d.begin() + 1, d.end()));
  }
  if (!(rad <= diam && diam <= 2 * rad) || diam != farthest) res.fail(tree_tag(t) + ": radius/diameter relation");

  // Strict concavity along every path u-v-w.
  for (Vertex v = 1; v <= n; ++v) {
    auto nb = t.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (2 * table.at(v) <= table.at(nb[i]) + table.at(nb[j])) {
          res.fail(tree_tag(t) + ": concavity fails at " + std::to_string(v));
        }
      }
    }
  }
  // Pendant identities: f(v) = 1 + f_{T-v}(w) and f(w) = 2 f_{T-v}(w).
  if (n >= 2) {
    for (Vertex v = 1; v <= n; ++v) {
      if (!t.is_pendant(v)) continue;
      const Vertex w = t.neighbors(v).front();
      // f_{T-v}(w) = f_T(w) - f_T(v, w)
      std::vector<Vertex> vw{v, w};
      Count reduced = table.at(w) - count_with_set(t, vw);
      if (table.at(v) != 1 + reduced || table.at(w) != 2 * reduced) {
        res.fail(tree_tag(t) + ": pendant identity fails at " + std::to_string(v));
      }
    }
  }
}

}  // namespace

SuiteResult verify_structure(const VerifyOptions& opt) {
  SuiteResult res{"structure"};
  for (std::size_t n = 1; n <= opt.n_max; ++n) for_each_free_tree(n, [&](const Tree& t) { check_structure(t, res); });
  return res;
}

SuiteResult verify_counts(const VerifyOptions& opt) {
  SuiteResult res{"counts"};
  const std::size_t limit = std::min<std::size_t>(opt.n_max, 10);
  for (std::size_t n = 1; n <= limit; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      CountTable table = count_all_vertices(t);
      for (Vertex v = 1; v <= n; ++v) {
        ++res.cases;
        std::vector<Vertex> s{v};
        Count brute = brute_force_count(t, s);
        if (count_at_vertex(t, v) != brute || table.at(v) != brute) {
          res.fail(tree_tag(t) + ": count mismatch at " + std::to_string(v));
        }
      }
    });
  }
  std::mt19937_64 rng(opt.seed);
  for (int trial = 0; trial < 500; ++trial) {
    ++res.cases;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 14)(rng);
    Tree t = random_tree(n, rng);
    auto perm = random_permutation(n, rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(4, n))(rng);
    std::vector<Vertex> s(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
    if (count_with_set(t, s) != brute_force_count(t, s)) res.fail("random set count mismatch, trial " + std::to_string(trial));
  }
  return res;
}

SuiteResult verify_path_stars(const VerifyOptions&) {
  SuiteResult res{"path-stars"};
  for (std::uint64_t n = 5; n <= kPathStarMaxOrder; ++n) {
    std::size_t members = 0;
    const auto g0 = g_zero(n).g0;
    for (std::uint64_t g = 2; g + 3 <= n; ++g) {
      ++members;
      ++res.cases;
      const PathStarParams p{n, g};
      const std::string tag = "P(" + std::to_string(n) + "," + std::to_string(g) + ")";
      PathStarRow row = compare_path_star(p);
      if (!row.closed_equals_direct) res.fail(tag + ": closed form differs from direct");
      Tree t = build_path_star(p);
      CountTable table = count_all_vertices(t);
      for (std::uint64_t i = 1; i <= p.spine(); ++i) {
        if (spine_count(p, i) != table.at(static_cast<Vertex>(i))) res.fail(tag + ": spine count at " + std::to_string(i));
      }
      for (std::uint64_t leaf = p.spine() + 1; leaf <= n; ++leaf) {
        if (leaf_count(p) != table.at(static_cast<Vertex>(leaf))) res.fail(tag + ": leaf count");
      }
      if (!centroid_between(p)) res.fail(tag + ": centroid not between center and core");
    }
    if (members != n - 4) res.fail("|Gamma_" + std::to_string(n) + "| != n-4");
    if (n >= 6) {
      auto row = compare_path_star({n, n - 3});
      if (row.direct_distances.center_centroid || row.direct_distances.center_core || row.direct_distances.centroid_core) {
        res.fail("P(3," + std::to_string(n - 3) + ") distances not all zero");
      }
    }
    if (static_cast<std::int64_t>(dist_center_score_closed({n, g0})) != bound_center_score(n)) {
      res.fail("n=" + std::to_string(n) + ": d(C,S_c) at g0 differs from bound");
    }
    for (Metric m : {Metric::CenterCore, Metric::CentroidCore}) {
      auto best = gamma_argmax(n, m);
      if (path_star_metric({n, g0}, m) != best.value) {
        res.fail("n=" + std::to_string(n) + ": g0 not a maximizer of " + std::string(to_string(m)));
      }
    }
    auto cc = gamma_argmax(n, Metric::CenterCentroid);
    if (path_star_metric({n, n / 2}, Metric::CenterCentroid) != cc.value) {
      res.fail("n=" + std::to_string(n) + ": floor(n/2) not a maximizer of c-cd");
    }
  }
  return res;
}

SuiteResult verify_extremal(const VerifyOptions& opt) {
  SuiteResult res{"extremal"};
  for (std::size_t n = 5; n <= opt.n_max; ++n) {
    for (Metric m : {Metric::CenterCore, Metric::CentroidCore, Metric::CenterCentroid}) {
      ++res.cases;
      ExtremalRecord rec = survey(n, m, opt.jobs);
      const std::string tag = "n=" + std::to_string(n) + " " + std::string(to_string(m));
      if (!rec.bound_ok) res.fail(tag + ": bound exceeded");
      if (m != Metric::CenterCentroid && static_cast<std::int64_t>(rec.max_value) != rec.bound) {
        res.fail(tag + ": bound not attained");
      }
      if (m == Metric::CenterCentroid && gamma_argmax(n, m).value != rec.max_value) {
        res.fail(tag + ": no path-star attains the maximum");
      }
      if (!rec.pathstar_attains) res.fail(tag + ": reference path-star not among maximizers");
    }
  }
  return res;
}

SuiteResult verify_perturbations(const VerifyOptions& opt) {
  SuiteResult res{"perturbations"};
  const std::size_t leaf_limit = std::min<std::size_t>(opt.n_max, 9);
  for (std::size_t n = 3; n <= leaf_limit; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      for (Vertex y = 1; y <= n; ++y) {
        if (!t.is_pendant(y)) continue;
        for (Vertex w = 1; w <= n; ++w) {
          if (w == y || t.adjacent(y, w)) continue;
          for (Vertex a = 1; a <= n; ++a) {
            if (a == y) continue;
            ++res.cases;
            if (!verify_leaf_identity(t, {y, w}, a)) res.fail(tree_tag(t) + ": leaf identity");
          }
        }
      }
    });
  }
  const std::size_t core_limit = std::min<std::size_t>(opt.n_max, 10);
  for (std::size_t n = 3; n <= core_limit; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      for (Vertex v : subtree_core(t).vertices) {
        for (Vertex y = 1; y <= n; ++y) {
          if (y == v || !t.is_pendant(y) || t.adjacent(y, v)) continue;
          ++res.cases;
          try {
            core_after_leaf_move(t, v, {y, v});
          } catch (const Error& e) {
            res.fail(tree_tag(t) + ": " + e.what());
          }
        }
      }
    });
  }
  std::mt19937_64 rng(opt.seed);
  std::size_t sampled = 0;
  for (int attempt = 0; sampled < 200 && attempt < 100000; ++attempt) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 14)(rng);
    Tree t = random_tree(n, rng);
    std::vector<Vertex> leaves;
    for (Vertex v = 1; v <= n; ++v) {
      if (t.is_pendant(v)) leaves.push_back(v);
    }
    const Vertex x = leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)];
    const Vertex z = std::uniform_int_distribution<Vertex>(1, static_cast<Vertex>(n))(rng);
    PathMove mv;
    try {
      mv = hanging_path_move(t, x, z);
    } catch (const Error&) {
      continue;
    }
    ++sampled;
    for (Vertex a = 1; a <= n; ++a) {
      if (std::find(mv.path.begin(), mv.path.end(), a) != mv.path.end()) continue;
      ++res.cases;
      if (!verify_path_identity(t, mv, a)) res.fail(tree_tag(t) + ": path identity");
    }
    for (Vertex v : subtree_core(t).vertices) {
      for (Vertex u : t.neighbors(v)) {
        if (path_lemma_applies(t, v, u, mv)) {
          ++res.cases;
          if (!path_lemma_conclusion(t, v, u, mv)) res.fail(tree_tag(t) + ": path lemma conclusion");
        }
      }
    }
  }
  if (sampled < 200) res.fail("fewer than 200 valid path moves sampled");
  return res;
}

SuiteResult verify_examples(const VerifyOptions&) {
  SuiteResult res{"examples"};
  ++res.cases;
  try {
    verify_broom_counterexample();
  } catch (const Error& e) {
    res.fail(e.what());
  }
  ++res.cases;
  auto found = distinct_middles_exists(9);
  bool has_48 = std::any_of(found.witnesses.begin(), found.witnesses.end(),
                            [](const auto& w) { return w.max_count == 48; });
  if (!found.found || !has_48) res.fail("no 9-vertex tree with disjoint middles and max count 48");
  ++res.cases;
  if (distinct_middles_exists(5).found) res.fail("5-vertex tree with disjoint middles");
  return res;
}

SuiteResult verify_generation(const VerifyOptions& opt) {
  SuiteResult res{"generation"};
  // Prüfer dedup is n^(n-2); stay small here.
  const std::size_t limit = std::min<std::size_t>(opt.n_max, 8);
  for (std::size_t n = 2; n <= limit; ++n) {
    ++res.cases;
    std::set<CanonicalCode> generated;
    for_each_free_tree(n, [&](const Tree& t) { generated.insert(canonical_code(t)); });
    std::set<CanonicalCode> labelled;
    std::vector<Vertex> seq(n - 2, 1);
    while (true) {
      labelled.insert(canonical_code(tree_from_prufer(n, seq)));
      std::size_t i = 0;
      while (i < seq.size() && seq[i] == n) seq[i++] = 1;
      if (i == seq.size()) break;
      ++seq[i];
    }
    if (generated != labelled) res.fail("n=" + std::to_string(n) + ": generator disagrees with Prüfer dedup");
  }
  std::mt19937_64 rng(opt.seed);
  for (int trial = 0; trial < 20; ++trial) {
    ++res.cases;
    Tree t = random_tree(12, rng);
    const CanonicalCode code = canonical_code(t);
    for (int k = 0; k < 10; ++k) {
      if (canonical_code(relabel(t, random_permutation(12, rng))) != code) res.fail("relabelling changed a code");
    }
  }
  return res;
}

std::vector<SuiteResult> verify_all(const VerifyOptions& opt) {
  return {verify_structure(opt), verify_counts(opt),     verify_path_stars(opt),
          verify_extremal(opt),  verify_perturbations(opt), verify_examples(opt),
          verify_generation(opt)};
}

}  // namespace arbormid
