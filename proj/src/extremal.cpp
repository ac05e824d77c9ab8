#include "arbormid/extremal.hpp"

#include <algorithm>
#include <thread>

#include "arbormid/error.hpp"
#include "arbormid/free_trees.hpp"

namespace arbormid {

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::CenterCore: return "c-sc";
    case Metric::CentroidCore: return "cd-sc";
    case Metric::CenterCentroid: return "c-cd";
  }
  return "unknown";
}

Metric parse_metric(std::string_view text) {
  if (text == "c-sc") return Metric::CenterCore;
  if (text == "cd-sc") return Metric::CentroidCore;
  if (text == "c-cd") return Metric::CenterCentroid;
  throw Error(ErrorKind::InvalidParams, "unknown metric '" + std::string(text) + "' (expected c-sc, cd-sc or c-cd)");
}

std::size_t metric_value(const MiddleDistances& d, Metric m) {
  switch (m) {
    case Metric::CenterCore: return d.center_core;
    case Metric::CentroidCore: return d.centroid_core;
    case Metric::CenterCentroid: return d.center_centroid;
  }
  return 0;
}

std::int64_t metric_bound(std::uint64_t n, Metric m) {
  switch (m) {
    case Metric::CenterCore: return bound_center_score(n);
    case Metric::CentroidCore: return bound_centroid_score(n);
    case Metric::CenterCentroid: return bound_center_centroid(n);
  }
  return 0;
}

std::uint64_t path_star_metric(const PathStarParams& p, Metric metric) {
  switch (metric) {
    case Metric::CenterCore: return dist_center_score_closed(p);
    case Metric::CentroidCore: return dist_centroid_score_closed(p);
    case Metric::CenterCentroid: return compare_path_star(p, false).closed_distances.center_centroid;
  }
  return 0;
}

namespace {

void require_survey_order(std::size_t n) {
  if (n < 5) throw Error(ErrorKind::InvalidParams, "survey needs n >= 5, got n=" + std::to_string(n));
  if (n > kMaxExhaustiveOrder) {
    throw Error(ErrorKind::TooLarge, "exhaustive survey capped at n=" + std::to_string(kMaxExhaustiveOrder));
  }
}

// Runs `work(i)` for i in [0, count) on `jobs` threads with a static stride.
template <typename Work>
void parallel_for(std::size_t count, unsigned jobs, Work&& work) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i, 0u);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += jobs) work(i, w);
    });
  }
}

PathStarParams reference_path_star(std::size_t n, Metric metric) {
  if (metric == Metric::CenterCentroid) return {n, n / 2};
  return {n, g_zero(n).g0};
}

}  // namespace

ExtremalRecord survey(std::size_t n, Metric metric, unsigned jobs) {
  require_survey_order(n);
  const std::vector<Tree> trees = enumerate_free_trees(n);

  std::vector<std::size_t> values(trees.size(), 0);
  parallel_for(trees.size(), jobs, [&](std::size_t i, unsigned) {
    const Tree& t = trees[i];
    values[i] = metric_value(middle_distances(t, analyze_middles(t)), metric);
  });

  ExtremalRecord rec;
  rec.n = n;
  rec.metric = metric;
  rec.tree_count = trees.size();
  rec.max_value = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (values[i] == rec.max_value) rec.maximizers.push_back(canonical_code(trees[i]));
  }
  std::sort(rec.maximizers.begin(), rec.maximizers.end());
  rec.bound = metric_bound(n, metric);
  rec.bound_ok = static_cast<std::int64_t>(rec.max_value) <= rec.bound;
  const CanonicalCode reference = canonical_code(build_path_star(reference_path_star(n, metric)));
  rec.pathstar_attains = std::binary_search(rec.maximizers.begin(), rec.maximizers.end(), reference);
  return rec;
}

GammaArgmax gamma_argmax(std::uint64_t n, Metric metric) {
  if (n < 5) throw Error(ErrorKind::InvalidParams, "Gamma_n needs n >= 5, got n=" + std::to_string(n));
  GammaArgmax out;
  for (std::uint64_t g = 2; g + 3 <= n; ++g) {
    const std::uint64_t v = path_star_metric({n, g}, metric);
    out.values.push_back(v);
    if (out.values.size() == 1 || v > out.value) {
      out.value = v;
      out.g = g;
    }
  }
  return out;
}

std::vector<CanonicalCode> find_betweenness_violations(std::size_t n, unsigned jobs) {
  if (n > kMaxExhaustiveOrder) {
    throw Error(ErrorKind::TooLarge, "exhaustive violation search capped at n=" + std::to_string(kMaxExhaustiveOrder));
  }
  const std::vector<Tree> trees = enumerate_free_trees(n);
  std::vector<char> bad(trees.size(), 0);
  parallel_for(trees.size(), jobs, [&](std::size_t i, unsigned) { bad[i] = !centroid_between(trees[i]); });
  std::vector<CanonicalCode> out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (bad[i]) out.push_back(canonical_code(trees[i]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Tree build_double_broom(const DoubleBroom& b) {
  const std::size_t n = b.order();
  if (b.spine_length < 1 || (b.p > 0 && (b.p_pos < 1 || b.p_pos > b.spine_length))) {
    throw Error(ErrorKind::InvalidParams, "double broom needs L >= 1 and 1 <= p_pos <= L");
  }
  std::vector<Edge> edges;
  const auto spine = static_cast<Vertex>(b.spine_length);
  for (Vertex i = 1; i < spine; ++i) edges.push_back({i, i + 1});
  Vertex next = spine + 1;
  for (std::size_t i = 0; i < b.p; ++i) edges.push_back({static_cast<Vertex>(b.p_pos), next++});
  for (std::size_t i = 0; i < b.q; ++i) edges.push_back({spine, next++});
  return Tree::from_edge_list(n, edges);
}

std::vector<DoubleBroom> find_family_violations(std::size_t n) {
  std::vector<DoubleBroom> out;
  auto check = [&](const DoubleBroom& b) {
    if (!centroid_between(build_double_broom(b))) out.push_back(b);
  };
  for (std::size_t len = 1; len <= n; ++len) {
    check({len, 0, 0, n - len});  // path-stars (and the path itself)
    for (std::size_t pos = 2; pos < len; ++pos) {
      for (std::size_t p = 1; len + p <= n; ++p) check({len, pos, p, n - len - p});
    }
  }
  return out;
}

Tree broom_counterexample() { return build_double_broom({16, 9, 4, 7}); }

Count component_count(const Tree& t, Vertex keep, Vertex cut_neighbor) {
  if (!t.adjacent(keep, cut_neighbor)) {
    throw Error(ErrorKind::InvalidParams, "vertices " + std::to_string(keep) + " and " +
                                              std::to_string(cut_neighbor) + " are not adjacent");
  }
  Rooting r = root_at(t, keep);
  std::vector<Count> down(t.order() + 1, 1);
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    Vertex x = *it;
    Vertex p = r.parent[x];
    if (p == 0 || x == cut_neighbor) continue;
    down[p] *= 1 + down[x];
  }
  return down[keep];
}

CounterexampleReport verify_broom_counterexample() {
  Tree t = broom_counterexample();
  CounterexampleReport rep{t, analyze_middles(t), component_count(t, 9, 10), component_count(t, 10, 9), 0, true};
  CountTable table = count_all_vertices(t);
  rep.f_diff = table.at(9) - table.at(10);
  rep.between = centroid_between(t, rep.middles);

  std::string problems;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) problems += (problems.empty() ? "" : "; ") + what;
  };
  expect(rep.middles.center.vertices == std::vector<Vertex>{9}, "C = {" + join_ids(rep.middles.center.vertices) + "}");
  expect(rep.middles.centroid.vertices == std::vector<Vertex>{10},
         "C_d = {" + join_ids(rep.middles.centroid.vertices) + "}");
  expect(rep.middles.core.vertices == std::vector<Vertex>{9}, "S_c = {" + join_ids(rep.middles.core.vertices) + "}");
  expect(rep.f_m_9 == 144, "f_M(9) = " + rep.f_m_9.str());
  expect(rep.f_n_10 == 134, "f_N(10) = " + rep.f_n_10.str());
  expect(rep.f_diff == 10, "f(9) - f(10) = " + rep.f_diff.str());
  expect(!rep.between, "centroid lies between center and core");
  if (!problems.empty()) throw Error(ErrorKind::ReconstructionMismatch, problems);
  return rep;
}

DistinctMiddlesResult distinct_middles_exists(std::size_t n) {
  DistinctMiddlesResult res;
  auto disjoint = [](const MiddleSet& a, const MiddleSet& b) {
    return std::none_of(a.vertices.begin(), a.vertices.end(), [&](Vertex v) { return b.contains(v); });
  };
  for_each_free_tree(n, [&](const Tree& t) {
    CountTable table = count_all_vertices(t);
    Middles m{center(t), centroid(t), subtree_core(table)};
    if (disjoint(m.center, m.centroid) && disjoint(m.center, m.core) && disjoint(m.centroid, m.core)) {
      res.witnesses.push_back({canonical_code(t), t, m, table.max()});
    }
  });
  std::sort(res.witnesses.begin(), res.witnesses.end(),
            [](const auto& a, const auto& b) { return a.code < b.code; });
  res.found = !res.witnesses.empty();
  return res;
}

}  // namespace arbormid
