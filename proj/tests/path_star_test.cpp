#include <doctest.h>

#include <vector>

#include "arbormid/error.hpp"
#include "arbormid/metrics.hpp"
#include "arbormid/path_star.hpp"
#include "arbormid/subtree_count.hpp"
#include "oracles.hpp"

using namespace arbormid;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an arbormid::Error");
  return ErrorKind::Parse;
}

std::vector<Vertex> V(std::initializer_list<Vertex> ids) { return ids; }

bool on_path(const std::vector<Vertex>& path, Vertex v) {
  return std::find(path.begin(), path.end(), v) != path.end();
}

}  // namespace

TEST_CASE("build") {
  Tree t = build_path_star({5, 2});
  CHECK(t.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {3, 5}});

  CHECK(build_path_star({9, 1}) == make_path(9));

  Tree star = build_path_star({9, 8});
  CHECK(star.degree(1) == 8);
  for (Vertex v = 2; v <= 9; ++v) CHECK(star.is_pendant(v));

  CHECK(kind_of([] { build_path_star({5, 0}); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { build_path_star({5, 5}); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { build_path_star({1, 0}); }) == ErrorKind::InvalidParams);
}

TEST_CASE("gamma membership") {
  CHECK(in_gamma({5, 2}));
  CHECK_FALSE(in_gamma({5, 3}));
  CHECK_FALSE(in_gamma({4, 1}));
  CHECK_FALSE(in_gamma({10, 1}));
  CHECK(in_gamma({10, 7}));
  CHECK_FALSE(in_gamma({10, 8}));
  CHECK(kind_of([] { center_closed({9, 1}); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { subtree_core_closed({9, 7}); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { leaf_count({4, 2}); }) == ErrorKind::InvalidParams);
}

TEST_CASE("spine and leaf counts") {
  CHECK(spine_count({10, 3}, 7) == 56);
  CHECK(spine_count({10, 3}, 1) == 14);
  CHECK(spine_count({9, 3}, 6) == 48);
  CHECK(leaf_count({10, 3}) == 29);
  CHECK(leaf_count({9, 3}) == 25);
  CHECK(leaf_count({5, 2}) == 7);

  Tree p73 = build_path_star({10, 3});
  CHECK(oracle::subsets_containing(p73, V({7})) == 56);
  CHECK(oracle::subsets_containing(p73, V({1})) == 14);
  CHECK(oracle::subsets_containing(p73, V({10})) == 29);
  CHECK(oracle::subsets_containing(build_path_star({9, 3}), V({6})) == 48);
  CHECK(oracle::subsets_containing(build_path_star({5, 2}), V({4})) == 7);

  CHECK(kind_of([] { spine_count({10, 3}, 0); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { spine_count({10, 3}, 8); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("closed middle sets") {
  CHECK(subtree_core_closed({10, 3}).vertices == V({7}));
  CHECK(subtree_core_closed({20, 3}).vertices == V({12, 13}));
  CHECK(subtree_core_closed({19, 3}).vertices == V({12}));

  CHECK(center_closed({10, 3}).vertices == V({4, 5}));
  CHECK(center_closed({20, 3}).vertices == V({9, 10}));
  CHECK(center_closed({9, 3}).vertices == V({4}));

  CHECK(centroid_closed({10, 3}).vertices == V({5, 6}));
  CHECK(centroid_closed({9, 3}).vertices == V({5}));
  CHECK(centroid_closed({9, 6}).vertices == V({3}));

  for (PathStarParams p : {PathStarParams{10, 3}, {20, 3}, {19, 3}, {9, 3}, {9, 6}}) {
    Tree t = build_path_star(p);
    CHECK(center_closed(p).vertices == oracle::center(t));
    CHECK(centroid_closed(p).vertices == oracle::centroid(t));
  }
}

TEST_CASE("closed distances") {
  CHECK(dist_center_score_closed({10, 3}) == 2);
  CHECK(dist_center_score_closed({20, 3}) == 2);
  CHECK(dist_center_score_closed({19, 3}) == 3);
  CHECK(dist_centroid_score_closed({10, 3}) == 1);
  CHECK(dist_centroid_score_closed({20, 3}) == 1);
  CHECK(dist_centroid_score_closed({9, 4}) == 0);

  auto d = oracle::all_pairs(build_path_star({19, 3}));
  CHECK(d[9][12] == 3);
}

TEST_CASE("g0 and the global bounds") {
  CHECK(g_zero(5).g0 == 2);
  CHECK(g_zero(9).g0 == 3);
  CHECK(g_zero(10).g0 == 3);
  CHECK(g_zero(11).g0 == 3);
  CHECK(g_zero(12).g0 == 4);
  CHECK(kind_of([] { g_zero(4); }) == ErrorKind::InvalidParams);

  CHECK(bound_center_score(10) == 2);
  CHECK(bound_centroid_score(10) == 1);
  CHECK(bound_center_score(9) == 2);
  CHECK(bound_centroid_score(9) == 1);
  CHECK(bound_center_score(5) == 0);
  CHECK(bound_centroid_score(5) == 0);
  CHECK(bound_center_centroid(5) == 0);
  CHECK(bound_center_centroid(16) == 3);

  for (std::uint64_t n = 5; n <= 200; ++n) {
    const std::uint64_t g0 = g_zero(n).g0;
    CHECK((std::uint64_t{1} << g0) + g0 > n - 1);
    if (g0 > 1) CHECK((std::uint64_t{1} << (g0 - 1)) + g0 - 1 <= n - 1);
    CHECK(g0 <= n / 2);
  }
}

TEST_CASE("betweenness examples") {
  CHECK(centroid_between(PathStarParams{10, 3}));
  CHECK(centroid_between(PathStarParams{20, 3}));
  CHECK(centroid_between(PathStarParams{9, 6}));

  // Explicit path check for (20,3): C_d = {10,11} on the 9..12 stretch.
  Tree t = build_path_star({20, 3});
  auto path = path_between(t, 9, 12);
  CHECK(on_path(path, 10));
  CHECK(on_path(path, 11));
}

TEST_CASE("closed forms equal direct computation for 5 <= n <= 40") {
  for (std::uint64_t n = 5; n <= 40; ++n) {
    std::size_t members = 0;
    for (std::uint64_t g = 2; g + 3 <= n; ++g) {
      const PathStarParams p{n, g};
      REQUIRE(in_gamma(p));
      ++members;
      Tree t = build_path_star(p);
      CountTable f = count_all_vertices(t);
      for (Vertex i = 1; i <= p.spine(); ++i) CHECK(spine_count(p, i) == f.at(i));
      for (Vertex leaf = static_cast<Vertex>(p.spine() + 1); leaf <= n; ++leaf) CHECK(leaf_count(p) == f.at(leaf));

      const MiddleSet c = center(t);
      const MiddleSet cd = centroid(t);
      const MiddleSet sc = subtree_core(f);
      CHECK(center_closed(p) == c);
      CHECK(centroid_closed(p) == cd);
      CHECK(subtree_core_closed(p) == sc);
      CHECK(dist_center_score_closed(p) == set_distance(t, c, sc));
      CHECK(dist_centroid_score_closed(p) == set_distance(t, cd, sc));
      CHECK(centroid_between(p));

      PathStarRow row = compare_path_star(p);
      CHECK(row.has_direct);
      CHECK(row.closed_equals_direct);
    }
    CHECK(members == n - 4);
  }
}

TEST_CASE("P_{3,n-3} has all three middles coinciding") {
  for (std::uint64_t n = 6; n <= 40; ++n) {
    Tree t = build_path_star({n, n - 3});
    const MiddleSet c = center(t);
    const MiddleSet cd = centroid(t);
    const MiddleSet sc = subtree_core(t);
    CHECK(set_distance(t, c, cd) == 0);
    CHECK(set_distance(t, cd, sc) == 0);
    CHECK(set_distance(t, c, sc) == 0);
  }
}

TEST_CASE("g0 maximises both closed distances over the family") {
  for (std::uint64_t n = 5; n <= 40; ++n) {
    const std::uint64_t g0 = g_zero(n).g0;
    CHECK(static_cast<std::int64_t>(dist_center_score_closed({n, g0})) == bound_center_score(n));
    std::uint64_t best_c = 0;
    std::uint64_t best_cd = 0;
    for (std::uint64_t g = 2; g + 3 <= n; ++g) {
      best_c = std::max(best_c, dist_center_score_closed({n, g}));
      best_cd = std::max(best_cd, dist_centroid_score_closed({n, g}));
    }
    CHECK(dist_center_score_closed({n, g0}) == best_c);
    CHECK(dist_centroid_score_closed({n, g0}) == best_cd);
  }
}

TEST_CASE("closed forms stay exact for large orders") {
  const PathStarParams p{1000, 80};
  CHECK(spine_count(p, p.spine()) == Count(p.spine()) << 80);
  CHECK(subtree_core_closed(p).vertices == V({920}));
  PathStarRow row = compare_path_star(p, false);
  CHECK_FALSE(row.has_direct);
  CHECK(row.closed.core.vertices == V({920}));
}
