#include "arbormid/path_star.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "arbormid/error.hpp"

namespace arbormid {

namespace {

std::string describe(const PathStarParams& p) {
  return "(n=" + std::to_string(p.n) + ", g=" + std::to_string(p.g) + ")";
}

void require_gamma(const PathStarParams& p) {
  if (!in_gamma(p)) {
    throw Error(ErrorKind::InvalidParams, describe(p) + " outside n >= 5, 2 <= g <= n-3");
  }
}

Count pow2(std::uint64_t e) {
  Count c = 1;
  c <<= e;
  return c;
}

// 2^g + 1 <= n - g, evaluated without materializing 2^g for large g.
bool core_leaves_star(const PathStarParams& p) {
  if (p.g >= 63) return false;
  return Count(pow2(p.g) + 1) <= Count(p.spine());
}

MiddleSet single(MiddleKind kind, std::uint64_t v) { return MiddleSet{kind, {static_cast<Vertex>(v)}}; }
MiddleSet pair(MiddleKind kind, std::uint64_t v) {
  return MiddleSet{kind, {static_cast<Vertex>(v), static_cast<Vertex>(v + 1)}};
}

}  // namespace

bool is_valid(const PathStarParams& p) {
  return p.n >= 2 && p.n <= kMaxPathStarOrder && p.g >= 1 && p.g <= p.n - 1;
}

bool in_gamma(const PathStarParams& p) {
  return is_valid(p) && p.n >= 5 && p.g >= 2 && p.g <= p.n - 3;
}

Tree build_path_star(const PathStarParams& p) {
  if (!is_valid(p)) throw Error(ErrorKind::InvalidParams, describe(p) + " needs n >= 2 and 1 <= g <= n-1");
  const auto spine = static_cast<Vertex>(p.spine());
  std::vector<Edge> edges;
  edges.reserve(p.n - 1);
  for (Vertex i = 1; i < spine; ++i) edges.push_back({i, i + 1});
  for (Vertex leaf = spine + 1; leaf <= p.n; ++leaf) edges.push_back({spine, leaf});
  return Tree::from_edge_list(p.n, edges);
}

Count spine_count(const PathStarParams& p, std::uint64_t i) {
  require_gamma(p);
  if (i < 1 || i > p.spine()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "spine index " + std::to_string(i) + " not in 1.." + std::to_string(p.spine()));
  }
  return Count(i) * Count(p.spine() - i) + Count(i) * pow2(p.g);
}

Count leaf_count(const PathStarParams& p) {
  require_gamma(p);
  return 1 + Count(p.spine()) * pow2(p.g - 1);
}

MiddleSet subtree_core_closed(const PathStarParams& p) {
  require_gamma(p);
  const std::uint64_t spine = p.spine();
  if (!core_leaves_star(p)) return single(MiddleKind::SubtreeCore, spine);
  const std::uint64_t two_g = std::uint64_t{1} << p.g;
  if (spine % 2 == 0) return single(MiddleKind::SubtreeCore, (spine + two_g) / 2);
  return pair(MiddleKind::SubtreeCore, (spine - 1 + two_g) / 2);
}

MiddleSet center_closed(const PathStarParams& p) {
  require_gamma(p);
  const std::uint64_t spine = p.spine();
  if (spine % 2 == 0) return single(MiddleKind::Center, (spine + 2) / 2);
  return MiddleSet{MiddleKind::Center, {static_cast<Vertex>((spine + 1) / 2), static_cast<Vertex>((spine + 3) / 2)}};
}

MiddleSet centroid_closed(const PathStarParams& p) {
  require_gamma(p);
  if (p.n % 2 == 1) {
    if (p.g <= (p.n - 1) / 2) return single(MiddleKind::Centroid, (p.n + 1) / 2);
    return single(MiddleKind::Centroid, p.spine());
  }
  if (p.g <= p.n / 2 - 1) return pair(MiddleKind::Centroid, p.n / 2);
  return single(MiddleKind::Centroid, p.spine());
}

std::uint64_t dist_center_score_closed(const PathStarParams& p) {
  require_gamma(p);
  const std::uint64_t spine = p.spine();
  const bool even = spine % 2 == 0;
  if (core_leaves_star(p)) {
    const std::uint64_t half = std::uint64_t{1} << (p.g - 1);
    return even ? half - 1 : half - 2;
  }
  return even ? (spine - 2) / 2 : (spine - 3) / 2;
}

std::uint64_t dist_centroid_score_closed(const PathStarParams& p) {
  require_gamma(p);
  const bool spine_even = p.spine() % 2 == 0;
  const bool small_star = core_leaves_star(p);
  const std::uint64_t two_g = small_star ? std::uint64_t{1} << p.g : 0;
  if (p.n % 2 == 1) {
    if (small_star) return spine_even ? (two_g - p.g - 1) / 2 : (two_g - p.g - 2) / 2;
    return p.g <= (p.n - 1) / 2 ? (p.n - 1) / 2 - p.g : 0;
  }
  if (small_star) return spine_even ? (two_g - p.g - 2) / 2 : (two_g - p.g - 3) / 2;
  return p.g <= p.n / 2 - 1 ? p.n / 2 - 1 - p.g : 0;
}

GammaThreshold g_zero(std::uint64_t n) {
  if (n < 5) throw Error(ErrorKind::InvalidParams, "g0 needs n >= 5, got n=" + std::to_string(n));
  if (n > kMaxPathStarOrder) throw Error(ErrorKind::InvalidParams, "n=" + std::to_string(n) + " exceeds 2^31");
  std::uint64_t g = 1;
  while (pow2(g) + g <= Count(n - 1)) ++g;
  return GammaThreshold{n, g};
}

std::int64_t bound_center_score(std::uint64_t n) {
  const auto g0 = g_zero(n).g0;
  return static_cast<std::int64_t>((n - g0) / 2) - 1;
}

std::int64_t bound_centroid_score(std::uint64_t n) {
  const auto g0 = g_zero(n).g0;
  return static_cast<std::int64_t>((n - 1) / 2) - static_cast<std::int64_t>(g0);
}

std::int64_t bound_center_centroid(std::uint64_t n) {
  if (n < 5) throw Error(ErrorKind::InvalidParams, "bound needs n >= 5, got n=" + std::to_string(n));
  return static_cast<std::int64_t>((n - 3) / 4);
}

bool centroid_between(const PathStarParams& p) {
  if (!is_valid(p)) throw Error(ErrorKind::InvalidParams, describe(p));
  return centroid_between(build_path_star(p));
}

PathStarRow compare_path_star(const PathStarParams& p, bool with_direct) {
  require_gamma(p);
  PathStarRow row;
  row.params = p;
  row.closed = Middles{center_closed(p), centroid_closed(p), subtree_core_closed(p)};

  // Every closed middle set lies on the spine, so spine index gaps are distances.
  auto spine_gap = [](const MiddleSet& a, const MiddleSet& b) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (Vertex x : a.vertices) {
      for (Vertex y : b.vertices) best = std::min<std::uint64_t>(best, x > y ? x - y : y - x);
    }
    return static_cast<std::size_t>(best);
  };
  row.closed_distances.center_centroid = spine_gap(row.closed.center, row.closed.centroid);
  row.closed_distances.center_core = dist_center_score_closed(p);
  row.closed_distances.centroid_core = dist_centroid_score_closed(p);

  if (with_direct) {
    Tree t = build_path_star(p);
    row.has_direct = true;
    row.direct = analyze_middles(t);
    row.direct_distances = middle_distances(t, row.direct);
    row.closed_equals_direct =
        row.closed.center == row.direct.center && row.closed.centroid == row.direct.centroid &&
        row.closed.core == row.direct.core &&
        row.closed_distances.center_centroid == row.direct_distances.center_centroid &&
        row.closed_distances.center_core == row.direct_distances.center_core &&
        row.closed_distances.centroid_core == row.direct_distances.centroid_core;
  }
  return row;
}

}  // namespace arbormid
