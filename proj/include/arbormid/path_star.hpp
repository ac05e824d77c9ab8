#pragma once

#include <cstddef>
#include <cstdint>

#include "arbormid/metrics.hpp"
#include "arbormid/middles.hpp"
#include "arbormid/subtree_count.hpp"
#include "arbormid/tree.hpp"

namespace arbormid {

// P_{n-g,g}: spine 1..n-g, plus g pendants n-g+1..n hung on spine vertex n-g.
struct PathStarParams {
  std::uint64_t n = 0;
  std::uint64_t g = 0;

  std::uint64_t spine() const { return n - g; }
  friend bool operator==(const PathStarParams&, const PathStarParams&) = default;
};

inline constexpr std::uint64_t kMaxPathStarOrder = std::uint64_t{1} << 31;

// 2 <= n <= 2^31 and 1 <= g <= n-1.
bool is_valid(const PathStarParams& p);
// n >= 5 and 2 <= g <= n-3 (the family Gamma_n).
bool in_gamma(const PathStarParams& p);

// Throws InvalidParams unless is_valid(p).
Tree build_path_star(const PathStarParams& p);

// The closed forms below require in_gamma(p) and throw InvalidParams otherwise.

// f(i) = i(n-g-i) + i*2^g on spine vertex i; IndexOutOfRange unless 1 <= i <= n-g.
Count spine_count(const PathStarParams& p, std::uint64_t i);
// f at each pendant of the star end: 1 + (n-g)*2^(g-1).
Count leaf_count(const PathStarParams& p);

MiddleSet subtree_core_closed(const PathStarParams& p);
MiddleSet center_closed(const PathStarParams& p);
MiddleSet centroid_closed(const PathStarParams& p);
std::uint64_t dist_center_score_closed(const PathStarParams& p);
std::uint64_t dist_centroid_score_closed(const PathStarParams& p);

struct GammaThreshold {
  std::uint64_t n = 0;
  std::uint64_t g0 = 0;
};

// Smallest positive g with 2^g + g > n - 1, by ascending scan. n >= 5.
GammaThreshold g_zero(std::uint64_t n);

// floor((n - g0)/2) - 1
std::int64_t bound_center_score(std::uint64_t n);
// floor((n - 1)/2) - g0
std::int64_t bound_centroid_score(std::uint64_t n);
// floor((n - 3)/4), the center-centroid bound for trees on n >= 5 vertices.
std::int64_t bound_center_centroid(std::uint64_t n);

// Betweenness predicate evaluated on the built tree.
bool centroid_between(const PathStarParams& p);

// Closed forms next to the direct computation on the built tree.
struct PathStarRow {
  PathStarParams params;
  Middles closed;
  MiddleDistances closed_distances;
  bool has_direct = false;
  Middles direct;
  MiddleDistances direct_distances;
  bool closed_equals_direct = false;
};

PathStarRow compare_path_star(const PathStarParams& p, bool with_direct = true);

}  // namespace arbormid
