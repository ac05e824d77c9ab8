#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbormid/canonical.hpp"
#include "arbormid/middles.hpp"
#include "arbormid/path_star.hpp"
#include "arbormid/subtree_count.hpp"
#include "arbormid/tree.hpp"

namespace arbormid {

enum class Metric {
  CenterCore,      // d(C, S_c), "c-sc"
  CentroidCore,    // d(C_d, S_c), "cd-sc"
  CenterCentroid,  // d(C, C_d), "c-cd"
};

std::string_view to_string(Metric m);
// Accepts "c-sc", "cd-sc", "c-cd"; InvalidParams otherwise.
Metric parse_metric(std::string_view text);

std::size_t metric_value(const MiddleDistances& d, Metric m);

// Upper bound on the metric over all trees of order n >= 5.
std::int64_t metric_bound(std::uint64_t n, Metric m);

struct ExtremalRecord {
  std::size_t n = 0;
  Metric metric = Metric::CenterCore;
  std::size_t max_value = 0;
  std::vector<CanonicalCode> maximizers;  // sorted
  std::size_t tree_count = 0;
  std::int64_t bound = 0;
  bool bound_ok = false;
  // The reference path-star (g0 for the core metrics, g = floor(n/2) for
  // center-centroid) is among the maximizers.
  bool pathstar_attains = false;
};

// Exhaustive maximum of `metric` over all free trees of order n, 5 <= n <= 18.
// `jobs` workers analyse trees; the result does not depend on `jobs`.
ExtremalRecord survey(std::size_t n, Metric metric, unsigned jobs = 1);

struct GammaArgmax {
  std::uint64_t g = 0;      // smallest maximizing g in 2..n-3
  std::uint64_t value = 0;  // the maximum over Gamma_n
  std::vector<std::uint64_t> values;  // values[i] for g = i + 2
};

// Maximizes the metric over the path-stars of Gamma_n (closed forms).
GammaArgmax gamma_argmax(std::uint64_t n, Metric metric);

// Metric value of a single path-star from the closed forms.
std::uint64_t path_star_metric(const PathStarParams& p, Metric metric);

// Trees on n <= 18 vertices where no center/core pair brackets the centroid.
std::vector<CanonicalCode> find_betweenness_violations(std::size_t n, unsigned jobs = 1);

// Spine 1..spine_length, `p` pendants at `p_pos`, `q` pendants at the spine end.
struct DoubleBroom {
  std::size_t spine_length = 0;
  std::size_t p_pos = 0;
  std::size_t p = 0;
  std::size_t q = 0;

  std::size_t order() const { return spine_length + p + q; }
};

Tree build_double_broom(const DoubleBroom& b);

// Every double broom of order n (2 <= p_pos < L, p >= 1, q >= 0; plus the
// path-stars with p = 0) that violates betweenness.
std::vector<DoubleBroom> find_family_violations(std::size_t n);

// Spine 1..16, pendants 17..20 at 9, pendants 21..27 at 16.
Tree broom_counterexample();

struct CounterexampleReport {
  Tree tree;
  Middles middles;
  Count f_m_9;   // subtrees containing 9 in the component of 9 after cutting {9,10}
  Count f_n_10;  // subtrees containing 10 in the component of 10 after cutting {9,10}
  Count f_diff;  // f_T(9) - f_T(10)
  bool between = true;
};

// Builds the tree and checks C = {9}, C_d = {10}, S_c = {9}, f_M(9) = 144,
// f_N(10) = 134, f_T(9) - f_T(10) = 10 and that betweenness fails; throws
// ReconstructionMismatch on any discrepancy.
CounterexampleReport verify_broom_counterexample();

struct DistinctMiddlesWitness {
  CanonicalCode code;
  Tree tree;
  Middles middles;
  Count max_count;
};

struct DistinctMiddlesResult {
  bool found = false;
  std::vector<DistinctMiddlesWitness> witnesses;
};

// Trees of order n whose center, centroid and subtree core are pairwise disjoint.
DistinctMiddlesResult distinct_middles_exists(std::size_t n);

// f of `keep` inside its component after deleting the edge {keep, cut_neighbor}.
Count component_count(const Tree& t, Vertex keep, Vertex cut_neighbor);

}  // namespace arbormid
