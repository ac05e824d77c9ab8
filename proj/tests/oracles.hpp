#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's metric or counting routines; only Tree accessors are used.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "arbormid/tree.hpp"

namespace arbormid::oracle {

// All-pairs distances by Floyd-Warshall over the adjacency matrix.
inline std::vector<std::vector<std::size_t>> all_pairs(const Tree& t) {
  const std::size_t n = t.order();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(n + 1, inf));
  for (Vertex v = 1; v <= n; ++v) d[v][v] = 0;
  for (const Edge& e : t.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (Vertex k = 1; k <= n; ++k)
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = 1; j <= n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<Vertex> argmin(const std::vector<std::size_t>& values) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 1; i < values.size(); ++i) best = std::min(best, values[i]);
  std::vector<Vertex> out;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == best) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

inline std::vector<Vertex> center(const Tree& t) {
  auto d = all_pairs(t);
  std::vector<std::size_t> ecc(t.order() + 1, 0);
  for (Vertex v = 1; v <= t.order(); ++v) ecc[v] = *std::max_element(d[v].begin() + 1, d[v].end());
  return argmin(ecc);
}

// Branch weight by deleting v and measuring each component with a DFS.
inline std::size_t weight(const Tree& t, Vertex v) {
  std::vector<char> seen(t.order() + 1, 0);
  seen[v] = 1;
  std::size_t best = 0;
  for (Vertex start : t.neighbors(v)) {
    std::size_t size = 0;
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex y : t.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    best = std::max(best, size);
  }
  return best;
}

inline std::vector<Vertex> centroid(const Tree& t) {
  std::vector<std::size_t> w(t.order() + 1, 0);
  for (Vertex v = 1; v <= t.order(); ++v) w[v] = weight(t, v);
  return argmin(w);
}

// Connected vertex subsets containing `required`, by checking every mask.
inline std::uint64_t subsets_containing(const Tree& t, const std::vector<Vertex>& required) {
  const std::size_t n = t.order();
  std::uint32_t need = 0;
  for (Vertex v : required) need |= 1u << (v - 1);
  std::uint64_t count = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if ((mask & need) != need) continue;
    // A subset of a tree is connected iff it induces |S|-1 edges.
    std::size_t edges = 0;
    for (const Edge& e : t.edges()) {
      if ((mask >> (e.u - 1) & 1u) && (mask >> (e.v - 1) & 1u)) ++edges;
    }
    if (edges + 1 == static_cast<std::size_t>(std::popcount(mask))) ++count;
  }
  return count;
}

}  // namespace arbormid::oracle
