#include "arbormid/tree.hpp"

#include <algorithm>
#include <numeric>

#include "arbormid/error.hpp"

namespace arbormid {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EdgeCountMismatch: return "EdgeCountMismatch";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotPendant: return "NotPendant";
    case ErrorKind::AdjacentAlready: return "AdjacentAlready";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::InvalidHangingPath: return "InvalidHangingPath";
    case ErrorKind::BadDestination: return "BadDestination";
    case ErrorKind::CoreMismatch: return "CoreMismatch";
    case ErrorKind::ReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

std::string describe(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

namespace {

// Union-find used only for the connectivity check during validation.
struct DisjointSets {
  std::vector<Vertex> parent;
  explicit DisjointSets(std::size_t n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), Vertex{0}); }
  Vertex find(Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Tree Tree::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorKind::InvalidParams, "tree must have at least one vertex");
  if (n > 0xFFFFFFFEu) throw Error(ErrorKind::TooLarge, "n=" + std::to_string(n));
  if (edges.size() != n - 1) {
    throw Error(ErrorKind::EdgeCountMismatch,
                "expected " + std::to_string(n - 1) + " edges for n=" + std::to_string(n) + ", got " +
                    std::to_string(edges.size()));
  }

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    for (Vertex x : {e.u, e.v}) {
      if (x < 1 || x > n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(x) + " in edge " + describe(e) + " not in 1.." + std::to_string(n));
      }
    }
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "edge " + describe(e));
    normalized.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(normalized.begin(), normalized.end());
  if (auto dup = std::adjacent_find(normalized.begin(), normalized.end()); dup != normalized.end()) {
    throw Error(ErrorKind::DuplicateEdge, "edge " + describe(*dup));
  }

  DisjointSets sets(n);
  for (const Edge& e : normalized) {
    if (!sets.unite(e.u, e.v)) {
      // n-1 distinct edges with a cycle always leave the graph disconnected.
      throw Error(ErrorKind::NotConnected, "edge " + describe(e) + " closes a cycle");
    }
  }

  Tree t;
  t.n_ = n;
  t.adj_.assign(n + 1, {});
  for (const Edge& e : normalized) {
    t.adj_[e.u].push_back(e.v);
    t.adj_[e.v].push_back(e.u);
  }
  for (auto& list : t.adj_) std::sort(list.begin(), list.end());
  t.edges_ = std::move(normalized);
  return t;
}

Tree Tree::from_parents(std::span<const Vertex> parents_of_2_to_n) {
  std::vector<Edge> edges;
  edges.reserve(parents_of_2_to_n.size());
  for (std::size_t i = 0; i < parents_of_2_to_n.size(); ++i) {
    edges.push_back({parents_of_2_to_n[i], static_cast<Vertex>(i + 2)});
  }
  return from_edge_list(parents_of_2_to_n.size() + 1, edges);
}

void Tree::require_vertex(Vertex v) const {
  if (!contains(v)) {
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n_));
  }
}

std::span<const Vertex> Tree::neighbors(Vertex v) const {
  require_vertex(v);
  return adj_[v];
}

bool Tree::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  require_vertex(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Tree make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return Tree::from_edge_list(n, edges);
}

Tree make_star(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(n)});
  return Tree::from_edge_list(n, edges);
}

}  // namespace arbormid
