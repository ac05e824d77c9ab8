#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace arbormid {

// Vertex ids are 1-based throughout; 0 is never a valid vertex.
using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable, validated tree on vertices 1..n.
class Tree {
 public:
  // Throws Error with EdgeCountMismatch, VertexOutOfRange, SelfLoop,
  // DuplicateEdge or NotConnected.
  static Tree from_edge_list(std::size_t n, std::span<const Edge> edges);

  // Builds a tree from a parent array: parent[i] is the parent of vertex i+2
  // for a tree rooted at vertex 1. Used by generators that already know the
  // input is a tree; still validated.
  static Tree from_parents(std::span<const Vertex> parents_of_2_to_n);

  std::size_t order() const noexcept { return n_; }
  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool is_pendant(Vertex v) const { return degree(v) == 1; }
  bool adjacent(Vertex u, Vertex v) const;

  // Edges normalized to u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Throws VertexOutOfRange naming `v`.
  void require_vertex(Vertex v) const;

  friend bool operator==(const Tree& a, const Tree& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  Tree() = default;

  std::size_t n_ = 0;
  // adj_[v] for v in 1..n; adj_[0] unused.
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

// Common shapes.
Tree make_path(std::size_t n);
// Star K_{1,n-1} whose hub is vertex n (leaves 1..n-1).
Tree make_star(std::size_t n);

std::string describe(const Edge& e);

}  // namespace arbormid
