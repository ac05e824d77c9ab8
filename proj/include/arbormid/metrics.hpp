#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arbormid/tree.hpp"

namespace arbormid {

enum class MiddleKind { Center, Centroid, SubtreeCore };

std::string_view to_string(MiddleKind kind);

// One of the three middle parts of a tree: one vertex or two adjacent ones,
// always sorted ascending.
struct MiddleSet {
  MiddleKind kind = MiddleKind::Center;
  std::vector<Vertex> vertices;

  bool contains(Vertex v) const;
  friend bool operator==(const MiddleSet&, const MiddleSet&) = default;
};

// "4,5"
std::string join_ids(std::span<const Vertex> ids);

// BFS distances from `source`; index 0 unused.
std::vector<std::size_t> distances_from(const Tree& t, Vertex source);

std::size_t distance(const Tree& t, Vertex u, Vertex v);

// Minimum pairwise distance; throws EmptySet when either side is empty.
std::size_t set_distance(const Tree& t, std::span<const Vertex> a, std::span<const Vertex> b);
std::size_t set_distance(const Tree& t, const MiddleSet& a, const MiddleSet& b);

std::size_t eccentricity(const Tree& t, Vertex v);
// All eccentricities by BFS from every vertex; index 0 unused.
std::vector<std::size_t> eccentricities(const Tree& t);
std::size_t radius(const Tree& t);
std::size_t diameter(const Tree& t);

MiddleSet center(const Tree& t);

// Middle vertex (or vertices) of one longest path found by a double BFS sweep.
// Independent of `center`; the two are cross-checked in tests.
MiddleSet center_of_diametral_path(const Tree& t);

// Largest branch at v measured in edges (= vertex count of the largest
// component of t - v). Zero for the one-vertex tree.
std::size_t branch_weight(const Tree& t, Vertex v);
// All branch weights from a single rooting; index 0 unused.
std::vector<std::size_t> branch_weights(const Tree& t);

MiddleSet centroid(const Tree& t);

// Unique u-v path, endpoints included.
std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v);

// Parent array and a BFS order for `t` rooted at `root` (parent[root] == 0).
struct Rooting {
  Vertex root = 0;
  std::vector<Vertex> parent;
  std::vector<Vertex> order;  // BFS order, root first
};
Rooting root_at(const Tree& t, Vertex root);

}  // namespace arbormid
