#include "arbormid/perturb.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "arbormid/error.hpp"
#include "arbormid/subtree_count.hpp"

namespace arbormid {

namespace {

std::string move_text(const LeafMove& mv) {
  return "leaf move y=" + std::to_string(mv.y) + " -> w=" + std::to_string(mv.w);
}

Tree rewire(const Tree& t, Edge removed, Edge added) {
  std::vector<Edge> edges;
  edges.reserve(t.edges().size());
  if (removed.u > removed.v) std::swap(removed.u, removed.v);
  for (const Edge& e : t.edges()) {
    if (e != removed) edges.push_back(e);
  }
  edges.push_back(added);
  return Tree::from_edge_list(t.order(), edges);
}

// t - y for a pendant y, relabelled onto 1..n-1 by shifting ids above y down.
Vertex shift_past(Vertex v, Vertex removed) { return v > removed ? v - 1 : v; }

Tree remove_pendant(const Tree& t, Vertex y) {
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    if (e.u == y || e.v == y) continue;
    edges.push_back({shift_past(e.u, y), shift_past(e.v, y)});
  }
  return Tree::from_edge_list(t.order() - 1, edges);
}

Count f(const Tree& t, std::initializer_list<Vertex> s) {
  std::vector<Vertex> set(s);
  return count_with_set(t, set);
}

// Reason the path-move lemma's hypotheses fail, or nothing when they hold.
std::optional<std::string> path_lemma_violation(const Tree& t, Vertex v, Vertex u, const PathMove& mv) {
  t.require_vertex(v);
  t.require_vertex(u);
  if (!subtree_core(t).contains(v)) return "v=" + std::to_string(v) + " is not in the subtree core";
  if (!t.adjacent(u, v)) return "u=" + std::to_string(u) + " is not adjacent to v=" + std::to_string(v);

  Rooting r = root_at(t, v);
  std::vector<char> in_branch(t.order() + 1, 0);
  in_branch[v] = 1;
  for (Vertex x : r.order) {
    if (x == u || (x != v && in_branch[r.parent[x]] && r.parent[x] != v)) in_branch[x] = 1;
  }
  bool branch_is_path = true;
  for (Vertex x = 1; x <= t.order(); ++x) {
    if (x != v && in_branch[x] && t.degree(x) >= 3) branch_is_path = false;
  }
  if (branch_is_path) return std::string("the branch at v through u is a path");

  try {
    validate(t, mv);
  } catch (const Error& e) {
    return std::string(e.what());
  }
  const Vertex x = mv.path.back();
  if (!in_branch[x]) return "pendant x=" + std::to_string(x) + " is not in the branch through u";
  PathMove expected = hanging_path_move(t, x, mv.z);
  if (expected.y != mv.y || expected.path != mv.path) {
    return "y=" + std::to_string(mv.y) + " is not the closest degree >= 3 vertex to x=" + std::to_string(x);
  }
  if (!in_branch[mv.z] || mv.z == v) return "z=" + std::to_string(mv.z) + " is not in the branch through u";
  auto vz = path_between(t, v, mv.z);
  bool has_y = std::find(vz.begin(), vz.end(), mv.y) != vz.end();
  bool has_y1 = std::find(vz.begin(), vz.end(), mv.path.front()) != vz.end();
  if (!has_y || has_y1) return "the v-z path must contain y and avoid y1";
  return std::nullopt;
}

}  // namespace

void validate(const Tree& t, const LeafMove& mv) {
  t.require_vertex(mv.y);
  t.require_vertex(mv.w);
  if (mv.y == mv.w) throw Error(ErrorKind::SameVertex, move_text(mv));
  if (!t.is_pendant(mv.y)) throw Error(ErrorKind::NotPendant, "vertex " + std::to_string(mv.y) + " in " + move_text(mv));
  if (t.adjacent(mv.y, mv.w)) throw Error(ErrorKind::AdjacentAlready, move_text(mv));
}

void validate(const Tree& t, const PathMove& mv) {
  t.require_vertex(mv.y);
  t.require_vertex(mv.z);
  if (mv.path.empty()) throw Error(ErrorKind::InvalidHangingPath, "empty path");
  for (Vertex x : mv.path) t.require_vertex(x);
  if (t.degree(mv.y) < 3) {
    throw Error(ErrorKind::InvalidHangingPath, "anchor y=" + std::to_string(mv.y) + " has degree below 3");
  }
  Vertex prev = mv.y;
  for (std::size_t i = 0; i < mv.path.size(); ++i) {
    Vertex x = mv.path[i];
    const bool last = i + 1 == mv.path.size();
    if (x == mv.y || !t.adjacent(prev, x) || t.degree(x) != (last ? 1u : 2u)) {
      throw Error(ErrorKind::InvalidHangingPath, "vertex " + std::to_string(x) + " at position " +
                                                     std::to_string(i + 1) + " breaks the hanging path");
    }
    prev = x;
  }
  if (mv.z == mv.y) throw Error(ErrorKind::BadDestination, "z equals the anchor y=" + std::to_string(mv.y));
  if (std::find(mv.path.begin(), mv.path.end(), mv.z) != mv.path.end()) {
    throw Error(ErrorKind::BadDestination, "z=" + std::to_string(mv.z) + " lies on the moved path");
  }
}

Tree relocate_leaf(const Tree& t, const LeafMove& mv) {
  validate(t, mv);
  Vertex old = t.neighbors(mv.y).front();
  return rewire(t, {old, mv.y}, {mv.y, mv.w});
}

Tree relocate_path(const Tree& t, const PathMove& mv) {
  validate(t, mv);
  return rewire(t, {mv.y, mv.path.front()}, {mv.z, mv.path.front()});
}

bool verify_leaf_identity(const Tree& t, const LeafMove& mv, Vertex a) {
  Tree moved = relocate_leaf(t, mv);
  t.require_vertex(a);
  if (a == mv.y) throw Error(ErrorKind::InvalidParams, "a must differ from the moved leaf y");
  Count lhs = count_at_vertex(moved, a);
  Count rhs = f(t, {a}) - f(t, {a, mv.y}) + f(t, {a, mv.w}) - f(t, {a, mv.w, mv.y});
  return lhs == rhs;
}

LeafIdentityParts intermediate_identities(const Tree& t, const LeafMove& mv, Vertex a) {
  Tree moved = relocate_leaf(t, mv);
  t.require_vertex(a);
  if (a == mv.y) throw Error(ErrorKind::InvalidParams, "a must differ from the moved leaf y");
  Tree reduced = remove_pendant(t, mv.y);
  const Vertex ra = shift_past(a, mv.y);
  const Vertex rw = shift_past(mv.w, mv.y);

  LeafIdentityParts parts;
  parts.split_on_y = count_at_vertex(moved, a) == f(reduced, {ra}) + f(reduced, {ra, rw});
  parts.drop_y = f(reduced, {ra}) == f(t, {a}) - f(t, {a, mv.y});
  parts.drop_y_with_w = f(reduced, {ra, rw}) == f(t, {a, mv.w}) - f(t, {a, mv.w, mv.y});
  return parts;
}

MiddleSet core_after_leaf_move(const Tree& t, Vertex v, const LeafMove& mv) {
  t.require_vertex(v);
  if (!subtree_core(t).contains(v)) {
    throw Error(ErrorKind::InvalidParams, "v=" + std::to_string(v) + " is not in the subtree core");
  }
  if (mv.w != v) throw Error(ErrorKind::InvalidParams, "destination must be v=" + std::to_string(v));
  MiddleSet core = subtree_core(relocate_leaf(t, mv));
  if (core.vertices != std::vector<Vertex>{v}) {
    throw Error(ErrorKind::CoreMismatch, "core after " + move_text(mv) + " is {" + join_ids(core.vertices) +
                                             "}, expected {" + std::to_string(v) + "}");
  }
  return core;
}

bool verify_path_identity(const Tree& t, const PathMove& mv, Vertex a) {
  Tree moved = relocate_path(t, mv);
  t.require_vertex(a);
  if (std::find(mv.path.begin(), mv.path.end(), a) != mv.path.end()) {
    throw Error(ErrorKind::InvalidParams, "a=" + std::to_string(a) + " lies on the moved path");
  }
  const Count m = mv.path.size();
  Count lhs = (m + 1) * count_at_vertex(moved, a);
  Count rhs = (m + 1) * f(t, {a}) - m * f(t, {a, mv.y}) + m * (m + 1) * f(t, {a, mv.z}) -
              m * m * f(t, {a, mv.z, mv.y});
  return lhs == rhs;
}

PathMove hanging_path_move(const Tree& t, Vertex x, Vertex z) {
  t.require_vertex(x);
  if (!t.is_pendant(x)) throw Error(ErrorKind::InvalidHangingPath, "x=" + std::to_string(x) + " is not pendant");
  std::vector<Vertex> walk{x};
  Vertex prev = x;
  Vertex cur = t.neighbors(x).front();
  while (t.degree(cur) == 2) {
    walk.push_back(cur);
    auto nb = t.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (t.degree(cur) < 3) throw Error(ErrorKind::InvalidHangingPath, "tree is a path; no vertex of degree >= 3");
  std::reverse(walk.begin(), walk.end());
  PathMove mv{cur, std::move(walk), z};
  validate(t, mv);
  return mv;
}

bool path_lemma_applies(const Tree& t, Vertex v, Vertex u, const PathMove& mv) {
  return !path_lemma_violation(t, v, u, mv).has_value();
}

bool path_lemma_conclusion(const Tree& t, Vertex v, Vertex u, const PathMove& mv) {
  if (auto why = path_lemma_violation(t, v, u, mv)) throw Error(ErrorKind::InvalidParams, *why);
  Tree moved = relocate_path(t, mv);
  return count_at_vertex(moved, v) > count_at_vertex(moved, u);
}

}  // namespace arbormid
