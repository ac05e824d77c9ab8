#pragma once

#include <vector>

#include "arbormid/metrics.hpp"
#include "arbormid/tree.hpp"

namespace arbormid {

// Detach pendant y and hang it on w.
struct LeafMove {
  Vertex y = 0;
  Vertex w = 0;
};

// Detach the hanging path [y1, ..., ym] (y1 adjacent to anchor y, ym pendant,
// interior vertices of degree 2) from y and attach y1 to z.
struct PathMove {
  Vertex y = 0;
  std::vector<Vertex> path;
  Vertex z = 0;
};

// Throws SameVertex, NotPendant or AdjacentAlready when the move is invalid.
void validate(const Tree& t, const LeafMove& mv);
// Throws InvalidHangingPath or BadDestination when the move is invalid.
void validate(const Tree& t, const PathMove& mv);

// Vertex ids are preserved; only the edge set changes.
Tree relocate_leaf(const Tree& t, const LeafMove& mv);
Tree relocate_path(const Tree& t, const PathMove& mv);

// f_~T(a) = f_T(a) - f_T(a,y) + f_T(a,w) - f_T(a,w,y), for a != y.
bool verify_leaf_identity(const Tree& t, const LeafMove& mv, Vertex a);

// The three intermediate identities behind the leaf-move formula, with
// T' = T - y:  f_~T(a) = f_T'(a) + f_T'(a,w);  f_T'(a) = f_T(a) - f_T(a,y);
// f_T'(a,w) = f_T(a,w) - f_T(a,w,y).
struct LeafIdentityParts {
  bool split_on_y = false;
  bool drop_y = false;
  bool drop_y_with_w = false;
  bool all() const { return split_on_y && drop_y && drop_y_with_w; }
};
LeafIdentityParts intermediate_identities(const Tree& t, const LeafMove& mv, Vertex a);

// Moving a pendant onto a subtree-core vertex v makes {v} the whole core.
// Requires v in S_c(t) and mv.w == v; throws CoreMismatch if the resulting
// core differs from {v}.
MiddleSet core_after_leaf_move(const Tree& t, Vertex v, const LeafMove& mv);

// Fraction-free form of the path-move identity:
// (m+1) f_~T(a) = (m+1) f_T(a) - m f_T(a,y) + m(m+1) f_T(a,z) - m^2 f_T(a,z,y)
// for every a off the moved path.
bool verify_path_identity(const Tree& t, const PathMove& mv, Vertex a);

// Hanging path ending at pendant x: y is the closest vertex to x of degree
// >= 3. Throws InvalidHangingPath if x is not pendant or the tree is a path.
PathMove hanging_path_move(const Tree& t, Vertex x, Vertex z);

// Checks the conclusion f_~T(v) > f_~T(u) of the path-move lemma, after
// validating its hypotheses: v in S_c(t); u adjacent to v; the branch B at v
// through u is not a path; mv is the hanging-path move of a pendant of B;
// z != y lies in B and the v-z path contains y but not y1. Throws
// InvalidParams (naming the failed hypothesis) when a hypothesis fails.
bool path_lemma_conclusion(const Tree& t, Vertex v, Vertex u, const PathMove& mv);

// True when the hypotheses of path_lemma_conclusion hold.
bool path_lemma_applies(const Tree& t, Vertex v, Vertex u, const PathMove& mv);

}  // namespace arbormid
