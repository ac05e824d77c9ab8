#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "arbormid/tree.hpp"

namespace arbormid {

// Isomorphism invariant of a free tree: AHU parenthesis encoding rooted at the
// centroid. Equal codes iff isomorphic trees.
struct CanonicalCode {
  std::string code;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const Tree& t);

// AHU encoding of `t` rooted at `root`, ignoring the subtree hanging off
// `excluded` (0 for none).
std::string rooted_code(const Tree& t, Vertex root, Vertex excluded = 0);

// Labelled tree from a Prüfer sequence of length n-2 over 1..n.
Tree tree_from_prufer(std::size_t n, std::span<const Vertex> sequence);

// Tree with vertex v renamed to perm[v-1].
Tree relabel(const Tree& t, std::span<const Vertex> perm);

}  // namespace arbormid
