#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "arbormid/tree.hpp"

namespace arbormid {

inline constexpr std::size_t kMaxExhaustiveOrder = 18;

// Streams one representative of every isomorphism class of free trees on n
// vertices.
//
// Rooted trees are walked in reverse lexicographic order of their canonical
// level sequences (the Beyer-Hedetniemi successor rule). A rooted tree is
// emitted only if its root is a centroid and, when the tree is bicentroidal,
// the half containing the root is not smaller than the other half. Every
// free tree has exactly one such rooting.
class FreeTreeGenerator {
 public:
  // TooLarge when n > kMaxExhaustiveOrder, InvalidParams when n == 0.
  explicit FreeTreeGenerator(std::size_t n);

  // Next tree, or nothing once the class list is exhausted.
  std::optional<Tree> next();

  // Level sequence of the last emitted tree (root at level 0).
  const std::vector<int>& levels() const { return emitted_; }

 private:
  bool advance();
  bool accept() const;

  std::size_t n_;
  std::vector<int> levels_;
  std::vector<int> emitted_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Tree> enumerate_free_trees(std::size_t n);
void for_each_free_tree(std::size_t n, const std::function<void(const Tree&)>& visit);

// Tree whose vertex i+1 sits at levels[i]; parent is the nearest earlier
// vertex one level up.
Tree tree_from_levels(const std::vector<int>& levels);

}  // namespace arbormid
