#include "arbormid/random_tree.hpp"

#include <algorithm>
#include <numeric>

#include "arbormid/canonical.hpp"

namespace arbormid {

Tree random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n <= 2) return make_path(n);
  std::uniform_int_distribution<Vertex> pick(1, static_cast<Vertex>(n));
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = pick(rng);
  return tree_from_prufer(n, seq);
}

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{1});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace arbormid
