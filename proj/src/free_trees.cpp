#include "arbormid/free_trees.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "arbormid/error.hpp"

namespace arbormid {

FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n) {
  if (n == 0) throw Error(ErrorKind::InvalidParams, "free trees need n >= 1");
  if (n > kMaxExhaustiveOrder) {
    throw Error(ErrorKind::TooLarge, "exhaustive generation capped at n=" + std::to_string(kMaxExhaustiveOrder) +
                                         ", got n=" + std::to_string(n));
  }
  // The path hanging from its end point has the largest level sequence.
  levels_.resize(n);
  std::iota(levels_.begin(), levels_.end(), 0);
}

bool FreeTreeGenerator::advance() {
  std::size_t p = n_;
  for (std::size_t i = n_; i-- > 1;) {
    if (levels_[i] > 1) {
      p = i;
      break;
    }
  }
  if (p == n_) return false;  // star: last rooted tree
  std::size_t q = p;
  while (levels_[q] != levels_[p] - 1) --q;
  const std::size_t shift = p - q;
  for (std::size_t i = p; i < n_; ++i) levels_[i] = levels_[i - shift];
  return true;
}

bool FreeTreeGenerator::accept() const {
  // Root children are the level-1 entries; each owns the run of deeper
  // entries that follows it.
  std::size_t big_start = 0;
  std::size_t big_size = 0;
  for (std::size_t i = 1; i < n_;) {
    std::size_t j = i + 1;
    while (j < n_ && levels_[j] > 1) ++j;
    if (j - i > big_size) {
      big_size = j - i;
      big_start = i;
    }
    i = j;
  }
  if (2 * big_size < n_) return true;
  if (2 * big_size > n_) return false;

  // Bicentroidal: compare the root half with the other half.
  std::vector<int> root_half;
  std::vector<int> other_half;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i >= big_start && i < big_start + big_size) other_half.push_back(levels_[i] - 1);
    else root_half.push_back(levels_[i]);
  }
  return root_half >= other_half;
}

std::optional<Tree> FreeTreeGenerator::next() {
  while (!done_) {
    if (started_) {
      if (!advance()) {
        done_ = true;
        break;
      }
    }
    started_ = true;
    if (accept()) {
      emitted_ = levels_;
      return tree_from_levels(levels_);
    }
  }
  return std::nullopt;
}

Tree tree_from_levels(const std::vector<int>& levels) {
  std::vector<Vertex> parents;
  parents.reserve(levels.size());
  // last_at[d]: most recent vertex seen at depth d
  std::vector<Vertex> last_at(levels.size() + 1, 0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto v = static_cast<Vertex>(i + 1);
    if (i > 0) parents.push_back(last_at[levels[i] - 1]);
    last_at[levels[i]] = v;
  }
  return Tree::from_parents(parents);
}

std::vector<Tree> enumerate_free_trees(std::size_t n) {
  std::vector<Tree> out;
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

void for_each_free_tree(std::size_t n, const std::function<void(const Tree&)>& visit) {
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) visit(*t);
}

}  // namespace arbormid
