#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arbormid/metrics.hpp"
#include "arbormid/tree.hpp"

namespace arbormid {

// Exact nonnegative subtree counts. Star hubs reach 2^(n-1), so no fixed
// width integer is safe.
using Count = boost::multiprecision::cpp_int;

// f_T(v) for every vertex; index 0 is unused and holds zero.
struct CountTable {
  std::vector<Count> values;

  const Count& at(Vertex v) const { return values.at(v); }
  std::size_t order() const { return values.empty() ? 0 : values.size() - 1; }
  Count max() const;
};

// Number of subtrees containing v: the product of (1 + g(c)) over the
// children c of v when the tree is rooted at v.
Count count_at_vertex(const Tree& t, Vertex v);

// Every f_T(v) via one rerooting pass; prefix/suffix products of the
// neighbour factors avoid division.
CountTable count_all_vertices(const Tree& t);

// Subtrees containing every vertex of `s` (EmptySet when empty).
Count count_with_set(const Tree& t, std::span<const Vertex> s);

MiddleSet subtree_core(const Tree& t);
MiddleSet subtree_core(const CountTable& table);

inline constexpr std::size_t kBruteForceMaxOrder = 24;

// Enumerates connected vertex subsets directly. Test oracle; TooLarge when
// n > kBruteForceMaxOrder.
Count brute_force_count(const Tree& t, std::span<const Vertex> s);

// "v<TAB>count" per line.
void write_count_table(std::ostream& out, const CountTable& table);

}  // namespace arbormid
