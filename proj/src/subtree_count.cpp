#include "arbormid/subtree_count.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>

#include "arbormid/error.hpp"

namespace arbormid {

Count CountTable::max() const {
  Count best = 0;
  for (const Count& c : values) best = std::max(best, c);
  return best;
}

namespace {

// g(x) for every x: subtrees of the rooted subtree at x that contain x.
std::vector<Count> rooted_counts(const Tree& t, const Rooting& r) {
  std::vector<Count> down(t.order() + 1, 1);
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    Vertex x = *it;
    if (Vertex p = r.parent[x]; p != 0) down[p] *= 1 + down[x];
  }
  return down;
}

}  // namespace

Count count_at_vertex(const Tree& t, Vertex v) {
  Rooting r = root_at(t, v);
  return rooted_counts(t, r)[v];
}

CountTable count_all_vertices(const Tree& t) {
  const std::size_t n = t.order();
  Rooting r = root_at(t, 1);
  std::vector<Count> down = rooted_counts(t, r);

  // up[x]: subtrees containing parent(x) inside t minus the subtree of x.
  std::vector<Count> up(n + 1, 0);
  CountTable table;
  table.values.assign(n + 1, 0);

  std::vector<Vertex> children;
  std::vector<Count> prefix;
  for (Vertex x : r.order) {
    Count outside = r.parent[x] == 0 ? Count(1) : Count(1 + up[x]);
    table.values[x] = down[x] * outside;

    children.clear();
    for (Vertex c : t.neighbors(x)) {
      if (c != r.parent[x]) children.push_back(c);
    }
    const std::size_t k = children.size();
    prefix.assign(k + 1, 1);
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * (1 + down[children[i]]);
    Count suffix = 1;
    for (std::size_t i = k; i-- > 0;) {
      up[children[i]] = outside * prefix[i] * suffix;
      suffix *= 1 + down[children[i]];
    }
  }
  return table;
}

Count count_with_set(const Tree& t, std::span<const Vertex> s) {
  if (s.empty()) throw Error(ErrorKind::EmptySet, "count_with_set needs a nonempty vertex set");
  for (Vertex v : s) t.require_vertex(v);

  Rooting r = root_at(t, s.front());
  std::vector<Count> down = rooted_counts(t, r);

  // Steiner tree: union of the paths from the anchor to each member.
  std::vector<char> steiner(t.order() + 1, 0);
  steiner[r.root] = 1;
  for (Vertex v : s) {
    for (Vertex x = v; !steiner[x]; x = r.parent[x]) steiner[x] = 1;
  }

  Count total = 1;
  for (Vertex x = 1; x <= t.order(); ++x) {
    if (!steiner[x]) continue;
    for (Vertex c : t.neighbors(x)) {
      if (c != r.parent[x] && !steiner[c]) total *= 1 + down[c];
    }
  }
  return total;
}

MiddleSet subtree_core(const CountTable& table) {
  Count best = table.max();
  MiddleSet out{MiddleKind::SubtreeCore, {}};
  for (Vertex v = 1; v <= table.order(); ++v) {
    if (table.values[v] == best) out.vertices.push_back(v);
  }
  return out;
}

MiddleSet subtree_core(const Tree& t) { return subtree_core(count_all_vertices(t)); }

namespace {

using Mask = std::uint32_t;

struct SubsetEnumerator {
  std::vector<Mask> nbr;
  Mask required = 0;
  std::uint64_t hits = 0;

  // Every connected set containing `current` and avoiding `banned` is reached
  // exactly once: branch on the lowest candidate (take it / ban it).
  void grow(Mask current, Mask candidates, Mask banned) {
    if ((current & required) == required) ++hits;
    while (candidates) {
      Mask w = candidates & (~candidates + 1);
      candidates &= ~w;
      int idx = std::countr_zero(w);
      Mask next = current | w;
      grow(next, (candidates | nbr[idx]) & ~next & ~banned, banned);
      banned |= w;
    }
  }
};

}  // namespace

Count brute_force_count(const Tree& t, std::span<const Vertex> s) {
  const std::size_t n = t.order();
  if (n > kBruteForceMaxOrder) {
    throw Error(ErrorKind::TooLarge, "brute force limited to n <= 24, got n=" + std::to_string(n));
  }
  if (s.empty()) throw Error(ErrorKind::EmptySet, "brute_force_count needs a nonempty vertex set");

  SubsetEnumerator e;
  e.nbr.assign(n, 0);
  for (const Edge& edge : t.edges()) {
    e.nbr[edge.u - 1] |= Mask{1} << (edge.v - 1);
    e.nbr[edge.v - 1] |= Mask{1} << (edge.u - 1);
  }
  for (Vertex v : s) {
    t.require_vertex(v);
    e.required |= Mask{1} << (v - 1);
  }
  Vertex anchor = s.front();
  Mask start = Mask{1} << (anchor - 1);
  e.grow(start, e.nbr[anchor - 1], 0);
  return Count(e.hits);
}

void write_count_table(std::ostream& out, const CountTable& table) {
  for (Vertex v = 1; v <= table.order(); ++v) out << v << '\t' << table.values[v] << '\n';
}

}  // namespace arbormid
