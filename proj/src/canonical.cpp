#include "arbormid/canonical.hpp"

#include <algorithm>
#include <queue>

#include "arbormid/error.hpp"
#include "arbormid/metrics.hpp"

namespace arbormid {

std::string rooted_code(const Tree& t, Vertex root, Vertex excluded) {
  Rooting r = root_at(t, root);
  std::vector<std::vector<std::string>> parts(t.order() + 1);
  std::vector<std::string> code(t.order() + 1);
  std::vector<char> skip(t.order() + 1, 0);
  if (excluded != 0) skip[excluded] = 1;
  for (Vertex x : r.order) {
    if (x != root && skip[r.parent[x]]) skip[x] = 1;
  }
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    Vertex x = *it;
    if (skip[x]) continue;
    auto& kids = parts[x];
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ')';
    if (Vertex p = r.parent[x]; p != 0) parts[p].push_back(std::move(s));
    else code[x] = std::move(s);
  }
  return code[root];
}

CanonicalCode canonical_code(const Tree& t) {
  MiddleSet cd = centroid(t);
  if (cd.vertices.size() == 1) return CanonicalCode{"U" + rooted_code(t, cd.vertices[0])};
  const Vertex a = cd.vertices[0];
  const Vertex b = cd.vertices[1];
  std::string ca = rooted_code(t, a, b);
  std::string cb = rooted_code(t, b, a);
  return CanonicalCode{"B" + std::min(ca + cb, cb + ca)};
}

Tree tree_from_prufer(std::size_t n, std::span<const Vertex> sequence) {
  if (n < 2 || sequence.size() != n - 2) {
    throw Error(ErrorKind::InvalidParams, "Prüfer sequence for n=" + std::to_string(n) + " must have length n-2");
  }
  std::vector<std::size_t> degree(n + 1, 1);
  for (Vertex x : sequence) {
    if (x < 1 || x > n) throw Error(ErrorKind::VertexOutOfRange, "Prüfer entry " + std::to_string(x));
    ++degree[x];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex x : sequence) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, x});
    if (--degree[x] == 1) leaves.push(x);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Tree::from_edge_list(n, edges);
}

Tree relabel(const Tree& t, std::span<const Vertex> perm) {
  if (perm.size() != t.order()) throw Error(ErrorKind::InvalidParams, "permutation size mismatch");
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) edges.push_back({perm[e.u - 1], perm[e.v - 1]});
  return Tree::from_edge_list(t.order(), edges);
}

}  // namespace arbormid
