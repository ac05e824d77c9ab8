#include "arbormid/metrics.hpp"

#include <algorithm>
#include <limits>

#include "arbormid/error.hpp"

namespace arbormid {

std::string_view to_string(MiddleKind kind) {
  switch (kind) {
    case MiddleKind::Center: return "center";
    case MiddleKind::Centroid: return "centroid";
    case MiddleKind::SubtreeCore: return "subtree-core";
  }
  return "unknown";
}

bool MiddleSet::contains(Vertex v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

std::string join_ids(std::span<const Vertex> ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

Rooting root_at(const Tree& t, Vertex root) {
  t.require_vertex(root);
  Rooting r;
  r.root = root;
  r.parent.assign(t.order() + 1, 0);
  r.order.reserve(t.order());
  r.order.push_back(root);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    Vertex x = r.order[head];
    for (Vertex y : t.neighbors(x)) {
      if (y == r.parent[x]) continue;
      r.parent[y] = x;
      r.order.push_back(y);
    }
  }
  return r;
}

std::vector<std::size_t> distances_from(const Tree& t, Vertex source) {
  Rooting r = root_at(t, source);
  std::vector<std::size_t> dist(t.order() + 1, 0);
  for (std::size_t i = 1; i < r.order.size(); ++i) {
    Vertex x = r.order[i];
    dist[x] = dist[r.parent[x]] + 1;
  }
  return dist;
}

std::size_t distance(const Tree& t, Vertex u, Vertex v) {
  t.require_vertex(v);
  return distances_from(t, u)[v];
}

std::size_t set_distance(const Tree& t, std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptySet, "set distance needs two nonempty sets");
  for (Vertex x : b) t.require_vertex(x);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex x : a) {
    auto dist = distances_from(t, x);
    for (Vertex y : b) best = std::min(best, dist[y]);
  }
  return best;
}

std::size_t set_distance(const Tree& t, const MiddleSet& a, const MiddleSet& b) {
  return set_distance(t, std::span<const Vertex>(a.vertices), std::span<const Vertex>(b.vertices));
}

std::size_t eccentricity(const Tree& t, Vertex v) {
  auto dist = distances_from(t, v);
  return *std::max_element(dist.begin() + 1, dist.end());
}

std::vector<std::size_t> eccentricities(const Tree& t) {
  std::vector<std::size_t> ecc(t.order() + 1, 0);
  for (Vertex v = 1; v <= t.order(); ++v) ecc[v] = eccentricity(t, v);
  return ecc;
}

std::size_t radius(const Tree& t) {
  auto ecc = eccentricities(t);
  return *std::min_element(ecc.begin() + 1, ecc.end());
}

std::size_t diameter(const Tree& t) {
  auto ecc = eccentricities(t);
  return *std::max_element(ecc.begin() + 1, ecc.end());
}

MiddleSet center(const Tree& t) {
  auto ecc = eccentricities(t);
  std::size_t rad = *std::min_element(ecc.begin() + 1, ecc.end());
  MiddleSet out{MiddleKind::Center, {}};
  for (Vertex v = 1; v <= t.order(); ++v) {
    if (ecc[v] == rad) out.vertices.push_back(v);
  }
  return out;
}

MiddleSet center_of_diametral_path(const Tree& t) {
  auto farthest = [&](Vertex from) {
    auto dist = distances_from(t, from);
    return static_cast<Vertex>(std::max_element(dist.begin() + 1, dist.end()) - dist.begin());
  };
  Vertex a = farthest(1);
  Vertex b = farthest(a);
  auto path = path_between(t, a, b);
  MiddleSet out{MiddleKind::Center, {}};
  std::size_t len = path.size();  // vertices on the path
  if (len % 2 == 1) {
    out.vertices.push_back(path[len / 2]);
  } else {
    out.vertices = {path[len / 2 - 1], path[len / 2]};
    std::sort(out.vertices.begin(), out.vertices.end());
  }
  return out;
}

std::vector<std::size_t> branch_weights(const Tree& t) {
  const std::size_t n = t.order();
  Rooting r = root_at(t, 1);
  std::vector<std::size_t> size(n + 1, 1);
  std::vector<std::size_t> largest_child(n + 1, 0);
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    Vertex x = *it;
    if (Vertex p = r.parent[x]; p != 0) {
      size[p] += size[x];
      largest_child[p] = std::max(largest_child[p], size[x]);
    }
  }
  std::vector<std::size_t> weight(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) weight[v] = std::max(largest_child[v], n - size[v]);
  return weight;
}

std::size_t branch_weight(const Tree& t, Vertex v) {
  // Literal definition: the branch through neighbor u has as many edges as
  // the component of t - v containing u has vertices.
  Rooting r = root_at(t, v);
  std::vector<std::size_t> size(t.order() + 1, 1);
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    if (Vertex p = r.parent[*it]; p != 0) size[p] += size[*it];
  }
  std::size_t best = 0;
  for (Vertex u : t.neighbors(v)) best = std::max(best, size[u]);
  return best;
}

MiddleSet centroid(const Tree& t) {
  auto weight = branch_weights(t);
  std::size_t best = *std::min_element(weight.begin() + 1, weight.end());
  MiddleSet out{MiddleKind::Centroid, {}};
  for (Vertex v = 1; v <= t.order(); ++v) {
    if (weight[v] == best) out.vertices.push_back(v);
  }
  return out;
}

std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v) {
  t.require_vertex(v);
  Rooting r = root_at(t, u);
  std::vector<Vertex> path;
  for (Vertex x = v; x != 0; x = r.parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace arbormid
