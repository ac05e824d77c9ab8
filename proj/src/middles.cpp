#include "arbormid/middles.hpp"

#include <algorithm>

namespace arbormid {

Middles analyze_middles(const Tree& t) {
  return Middles{center(t), centroid(t), subtree_core(t)};
}

MiddleDistances middle_distances(const Tree& t, const Middles& m) {
  return MiddleDistances{
      set_distance(t, m.center, m.centroid),
      set_distance(t, m.center, m.core),
      set_distance(t, m.centroid, m.core),
  };
}

bool centroid_between(const Tree& t, const Middles& m) {
  for (Vertex c : m.center.vertices) {
    for (Vertex s : m.core.vertices) {
      auto path = path_between(t, c, s);
      bool all_on_path = std::all_of(m.centroid.vertices.begin(), m.centroid.vertices.end(), [&](Vertex x) {
        return std::find(path.begin(), path.end(), x) != path.end();
      });
      if (all_on_path) return true;
    }
  }
  return false;
}

bool centroid_between(const Tree& t) { return centroid_between(t, analyze_middles(t)); }

}  // namespace arbormid
