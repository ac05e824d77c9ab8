#pragma once

#include <cstddef>

#include "arbormid/metrics.hpp"
#include "arbormid/subtree_count.hpp"
#include "arbormid/tree.hpp"

namespace arbormid {

// The three middle parts of one tree.
struct Middles {
  MiddleSet center;
  MiddleSet centroid;
  MiddleSet core;
};

Middles analyze_middles(const Tree& t);

// Set distances between the middle parts.
struct MiddleDistances {
  std::size_t center_centroid = 0;  // d(C, C_d)
  std::size_t center_core = 0;      // d(C, S_c)
  std::size_t centroid_core = 0;    // d(C_d, S_c)
};

MiddleDistances middle_distances(const Tree& t, const Middles& m);

// True iff some c in C and s in S_c have every centroid vertex on the c-s path.
bool centroid_between(const Tree& t, const Middles& m);
bool centroid_between(const Tree& t);

}  // namespace arbormid
