#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "arbormid/tree.hpp"

namespace arbormid {

// Uniform labelled tree on n vertices (random Prüfer sequence).
Tree random_tree(std::size_t n, std::mt19937_64& rng);

// Uniform random permutation of 1..n.
std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace arbormid
