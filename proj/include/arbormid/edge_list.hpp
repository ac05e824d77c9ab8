#pragma once

#include <iosfwd>
#include <string>

#include "arbormid/tree.hpp"

namespace arbormid {

// Text format: first line "n", then n-1 lines "u v" (1-based decimal ids).
// Blank lines and '#' comments are ignored. Throws Parse on malformed text and the usual
// tree validation errors on bad edges.
Tree read_edge_list(std::istream& in);
Tree read_edge_list_file(const std::string& path);

// Writes n and the edges in lexicographic order.
void write_edge_list(std::ostream& out, const Tree& t);
std::string to_edge_list(const Tree& t);

}  // namespace arbormid
