// io.hpp — edge-list text format and DOT export.
//
// Edge-list format: first line "n", then n-1 lines "u v" (1-based ids,
// whitespace-separated). Blank lines are ignored.
#pragma once

#include <iosfwd>
#include <string>

#include "treecenters/tree.hpp"

namespace treecenters {

Tree parse_edge_list(std::istream& in);           // errors carry line numbers
Tree load_edge_list(const std::string& path);
std::string to_edge_list(const Tree& t);
std::string to_dot(const Tree& t);

}  // namespace treecenters
