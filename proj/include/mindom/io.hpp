#pragma once

#include <iosfwd>
#include <string>

#include "mindom/hypergraph.hpp"
#include "mindom/poset.hpp"

namespace mindom {

// Poset text format: line 1 "n d"; then d lines of n space-separated
// integers, each a permutation of 0..n-1 listed bottom-up. Lines starting
// with '#' are ignored.
Poset parse_poset(std::istream& in);
void write_poset(const Poset& p, std::ostream& out);

// Hypergraph text format: line 1 "m k"; then k lines of space-separated
// vertex indices, one edge per line (an empty line is an empty edge).
// '#' lines are ignored.
Hypergraph parse_hypergraph(std::istream& in);
void write_hypergraph(const Hypergraph& h, std::ostream& out);

/// Ascending indices separated by single spaces; the empty set prints as "-".
std::string format_solution(const VertexSet& s);
VertexSet parse_solution(const std::string& line, int n);

}  // namespace mindom
