#pragma once

#include <iosfwd>
#include <string>

#include "hcz/graph.hpp"
#include "hcz/indpoly.hpp"

namespace hcz {

// Edge-list text format: first line "n m", then m lines "u v" with 0-based
// whitespace-separated endpoints. Lines whose first non-space character is
// '#' and blank lines are ignored everywhere. Malformed input throws
// std::runtime_error with a line-numbered message.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// Companion per-vertex weighting: one line "v re im" per vertex, each vertex
// exactly once. In exact mode re and im are rationals ("p/q" or integer);
// otherwise decimals. Throws std::runtime_error on malformed, duplicate,
// missing, or out-of-range entries.
WeightAssignment parse_weights(std::istream& in, int n, bool exact);
WeightAssignment read_weights_file(const std::string& path, int n, bool exact);
void write_weights(std::ostream& out, const WeightAssignment& w);

}  // namespace hcz
