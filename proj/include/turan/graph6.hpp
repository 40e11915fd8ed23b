#pragma once

#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Standard graph6 line for g (no trailing newline, no ">>graph6<<" prefix).
std::string graph6_encode(const Graph& g);

// Strict decode of one graph6 line. Accepts an optional ">>graph6<<" prefix.
// Throws std::invalid_argument on malformed input (bad header byte,
// truncated or oversized bit vector, nonzero padding).
Graph graph6_decode(const std::string& text);

// One graph per non-empty line.
std::vector<Graph> graph6_read_lines(const std::string& text);
std::vector<Graph> graph6_read_file(const std::string& path);

}  // namespace turan
