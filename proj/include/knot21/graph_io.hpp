#pragma once

#include <string>

#include "knot21/graph.hpp"

namespace knot21 {

/// Standard graph6 ASCII encoding for Simple graphs up to 62 vertices.
/// Vertices are compacted to 0..n-1 before encoding.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

/// Multigraph text format, one graph per line: "n; u-v, u-v*k, ...".
std::string to_multi_text(const Graph& g);
Graph from_multi_text(const std::string& line);

std::string to_dot(const Graph& g, const std::string& name = "G");

} // namespace knot21
