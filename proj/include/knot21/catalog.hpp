#pragma once

#include <string>
#include <vector>

#include "knot21/graph.hpp"

namespace knot21 {

struct NamedGraph {
  std::string name;
  std::vector<std::string> aliases;
  Graph graph;
  bool two_apex = false; // computed at family construction
};

/// Named construction of the fixed graphs:
/// K3, K4, K5, K6, K7, K33, Petersen, H12, C14.
/// H12 and C14 are validated against their expected invariants at build time.
NamedGraph catalog_get(const std::string& name);

std::vector<std::string> catalog_names();

/// K7 plus the thirteen graphs reachable from it by triangle-to-Y moves.
/// Names: F0 = K7, then F1..F13 in canonical-code order; H12 and C14 are
/// matched by isomorphism and aliased.
const std::vector<NamedGraph>& k7_family();

/// The twenty graphs reachable from {H12, C14} by Y-to-triangle moves.
/// Members matched against the K7 family keep that name; the six outsiders
/// are named by vertex count (N9, N10, N10p, N11, N11p, N12p) with
/// canonical-code tiebreak between same-order pairs.
const std::vector<NamedGraph>& hc_family();

const NamedGraph* find_catalog_match(const Graph& g); // against k7_family

} // namespace knot21
