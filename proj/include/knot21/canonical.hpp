#pragma once

#include <string>
#include <vector>

#include "knot21/graph.hpp"

namespace knot21 {

/// Order-independent encoding of a graph; equal codes <=> isomorphic graphs.
/// Multi-mode graphs encode edge multiplicities, so bigon-bearing reductions
/// deduplicate correctly.
using CanonicalCode = std::string;

struct CanonicalResult {
  CanonicalCode code;
  std::vector<VertexId> canonical_order; // canonical_order[pos] = original vertex id
};

/// Canonical form via iterated neighbor-color refinement plus backtracking
/// over individualizations. Accepts up to 24 vertices.
///
/// `colors`, when given, maps each vertex id to a non-negative color that a
/// matching isomorphism must preserve (used for degree-target coloring during
/// enumeration and for vertex-orbit tests).
CanonicalResult canonical_form_ex(const Graph& g, const std::vector<int>* colors = nullptr);

CanonicalCode canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// True iff u and v lie in the same orbit of the (color-preserving)
/// automorphism group of g.
bool same_orbit(const Graph& g, VertexId u, VertexId v, const std::vector<int>* colors = nullptr);

} // namespace knot21
