#pragma once

#include <utility>
#include <vector>

#include "knot21/graph.hpp"

namespace knot21 {

/// Vertex-pair bookkeeping used by the count equation.
///
/// vyab counts vertices c of degree 3 having a witness d adjacent to exactly
/// {a, b, c}; multiple witnesses for one c count c once. The degenerate flag
/// marks pairs where some vertex outside {a, b} has two or more neighbors
/// among the common degree-3 neighborhood, in which case the reduction may
/// drop more edges than the count equation accounts for.
struct NeighborhoodStats {
  int ne = 0;    // |E(a) union E(b)|
  int v3a = 0;   // |V3(a)|
  int v3b = 0;   // |V3(b)|
  int v3ab = 0;  // |V3(a,b)|
  int v4ab = 0;  // |V4(a,b)|
  int vyab = 0;  // |V_Y(a,b)|
  int nv3 = 0;   // v3a + v3b - v3ab
  bool degenerate = false;
};

NeighborhoodStats neighborhood_stats(const Graph& g, VertexId a, VertexId b);

/// Upper bound on the edge count of the pair reduction:
/// |E(G)| - NE(a,b) - (NV3(a,b) + |V4(a,b)| + |V_Y(a,b)|).
int count_bound(const Graph& g, VertexId a, VertexId b);

struct SecondNeighborhoodProfile {
  int e2_size = 0;                                         // |E^2(a)|
  std::vector<std::pair<VertexId, VertexId>> extra_edges;  // deg(first) >= deg(second)
  std::vector<int> vbar_degrees;                           // non-increasing
  int vbar_sum = 0;
};

SecondNeighborhoodProfile second_neighborhood(const Graph& g, VertexId a);

struct ReduceResult {
  Graph graph;  // Multi mode
  Transcript transcript;
  bool loops_removed = false;     // a contraction dropped loop edges
  bool parallels_merged = false;  // Simple-mode duplicate collapse (never in Multi)
};

/// Delete a and b, then suppress all degree-0/1/2 vertices.
/// An rng randomizes the suppression order for order-invariance testing.
ReduceResult reduce_pair(const Graph& g, VertexId a, VertexId b, std::mt19937* rng = nullptr);

} // namespace knot21
