#pragma once

#include <map>
#include <vector>

#include "knot21/canonical.hpp"
#include "knot21/graph.hpp"

namespace knot21 {

struct MoveSite {
  enum class Kind { Triangle, YVertex };
  Kind kind;
  VertexId a = -1, b = -1, c = -1; // Triangle corners; YVertex uses a only
};

/// All triangles of g (a < b < c).
std::vector<MoveSite> find_triangle_sites(const Graph& g);

/// All degree-3 vertices whose three neighbors are pairwise non-adjacent,
/// so the reverse move stays inside simple graphs.
std::vector<MoveSite> find_y_sites(const Graph& g);

/// Triangle-to-Y: remove the triangle's edges, add a new degree-3 vertex
/// joined to its corners. |E| is preserved, |V| grows by one.
Graph nabla_y(const Graph& g, const MoveSite& site);

/// Y-to-triangle: remove the degree-3 vertex, add a triangle on its
/// neighbors. |E| is preserved, |V| shrinks by one.
Graph y_nabla(const Graph& g, const MoveSite& site);

enum class MoveOps { NablaY, YNabla, Both };

/// Breadth-first closure of the seeds under the selected moves,
/// deduplicated by canonical code.
std::map<CanonicalCode, Graph> move_closure(const std::vector<Graph>& seeds, MoveOps ops);

} // namespace knot21
