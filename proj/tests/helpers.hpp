#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "knot21/graph.hpp"

namespace testutil {

inline knot21::Graph random_graph(std::mt19937& rng, int n, double p) {
  knot21::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Random maximal-ish graph with no triangles: candidate edges in random
// order, kept unless they close a triangle.
inline knot21::Graph random_triangle_free(std::mt19937& rng, int n, double p) {
  knot21::Graph g(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution coin(p);
  for (auto [i, j] : pairs) {
    if (!coin(rng)) continue;
    if (g.neighbor_mask(i) & g.neighbor_mask(j)) continue;
    g.add_edge(i, j);
  }
  return g;
}

inline knot21::Graph shuffled(const knot21::Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  knot21::Graph out(g.vertex_count(), g.mode());
  for (auto [u, v, m] : g.edges()) out.add_edge(perm[u], perm[v], m);
  return out;
}

// Backtracking isomorphism search, used as an independent oracle for the
// canonical-code equality test.
inline bool brute_force_isomorphic(const knot21::Graph& a, const knot21::Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  knot21::Graph ca = a.compacted();
  knot21::Graph cb = b.compacted();
  int n = ca.vertex_count();
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> go = [&](int u) -> bool {
    if (u == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v] || ca.degree(u) != cb.degree(v)) continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w)
        if (ca.multiplicity(u, w) != cb.multiplicity(v, map[w])) ok = false;
      if (!ok) continue;
      map[u] = v;
      used[v] = 1;
      if (go(u + 1)) return true;
      used[v] = 0;
      map[u] = -1;
    }
    return false;
  };
  return go(0);
}

} // namespace testutil
