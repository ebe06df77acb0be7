#include "knot21/reduction.hpp"

#include <algorithm>
#include <bit>

namespace knot21 {

NeighborhoodStats neighborhood_stats(const Graph& g, VertexId a, VertexId b) {
  if (a == b) throw std::invalid_argument("neighborhood_stats: a and b must differ");
  if (g.mode() != Mode::Simple || has_bigon(g))
    throw std::invalid_argument("neighborhood_stats: simple graphs only");
  NeighborhoodStats st;
  st.ne = g.degree(a) + g.degree(b) - (g.has_edge(a, b) ? 1 : 0);

  // a and b themselves never count toward the V-sets: their edges are
  // already accounted for in ne.
  std::uint64_t ab_pair = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  std::uint64_t na = g.neighbor_mask(a) & ~ab_pair;
  std::uint64_t nb = g.neighbor_mask(b) & ~ab_pair;
  std::uint64_t v3ab_mask = 0;
  for (std::uint64_t m = na; m; m &= m - 1) {
    int c = std::countr_zero(m);
    if (g.degree(c) == 3) ++st.v3a;
  }
  for (std::uint64_t m = nb; m; m &= m - 1) {
    int c = std::countr_zero(m);
    if (g.degree(c) == 3) ++st.v3b;
  }
  for (std::uint64_t m = na & nb; m; m &= m - 1) {
    int c = std::countr_zero(m);
    if (g.degree(c) == 3) {
      ++st.v3ab;
      v3ab_mask |= std::uint64_t{1} << c;
    }
    if (g.degree(c) == 4) ++st.v4ab;
  }
  st.nv3 = st.v3a + st.v3b - st.v3ab;

  // V_Y: degree-3 vertices c with a witness d in V3(a,b), V(d) = {a,b,c}.
  std::uint64_t ab = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  std::uint64_t vy_mask = 0;
  for (std::uint64_t m = v3ab_mask; m; m &= m - 1) {
    int d = std::countr_zero(m);
    std::uint64_t third = g.neighbor_mask(d) & ~ab;
    if (std::popcount(third) == 1) {
      int c = std::countr_zero(third);
      if (g.degree(c) == 3) vy_mask |= std::uint64_t{1} << c;
    }
  }
  st.vyab = std::popcount(vy_mask);

  for (VertexId c : g.vertices()) {
    if (c == a || c == b) continue;
    if (std::popcount(g.neighbor_mask(c) & v3ab_mask) >= 2) {
      st.degenerate = true;
      break;
    }
  }
  return st;
}

int count_bound(const Graph& g, VertexId a, VertexId b) {
  NeighborhoodStats st = neighborhood_stats(g, a, b);
  return g.edge_count() - st.ne - (st.nv3 + st.v4ab + st.vyab);
}

SecondNeighborhoodProfile second_neighborhood(const Graph& g, VertexId a) {
  if (g.mode() != Mode::Simple || has_bigon(g))
    throw std::invalid_argument("second_neighborhood: simple graphs only");
  SecondNeighborhoodProfile p;
  std::uint64_t closed = g.neighbor_mask(a) | (std::uint64_t{1} << a);
  for (auto [u, v, m] : g.edges()) {
    // E^2(a) covers edges incident to a neighbor of a (E(a) included).
    bool touches_nbr = (g.neighbor_mask(a) >> u & 1) || (g.neighbor_mask(a) >> v & 1);
    if (touches_nbr) {
      ++p.e2_size;
    } else {
      VertexId x = u, y = v;
      if (g.degree(x) < g.degree(y)) std::swap(x, y);
      p.extra_edges.emplace_back(x, y);
    }
  }
  for (VertexId v : g.vertices()) {
    if (closed >> v & 1) continue;
    p.vbar_degrees.push_back(g.degree(v));
    p.vbar_sum += g.degree(v);
  }
  std::sort(p.vbar_degrees.rbegin(), p.vbar_degrees.rend());
  return p;
}

ReduceResult reduce_pair(const Graph& g, VertexId a, VertexId b, std::mt19937* rng) {
  if (a == b) throw std::invalid_argument("reduce_pair: a and b must differ");
  ReduceResult r;
  r.transcript.push_back({StepKind::DeleteVertex, a, -1, 0, 0});
  r.transcript.push_back({StepKind::DeleteVertex, b, -1, 0, 0});
  Graph cur = delete_vertices(g, {a, b});
  SuppressOptions opts;
  opts.rng = rng;
  opts.transcript = &r.transcript;
  r.graph = suppress_reducible(cur, opts);
  for (const ReductionStep& s : r.transcript) {
    if (s.loops_removed > 0) r.loops_removed = true;
    if (s.parallels_merged > 0) r.parallels_merged = true;
  }
  return r;
}

} // namespace knot21
