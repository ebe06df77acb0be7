#include "knot21/moves.hpp"

#include <deque>

namespace knot21 {

std::vector<MoveSite> find_triangle_sites(const Graph& g) {
  if (g.mode() != Mode::Simple || has_bigon(g))
    throw std::invalid_argument("find_triangle_sites: simple graphs only");
  std::vector<MoveSite> out;
  std::vector<VertexId> vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.has_edge(vs[i], vs[j])) continue;
      for (std::size_t k = j + 1; k < vs.size(); ++k)
        if (g.has_edge(vs[i], vs[k]) && g.has_edge(vs[j], vs[k]))
          out.push_back({MoveSite::Kind::Triangle, vs[i], vs[j], vs[k]});
    }
  return out;
}

std::vector<MoveSite> find_y_sites(const Graph& g) {
  if (g.mode() != Mode::Simple || has_bigon(g))
    throw std::invalid_argument("find_y_sites: simple graphs only");
  std::vector<MoveSite> out;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) != 3) continue;
    auto nb = g.neighbors(v);
    if (g.has_edge(nb[0], nb[1]) || g.has_edge(nb[0], nb[2]) || g.has_edge(nb[1], nb[2]))
      continue;
    out.push_back({MoveSite::Kind::YVertex, v, -1, -1});
  }
  return out;
}

Graph nabla_y(const Graph& g, const MoveSite& site) {
  if (site.kind != MoveSite::Kind::Triangle ||
      !g.has_edge(site.a, site.b) || !g.has_edge(site.a, site.c) || !g.has_edge(site.b, site.c))
    throw std::invalid_argument("nabla_y: site is not a triangle of g");
  Graph out = g;
  out.remove_edge(site.a, site.b);
  out.remove_edge(site.a, site.c);
  out.remove_edge(site.b, site.c);
  VertexId v = out.add_vertex();
  out.add_edge(v, site.a);
  out.add_edge(v, site.b);
  out.add_edge(v, site.c);
  return out;
}

Graph y_nabla(const Graph& g, const MoveSite& site) {
  if (site.kind != MoveSite::Kind::YVertex || !g.has_vertex(site.a) || g.degree(site.a) != 3)
    throw std::invalid_argument("y_nabla: site is not a degree-3 vertex");
  auto nb = g.neighbors(site.a);
  if (g.has_edge(nb[0], nb[1]) || g.has_edge(nb[0], nb[2]) || g.has_edge(nb[1], nb[2]))
    throw std::invalid_argument("y_nabla: neighbors are adjacent; move would create a bigon");
  Graph out = g;
  out.remove_vertex(site.a);
  out.add_edge(nb[0], nb[1]);
  out.add_edge(nb[0], nb[2]);
  out.add_edge(nb[1], nb[2]);
  return out;
}

std::map<CanonicalCode, Graph> move_closure(const std::vector<Graph>& seeds, MoveOps ops) {
  std::map<CanonicalCode, Graph> seen;
  std::deque<Graph> frontier;
  for (const Graph& s : seeds) {
    CanonicalCode code = canonical_form(s);
    if (seen.emplace(code, s).second) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    Graph g = std::move(frontier.front());
    frontier.pop_front();
    std::vector<Graph> children;
    if (ops == MoveOps::NablaY || ops == MoveOps::Both)
      for (const MoveSite& t : find_triangle_sites(g)) children.push_back(nabla_y(g, t));
    if (ops == MoveOps::YNabla || ops == MoveOps::Both)
      for (const MoveSite& y : find_y_sites(g)) children.push_back(y_nabla(g, y));
    for (Graph& c : children) {
      CanonicalCode code = canonical_form(c);
      if (seen.emplace(code, c).second) frontier.push_back(std::move(c));
    }
  }
  return seen;
}

} // namespace knot21
