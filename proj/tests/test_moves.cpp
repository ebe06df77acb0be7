#include <doctest.h>

#include "helpers.hpp"
#include "knot21/canonical.hpp"
#include "knot21/catalog.hpp"
#include "knot21/moves.hpp"

using namespace knot21;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph star3() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  return g;
}

} // namespace

TEST_CASE("site counts") {
  CHECK(find_triangle_sites(complete(7)).size() == 35);
  CHECK(find_y_sites(catalog_get("C14").graph).size() == 14);
  CHECK(find_triangle_sites(catalog_get("K33").graph).empty());
}

TEST_CASE("triangle-to-Y on K7") {
  auto sites = find_triangle_sites(complete(7));
  Graph g = nabla_y(complete(7), sites.front());
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 21);
  CHECK(degree_sequence(g) == std::vector<int>{6, 6, 6, 6, 5, 5, 5, 3});
}

TEST_CASE("smallest exchange pair") {
  Graph k3 = complete(3);
  auto tri = find_triangle_sites(k3);
  REQUIRE(tri.size() == 1);
  Graph star = nabla_y(k3, tri.front());
  CHECK(is_isomorphic(star, star3()));

  auto ys = find_y_sites(star);
  REQUIRE(ys.size() == 1);
  CHECK(is_isomorphic(y_nabla(star, ys.front()), k3));
}

TEST_CASE("moves preserve edge count and invert each other") {
  std::mt19937 rng(71);
  int checked = 0;
  while (checked < 100) {
    Graph g = testutil::random_graph(rng, 8, 0.5);
    auto sites = find_triangle_sites(g);
    if (sites.empty()) continue;
    const MoveSite& site = sites[rng() % sites.size()];
    Graph forward = nabla_y(g, site);
    CHECK(forward.edge_count() == g.edge_count());
    // the added vertex has the largest id; undo through it
    VertexId added = forward.vertices().back();
    MoveSite back{MoveSite::Kind::YVertex, added, -1, -1};
    CHECK(is_isomorphic(y_nabla(forward, back), g));
    ++checked;
  }
}

TEST_CASE("closure counts") {
  auto k7fam = move_closure({complete(7)}, MoveOps::NablaY);
  CHECK(k7fam.size() == 14);
  for (const auto& [code, g] : k7fam) CHECK(g.edge_count() == 21);

  auto small = move_closure({complete(3)}, MoveOps::NablaY);
  CHECK(small.size() == 2);

  auto hc = move_closure({catalog_get("H12").graph, catalog_get("C14").graph}, MoveOps::YNabla);
  CHECK(hc.size() == 20);
  bool has_k7 = false;
  for (const auto& [code, g] : hc)
    if (is_isomorphic(g, complete(7))) has_k7 = true;
  CHECK(has_k7);
}

TEST_CASE("triangle-free closure members admit no further triangle moves") {
  for (const auto& [code, g] : move_closure({complete(7)}, MoveOps::NablaY))
    if (is_triangle_free(g)) CHECK(find_triangle_sites(g).empty());
}

TEST_CASE("every Y-move image of the cubic catalog graph stays in the family") {
  Graph c14 = catalog_get("C14").graph;
  auto ys = find_y_sites(c14);
  REQUIRE(!ys.empty());
  Graph img = y_nabla(c14, ys.front());
  CHECK(img.vertex_count() == 13);
  CHECK(img.edge_count() == 21);
  CHECK(find_catalog_match(img) != nullptr);
}
