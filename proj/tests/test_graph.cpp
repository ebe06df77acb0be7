#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "knot21/canonical.hpp"
#include "knot21/catalog.hpp"
#include "knot21/graph.hpp"

using namespace knot21;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

} // namespace

TEST_CASE("degree sequences of the fixed graphs") {
  CHECK(degree_sequence(complete(7)) == std::vector<int>(7, 6));
  CHECK(degree_sequence(catalog_get("C14").graph) == std::vector<int>(14, 3));
  CHECK(degree_sequence(catalog_get("H12").graph) ==
        std::vector<int>{4, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3});
}

TEST_CASE("distances") {
  Graph c14 = catalog_get("C14").graph;
  CHECK(dist(c14, 0, 0) == 0);
  // hub to the deepest layer
  CHECK(dist(c14, 0, 10) == 3);
  for (VertexId v : c14.vertices()) CHECK(dist(c14, 0, v) <= 3);

  Graph two(2);
  CHECK(dist(two, 0, 1) == kInfiniteDistance);
}

TEST_CASE("triangle-free") {
  CHECK_FALSE(is_triangle_free(complete(7)));
  CHECK(is_triangle_free(catalog_get("K33").graph));
  CHECK(is_triangle_free(catalog_get("C14").graph));
}

TEST_CASE("triangle-free agrees with brute force on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(rng() % 12);
    Graph g = testutil::random_graph(rng, n, 0.3);
    bool brute = false;
    for (int i = 0; i < n && !brute; ++i)
      for (int j = i + 1; j < n && !brute; ++j)
        for (int k = j + 1; k < n && !brute; ++k)
          if (g.has_edge(i, j) && g.has_edge(j, k) && g.has_edge(i, k)) brute = true;
    CHECK(is_triangle_free(g) == !brute);
  }
}

TEST_CASE("bigons") {
  CHECK_FALSE(has_bigon(complete(5)));
  Graph m(2, Mode::Multi);
  m.add_edge(0, 1, 2);
  CHECK(has_bigon(m));
}

TEST_CASE("delete_vertices") {
  Graph k7 = complete(7);
  Graph k5 = delete_vertices(k7, {0, 1});
  CHECK(k5.vertex_count() == 5);
  CHECK(k5.edge_count() == 10);
  CHECK(is_isomorphic(k5, complete(5)));

  CHECK(delete_vertices(k7, {}) == k7);

  Graph k33 = catalog_get("K33").graph;
  Graph k23 = delete_vertices(k33, {0});
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK(degree_sequence(k23) == std::vector<int>{3, 3, 2, 2, 2});
}

TEST_CASE("delete_vertices edge accounting") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testutil::random_graph(rng, 10, 0.4);
    VertexId a = rng() % 10, b = (a + 1 + rng() % 9) % 10;
    int incident = 0;
    for (auto [u, v, m] : g.edges())
      if (u == a || v == a || u == b || v == b) incident += m;
    CHECK(delete_vertices(g, {a, b}).edge_count() == g.edge_count() - incident);
  }
}

TEST_CASE("contract_edge basics") {
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  Graph c = contract_edge(path, 0, 1);
  CHECK(c.vertex_count() == 2);
  CHECK(c.edge_count() == 1);

  Graph tri(3, Mode::Multi);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  Graph bigon = contract_edge(tri, 0, 1);
  CHECK(bigon.vertex_count() == 2);
  CHECK(bigon.edge_count() == 2);
  CHECK(has_bigon(bigon));

  Graph k33 = catalog_get("K33").graph;
  Graph c2 = contract_edge(k33, 0, 3);
  CHECK(c2.vertex_count() == 5);
  CHECK(c2.edge_count() == 8);
  CHECK(c2.mode() == Mode::Simple);
}

TEST_CASE("contraction degree-sum accounting") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testutil::random_graph(rng, 9, 0.4);
    g.set_mode(Mode::Multi);
    auto es = g.edges();
    if (es.empty()) continue;
    auto [u, v, m] = es[rng() % es.size()];
    ContractStats st;
    Graph c = contract_edge(g, u, v, &st);
    int before = 0, after = 0;
    for (VertexId x : g.vertices()) before += g.degree(x);
    for (VertexId x : c.vertices()) after += c.degree(x);
    CHECK(before - after == 2 + 2 * st.loops_removed + 2 * st.parallels_merged);
  }
}

TEST_CASE("suppress_reducible fixed points and collapses") {
  CHECK(suppress_reducible(cycle(8)).vertex_count() == 0);

  Graph k33 = catalog_get("K33").graph;
  Graph sub = k33;
  sub.remove_edge(0, 3);
  VertexId mid = sub.add_vertex();
  sub.add_edge(0, mid);
  sub.add_edge(mid, 3);
  CHECK(is_isomorphic(suppress_reducible(sub), k33));

  Graph k5 = complete(5);
  CHECK(is_isomorphic(suppress_reducible(k5), k5));
}

TEST_CASE("suppression is order-invariant") {
  std::mt19937 seed_rng(17);
  std::vector<Graph> fixtures;
  Graph k33sub = catalog_get("K33").graph;
  k33sub.remove_edge(0, 3);
  VertexId mid = k33sub.add_vertex();
  k33sub.add_edge(0, mid);
  k33sub.add_edge(mid, 3);
  fixtures.push_back(k33sub);
  for (int i = 0; i < 4; ++i) fixtures.push_back(testutil::random_graph(seed_rng, 10, 0.25));

  for (const Graph& g : fixtures) {
    std::mt19937 rng0(1000);
    Graph base = suppress_reducible(g, {.rng = &rng0});
    for (int t = 1; t <= 100; ++t) {
      std::mt19937 rng(1000 + t);
      CHECK(is_isomorphic(suppress_reducible(g, {.rng = &rng}), base));
    }
  }
}
