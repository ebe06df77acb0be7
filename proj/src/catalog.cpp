#include "knot21/catalog.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "knot21/canonical.hpp"
#include "knot21/moves.hpp"
#include "knot21/planarity.hpp"

namespace knot21 {

namespace {

Graph complete_graph(int n) {
  Graph g(n, Mode::Simple);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph k33_graph() {
  Graph g(6, Mode::Simple);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) g.add_edge(i, j);
  return g;
}

Graph petersen_graph() {
  Graph g(10, Mode::Simple);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);      // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
    g.add_edge(i, 5 + i);            // spokes
  }
  return g;
}

// 12 vertices: hexagon 0..5, b1=6 on odd corners, b2=7 on even corners,
// hub 8 joined to 9,10,11, each of which bridges an antipodal corner pair.
Graph h12_graph() {
  Graph g(12, Mode::Simple);
  for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
  g.add_edge(6, 0);
  g.add_edge(6, 2);
  g.add_edge(6, 4);
  g.add_edge(7, 1);
  g.add_edge(7, 3);
  g.add_edge(7, 5);
  for (int i = 9; i <= 11; ++i) g.add_edge(8, i);
  g.add_edge(9, 0);
  g.add_edge(9, 3);
  g.add_edge(10, 1);
  g.add_edge(10, 4);
  g.add_edge(11, 2);
  g.add_edge(11, 5);
  return g;
}

// 14 vertices: a=0; b1..b3=1..3; c1..c6=4..9; d1..d4=10..13.
Graph c14_graph() {
  Graph g(14, Mode::Simple);
  for (int i = 1; i <= 3; ++i) g.add_edge(0, i);
  for (int i = 1; i <= 3; ++i) {
    g.add_edge(i, 3 + (2 * i - 1)); // c_{2i-1}
    g.add_edge(i, 3 + (2 * i));     // c_{2i}
  }
  auto c = [](int i) { return 3 + i; };
  g.add_edge(10, c(1));
  g.add_edge(10, c(3));
  g.add_edge(10, c(5));
  g.add_edge(11, c(1));
  g.add_edge(11, c(4));
  g.add_edge(11, c(6));
  g.add_edge(12, c(2));
  g.add_edge(12, c(3));
  g.add_edge(12, c(6));
  g.add_edge(13, c(2));
  g.add_edge(13, c(4));
  g.add_edge(13, c(5));
  return g;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("catalog construction check failed: " + what);
}

void validate_h12(const Graph& g) {
  require(g.vertex_count() == 12 && g.edge_count() == 21, "H12 size");
  require(is_triangle_free(g), "H12 triangle-free");
  require(degree_sequence(g) == std::vector<int>{4, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3},
          "H12 degree sequence");
}

void validate_c14(const Graph& g) {
  require(g.vertex_count() == 14 && g.edge_count() == 21, "C14 size");
  require(is_triangle_free(g), "C14 triangle-free");
  require(degree_sequence(g) == std::vector<int>(14, 3), "C14 cubic");
  for (VertexId u : g.vertices())
    for (VertexId v : g.vertices())
      require(dist(g, u, v) <= 3, "C14 diameter 3");
}

} // namespace

NamedGraph catalog_get(const std::string& name) {
  NamedGraph ng;
  ng.name = name;
  if (name == "K3") ng.graph = complete_graph(3);
  else if (name == "K4") ng.graph = complete_graph(4);
  else if (name == "K5") ng.graph = complete_graph(5);
  else if (name == "K6") ng.graph = complete_graph(6);
  else if (name == "K7") ng.graph = complete_graph(7);
  else if (name == "K33") ng.graph = k33_graph();
  else if (name == "Petersen") ng.graph = petersen_graph();
  else if (name == "H12") { ng.graph = h12_graph(); validate_h12(ng.graph); }
  else if (name == "C14") { ng.graph = c14_graph(); validate_c14(ng.graph); }
  else throw std::invalid_argument("catalog: unknown graph '" + name + "'");
  return ng;
}

std::vector<std::string> catalog_names() {
  return {"K3", "K4", "K5", "K6", "K7", "K33", "Petersen", "H12", "C14"};
}

const std::vector<NamedGraph>& k7_family() {
  static std::vector<NamedGraph> family = [] {
    Graph k7 = catalog_get("K7").graph;
    auto closure = move_closure({k7}, MoveOps::NablaY);
    CanonicalCode k7_code = canonical_form(k7);

    std::vector<std::pair<CanonicalCode, Graph>> rest;
    for (auto& [code, g] : closure)
      if (code != k7_code) rest.emplace_back(code, g);
    std::sort(rest.begin(), rest.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    CanonicalCode h12_code = canonical_form(catalog_get("H12").graph);
    CanonicalCode c14_code = canonical_form(catalog_get("C14").graph);

    std::vector<NamedGraph> out;
    NamedGraph f0{"F0", {"K7"}, k7, false};
    out.push_back(std::move(f0));
    int i = 1;
    for (auto& [code, g] : rest) {
      NamedGraph ng{"F" + std::to_string(i++), {}, g, false};
      if (code == h12_code) ng.aliases.push_back("H12");
      if (code == c14_code) ng.aliases.push_back("C14");
      out.push_back(std::move(ng));
    }
    for (NamedGraph& ng : out)
      ng.two_apex = apex_witness(ng.graph, 2).kind != ApexWitness::Kind::NotTwoApex;

    // Late validation of the reconstructed H12: it must be a member.
    bool h12_found = false;
    for (const NamedGraph& ng : out)
      for (const std::string& a : ng.aliases)
        if (a == "H12") h12_found = true;
    if (!h12_found)
      throw std::logic_error("catalog: H12 reconstruction is not in the K7 family");
    return out;
  }();
  return family;
}

const std::vector<NamedGraph>& hc_family() {
  static std::vector<NamedGraph> family = [] {
    Graph h12 = catalog_get("H12").graph;
    Graph c14 = catalog_get("C14").graph;
    auto closure = move_closure({h12, c14}, MoveOps::YNabla);

    const std::vector<NamedGraph>& k7 = k7_family();
    std::vector<NamedGraph> out;
    std::vector<std::pair<CanonicalCode, Graph>> outsiders;
    for (auto& [code, g] : closure) {
      const NamedGraph* match = nullptr;
      for (const NamedGraph& ng : k7)
        if (canonical_form(ng.graph) == code) match = &ng;
      if (match) {
        out.push_back(*match);
      } else {
        outsiders.emplace_back(code, g);
      }
    }
    // Name outsiders by vertex count, canonical code breaking ties; the
    // primed member of each same-order pair is the one with the larger code.
    std::sort(outsiders.begin(), outsiders.end(), [](const auto& x, const auto& y) {
      int nx = x.second.vertex_count(), ny = y.second.vertex_count();
      return nx != ny ? nx < ny : x.first < y.first;
    });
    std::size_t i = 0;
    while (i < outsiders.size()) {
      int n = outsiders[i].second.vertex_count();
      std::size_t j = i;
      while (j < outsiders.size() && outsiders[j].second.vertex_count() == n) ++j;
      for (std::size_t k = i; k < j; ++k) {
        std::string name = "N" + std::to_string(n);
        if (j - i == 2 && k == i + 1) name += "p";
        if (j - i == 1 && n == 12) name += "p";
        if (j - i > 2) name += "_" + std::to_string(k - i);
        NamedGraph ng{name, {}, outsiders[k].second, false};
        ng.two_apex = apex_witness(ng.graph, 2).kind != ApexWitness::Kind::NotTwoApex;
        out.push_back(std::move(ng));
      }
      i = j;
    }
    return out;
  }();
  return family;
}

const NamedGraph* find_catalog_match(const Graph& g) {
  CanonicalCode code = canonical_form(g);
  for (const NamedGraph& ng : k7_family())
    if (canonical_form(ng.graph) == code) return &ng;
  return nullptr;
}

} // namespace knot21

