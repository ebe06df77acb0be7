#include "knot21/graph_io.hpp"

#include <sstream>

namespace knot21 {

std::string to_graph6(const Graph& g) {
  if (g.mode() != Mode::Simple || has_bigon(g))
    throw std::invalid_argument("to_graph6: simple graphs only");
  Graph c = g.compacted();
  int n = c.vertex_count();
  if (n > 62) throw std::invalid_argument("to_graph6: at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bit = 5;
  char cur = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (c.has_edge(u, v)) cur |= 1 << bit;
      if (--bit < 0) {
        out.push_back(static_cast<char>(cur + 63));
        bit = 5;
        cur = 0;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(cur + 63));
  return out;
}

Graph from_graph6(const std::string& line) {
  if (line.empty()) throw std::invalid_argument("from_graph6: empty input");
  std::size_t pos = 0;
  if (line[0] == '>') { // optional ">>graph6<<" header
    pos = line.find("<<");
    if (pos == std::string::npos) throw std::invalid_argument("from_graph6: bad header");
    pos += 2;
  }
  int n = line[pos] - 63;
  if (n < 0 || n > 62) throw std::invalid_argument("from_graph6: unsupported vertex count");
  ++pos;
  std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (line.size() - pos < need) throw std::invalid_argument("from_graph6: truncated input");
  Graph g(n, Mode::Simple);
  int bit = 5;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      int byte = line[pos] - 63;
      if (byte < 0 || byte > 63) throw std::invalid_argument("from_graph6: bad character");
      if (byte >> bit & 1) g.add_edge(u, v);
      if (--bit < 0) {
        bit = 5;
        ++pos;
      }
    }
  }
  return g;
}

std::string to_multi_text(const Graph& g) {
  Graph c = g.compacted();
  std::ostringstream out;
  out << c.vertex_count() << ";";
  bool first = true;
  for (auto [u, v, m] : c.edges()) {
    out << (first ? " " : ", ") << u << "-" << v;
    if (m > 1) out << "*" << m;
    first = false;
  }
  return out.str();
}

Graph from_multi_text(const std::string& line) {
  std::size_t semi = line.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("from_multi_text: missing ';'");
  int n = std::stoi(line.substr(0, semi));
  Graph g(n, Mode::Multi);
  std::istringstream rest(line.substr(semi + 1));
  std::string tok;
  while (std::getline(rest, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    int u, v, m = 1;
    char dash;
    std::istringstream ts(tok);
    if (!(ts >> u >> dash >> v) || dash != '-')
      throw std::invalid_argument("from_multi_text: bad edge token '" + tok + "'");
    char star;
    if (ts >> star) {
      if (star != '*' && star != 'x') throw std::invalid_argument("from_multi_text: bad multiplicity");
      ts >> m;
    }
    g.add_edge(u, v, m);
  }
  return g;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (VertexId v : g.vertices()) out << "  " << v << ";\n";
  for (auto [u, v, m] : g.edges())
    for (int i = 0; i < m; ++i) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace knot21
