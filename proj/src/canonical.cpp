#include "knot21/canonical.hpp"

#include <algorithm>
#include <array>

namespace knot21 {

namespace {

constexpr int kMaxN = 24;

struct Searcher {
  int n = 0;
  std::array<std::array<std::uint8_t, kMaxN>, kMaxN> adj{};
  std::vector<int> init_color;

  CanonicalCode best;
  std::vector<int> best_order; // best_order[pos] = vertex
  bool have_best = false;

  // Partition as an ordered list of cells.
  using Partition = std::vector<std::vector<int>>;

  void refine(Partition& pi) const {
    bool changed = true;
    while (changed) {
      changed = false;
      Partition next;
      next.reserve(pi.size());
      for (const auto& cell : pi) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        // Signature of v: multiplicity sum towards each current cell.
        std::vector<std::pair<std::vector<int>, int>> sigs;
        sigs.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> sig;
          sig.reserve(pi.size());
          for (const auto& other : pi) {
            int s = 0;
            for (int u : other) s += adj[v][u];
            sig.push_back(s);
          }
          sigs.emplace_back(std::move(sig), v);
        }
        std::sort(sigs.begin(), sigs.end());
        std::vector<int> sub{sigs[0].second};
        for (std::size_t i = 1; i < sigs.size(); ++i) {
          if (sigs[i].first != sigs[i - 1].first) {
            next.push_back(std::move(sub));
            sub.clear();
            changed = true;
          }
          sub.push_back(sigs[i].second);
        }
        next.push_back(std::move(sub));
      }
      pi = std::move(next);
    }
  }

  CanonicalCode encode(const std::vector<int>& order) const {
    CanonicalCode code;
    code.reserve(2 + n + n * (n - 1) / 2);
    code.push_back(static_cast<char>(n));
    for (int v : order) code.push_back(static_cast<char>(init_color[v] & 0xff));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        code.push_back(static_cast<char>(adj[order[i]][order[j]]));
    return code;
  }

  void descend(Partition pi) {
    refine(pi);
    int branch = -1;
    for (std::size_t i = 0; i < pi.size(); ++i) {
      if (pi[i].size() > 1) {
        branch = static_cast<int>(i);
        break;
      }
    }
    if (branch < 0) {
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = pi[i][0];
      CanonicalCode code = encode(order);
      if (!have_best || code < best) {
        best = std::move(code);
        best_order = std::move(order);
        have_best = true;
      }
      return;
    }
    for (int v : pi[branch]) {
      Partition child;
      child.reserve(pi.size() + 1);
      for (std::size_t i = 0; i < pi.size(); ++i) {
        if (static_cast<int>(i) == branch) {
          child.push_back({v});
          std::vector<int> rest;
          for (int u : pi[i])
            if (u != v) rest.push_back(u);
          child.push_back(std::move(rest));
        } else {
          child.push_back(pi[i]);
        }
      }
      descend(std::move(child));
    }
  }

  CanonicalResult run() {
    // Initial partition by color value ascending.
    std::vector<std::pair<int, int>> by_color;
    for (int v = 0; v < n; ++v) by_color.emplace_back(init_color[v], v);
    std::sort(by_color.begin(), by_color.end());
    Partition pi;
    for (std::size_t i = 0; i < by_color.size(); ++i) {
      if (i == 0 || by_color[i].first != by_color[i - 1].first) pi.push_back({});
      pi.back().push_back(by_color[i].second);
    }
    if (n == 0) {
      CanonicalResult r;
      r.code = std::string(1, '\0');
      return r;
    }
    descend(std::move(pi));
    return {best, best_order};
  }
};

} // namespace

CanonicalResult canonical_form_ex(const Graph& g, const std::vector<int>* colors) {
  if (g.vertex_count() > kMaxN)
    throw std::invalid_argument("canonical_form: graph too large");
  std::vector<VertexId> old_ids;
  Graph c = g.compacted(&old_ids);
  Searcher s;
  s.n = c.vertex_count();
  s.init_color.assign(s.n, 0);
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      s.adj[i][j] = static_cast<std::uint8_t>(i == j ? 0 : c.multiplicity(i, j));
  if (colors) {
    for (int i = 0; i < s.n; ++i) {
      VertexId v = old_ids[i];
      if (v >= static_cast<VertexId>(colors->size()) || (*colors)[v] < 0)
        throw std::invalid_argument("canonical_form: missing color for vertex");
      s.init_color[i] = (*colors)[v];
    }
  }
  CanonicalResult r = s.run();
  for (VertexId& v : r.canonical_order) v = old_ids[v];
  return r;
}

CanonicalCode canonical_form(const Graph& g) { return canonical_form_ex(g).code; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

bool same_orbit(const Graph& g, VertexId u, VertexId v, const std::vector<int>* colors) {
  if (u == v) return true;
  int max_id = 0;
  for (VertexId w : g.vertices()) max_id = std::max(max_id, w);
  std::vector<int> base(max_id + 1, 0);
  if (colors)
    for (VertexId w : g.vertices()) base[w] = (*colors)[w];
  auto marked = [&](VertexId m) {
    std::vector<int> c = base;
    for (int& x : c) x = x * 2;
    c[m] += 1;
    return canonical_form_ex(g, &c).code;
  };
  return marked(u) == marked(v);
}

} // namespace knot21
