#include "knot21/planarity.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "knot21/canonical.hpp"

namespace knot21 {

namespace {

// Simple underlying graph with vertices 0..n-1 as bitmask adjacency.
struct SimpleView {
  int n = 0;
  std::vector<std::uint64_t> adj;
  std::vector<VertexId> old_ids;
};

SimpleView simple_view(const Graph& g) {
  SimpleView sv;
  Graph c = g.compacted(&sv.old_ids);
  sv.n = c.vertex_count();
  sv.adj.assign(sv.n, 0);
  for (auto [u, v, m] : c.edges()) {
    sv.adj[u] |= std::uint64_t{1} << v;
    sv.adj[v] |= std::uint64_t{1} << u;
  }
  return sv;
}

int simple_edge_count(const SimpleView& sv) {
  int m = 0;
  for (int v = 0; v < sv.n; ++v) m += std::popcount(sv.adj[v]);
  return m / 2;
}

struct KuratowskiSearch {
  const SimpleView& sv;
  std::vector<std::pair<int, int>> pairs; // indices into branch
  std::vector<int> branch;
  std::uint64_t branch_mask = 0;
  std::map<std::pair<int, int>, std::vector<VertexId>> found;

  explicit KuratowskiSearch(const SimpleView& s) : sv(s) {}

  bool reachable(int s, int t, std::uint64_t allowed) const {
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1)
        next |= sv.adj[std::countr_zero(f)];
      next &= allowed & ~seen;
      if (next >> t & 1) return true;
      seen |= next;
      frontier = next;
    }
    return s == t;
  }

  bool feasible(std::size_t from, std::uint64_t used) const {
    std::uint64_t free = ~used & ((sv.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << sv.n) - 1));
    for (std::size_t p = from; p < pairs.size(); ++p) {
      int s = branch[pairs[p].first], t = branch[pairs[p].second];
      if (sv.adj[s] >> t & 1) continue;
      std::uint64_t allowed = free | (std::uint64_t{1} << s) | (std::uint64_t{1} << t);
      if (!reachable(s, t, allowed)) return false;
    }
    return true;
  }

  bool solve(std::size_t p, std::uint64_t used) {
    if (p == pairs.size()) return true;
    if (!feasible(p, used)) return false;
    int s = branch[pairs[p].first], t = branch[pairs[p].second];
    std::vector<int> path{s};
    return extend(p, used, t, path, used);
  }

  // DFS over simple paths from path.back() to t with free interiors.
  bool extend(std::size_t p, std::uint64_t used, int t, std::vector<int>& path,
              std::uint64_t path_used) {
    int cur = path.back();
    if (sv.adj[cur] >> t & 1) {
      path.push_back(t);
      std::uint64_t interior = path_used & ~used; // vertices consumed by this path
      std::vector<VertexId> stored(path.begin(), path.end());
      if (solve(p + 1, used | interior)) {
        found[pairs[p]] = std::move(stored);
        return true;
      }
      path.pop_back();
    }
    std::uint64_t options = sv.adj[cur] & ~path_used & ~branch_mask;
    for (std::uint64_t m = options; m; m &= m - 1) {
      int w = std::countr_zero(m);
      path.push_back(w);
      if (extend(p, used, t, path, path_used | (std::uint64_t{1} << w))) return true;
      path.pop_back();
    }
    return false;
  }

  bool try_branches(const std::vector<int>& b, const std::vector<std::pair<int, int>>& ps) {
    branch = b;
    pairs = ps;
    branch_mask = 0;
    for (int v : b) branch_mask |= std::uint64_t{1} << v;
    found.clear();
    return solve(0, branch_mask);
  }
};

void combinations(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> idx(k);
  std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
    if (depth == k) return visit(idx);
    for (int i = start; i <= n - (k - depth); ++i) {
      idx[depth] = i;
      if (rec(i + 1, depth + 1)) return true;
    }
    return false;
  };
  if (k <= n) rec(0, 0);
}

} // namespace

bool is_planar(const Graph& g) {
  SimpleView sv = simple_view(g);
  if (sv.n <= 4) return true;
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(sv.n);
  for (int v = 0; v < sv.n; ++v)
    for (std::uint64_t m = sv.adj[v]; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (u > v) boost::add_edge(v, u, bg);
    }
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<KuratowskiCertificate> find_kuratowski(const Graph& g) {
  SimpleView sv = simple_view(g);
  if (sv.n < 5 || simple_edge_count(sv) < 9) return std::nullopt;

  std::vector<int> deg(sv.n);
  for (int v = 0; v < sv.n; ++v) deg[v] = std::popcount(sv.adj[v]);

  KuratowskiSearch search(sv);
  std::optional<KuratowskiCertificate> result;

  // K5 subdivisions: 5 branch vertices of degree >= 4.
  std::vector<int> cand4;
  for (int v = 0; v < sv.n; ++v)
    if (deg[v] >= 4) cand4.push_back(v);
  if (cand4.size() >= 5) {
    std::vector<std::pair<int, int>> k5_pairs;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) k5_pairs.emplace_back(i, j);
    combinations(static_cast<int>(cand4.size()), 5, [&](const std::vector<int>& idx) {
      std::vector<int> b;
      for (int i : idx) b.push_back(cand4[i]);
      if (!search.try_branches(b, k5_pairs)) return false;
      KuratowskiCertificate cert;
      cert.kind = KuratowskiCertificate::Kind::K5;
      for (int v : b) cert.branch.push_back(sv.old_ids[v]);
      for (auto& [key, path] : search.found) {
        std::vector<VertexId> mapped;
        for (int v : path) mapped.push_back(sv.old_ids[v]);
        cert.paths[key] = std::move(mapped);
      }
      result = std::move(cert);
      return true;
    });
    if (result) return result;
  }

  // K(3,3) subdivisions: 3+3 branch vertices of degree >= 3.
  std::vector<int> cand3;
  for (int v = 0; v < sv.n; ++v)
    if (deg[v] >= 3) cand3.push_back(v);
  if (cand3.size() >= 6) {
    std::vector<std::pair<int, int>> k33_pairs;
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) k33_pairs.emplace_back(i, j);
    combinations(static_cast<int>(cand3.size()), 6, [&](const std::vector<int>& idx) {
      std::vector<int> six;
      for (int i : idx) six.push_back(cand3[i]);
      // Split six into two parts of 3; fixing six[0] in the first part
      // visits each unordered bipartition once.
      std::vector<int> rest(six.begin() + 1, six.end());
      bool done = false;
      combinations(5, 2, [&](const std::vector<int>& pick) {
        std::vector<int> b{six[0], rest[pick[0]], rest[pick[1]]};
        for (int i = 0; i < 5; ++i)
          if (i != pick[0] && i != pick[1]) b.push_back(rest[i]);
        if (!search.try_branches(b, k33_pairs)) return false;
        KuratowskiCertificate cert;
        cert.kind = KuratowskiCertificate::Kind::K33;
        for (int v : b) cert.branch.push_back(sv.old_ids[v]);
        for (auto& [key, path] : search.found) {
          std::vector<VertexId> mapped;
          for (int v : path) mapped.push_back(sv.old_ids[v]);
          cert.paths[key] = std::move(mapped);
        }
        result = std::move(cert);
        done = true;
        return true;
      });
      return done;
    });
  }
  return result;
}

bool verify_kuratowski(const Graph& g, const KuratowskiCertificate& cert) {
  const bool k5 = cert.kind == KuratowskiCertificate::Kind::K5;
  if (cert.branch.size() != (k5 ? 5u : 6u)) return false;
  std::size_t expected_paths = k5 ? 10u : 9u;
  if (cert.paths.size() != expected_paths) return false;

  std::uint64_t branch_mask = 0;
  for (VertexId v : cert.branch) {
    if (!g.has_vertex(v)) return false;
    branch_mask |= std::uint64_t{1} << v;
  }
  std::uint64_t interior_seen = 0;
  for (const auto& [key, path] : cert.paths) {
    auto [i, j] = key;
    if (path.size() < 2) return false;
    if (path.front() != cert.branch[i] || path.back() != cert.branch[j]) return false;
    for (std::size_t t = 0; t + 1 < path.size(); ++t)
      if (!g.has_edge(path[t], path[t + 1])) return false;
    for (std::size_t t = 1; t + 1 < path.size(); ++t) {
      std::uint64_t bit = std::uint64_t{1} << path[t];
      if ((interior_seen | branch_mask) & bit) return false;
      interior_seen |= bit;
    }
  }
  return true;
}

bool is_homeomorphic_k33(const Graph& g) {
  Graph s = suppress_reducible(g);
  if (s.vertex_count() != 6 || s.edge_count() != 9 || has_bigon(s)) return false;
  for (VertexId v : s.vertices())
    if (s.degree(v) != 3) return false;
  if (!is_triangle_free(s)) return false;
  Graph k33(6, Mode::Simple);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
  return is_isomorphic(s, k33);
}

ApexWitness apex_witness_serial(const Graph& g, int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("apex_witness: k must be 0, 1 or 2");
  ApexWitness w;
  if (is_planar(g)) {
    w.kind = ApexWitness::Kind::Planar;
    return w;
  }
  std::vector<VertexId> vs = g.vertices();
  if (k >= 1) {
    for (VertexId v : vs) {
      if (is_planar(delete_vertices(g, {v}))) {
        w.kind = ApexWitness::Kind::OneApex;
        w.v = v;
        return w;
      }
    }
  }
  if (k >= 2) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (is_planar(delete_vertices(g, {vs[i], vs[j]}))) {
          w.kind = ApexWitness::Kind::TwoApex;
          w.v = vs[i];
          w.w = vs[j];
          return w;
        }
  }
  w.kind = ApexWitness::Kind::NotTwoApex;
  return w;
}

ApexWitness apex_witness(const Graph& g, int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("apex_witness: k must be 0, 1 or 2");
  ApexWitness w;
  if (is_planar(g)) {
    w.kind = ApexWitness::Kind::Planar;
    return w;
  }
  std::vector<VertexId> vs = g.vertices();
  if (k >= 1) {
    for (VertexId v : vs) {
      if (is_planar(delete_vertices(g, {v}))) {
        w.kind = ApexWitness::Kind::OneApex;
        w.v = v;
        return w;
      }
    }
  }
  if (k >= 2) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) pairs.emplace_back(vs[i], vs[j]);
    long best = -1;
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < static_cast<long>(pairs.size()); ++idx) {
      if (is_planar(delete_vertices(g, {pairs[idx].first, pairs[idx].second}))) {
#pragma omp critical
        if (best < 0 || idx < best) best = idx;
      }
    }
    if (best >= 0) {
      w.kind = ApexWitness::Kind::TwoApex;
      w.v = pairs[best].first;
      w.w = pairs[best].second;
      return w;
    }
  }
  w.kind = ApexWitness::Kind::NotTwoApex;
  return w;
}

} // namespace knot21
