#include "knot21/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace knot21 {

Graph::Graph(int n, Mode mode) : mode_(mode) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("Graph: vertex count out of range");
  ensure_capacity(n);
  for (int v = 0; v < n; ++v) add_vertex(v);
}

void Graph::ensure_capacity(int cap) {
  if (cap <= cap_) return;
  int new_cap = std::max(cap, std::max(8, cap_ * 2));
  new_cap = std::min(new_cap, kMaxVertices);
  if (cap > new_cap) throw std::invalid_argument("Graph: too many vertices");
  std::vector<std::uint8_t> adj(new_cap * new_cap, 0);
  for (int u = 0; u < cap_; ++u)
    for (int v = 0; v < cap_; ++v) adj[u * new_cap + v] = adj_[u * cap_ + v];
  adj_ = std::move(adj);
  deg_.resize(new_cap, 0);
  cap_ = new_cap;
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= cap_ || !(present_ >> v & 1))
    throw std::invalid_argument("Graph: unknown vertex " + std::to_string(v));
}

void Graph::set_mode(Mode m) {
  if (m == Mode::Simple && mode_ == Mode::Multi && has_bigon(*this))
    throw std::logic_error("Graph: cannot switch to Simple mode with parallel edges");
  mode_ = m;
}

bool Graph::has_vertex(VertexId v) const {
  return v >= 0 && v < cap_ && (present_ >> v & 1);
}

void Graph::add_vertex(VertexId v) {
  if (v < 0 || v >= kMaxVertices)
    throw std::invalid_argument("Graph: vertex id out of range");
  if (has_vertex(v)) return;
  ensure_capacity(v + 1);
  present_ |= std::uint64_t{1} << v;
  ++n_vertices_;
}

VertexId Graph::add_vertex() {
  int v = std::countr_one(present_);
  add_vertex(v);
  return v;
}

void Graph::remove_vertex(VertexId v) {
  check_vertex(v);
  for (int u = 0; u < cap_; ++u) {
    if (at(u, v) > 0) {
      int m = at(u, v);
      n_edges_ -= m;
      deg_[u] -= m;
      at(u, v) = at(v, u) = 0;
    }
  }
  deg_[v] = 0;
  present_ &= ~(std::uint64_t{1} << v);
  --n_vertices_;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(n_vertices_);
  for (std::uint64_t m = present_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<std::tuple<VertexId, VertexId, int>> Graph::edges() const {
  std::vector<std::tuple<VertexId, VertexId, int>> out;
  for (int u = 0; u < cap_; ++u)
    for (int v = u + 1; v < cap_; ++v)
      if (at(u, v) > 0) out.emplace_back(u, v, at(u, v));
  return out;
}

int Graph::multiplicity(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return 0;
  return at(u, v);
}

void Graph::add_edge(VertexId u, VertexId v, int mult) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
  if (mult <= 0) throw std::invalid_argument("Graph: edge multiplicity must be positive");
  if (mode_ == Mode::Simple && at(u, v) + mult > 1)
    throw std::invalid_argument("Graph: duplicate edge in Simple mode");
  if (at(u, v) + mult > 255) throw std::invalid_argument("Graph: multiplicity overflow");
  at(u, v) += static_cast<std::uint8_t>(mult);
  at(v, u) = at(u, v);
  deg_[u] += mult;
  deg_[v] += mult;
  n_edges_ += mult;
}

void Graph::remove_edge(VertexId u, VertexId v, int mult) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || at(u, v) < mult)
    throw std::invalid_argument("Graph: missing edge");
  at(u, v) -= static_cast<std::uint8_t>(mult);
  at(v, u) = at(u, v);
  deg_[u] -= mult;
  deg_[v] -= mult;
  n_edges_ -= mult;
}

int Graph::degree(VertexId v) const {
  check_vertex(v);
  return deg_[v];
}

int Graph::min_degree() const {
  int best = 0;
  bool first = true;
  for (VertexId v : vertices()) {
    if (first || deg_[v] < best) best = deg_[v];
    first = false;
  }
  return best;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  for (int u = 0; u < cap_; ++u)
    if (at(v, u) > 0) out.push_back(u);
  return out;
}

std::uint64_t Graph::neighbor_mask(VertexId v) const {
  check_vertex(v);
  std::uint64_t m = 0;
  for (int u = 0; u < cap_; ++u)
    if (at(v, u) > 0) m |= std::uint64_t{1} << u;
  return m;
}

Graph Graph::compacted(std::vector<VertexId>* old_ids) const {
  std::vector<VertexId> vs = vertices();
  Graph out(static_cast<int>(vs.size()), mode_);
  std::vector<int> newid(cap_, -1);
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) newid[vs[i]] = i;
  for (auto [u, v, m] : edges()) out.add_edge(newid[u], newid[v], m);
  if (old_ids) *old_ids = vs;
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (present_ != other.present_ || mode_ != other.mode_ || n_edges_ != other.n_edges_)
    return false;
  for (VertexId v : vertices())
    for (VertexId u : vertices())
      if (at(u, v) != other.at(u, v)) return false;
  return true;
}

// --- elementary queries ---------------------------------------------------

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (VertexId v : g.vertices()) out.push_back(g.degree(v));
  std::sort(out.rbegin(), out.rend());
  return out;
}

int dist(const Graph& g, VertexId u, VertexId v) {
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw std::invalid_argument("dist: unknown vertex");
  if (u == v) return 0;
  std::vector<int> d(Graph::kMaxVertices, -1);
  std::queue<VertexId> q;
  d[u] = 0;
  q.push(u);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    for (VertexId y : g.neighbors(x)) {
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        if (y == v) return d[y];
        q.push(y);
      }
    }
  }
  return kInfiniteDistance;
}

bool is_connected(const Graph& g) {
  auto vs = g.vertices();
  if (vs.empty()) return true;
  std::uint64_t seen = std::uint64_t{1} << vs[0];
  std::vector<VertexId> stack{vs[0]};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (std::uint64_t m = g.neighbor_mask(x) & ~seen; m; m &= m - 1) {
      int y = std::countr_zero(m);
      seen |= std::uint64_t{1} << y;
      stack.push_back(y);
    }
  }
  return seen == g.vertex_mask();
}

bool is_triangle_free(const Graph& g) {
  auto vs = g.vertices();
  for (VertexId u : vs) {
    std::uint64_t nu = g.neighbor_mask(u);
    for (std::uint64_t m = nu; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (v <= u) continue;
      if (nu & g.neighbor_mask(v)) return false;
    }
  }
  return true;
}

bool has_bigon(const Graph& g) {
  for (auto [u, v, m] : g.edges())
    if (m >= 2) return true;
  return false;
}

// --- reductions -----------------------------------------------------------

Graph delete_vertices(const Graph& g, const std::vector<VertexId>& s) {
  Graph out = g;
  for (VertexId v : s)
    if (!g.has_vertex(v)) throw std::invalid_argument("delete_vertices: unknown vertex");
  for (VertexId v : s)
    if (out.has_vertex(v)) out.remove_vertex(v);
  return out;
}

Graph contract_edge(const Graph& g, VertexId u, VertexId v, ContractStats* stats) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: missing edge");
  VertexId keep = u, drop = v;
  if (g.degree(v) > g.degree(u) || (g.degree(v) == g.degree(u) && v < u))
    std::swap(keep, drop);

  Graph out = g;
  ContractStats st;
  st.kept = keep;
  // Remaining parallel copies of the contracted edge become loops.
  st.loops_removed = g.multiplicity(u, v) - 1;
  out.remove_edge(keep, drop, g.multiplicity(u, v));
  for (VertexId w : out.neighbors(drop)) {
    int m = out.multiplicity(drop, w);
    out.remove_edge(drop, w, m);
    if (out.mode() == Mode::Simple) {
      if (out.has_edge(keep, w))
        st.parallels_merged += m;
      else
        out.add_edge(keep, w, 1), st.parallels_merged += m - 1;
    } else {
      out.add_edge(keep, w, m);
    }
  }
  out.remove_vertex(drop);
  if (stats) *stats = st;
  return out;
}

Graph suppress_reducible(const Graph& g, const SuppressOptions& opts) {
  Graph cur = g;
  cur.set_mode(Mode::Multi);
  for (;;) {
    std::vector<VertexId> low;
    for (VertexId v : cur.vertices())
      if (cur.degree(v) <= 2) low.push_back(v);
    if (low.empty()) break;
    VertexId v = low[0];
    if (opts.rng)
      v = low[(*opts.rng)() % low.size()];
    if (cur.degree(v) == 0) {
      cur.remove_vertex(v);
      if (opts.transcript)
        opts.transcript->push_back({StepKind::RemoveIsolated, v, -1, 0, 0});
      continue;
    }
    auto nbrs = cur.neighbors(v);
    VertexId w = nbrs[0];
    if (opts.rng && nbrs.size() > 1) w = nbrs[(*opts.rng)() % nbrs.size()];
    ContractStats st;
    cur = contract_edge(cur, w, v, &st);
    if (opts.transcript)
      opts.transcript->push_back(
          {StepKind::ContractEdge, st.kept, st.kept == w ? v : w, st.loops_removed, st.parallels_merged});
  }
  return cur;
}

} // namespace knot21
