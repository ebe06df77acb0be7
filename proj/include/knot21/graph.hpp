#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace knot21 {

using VertexId = int;

enum class Mode { Simple, Multi };

/// Undirected labeled graph on small dense integer ids.
///
/// Loops are never stored; parallel edges are allowed in Multi mode only.
/// All mutating operations keep the degree cache consistent, and every
/// operation in this header treats the graph as a plain value.
class Graph {
public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n, Mode mode = Mode::Simple);

  Mode mode() const { return mode_; }
  void set_mode(Mode m);

  bool has_vertex(VertexId v) const;
  void add_vertex(VertexId v);
  VertexId add_vertex(); // smallest unused id
  void remove_vertex(VertexId v); // drops incident edges

  int vertex_count() const { return n_vertices_; }
  int edge_count() const { return n_edges_; } // parallel edges counted

  std::vector<VertexId> vertices() const;
  std::vector<std::tuple<VertexId, VertexId, int>> edges() const; // u < v, multiplicity

  int multiplicity(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const { return multiplicity(u, v) > 0; }
  void add_edge(VertexId u, VertexId v, int mult = 1);
  void remove_edge(VertexId u, VertexId v, int mult = 1);

  int degree(VertexId v) const; // counts parallel edges with multiplicity
  int min_degree() const;       // over present vertices; 0 for empty graph
  std::vector<VertexId> neighbors(VertexId v) const;
  std::uint64_t neighbor_mask(VertexId v) const;
  std::uint64_t vertex_mask() const { return present_; }

  /// Same graph with vertices relabeled to 0..n-1 in ascending id order.
  /// When old_ids is given, old_ids[new_id] is the original id.
  Graph compacted(std::vector<VertexId>* old_ids = nullptr) const;

  bool operator==(const Graph& other) const; // labeled equality

private:
  void ensure_capacity(int cap);
  void check_vertex(VertexId v) const;
  std::uint8_t& at(VertexId u, VertexId v) { return adj_[u * cap_ + v]; }
  std::uint8_t at(VertexId u, VertexId v) const { return adj_[u * cap_ + v]; }

  Mode mode_ = Mode::Simple;
  int cap_ = 0;
  int n_vertices_ = 0;
  int n_edges_ = 0;
  std::uint64_t present_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<int> deg_;
};

// --- elementary queries ---------------------------------------------------

std::vector<int> degree_sequence(const Graph& g); // non-increasing

constexpr int kInfiniteDistance = -1;
int dist(const Graph& g, VertexId u, VertexId v); // kInfiniteDistance if disconnected

bool is_connected(const Graph& g); // empty graph counts as connected
bool is_triangle_free(const Graph& g);
bool has_bigon(const Graph& g);

// --- reductions -----------------------------------------------------------

Graph delete_vertices(const Graph& g, const std::vector<VertexId>& s);

enum class StepKind { DeleteVertex, RemoveIsolated, ContractEdge };

struct ReductionStep {
  StepKind kind;
  VertexId u = -1;
  VertexId v = -1;          // ContractEdge: v merged into u
  int loops_removed = 0;    // edge multiplicity dropped as loops
  int parallels_merged = 0; // Simple-mode duplicate collapses
};

using Transcript = std::vector<ReductionStep>;

struct ContractStats {
  VertexId kept = -1;
  int loops_removed = 0;
  int parallels_merged = 0;
};

/// Contract edge u-v. The merged vertex keeps the identity of the
/// higher-degree endpoint (lower id on ties); loops are removed eagerly.
Graph contract_edge(const Graph& g, VertexId u, VertexId v, ContractStats* stats = nullptr);

struct SuppressOptions {
  std::mt19937* rng = nullptr;  // randomizes vertex and edge choices
  Transcript* transcript = nullptr;
};

/// Repeatedly delete isolated vertices and contract one edge at each vertex
/// of degree 1 or 2, until min degree >= 3 or the graph is empty.
/// Result is in Multi mode.
Graph suppress_reducible(const Graph& g, const SuppressOptions& opts = {});

} // namespace knot21
