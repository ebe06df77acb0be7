#pragma once

#include <map>
#include <optional>
#include <vector>

#include "knot21/graph.hpp"

namespace knot21 {

/// Planarity of the simple underlying graph; loops and parallel edges never
/// affect the answer.
bool is_planar(const Graph& g);

struct KuratowskiCertificate {
  enum class Kind { K5, K33 };
  Kind kind;
  std::vector<VertexId> branch; // 5 vertices, or 3+3 (first part then second)
  // Internally disjoint paths between branch vertices, keyed by indices into
  // `branch`; each value is the full vertex sequence including endpoints.
  std::map<std::pair<int, int>, std::vector<VertexId>> paths;
};

/// Exhaustive backtracking search for a K5 or K(3,3) subdivision.
/// Present iff the graph is non-planar; independent of is_planar.
std::optional<KuratowskiCertificate> find_kuratowski(const Graph& g);

/// Checks branch-vertex degrees, path validity and internal disjointness.
bool verify_kuratowski(const Graph& g, const KuratowskiCertificate& cert);

/// True iff the suppression of g is simple, 3-regular on 6 vertices and
/// isomorphic to K(3,3).
bool is_homeomorphic_k33(const Graph& g);

struct ApexWitness {
  enum class Kind { Planar, OneApex, TwoApex, NotTwoApex };
  Kind kind = Kind::NotTwoApex;
  VertexId v = -1;
  VertexId w = -1;
};

/// Searches vertex subsets of size <= k (k in {0,1,2}) whose deletion leaves
/// a planar graph; returns the lexicographically first witness.
ApexWitness apex_witness(const Graph& g, int k);

/// Serial reference with identical semantics, kept for testing and as the
/// benchmark baseline.
ApexWitness apex_witness_serial(const Graph& g, int k);

} // namespace knot21
