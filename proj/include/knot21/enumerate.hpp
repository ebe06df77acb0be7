#pragma once

#include <functional>
#include <string>
#include <vector>

#include "knot21/canonical.hpp"
#include "knot21/graph.hpp"
#include "knot21/planarity.hpp"

namespace knot21 {

struct DegreeSpec {
  std::vector<int> degrees; // target degree multiset, one entry per vertex
  bool require_connected = true;
  bool require_triangle_free = true;
  int shard_count = 1;
  int shard_index = 0;

  int vertex_count() const { return static_cast<int>(degrees.size()); }
  int edge_count() const; // degree sum / 2
  void validate() const;  // throws on infeasible specs
};

/// Parses "3^14" or "4^6,3^6" style degree multisets.
std::vector<int> parse_degrees(const std::string& text);

/// Isomorph-free stream of simple graphs realizing the degree multiset,
/// generated by vertex augmentation with canonical-deletion acceptance.
/// Exactly one representative per isomorphism class is emitted.
void enumerate_graphs(const DegreeSpec& spec, const std::function<void(const Graph&)>& emit);

std::vector<Graph> enumerate_to_vector(const DegreeSpec& spec);

/// Runs all shards of the spec, optionally in parallel, and merges.
std::vector<Graph> enumerate_sharded(DegreeSpec spec, int shards, bool parallel);

/// Independent oracle: level-synchronous expansion with global
/// canonical-code deduplication per level. Returns sorted codes.
std::vector<CanonicalCode> enumerate_bfs_dedup(const DegreeSpec& spec);

/// Second oracle for small specs (<= 8 vertices): filter-and-dedup over all
/// labeled graphs via degree-bounded edge recursion. Returns sorted codes.
std::vector<CanonicalCode> enumerate_brute_force(const DegreeSpec& spec);

struct Classification {
  enum class Verdict { NotIKTwoApex, IKCatalogMatch, Unknown };
  Verdict verdict = Verdict::Unknown;
  ApexWitness witness;
  std::string catalog_name; // set for IKCatalogMatch
};

/// 2-apex certificate first, then catalog lookup; Unknown otherwise.
Classification classify(const Graph& g);

enum class TheoremCase { Cubic, V4_3_10, V4_6_6, V4_9_2, MaxDeg5Plus };

std::string theorem_case_name(TheoremCase c);
std::vector<int> theorem_case_degrees(TheoremCase c);

struct TheoremReport {
  std::string case_name;
  std::vector<int> degrees;
  long total_classes = 0;
  long two_apex = 0;
  std::vector<std::string> survivors_g6; // non-2-apex classes
  std::vector<std::string> survivor_names; // catalog match or "?"
  // Reduction-lemma audit over every enumerated graph and vertex pair.
  long planar8_checked = 0;
  long planar8_failures = 0;
  long planar9_checked = 0;
  long planar9_failures = 0;
  double seconds = 0.0;
  int shard_count = 1;
};

/// Enumerates the case's degree spec, classifies every class, and audits the
/// two reduction lemmas on the whole population. For MaxDeg5Plus, `degrees`
/// selects one sequence from maxdeg5_sequences().
TheoremReport verify_theorem1(TheoremCase tcase, const std::vector<int>* degrees = nullptr,
                              int jobs = 1);

/// All degree multisets with sum 42, minimum 3 and maximum >= 5.
std::vector<std::vector<int>> maxdeg5_sequences();

} // namespace knot21
