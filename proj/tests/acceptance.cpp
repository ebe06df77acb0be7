// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Heavier cases use all hardware threads.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "helpers.hpp"
#include "knot21/canonical.hpp"
#include "knot21/catalog.hpp"
#include "knot21/enumerate.hpp"
#include "knot21/moves.hpp"
#include "knot21/planarity.hpp"
#include "knot21/reduction.hpp"

using namespace knot21;

namespace {

int failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail) {
  std::printf("%s  criterion %2d  %-28s %s\n", ok ? "PASS" : "FAIL", index, name,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  auto fam = move_closure({complete(7)}, MoveOps::NablaY);
  bool ok = fam.size() == 14;
  for (const auto& [code, g] : fam) ok = ok && g.edge_count() == 21;
  double dt = seconds_since(t0);
  ok = ok && dt < 10.0;
  report(1, "K7 closure has 14 classes", ok,
         "classes=" + std::to_string(fam.size()) + " t=" + std::to_string(dt) + "s");
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  auto k7fam = move_closure({complete(7)}, MoveOps::NablaY);
  auto hc = move_closure({catalog_get("H12").graph, catalog_get("C14").graph}, MoveOps::YNabla);
  int shared = 0;
  for (const auto& [code, g] : hc)
    if (k7fam.count(code)) ++shared;
  double dt = seconds_since(t0);
  bool ok = hc.size() == 20 && shared == 14 && static_cast<int>(hc.size()) - shared == 6 &&
            dt < 10.0;
  report(2, "HC closure is 14 + 6 classes", ok,
         "classes=" + std::to_string(hc.size()) + " shared=" + std::to_string(shared) +
             " t=" + std::to_string(dt) + "s");
}

void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  int negative = 0;
  for (const NamedGraph& ng : k7_family())
    if (apex_witness(ng.graph, 2).kind == ApexWitness::Kind::NotTwoApex) ++negative;
  double dt = seconds_since(t0);
  bool ok = negative == 14 && dt < 60.0;
  report(3, "14 non-2-apex certificates", ok,
         "negative=" + std::to_string(negative) + " t=" + std::to_string(dt) + "s");
}

long g_planar8_checked = 0, g_planar8_failures = 0;
long g_planar9_checked = 0, g_planar9_failures = 0;

void absorb_audits(const TheoremReport& rep) {
  g_planar8_checked += rep.planar8_checked;
  g_planar8_failures += rep.planar8_failures;
  g_planar9_checked += rep.planar9_checked;
  g_planar9_failures += rep.planar9_failures;
}

void criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport rep = verify_theorem1(TheoremCase::Cubic, nullptr, 0);
  absorb_audits(rep);

  // The class count is pinned only when two independent routes agree.
  DegreeSpec s;
  s.degrees = parse_degrees("3^14");
  auto dedup = enumerate_bfs_dedup(s);
  bool routes_agree = static_cast<long>(dedup.size()) == rep.total_classes;
  const long kPinnedCount = 110;

  bool ok = routes_agree && rep.total_classes == kPinnedCount &&
            rep.survivor_names == std::vector<std::string>{"C14"};
  report(4, "cubic case: survivor C14", ok,
         "classes=" + std::to_string(rep.total_classes) +
             " dedup=" + std::to_string(dedup.size()) +
             " survivors=" + std::to_string(rep.survivors_g6.size()) +
             " t=" + std::to_string(seconds_since(t0)) + "s");
}

void criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport a = verify_theorem1(TheoremCase::V4_3_10, nullptr, 0);
  TheoremReport b = verify_theorem1(TheoremCase::V4_9_2, nullptr, 0);
  TheoremReport c = verify_theorem1(TheoremCase::V4_6_6, nullptr, 0);
  absorb_audits(a);
  absorb_audits(b);
  absorb_audits(c);
  bool ok = a.survivors_g6.empty() && b.survivors_g6.empty() &&
            c.survivor_names == std::vector<std::string>{"H12"};
  report(5, "degree-4 cases: only H12", ok,
         "4-3-10: " + std::to_string(a.total_classes) + "/" +
             std::to_string(a.survivors_g6.size()) + "  4-9-2: " +
             std::to_string(b.total_classes) + "/" + std::to_string(b.survivors_g6.size()) +
             "  4-6-6: " + std::to_string(c.total_classes) + "/" +
             std::to_string(c.survivors_g6.size()) + "  t=" +
             std::to_string(seconds_since(t0)) + "s");
}

void criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(20240801);
  long tested = 0, bound_violations = 0, eligible = 0, non_tight = 0;
  while (tested < 10000) {
    int n = 8 + static_cast<int>(rng() % 5);
    Graph g = testutil::random_triangle_free(rng, n, 0.8);
    if (g.min_degree() < 3 || !is_connected(g)) continue;
    VertexId a = rng() % n;
    VertexId b = (a + 1 + rng() % (n - 1)) % n;
    NeighborhoodStats st = neighborhood_stats(g, a, b);
    ReduceResult r = reduce_pair(g, a, b, &rng);
    // the unclamped formula may be negative exactly when the residue is empty
    int bound = std::max(count_bound(g, a, b), 0);
    if (r.graph.edge_count() > bound) ++bound_violations;
    if (!st.degenerate && !r.loops_removed && !r.parallels_merged &&
        r.graph.edge_count() != bound)
      ++non_tight;
    if (!st.degenerate && !r.loops_removed && !r.parallels_merged) ++eligible;
    ++tested;
  }
  double dt = seconds_since(t0);
  bool ok = bound_violations == 0 && non_tight == 0 && eligible > 0 && dt < 60.0;
  report(6, "count-bound soundness", ok,
         "tested=" + std::to_string(tested) + " violations=" +
             std::to_string(bound_violations) + " non_tight=" + std::to_string(non_tight) +
             " eligible=" + std::to_string(eligible) + " t=" + std::to_string(dt) + "s");
}

void criterion7() {
  bool ok = g_planar8_checked > 0 && g_planar8_failures == 0;
  report(7, "size<=8 reductions planar", ok,
         "checked=" + std::to_string(g_planar8_checked) +
             " failures=" + std::to_string(g_planar8_failures));
}

void criterion8() {
  bool ok = g_planar9_checked > 0 && g_planar9_failures == 0;
  report(8, "size==9 reductions planar/K33", ok,
         "checked=" + std::to_string(g_planar9_checked) +
             " failures=" + std::to_string(g_planar9_failures));
}

void criterion9() {
  auto t0 = std::chrono::steady_clock::now();
  long disagreements = 0;
  const long kTrials = 10000;
#pragma omp parallel for schedule(dynamic) reduction(+ : disagreements)
  for (long trial = 0; trial < kTrials; ++trial) {
    std::mt19937 rng(31337 + trial);
    int n = 4 + static_cast<int>(rng() % 9); // up to 12 vertices
    double p = 0.15 + 0.05 * (rng() % 7);
    Graph g = testutil::random_graph(rng, n, p);
    if (find_kuratowski(g).has_value() == is_planar(g)) ++disagreements;
  }
  double dt = seconds_since(t0);
  bool ok = disagreements == 0 && dt < 120.0;
  report(9, "planarity dual oracle", ok,
         "trials=" + std::to_string(kTrials) + " disagreements=" +
             std::to_string(disagreements) + " t=" + std::to_string(dt) + "s");
}

void criterion10() {
  std::vector<std::pair<Graph, std::pair<VertexId, VertexId>>> fixtures;
  fixtures.push_back({catalog_get("C14").graph, {0, 10}});
  fixtures.push_back({catalog_get("H12").graph, {0, 8}});
  fixtures.push_back({complete(7), {0, 1}});
  std::mt19937 gen(83);
  for (int i = 0; i < 5; ++i) {
    Graph g = testutil::random_triangle_free(gen, 11, 0.7);
    fixtures.push_back({g, {static_cast<int>(gen() % 11), -1}});
    fixtures.back().second.second = (fixtures.back().second.first + 1 + gen() % 10) % 11;
  }
  long mismatches = 0;
  for (auto& [g, ab] : fixtures) {
    std::mt19937 rng0(7);
    Graph base = reduce_pair(g, ab.first, ab.second, &rng0).graph;
    for (int t = 1; t <= 100; ++t) {
      std::mt19937 rng(7 + t);
      if (!is_isomorphic(reduce_pair(g, ab.first, ab.second, &rng).graph, base)) ++mismatches;
    }
  }
  report(10, "reduction order invariance", mismatches == 0,
         "fixtures=" + std::to_string(fixtures.size()) +
             " orders=100 mismatches=" + std::to_string(mismatches));
}

} // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%s (%d failing)\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT",
              failures);
  return failures == 0 ? 0 : 1;
}
