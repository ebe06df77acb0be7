#include "knot21/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "knot21/catalog.hpp"
#include "knot21/graph_io.hpp"
#include "knot21/reduction.hpp"

namespace knot21 {

int DegreeSpec::edge_count() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0) / 2;
}

void DegreeSpec::validate() const {
  if (degrees.empty()) throw std::invalid_argument("DegreeSpec: empty degree list");
  if (degrees.size() > 16) throw std::invalid_argument("DegreeSpec: at most 16 vertices");
  int sum = 0;
  for (int d : degrees) {
    if (d < 0) throw std::invalid_argument("DegreeSpec: negative degree");
    if (d >= static_cast<int>(degrees.size()))
      throw std::invalid_argument("DegreeSpec: degree exceeds vertex count - 1");
    sum += d;
  }
  if (sum % 2 != 0) throw std::invalid_argument("DegreeSpec: odd degree sum");
  if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count)
    throw std::invalid_argument("DegreeSpec: bad shard settings");
}

std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t caret = tok.find('^');
    int d = std::stoi(tok.substr(0, caret));
    int count = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
    if (count < 0 || count > 64) throw std::invalid_argument("parse_degrees: bad count");
    for (int i = 0; i < count; ++i) out.push_back(d);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct State {
  Graph g;                    // Simple, vertices 0..k-1
  std::vector<int> targets;   // target degree per placed vertex
  std::vector<int> remaining; // unplaced targets, non-increasing

  int placed() const { return static_cast<int>(targets.size()); }
};

// Necessary conditions for the state to complete to a realization.
// These must be closed under deleting any single vertex, so that the
// canonical-deletion parent of a feasible state is itself feasible.
bool feasible(const State& s, bool require_connected) {
  int k = s.placed();
  int r = static_cast<int>(s.remaining.size());
  int sum_deficit = 0;
  for (int v = 0; v < k; ++v) {
    int d = s.targets[v] - s.g.degree(v);
    if (d < 0 || d > r) return false;
    sum_deficit += d;
  }
  int future = std::accumulate(s.remaining.begin(), s.remaining.end(), 0);
  if (sum_deficit > future || (future - sum_deficit) % 2 != 0) return false;

  if (require_connected && k > 0) {
    // A saturated component can never attach to the rest.
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (int v = 0; v < k; ++v) {
      if (comp[v] >= 0) continue;
      std::vector<int> stack{v};
      comp[v] = ncomp;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (std::uint64_t m = s.g.neighbor_mask(x); m; m &= m - 1) {
          int y = std::countr_zero(m);
          if (comp[y] < 0) {
            comp[y] = ncomp;
            stack.push_back(y);
          }
        }
      }
      ++ncomp;
    }
    std::vector<int> comp_deficit(ncomp, 0);
    for (int v = 0; v < k; ++v) comp_deficit[comp[v]] += s.targets[v] - s.g.degree(v);
    for (int c = 0; c < ncomp; ++c)
      if (comp_deficit[c] == 0 && (r > 0 || ncomp > 1)) return false;
  }
  return true;
}

// Canonical code with one vertex singled out; equality implies an
// isomorphism that maps mark to mark.
CanonicalCode marked_code(const Graph& g, const std::vector<int>& targets, VertexId mark) {
  std::vector<int> c(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) c[i] = targets[i] * 2;
  c[mark] += 1;
  return canonical_form_ex(g, &c).code;
}

std::vector<State> gen_children(const State& s, const DegreeSpec& spec) {
  std::vector<State> out;
  int k = s.placed();
  std::vector<int> candidates;
  for (int v = 0; v < k; ++v)
    if (s.targets[v] - s.g.degree(v) > 0) candidates.push_back(v);

  std::set<int> distinct_targets(s.remaining.begin(), s.remaining.end());

  for (int t : distinct_targets) {
    // Neighbor subsets of the new vertex among deficit-positive placed
    // vertices; independent when triangle-free is required.
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      int r_after = static_cast<int>(s.remaining.size()) - 1;
      if (t - static_cast<int>(pick.size()) <= r_after) {
        State child;
        child.g = s.g;
        child.g.add_vertex(k);
        for (int u : pick) child.g.add_edge(u, k);
        child.targets = s.targets;
        child.targets.push_back(t);
        child.remaining = s.remaining;
        child.remaining.erase(std::find(child.remaining.begin(), child.remaining.end(), t));
        if (feasible(child, spec.require_connected)) out.push_back(std::move(child));
      }
      if (static_cast<int>(pick.size()) == t) return;
      for (std::size_t i = start; i < candidates.size(); ++i) {
        int u = candidates[i];
        if (spec.require_triangle_free) {
          bool indep = true;
          for (int w : pick)
            if (s.g.has_edge(u, w)) indep = false;
          if (!indep) continue;
        }
        pick.push_back(u);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

// McKay-style acceptance: the newest vertex must lie in the automorphism
// orbit of the canonically chosen deletion vertex (the one landing at the
// last canonical position). `newest_marked` is marked_code at the newest
// vertex, which the caller already has for sibling deduplication.
bool accept_child(const State& s, const CanonicalCode& newest_marked) {
  int k = s.placed();
  if (k <= 1) return true;
  VertexId newest = k - 1;
  VertexId m = canonical_form_ex(s.g, &s.targets).canonical_order.back();
  if (m == newest) return true;
  return marked_code(s.g, s.targets, m) == newest_marked;
}

struct DfsDriver {
  const DegreeSpec& spec;
  const std::function<void(const Graph&)>& emit;
  int shard_level;

  void run() {
    State root;
    root.remaining = spec.degrees; // already validated, sorted non-increasing
    std::sort(root.remaining.rbegin(), root.remaining.rend());
    dfs(root, spec.shard_count == 1);
  }

  void dfs(const State& s, bool owned) {
    if (s.placed() == spec.vertex_count()) {
      if (owned && (!spec.require_connected || is_connected(s.g))) emit(s.g);
      return;
    }
    std::set<CanonicalCode> sibling_codes;
    for (const State& c : gen_children(s, spec)) {
      CanonicalCode marked = marked_code(c.g, c.targets, c.placed() - 1);
      if (!sibling_codes.insert(marked).second) continue;
      if (!accept_child(c, marked)) continue;
      bool child_owned = owned;
      if (spec.shard_count > 1 && c.placed() == shard_level)
        child_owned =
            fnv1a(marked) % spec.shard_count == static_cast<std::uint64_t>(spec.shard_index);
      if (spec.shard_count > 1 && c.placed() < shard_level)
        child_owned = false; // ownership decided at the shard level
      dfs(c, spec.shard_count == 1 ? true : child_owned);
    }
  }
};

} // namespace

void enumerate_graphs(const DegreeSpec& spec, const std::function<void(const Graph&)>& emit) {
  spec.validate();
  int n = spec.vertex_count();
  DfsDriver driver{spec, emit, std::max(1, n - 5)};
  driver.run();
}

std::vector<Graph> enumerate_to_vector(const DegreeSpec& spec) {
  std::vector<Graph> out;
  enumerate_graphs(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> enumerate_sharded(DegreeSpec spec, int shards, bool parallel) {
  if (shards < 1) shards = 1;
  spec.shard_count = shards;
  std::vector<std::vector<Graph>> buckets(shards);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < shards; ++i) {
    DegreeSpec local = spec;
    local.shard_index = i;
    buckets[i] = enumerate_to_vector(local);
  }
  std::vector<Graph> out;
  for (auto& b : buckets)
    for (Graph& g : b) out.push_back(std::move(g));
  return out;
}

std::vector<CanonicalCode> enumerate_bfs_dedup(const DegreeSpec& spec) {
  spec.validate();
  int n = spec.vertex_count();
  State root;
  root.remaining = spec.degrees;
  std::sort(root.remaining.rbegin(), root.remaining.rend());

  std::vector<State> level{root};
  for (int k = 0; k < n; ++k) {
    std::vector<State> next;
    std::unordered_set<std::string> seen;
    for (const State& s : level) {
      for (State& c : gen_children(s, spec)) {
        if (seen.insert(canonical_form_ex(c.g, &c.targets).code).second)
          next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
  std::vector<CanonicalCode> out;
  for (const State& s : level)
    if (!spec.require_connected || is_connected(s.g)) out.push_back(canonical_form(s.g));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CanonicalCode> enumerate_brute_force(const DegreeSpec& spec) {
  spec.validate();
  int n = spec.vertex_count();
  if (n > 8) throw std::invalid_argument("enumerate_brute_force: at most 8 vertices");
  std::vector<int> targets = spec.degrees;
  std::sort(targets.rbegin(), targets.rend());

  // Every class has a labeling with degrees sorted non-increasing, so
  // capping deg[v] by targets[v] keeps the search complete for classes.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  Graph g(n, Mode::Simple);
  std::set<CanonicalCode> codes;
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == pairs.size()) {
      std::vector<int> deg;
      for (int v = 0; v < n; ++v) deg.push_back(g.degree(v));
      std::sort(deg.rbegin(), deg.rend());
      if (deg != targets) return;
      if (spec.require_connected && !is_connected(g)) return;
      codes.insert(canonical_form(g));
      return;
    }
    auto [i, j] = pairs[p];
    // Row i closes at pair (i, n-1): vertex i's degree must be exact then.
    bool closes_row = (j == n - 1);
    if (!closes_row || g.degree(i) == targets[i]) rec(p + 1);
    if (g.degree(i) < targets[i] && g.degree(j) < targets[j] &&
        !(spec.require_triangle_free && (g.neighbor_mask(i) & g.neighbor_mask(j)))) {
      g.add_edge(i, j);
      if (!closes_row || g.degree(i) == targets[i]) rec(p + 1);
      g.remove_edge(i, j);
    }
  };
  rec(0);
  return {codes.begin(), codes.end()};
}

Classification classify(const Graph& g) {
  Classification c;
  c.witness = apex_witness(g, 2);
  if (c.witness.kind != ApexWitness::Kind::NotTwoApex) {
    c.verdict = Classification::Verdict::NotIKTwoApex;
    return c;
  }
  if (const NamedGraph* match = find_catalog_match(g)) {
    c.verdict = Classification::Verdict::IKCatalogMatch;
    c.catalog_name = match->aliases.empty() ? match->name : match->aliases.front();
    return c;
  }
  c.verdict = Classification::Verdict::Unknown;
  return c;
}

std::string theorem_case_name(TheoremCase c) {
  switch (c) {
    case TheoremCase::Cubic: return "cubic";
    case TheoremCase::V4_3_10: return "4-3-10";
    case TheoremCase::V4_6_6: return "4-6-6";
    case TheoremCase::V4_9_2: return "4-9-2";
    case TheoremCase::MaxDeg5Plus: return "maxdeg5";
  }
  return "?";
}

std::vector<int> theorem_case_degrees(TheoremCase c) {
  switch (c) {
    case TheoremCase::Cubic: return parse_degrees("3^14");
    case TheoremCase::V4_3_10: return parse_degrees("4^3,3^10");
    case TheoremCase::V4_6_6: return parse_degrees("4^6,3^6");
    case TheoremCase::V4_9_2: return parse_degrees("4^9,3^2");
    case TheoremCase::MaxDeg5Plus: return {};
  }
  return {};
}

TheoremReport verify_theorem1(TheoremCase tcase, const std::vector<int>* degrees, int jobs) {
  auto start = std::chrono::steady_clock::now();
  TheoremReport rep;
  rep.case_name = theorem_case_name(tcase);
  rep.degrees = degrees ? *degrees : theorem_case_degrees(tcase);
  if (tcase == TheoremCase::MaxDeg5Plus && !degrees)
    throw std::invalid_argument("verify_theorem1: maxdeg5 needs an explicit degree sequence");
  std::sort(rep.degrees.rbegin(), rep.degrees.rend());

#ifdef _OPENMP
  if (jobs <= 0) jobs = omp_get_max_threads();
#else
  if (jobs <= 0) jobs = 1;
#endif
  DegreeSpec spec;
  spec.degrees = rep.degrees;
  rep.shard_count = jobs > 1 ? jobs * 4 : 1;
  std::vector<Graph> classes = enumerate_sharded(spec, rep.shard_count, jobs > 1);
  rep.total_classes = static_cast<long>(classes.size());

  std::vector<std::pair<std::string, std::string>> survivors;
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (long i = 0; i < static_cast<long>(classes.size()); ++i) {
    const Graph& g = classes[i];
    long p8c = 0, p8f = 0, p9c = 0, p9f = 0;
    std::vector<VertexId> vs = g.vertices();
    for (std::size_t x = 0; x < vs.size(); ++x)
      for (std::size_t y = x + 1; y < vs.size(); ++y) {
        // The lemmas are statements about the actual size of the reduction;
        // the count bound can under-shoot it on degenerate pairs.
        Graph reduced = reduce_pair(g, vs[x], vs[y]).graph;
        int e = reduced.edge_count();
        if (e > 9) continue;
        if (e <= 8) {
          ++p8c;
          if (!is_planar(reduced)) ++p8f;
        } else {
          ++p9c;
          if (!is_planar(reduced) && !is_homeomorphic_k33(reduced)) ++p9f;
        }
      }
    Classification cls = classify(g);
#pragma omp critical
    {
      rep.planar8_checked += p8c;
      rep.planar8_failures += p8f;
      rep.planar9_checked += p9c;
      rep.planar9_failures += p9f;
      if (cls.verdict == Classification::Verdict::NotIKTwoApex) {
        ++rep.two_apex;
      } else {
        std::string name =
            cls.verdict == Classification::Verdict::IKCatalogMatch ? cls.catalog_name : "?";
        survivors.emplace_back(to_graph6(g), name);
      }
    }
  }
  std::sort(survivors.begin(), survivors.end());
  for (auto& [g6, name] : survivors) {
    rep.survivors_g6.push_back(g6);
    rep.survivor_names.push_back(name);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<std::vector<int>> maxdeg5_sequences() {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      if (!cur.empty() && cur.front() >= 5 &&
          cur.front() <= static_cast<int>(cur.size()) - 1 && cur.size() <= 16)
        out.push_back(cur);
      return;
    }
    for (int d = std::min(left, maxpart); d >= 3; --d) {
      if (left - d != 0 && left - d < 3) continue;
      cur.push_back(d);
      rec(left - d, d);
      cur.pop_back();
    }
  };
  rec(42, 41);
  return out;
}

} // namespace knot21
