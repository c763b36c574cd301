#pragma once

// Simple connected undirected graphs plus the coverage bookkeeping used by
// the dominating-set solvers. Vertex ids are 0-based everywhere in the
// library; DIMACS files and LP output use 1-based ids on the wire.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domset/random.hpp"

namespace domset {

enum class Errc {
  DisconnectedGraph,
  VertexOutOfRange,
  SelfLoop,
  MalformedHeader,
  EdgeCountMismatch,
  EdgeBudgetOutOfRange,
  InfeasibleSeed,
  AlphaOutOfRange,
  SizeGuardExceeded,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::EdgeCountMismatch: return "EdgeCountMismatch";
    case Errc::EdgeBudgetOutOfRange: return "EdgeBudgetOutOfRange";
    case Errc::InfeasibleSeed: return "InfeasibleSeed";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::SizeGuardExceeded: return "SizeGuardExceeded";
  }
  return "UnknownError";
}

class DomsetError : public std::runtime_error {
 public:
  DomsetError(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw DomsetError(code, msg);
}

namespace detail {

// Eccentricity of src; fills dist (-1 = unreachable) and the BFS queue.
inline int bfs_eccentricity(const std::vector<std::vector<int>>& adj, int src,
                            std::vector<int>& dist, std::vector<int>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  queue.push_back(src);
  dist[src] = 0;
  int ecc = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int u = queue[qi];
    for (int w : adj[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        ecc = std::max(ecc, dist[w]);
        queue.push_back(w);
      }
    }
  }
  return ecc;
}

}  // namespace detail

// Immutable after construction; every structural metric (degrees, diameter,
// radius, leaves, supports) is computed once up front. Construction rejects
// disconnected input.
class Graph {
 public:
  // Builds from 1-based endpoint pairs, as found in DIMACS files.
  // Duplicate pairs are merged; self-loops and out-of-range ids throw.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1) fail(Errc::VertexOutOfRange, "vertex count must be at least 1");
    std::vector<std::pair<int, int>> e0;
    e0.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
      if (u < 1 || u > n || v < 1 || v > n) {
        fail(Errc::VertexOutOfRange,
             "edge (" + std::to_string(u) + "," + std::to_string(v) +
                 ") outside 1.." + std::to_string(n));
      }
      if (u == v) fail(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
      const int a = std::min(u, v) - 1;
      const int b = std::max(u, v) - 1;
      e0.emplace_back(a, b);
    }
    std::sort(e0.begin(), e0.end());
    e0.erase(std::unique(e0.begin(), e0.end()), e0.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(e0);
    g.adj_.assign(n, {});
    for (const auto& [a, b] : g.edges_) {
      g.adj_[a].push_back(b);
      g.adj_[b].push_back(a);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

    std::vector<int> dist(n), queue;
    queue.reserve(n);
    detail::bfs_eccentricity(g.adj_, 0, dist, queue);
    if ((int)queue.size() != n) {
      fail(Errc::DisconnectedGraph,
           "only " + std::to_string(queue.size()) + " of " + std::to_string(n) +
               " vertices reachable from vertex 1");
    }

    g.max_degree_ = 0;
    for (int v = 0; v < n; ++v) g.max_degree_ = std::max(g.max_degree_, g.degree(v));

    int d = 0, r = n;
    for (int v = 0; v < n; ++v) {
      const int ecc = detail::bfs_eccentricity(g.adj_, v, dist, queue);
      d = std::max(d, ecc);
      r = std::min(r, ecc);
    }
    g.diameter_ = d;
    g.radius_ = (n == 1) ? 0 : r;

    g.is_leaf_.assign(n, 0);
    g.is_support_.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 1) {
        g.is_leaf_[v] = 1;
        g.leaves_.push_back(v);
      }
    }
    for (int v = 0; v < n; ++v) {
      for (int u : g.adj_[v]) {
        if (g.is_leaf_[u]) {
          g.is_support_[v] = 1;
          break;
        }
      }
      if (g.is_support_[v]) g.supports_.push_back(v);
    }
    return g;
  }

  int n() const { return n_; }
  int m() const { return (int)edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& adjacency(int v) const { return adj_[v]; }
  int degree(int v) const { return (int)adj_[v].size(); }
  int max_degree() const { return max_degree_; }
  int diameter() const { return diameter_; }
  int radius() const { return radius_; }
  const std::vector<int>& leaves() const { return leaves_; }
  const std::vector<int>& supports() const { return supports_; }
  bool is_leaf(int v) const { return is_leaf_[v] != 0; }
  bool is_support(int v) const { return is_support_[v] != 0; }
  int num_leaves() const { return (int)leaves_.size(); }
  int num_supports() const { return (int)supports_.size(); }

  bool has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      fail(Errc::VertexOutOfRange,
           "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
    }
  }

  double density() const {
    return n_ > 1 ? 2.0 * m() / ((double)n_ * (n_ - 1)) : 0.0;
  }

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // a < b, sorted
  std::vector<std::vector<int>> adj_;       // sorted neighbor lists
  int max_degree_ = 0;
  int diameter_ = 0;
  int radius_ = 0;
  std::vector<int> leaves_;
  std::vector<int> supports_;
  std::vector<std::uint8_t> is_leaf_;
  std::vector<std::uint8_t> is_support_;
};

// (diameter, radius)
inline std::pair<int, int> eccentricity_profile(const Graph& g) {
  return {g.diameter(), g.radius()};
}

// True iff every vertex is in `members` or adjacent to one of them.
// Runs one pass over members' neighborhoods; independent of the
// incremental counters in Solution.
inline bool is_dominating(const Graph& g, const std::vector<int>& members) {
  std::vector<std::uint8_t> covered(g.n(), 0);
  int count = 0;
  for (int v : members) {
    g.check_vertex(v);
    if (!covered[v]) {
      covered[v] = 1;
      ++count;
    }
    for (int u : g.adjacency(v)) {
      if (!covered[u]) {
        covered[u] = 1;
        ++count;
      }
    }
  }
  return count == g.n();
}

// Mutable vertex subset with incremental closed-neighborhood coverage
// counters: cover_count(v) = |N[v] ∩ members|. Single-owner; the Graph
// must outlive it.
class Solution {
 public:
  explicit Solution(const Graph& g)
      : g_(&g), in_(g.n(), 0), cover_(g.n(), 0), uncovered_(g.n()) {}

  void add(int v) {
    g_->check_vertex(v);
    assert(!in_[v]);
    in_[v] = 1;
    order_.push_back(v);
    bump(v, +1);
  }

  void remove(int v) {
    g_->check_vertex(v);
    assert(in_[v]);
    in_[v] = 0;
    order_.erase(std::find(order_.begin(), order_.end(), v));
    bump(v, -1);
  }

  // Backtracking fast path.
  void remove_last() {
    assert(!order_.empty());
    const int v = order_.back();
    order_.pop_back();
    in_[v] = 0;
    bump(v, -1);
  }

  bool contains(int v) const { return in_[v] != 0; }
  int size() const { return (int)order_.size(); }
  bool feasible() const { return uncovered_ == 0; }
  int uncovered_count() const { return uncovered_; }
  int cover_count(int v) const { return cover_[v]; }

  // Members in insertion order.
  const std::vector<int>& members() const { return order_; }

  std::vector<int> sorted_members() const {
    std::vector<int> s(order_);
    std::sort(s.begin(), s.end());
    return s;
  }

  const Graph& graph() const { return *g_; }

  // From-scratch recount; used to validate the incremental counters.
  bool counters_consistent() const {
    std::vector<int> fresh(g_->n(), 0);
    for (int v : order_) {
      fresh[v] += 1;
      for (int u : g_->adjacency(v)) fresh[u] += 1;
    }
    int unc = 0;
    for (int v = 0; v < g_->n(); ++v) {
      if (fresh[v] != cover_[v]) return false;
      if (fresh[v] == 0) ++unc;
    }
    return unc == uncovered_;
  }

 private:
  void bump_one(int u, int delta) {
    const int before = cover_[u];
    cover_[u] += delta;
    if (delta > 0 && before == 0) --uncovered_;
    if (delta < 0 && cover_[u] == 0) ++uncovered_;
  }

  void bump(int v, int delta) {
    bump_one(v, delta);
    for (int u : g_->adjacency(v)) bump_one(u, delta);
  }

  const Graph* g_;
  std::vector<int> order_;
  std::vector<std::uint8_t> in_;
  std::vector<int> cover_;
  int uncovered_;
};

// --- DIMACS-like text format -------------------------------------------
//
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>            (1-based, m lines)
//
// The declared edge count must match the number of distinct parsed edges;
// duplicate edge lines therefore surface as EdgeCountMismatch.

inline Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> pairs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok == "c") continue;
    if (tok == "p") {
      if (n >= 0) fail(Errc::MalformedHeader, "duplicate 'p' line at line " + std::to_string(lineno));
      std::string kind;
      if (!(ls >> kind >> n >> m) || kind != "edge" || n < 1 || m < 0) {
        fail(Errc::MalformedHeader, "expected 'p edge <n> <m>' at line " + std::to_string(lineno));
      }
    } else if (tok == "e") {
      if (n < 0) fail(Errc::MalformedHeader, "edge line before 'p' header at line " + std::to_string(lineno));
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) {
        fail(Errc::MalformedHeader, "expected 'e <u> <v>' at line " + std::to_string(lineno));
      }
      if (u < 1 || u > n || v < 1 || v > n) {
        fail(Errc::VertexOutOfRange,
             "edge endpoint outside 1.." + std::to_string(n) + " at line " + std::to_string(lineno));
      }
      pairs.emplace_back((int)u, (int)v);
    } else {
      fail(Errc::MalformedHeader, "unexpected line type '" + tok + "' at line " + std::to_string(lineno));
    }
  }
  if (n < 0) fail(Errc::MalformedHeader, "missing 'p edge' header");
  if ((long long)pairs.size() != m) {
    fail(Errc::EdgeCountMismatch,
         "header declares " + std::to_string(m) + " edges, file has " +
             std::to_string(pairs.size()) + " edge lines");
  }
  std::vector<std::pair<int, int>> normalized(pairs);
  for (auto& [a, b] : normalized) {
    if (a > b) std::swap(a, b);
  }
  std::sort(normalized.begin(), normalized.end());
  const auto distinct = std::unique(normalized.begin(), normalized.end()) - normalized.begin();
  if (distinct != (long long)pairs.size()) {
    fail(Errc::EdgeCountMismatch,
         "duplicate edges: " + std::to_string(pairs.size()) + " lines but only " +
             std::to_string(distinct) + " distinct edges");
  }
  return Graph::from_edge_list((int)n, pairs);
}

inline std::string write_dimacs(const Graph& g, std::optional<std::uint64_t> seed = {}) {
  std::ostringstream out;
  if (seed) out << "c generated seed=" << *seed << "\n";
  out << "p edge " << g.n() << " " << g.m() << "\n";
  for (const auto& [a, b] : g.edges()) out << "e " << a + 1 << " " << b + 1 << "\n";
  return out.str();
}

// Seeded random connected graph with exactly m edges: a random spanning
// tree guarantees connectivity, then edges are drawn uniformly among the
// remaining non-adjacent pairs.
inline Graph random_connected(int n, long long m, std::uint64_t seed) {
  if (n < 1) fail(Errc::VertexOutOfRange, "vertex count must be at least 1");
  const long long max_m = (long long)n * (n - 1) / 2;
  const long long min_m = n - 1;
  if (m < min_m || m > max_m) {
    fail(Errc::EdgeBudgetOutOfRange,
         "edge count " + std::to_string(m) + " outside [" + std::to_string(min_m) +
             "," + std::to_string(max_m) + "] for n=" + std::to_string(n));
  }
  Rng rng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  shuffle_vec(perm, rng);

  std::vector<bool> adjacent((std::size_t)n * n, false);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve((std::size_t)m);
  auto connect = [&](int a, int b) {
    adjacent[(std::size_t)a * n + b] = true;
    adjacent[(std::size_t)b * n + a] = true;
    pairs.emplace_back(a + 1, b + 1);
  };
  for (int i = 1; i < n; ++i) {
    connect(perm[i], perm[uniform_below(rng, (std::uint64_t)i)]);
  }
  std::vector<std::pair<int, int>> rest;
  rest.reserve((std::size_t)(max_m - min_m));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!adjacent[(std::size_t)a * n + b]) rest.emplace_back(a, b);
    }
  }
  shuffle_vec(rest, rng);
  for (long long i = 0; i < m - min_m; ++i) {
    pairs.emplace_back(rest[i].first + 1, rest[i].second + 1);
  }
  return Graph::from_edge_list(n, pairs);
}

}  // namespace domset
