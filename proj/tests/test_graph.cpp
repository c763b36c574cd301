#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "domset/graph.hpp"
#include "support/families.hpp"

using namespace domset;
using namespace domset::testing;

TEST_CASE("from_edge_list builds P4 with its metrics") {
  const Graph g = Graph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}});
  REQUIRE(g.n() == 4);
  REQUIRE(g.m() == 3);
  REQUIRE(g.max_degree() == 2);
  REQUIRE(g.diameter() == 3);
  REQUIRE(g.radius() == 2);
  REQUIRE(g.leaves() == std::vector<int>{0, 3});
  REQUIRE(g.supports() == std::vector<int>{1, 2});
  REQUIRE(g.degree(1) == 2);
  REQUIRE(g.has_edge(0, 1));
  REQUIRE_FALSE(g.has_edge(0, 2));
}

TEST_CASE("from_edge_list builds C5") {
  const Graph g = Graph::from_edge_list(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  REQUIRE(g.m() == 5);
  REQUIRE(g.max_degree() == 2);
  REQUIRE(g.diameter() == 2);
  REQUIRE(g.radius() == 2);
  REQUIRE(g.leaves().empty());
  REQUIRE(g.supports().empty());
}

TEST_CASE("from_edge_list rejects invalid input") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const DomsetError& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return Errc::MalformedHeader;
  };
  REQUIRE(code([] { Graph::from_edge_list(4, {{1, 2}, {2, 3}}); }) == Errc::DisconnectedGraph);
  REQUIRE(code([] { Graph::from_edge_list(3, {{1, 2}, {2, 2}, {2, 3}}); }) == Errc::SelfLoop);
  REQUIRE(code([] { Graph::from_edge_list(3, {{1, 2}, {2, 4}}); }) == Errc::VertexOutOfRange);
  REQUIRE(code([] { Graph::from_edge_list(3, {{0, 1}, {1, 2}}); }) == Errc::VertexOutOfRange);
  REQUIRE(code([] { Graph::from_edge_list(0, {}); }) == Errc::VertexOutOfRange);
}

TEST_CASE("from_edge_list merges duplicate pairs") {
  const Graph g = Graph::from_edge_list(3, {{1, 2}, {2, 1}, {2, 3}});
  REQUIRE(g.m() == 2);
}

TEST_CASE("n=1 graph is connected with zero metrics") {
  const Graph g = Graph::from_edge_list(1, {});
  REQUIRE(g.n() == 1);
  REQUIRE(g.m() == 0);
  REQUIRE(g.diameter() == 0);
  REQUIRE(g.radius() == 0);
  REQUIRE(g.leaves().empty());
  REQUIRE(g.supports().empty());
}

TEST_CASE("parse_dimacs reads P4") {
  const Graph g = parse_dimacs("c a path\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  REQUIRE(g.n() == 4);
  REQUIRE(g.m() == 3);
  REQUIRE(g.diameter() == 3);
  REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("parse_dimacs reads K2 where both vertices are leaf and support") {
  const Graph g = parse_dimacs("p edge 2 1\ne 1 2");
  REQUIRE(g.n() == 2);
  REQUIRE(g.leaves() == std::vector<int>{0, 1});
  REQUIRE(g.supports() == std::vector<int>{0, 1});
}

TEST_CASE("parse_dimacs error paths") {
  auto code = [](const std::string& text) {
    try {
      parse_dimacs(text);
    } catch (const DomsetError& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return Errc::SelfLoop;
  };
  // duplicate edge collapses to one distinct edge
  REQUIRE(code("p edge 3 2\ne 1 2\ne 1 2\n") == Errc::EdgeCountMismatch);
  REQUIRE(code("p edge 3 2\ne 1 2\ne 2 1\n") == Errc::EdgeCountMismatch);
  REQUIRE(code("p edge 4 3\ne 1 2\ne 2 3\n") == Errc::EdgeCountMismatch);
  REQUIRE(code("e 1 2\np edge 2 1\n") == Errc::MalformedHeader);
  REQUIRE(code("p graph 2 1\ne 1 2\n") == Errc::MalformedHeader);
  REQUIRE(code("p edge 2 1\np edge 2 1\ne 1 2\n") == Errc::MalformedHeader);
  REQUIRE(code("q edge 2 1\n") == Errc::MalformedHeader);
  REQUIRE(code("") == Errc::MalformedHeader);
  REQUIRE(code("p edge 2 1\ne 1 3\n") == Errc::VertexOutOfRange);
  REQUIRE(code("p edge 2 1\ne 1 1\n") == Errc::SelfLoop);
}

TEST_CASE("write_dimacs round trips and carries the seed comment") {
  const Graph g = random_connected(12, 20, 99);
  const std::string text = write_dimacs(g, 99);
  REQUIRE(text.rfind("c generated seed=99\np edge 12 20\n", 0) == 0);
  const Graph back = parse_dimacs(text);
  REQUIRE(back.edges() == g.edges());
  // without a seed there is no comment line
  REQUIRE(write_dimacs(g).rfind("p edge", 0) == 0);
}

TEST_CASE("random_connected produces the requested shape") {
  const Graph tree = random_connected(5, 4, 3);
  REQUIRE(tree.n() == 5);
  REQUIRE(tree.m() == 4);

  const Graph g = random_connected(50, 286, 7);
  REQUIRE(g.n() == 50);
  REQUIRE(g.m() == 286);
  REQUIRE(g.density() == Catch::Approx(0.2334).margin(0.0005));
}

TEST_CASE("random_connected is reproducible and seed-sensitive") {
  const Graph a = random_connected(20, 40, 11);
  const Graph b = random_connected(20, 40, 11);
  REQUIRE(a.edges() == b.edges());

  std::set<std::vector<std::pair<int, int>>> distinct;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    distinct.insert(random_connected(20, 40, seed).edges());
  }
  REQUIRE(distinct.size() >= 95);
}

TEST_CASE("random_connected rejects out-of-range edge budgets") {
  REQUIRE_THROWS_AS(random_connected(5, 3, 1), DomsetError);
  REQUIRE_THROWS_AS(random_connected(5, 11, 1), DomsetError);
  REQUIRE_NOTHROW(random_connected(5, 10, 1));  // K5
  REQUIRE_NOTHROW(random_connected(1, 0, 1));
}

TEST_CASE("is_dominating agrees with the definition") {
  const Graph p4 = path_graph(4);
  REQUIRE(is_dominating(p4, {1, 2}));
  REQUIRE_FALSE(is_dominating(p4, {0}));
  const Graph c5 = cycle_graph(5);
  REQUIRE(is_dominating(c5, {0, 2}));
  REQUIRE_FALSE(is_dominating(c5, {0}));
  REQUIRE_THROWS_AS(is_dominating(p4, {4}), DomsetError);

  for (int n : {1, 2, 5, 9}) {
    const Graph g = random_by_density(n, 0.5, 5);
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    REQUIRE(is_dominating(g, all));
    REQUIRE_FALSE(is_dominating(g, {}));
  }
}

TEST_CASE("eccentricity_profile examples") {
  REQUIRE(eccentricity_profile(path_graph(4)) == std::pair<int, int>{3, 2});
  REQUIRE(eccentricity_profile(star_graph(4)) == std::pair<int, int>{2, 1});
  REQUIRE(eccentricity_profile(petersen_graph()) == std::pair<int, int>{2, 2});
}

namespace {

// Independent all-pairs BFS oracle (no shared code with Graph internals).
std::pair<int, int> ecc_oracle(const Graph& g) {
  int d = 0, r = g.n();
  for (int src = 0; src < g.n(); ++src) {
    std::vector<int> dist(g.n(), -1);
    std::vector<int> q{src};
    dist[src] = 0;
    int ecc = 0;
    for (std::size_t qi = 0; qi < q.size(); ++qi) {
      for (int w : g.adjacency(q[qi])) {
        if (dist[w] < 0) {
          dist[w] = dist[q[qi]] + 1;
          ecc = std::max(ecc, dist[w]);
          q.push_back(w);
        }
      }
    }
    d = std::max(d, ecc);
    r = std::min(r, ecc);
  }
  return {d, g.n() == 1 ? 0 : r};
}

}  // namespace

TEST_CASE("structural invariants over random graphs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 3 + (int)(seed % 14);
    const long long max_m = (long long)n * (n - 1) / 2;
    const long long m = (n - 1) + (long long)(seed % (max_m - n + 2));
    const Graph g = random_connected(n, m, seed);

    long long degsum = 0;
    for (int v = 0; v < n; ++v) {
      degsum += g.degree(v);
      REQUIRE(std::is_sorted(g.adjacency(v).begin(), g.adjacency(v).end()));
      for (int u : g.adjacency(v)) REQUIRE(g.has_edge(u, v));
    }
    REQUIRE(degsum == 2 * g.m());

    const auto [d, r] = ecc_oracle(g);
    REQUIRE(g.diameter() == d);
    REQUIRE(g.radius() == r);
    REQUIRE(r <= d);
    REQUIRE(d <= 2 * r);

    for (int v : g.supports()) REQUIRE_FALSE(g.is_leaf(v));  // n >= 3
  }
}

TEST_CASE("solution counters survive random add/remove interleavings") {
  Rng rng(424242);
  for (int round = 0; round < 10; ++round) {
    const int n = 6 + (int)uniform_below(rng, 10);
    const long long max_m = (long long)n * (n - 1) / 2;
    const Graph g = random_connected(n, n - 1 + (long long)uniform_below(rng, max_m - n + 2), rng());
    Solution sol(g);
    std::set<int> reference;
    for (int step = 0; step < 60; ++step) {
      const int v = (int)uniform_below(rng, n);
      if (reference.count(v)) {
        reference.erase(v);
        sol.remove(v);
      } else {
        reference.insert(v);
        sol.add(v);
      }
      REQUIRE(sol.counters_consistent());
      REQUIRE(sol.size() == (int)reference.size());
      const std::vector<int> members(reference.begin(), reference.end());
      REQUIRE(sol.feasible() == is_dominating(g, members));
    }
  }
}
