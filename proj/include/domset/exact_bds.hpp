#pragma once

// Exact solver by implicit enumeration over solution sizes.
//
// A priority list orders the candidate vertices (everything outside
// Supp ∪ Leaf: supports belong to some optimal solution, leaves never
// need to). For a trial size ν, subsets of the list of size up to
// ν − |Supp| are enumerated depth-first in lexicographic list order, each
// united with Supp and feasibility-tested at every node. Trial sizes are
// driven by a binary-division search over [L, U] starting near
// ⌊(L + 3U)/4⌋; an exhausted trial raises the lower bound, a found
// solution lowers the upper bound and rebuilds the list, and the search
// stops when the two meet.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "domset/bounds.hpp"
#include "domset/config.hpp"
#include "domset/graph.hpp"
#include "domset/greedy.hpp"
#include "domset/log.hpp"

namespace domset {

// Ordering of V \ (Supp ∪ Leaf) used by the enumeration. The first
// seed_block entries come from the seed solution, sorted by iteratively
// recomputed active degree against (already listed ∪ Supp); the rest
// follow in non-increasing static degree. Ties go to the smallest id.
// The omitted sets are carried along: supports join every enumerated
// solution implicitly, leaves never do.
struct PriorityList {
  std::vector<int> order;
  int seed_block = 0;
  std::vector<int> excluded_supports;
  std::vector<int> excluded_leaves;
};

inline PriorityList build_priority_list(const Graph& g, const Solution& seed) {
  if (!seed.feasible()) {
    fail(Errc::InfeasibleSeed, "priority list needs a feasible seed solution");
  }
  PriorityList out;
  out.excluded_supports = g.supports();
  out.excluded_leaves = g.leaves();
  Solution listed(g);  // chosen = supports + vertices appended so far
  for (int v : g.supports()) listed.add(v);

  std::vector<int> block1;
  for (int v : seed.members()) {
    if (!g.is_support(v) && !g.is_leaf(v)) block1.push_back(v);
  }
  std::sort(block1.begin(), block1.end());
  while (!block1.empty()) {
    int best = -1, best_ad = -1;
    for (int v : block1) {
      const int ad = active_degree(g, v, listed);
      if (ad > best_ad) {
        best_ad = ad;
        best = v;
      }
    }
    out.order.push_back(best);
    listed.add(best);
    block1.erase(std::find(block1.begin(), block1.end(), best));
  }
  out.seed_block = (int)out.order.size();

  std::vector<int> block2;
  for (int v = 0; v < g.n(); ++v) {
    if (!seed.contains(v) && !g.is_support(v) && !g.is_leaf(v)) block2.push_back(v);
  }
  std::stable_sort(block2.begin(), block2.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  out.order.insert(out.order.end(), block2.begin(), block2.end());
  return out;
}

// Wall-clock / node budget threaded through all trials of one solve.
struct Budget {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::optional<std::uint64_t> node_cap;
  std::uint64_t nodes_used = 0;
};

inline Budget make_budget(const SolverConfig& cfg) {
  Budget b;
  if (cfg.time_limit_s) {
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(*cfg.time_limit_s));
  }
  b.node_cap = cfg.node_cap;
  return b;
}

enum class EnumOutcome { Found, Exhausted, BudgetExhausted };

struct EnumResult {
  EnumOutcome outcome = EnumOutcome::Exhausted;
  std::optional<Solution> solution;
  std::uint64_t nodes_visited = 0;  // this call only; Budget accumulates
};

// First feasible solution of size <= nu containing all supports and no
// leaf, in depth-first lexicographic order over the priority list, or
// Exhausted if the whole subtree was enumerated without success. The
// optional dominance pruning skips branches whose remaining capacity
// cannot cover the uncovered vertices; it never skips a feasible subset.
inline EnumResult next_feasible(const Graph& g, int nu, const PriorityList& list,
                                Budget& budget, bool pruning = false) {
  const int s = g.num_supports();
  assert(nu >= s);
  Solution sol(g);
  for (int v : g.supports()) sol.add(v);

  EnumResult res;
  bool budget_hit = false;
  auto charge = [&]() -> bool {
    ++res.nodes_visited;
    ++budget.nodes_used;
    if (budget.node_cap && budget.nodes_used > *budget.node_cap) return false;
    if (budget.deadline && (res.nodes_visited & 1023) == 0 &&
        std::chrono::steady_clock::now() >= *budget.deadline) {
      return false;
    }
    return true;
  };

  if (!charge()) {
    budget_hit = true;
  } else if (sol.feasible()) {
    res.outcome = EnumOutcome::Found;
    res.solution = std::move(sol);
    return res;
  } else if (nu > s) {
    const int list_size = (int)list.order.size();
    const long long gain_cap = g.max_degree() + 1;
    // 0 = subtree exhausted, 1 = found, 2 = budget
    auto rec = [&](auto&& self, int start, int remaining) -> int {
      for (int i = start; i < list_size; ++i) {
        if (!charge()) return 2;
        sol.add(list.order[i]);
        if (sol.feasible()) return 1;
        if (remaining > 1) {
          bool descend = true;
          if (pruning && (long long)(remaining - 1) * gain_cap < sol.uncovered_count()) {
            descend = false;
          }
          if (descend) {
            const int rr = self(self, i + 1, remaining - 1);
            if (rr != 0) return rr;
          }
        }
        sol.remove_last();
      }
      return 0;
    };
    const int rr = rec(rec, 0, nu - s);
    if (rr == 1) {
      res.outcome = EnumOutcome::Found;
      res.solution = std::move(sol);
      return res;
    }
    if (rr == 2) budget_hit = true;
  }
  if (budget_hit) res.outcome = EnumOutcome::BudgetExhausted;
  return res;
}

struct TrialStats {
  int nu = 0;
  std::uint64_t nodes = 0;
  int found_size = -1;  // -1 exhausted, -2 budget
};

struct BdsStats {
  int initial_lower = 0;  // Corollary-style combined L
  int initial_upper = 0;  // greedy size
  std::uint64_t nodes_total = 0;
  std::vector<TrialStats> trials;
  // (smallest size still possible, best size known) after each trial
  std::vector<std::pair<int, int>> bound_history;
};

struct BdsResult {
  int gamma = 0;  // proven optimal when proof == Exact, else best size found
  Solution witness;
  Proof proof = Proof::Exact;
  BdsStats stats;
};

inline BdsResult bds_solve(const Graph& g, const SolverConfig& cfg = {}) {
  const BoundsReport bounds = lower_bound(g);
  Solution best = greedy_solve(g);
  int upper = best.size();
  // lower_excl is exclusive: every size <= lower_excl is known infeasible.
  // Initializing it to L-1 keeps the invariant exact when gamma equals L
  // and the greedy start is one above it.
  int lower_excl = bounds.L - 1;

  BdsResult res{upper, best, Proof::Exact, {}};
  res.stats.initial_lower = bounds.L;
  res.stats.initial_upper = upper;

  Budget budget = make_budget(cfg);
  std::optional<PriorityList> list;
  while (upper - lower_excl > 1) {
    int nu = (int)(((long long)lower_excl + 3LL * upper) / 4);
    assert(nu > lower_excl && nu < upper);
    nu = std::max(lower_excl + 1, std::min(nu, upper - 1));
    if (!list) list = build_priority_list(g, best);
    EnumResult trial = next_feasible(g, nu, *list, budget, cfg.pruning);
    res.stats.trials.push_back(
        {nu, trial.nodes_visited,
         trial.outcome == EnumOutcome::Found ? trial.solution->size()
         : trial.outcome == EnumOutcome::Exhausted ? -1
                                                   : -2});
    if (trial.outcome == EnumOutcome::BudgetExhausted) {
      res.proof = Proof::UpperBoundOnly;
      break;
    }
    if (trial.outcome == EnumOutcome::Exhausted) {
      lower_excl = nu;
    } else {
      best = std::move(*trial.solution);
      upper = best.size();
      list = build_priority_list(g, best);
    }
    res.stats.bound_history.emplace_back(lower_excl + 1, upper);
    log_debug("bds: trial nu=" + std::to_string(nu) + " -> [" +
              std::to_string(lower_excl + 1) + "," + std::to_string(upper) + "]");
  }
  res.gamma = upper;
  res.witness = std::move(best);
  res.stats.nodes_total = budget.nodes_used;
  return res;
}

}  // namespace domset
