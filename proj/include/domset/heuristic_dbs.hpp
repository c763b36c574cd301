#pragma once

// Breadth/depth hybrid heuristic. Base solutions of size
// β = ⌊α(U−s)⌋ + s contain all supports and are produced breadth-first by
// three rules (prefix of the incumbent, random subset of the incumbent,
// random subset of the non-support non-leaf pool), deduplicated, with a
// lexicographic fallback once random draws keep colliding. Each base is
// extended depth-first one vertex at a time up to size U−1 (uniformly at
// random for the h=0 base, by maximum active degree otherwise). Any
// feasible base or extension replaces the incumbent, shrinks U and β, and
// restarts the level; a level that completes without improvement stops
// the search.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "domset/config.hpp"
#include "domset/graph.hpp"
#include "domset/greedy.hpp"
#include "domset/log.hpp"

namespace domset {

// C(a, b) saturated to 2^64-1. Each step multiplies by (a-b+i)/i with the
// divisor cancelled through gcds first, so intermediate values are exact;
// the running value C(a-b+i, i) is non-decreasing in i, which makes the
// early saturation return sound.
inline std::uint64_t binom_sat(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  constexpr std::uint64_t kSat = ~0ULL;
  std::uint64_t r = 1;
  for (long long i = 1; i <= b; ++i) {
    std::uint64_t num = (std::uint64_t)(a - b + i);
    std::uint64_t den = (std::uint64_t)i;
    const std::uint64_t g = std::gcd(r, den);
    r /= g;
    den /= g;
    num /= den;  // r*num was divisible by i and den is now coprime to r
    if (r > kSat / num) return kSat;
    r *= num;
  }
  return r;
}

// β = ⌊α(U−s)⌋ + s for α in (0,1).
inline int beta_size(double alpha, int upper, int supports) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    fail(Errc::AlphaOutOfRange, "alpha must lie strictly between 0 and 1");
  }
  assert(upper >= supports && supports >= 0);
  return (int)std::floor(alpha * (upper - supports)) + supports;
}

enum class BaseRule { SeedPrefix, SeedSample, PoolSample, Lexicographic };

struct BaseSolution {
  std::vector<int> members;  // ascending; size β, contains all supports
  BaseRule rule = BaseRule::SeedPrefix;
  std::uint64_t index = 0;  // the h it was generated for
};

// Per-level dedup state. `seen` stores the sorted non-support picks. Once
// random draws collide more than kCollisionRetryLimit times the generator
// switches permanently to lexicographic enumeration of the remaining
// subsets of the pool.
struct BaseDedup {
  std::set<std::vector<int>> seen;
  bool lex_mode = false;
  bool lex_primed = false;
  std::vector<int> lex_state;  // current combination (positions into pool)
  int collisions = 0;
};

inline constexpr int kCollisionRetryLimit = 50;

namespace detail {

inline bool advance_combination(std::vector<int>& state, std::size_t pool_size) {
  const int k = (int)state.size();
  if (k == 0) return false;  // single empty combination
  int i = k - 1;
  while (i >= 0 && state[i] == (int)pool_size - k + i) --i;
  if (i < 0) return false;
  ++state[i];
  for (int j = i + 1; j < k; ++j) state[j] = state[j - 1] + 1;
  return true;
}

inline std::optional<std::vector<int>> next_lexicographic(const std::vector<int>& pool,
                                                          int k, BaseDedup& dedup) {
  if ((int)pool.size() < k) return std::nullopt;
  if (!dedup.lex_primed) {
    dedup.lex_state.resize(k);
    for (int i = 0; i < k; ++i) dedup.lex_state[i] = i;
    dedup.lex_primed = true;
  } else if (!advance_combination(dedup.lex_state, pool.size())) {
    return std::nullopt;
  }
  for (;;) {
    std::vector<int> picks(k);
    for (int i = 0; i < k; ++i) picks[i] = pool[dedup.lex_state[i]];
    if (dedup.seen.insert(picks).second) return picks;
    if (!advance_combination(dedup.lex_state, pool.size())) return std::nullopt;
  }
}

}  // namespace detail

// One fresh (unseen) base solution for iteration h, or nullopt when all
// C(pool, β−s) bases of this level have been emitted.
inline std::optional<BaseSolution> make_base(const Graph& g, const Solution& sigma,
                                             int beta, std::uint64_t h, Rng& rng,
                                             BaseDedup& dedup) {
  const int s = g.num_supports();
  const int k = beta - s;
  assert(k >= 0);

  std::vector<int> pool;
  for (int v = 0; v < g.n(); ++v) {
    if (!g.is_support(v) && !g.is_leaf(v)) pool.push_back(v);
  }
  std::vector<int> seed_nonsupp;
  for (int v : sigma.members()) {
    if (!g.is_support(v) && !g.is_leaf(v)) seed_nonsupp.push_back(v);
  }

  auto emit = [&](std::vector<int> picks, BaseRule rule) -> BaseSolution {
    std::vector<int> members(g.supports());
    members.insert(members.end(), picks.begin(), picks.end());
    std::sort(members.begin(), members.end());
    return BaseSolution{std::move(members), rule, h};
  };

  const std::uint64_t seed_space = binom_sat((long long)seed_nonsupp.size(), k);
  bool first_attempt = true;
  while (!dedup.lex_mode) {
    BaseRule rule;
    std::vector<int> picks;
    if (h == 0 && first_attempt && k <= (int)seed_nonsupp.size()) {
      rule = BaseRule::SeedPrefix;
      picks.assign(seed_nonsupp.begin(), seed_nonsupp.begin() + k);
    } else if (h != 0 && h < seed_space) {
      rule = BaseRule::SeedSample;
      std::vector<int> scratch(seed_nonsupp);
      partial_shuffle(scratch, (std::size_t)k, rng);
      picks.assign(scratch.begin(), scratch.begin() + k);
    } else {
      rule = BaseRule::PoolSample;
      std::vector<int> scratch(pool);
      partial_shuffle(scratch, (std::size_t)k, rng);
      picks.assign(scratch.begin(), scratch.begin() + k);
    }
    first_attempt = false;
    std::sort(picks.begin(), picks.end());
    if (dedup.seen.insert(picks).second) return emit(std::move(picks), rule);
    if (++dedup.collisions > kCollisionRetryLimit) dedup.lex_mode = true;
  }
  auto picks = detail::next_lexicographic(pool, k, dedup);
  if (!picks) return std::nullopt;
  return emit(std::move(*picks), BaseRule::Lexicographic);
}

// Depth-first extension chain: grow the base one vertex at a time through
// sizes |base|+1 .. upper-1, testing feasibility after each step. The h=0
// chain picks uniformly among non-leaf outsiders; h>0 picks the maximum
// active degree (ties to the smallest id). The base itself is the
// caller's responsibility to test.
inline std::optional<Solution> extend(const Graph& g, const BaseSolution& base,
                                      int upper, std::uint64_t h, Rng& rng) {
  assert((int)base.members.size() < upper);
  Solution sol(g);
  for (int v : base.members) sol.add(v);

  std::vector<int> candidates;
  int size = sol.size();
  while (size < upper - 1) {
    ++size;
    candidates.clear();
    for (int v = 0; v < g.n(); ++v) {
      if (!sol.contains(v) && !g.is_leaf(v)) candidates.push_back(v);
    }
    if (candidates.empty()) break;
    int x;
    if (h == 0) {
      x = candidates[uniform_below(rng, candidates.size())];
    } else {
      x = candidates[0];
      int best_ad = active_degree(g, x, sol);
      for (std::size_t i = 1; i < candidates.size(); ++i) {
        const int ad = active_degree(g, candidates[i], sol);
        if (ad > best_ad) {
          best_ad = ad;
          x = candidates[i];
        }
      }
    }
    sol.add(x);
    if (sol.feasible()) return sol;
  }
  return std::nullopt;
}

struct LevelStats {
  int beta = 0;
  std::uint64_t bases_tried = 0;
  bool exhausted = false;  // the whole C(pool, β−s) space was emitted
  bool improved = false;
  int found_size = -1;
};

struct DbsStats {
  double alpha = 0.0;
  int initial_size = 0;
  std::uint64_t total_bases = 0;
  bool deadline_hit = false;
  std::vector<LevelStats> levels;
};

struct DbsResult {
  int size = 0;
  Solution witness;
  DbsStats stats;
};

inline DbsResult dbs_solve(const Graph& g, const SolverConfig& cfg = {}) {
  Solution sigma = greedy_solve(g);
  Rng rng(cfg.seed);
  double alpha;
  if (cfg.alpha) {
    if (!(*cfg.alpha > 0.0 && *cfg.alpha < 1.0)) {
      fail(Errc::AlphaOutOfRange, "alpha must lie strictly between 0 and 1");
    }
    alpha = *cfg.alpha;
  } else {
    alpha = 0.2 + 0.5 * uniform_unit(rng);
  }

  DbsResult res{sigma.size(), sigma, {}};
  res.stats.alpha = alpha;
  res.stats.initial_size = sigma.size();

  const int s = g.num_supports();
  int upper = sigma.size();
  if (g.n() <= 2 || upper <= s) return res;  // incumbent already optimal

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (cfg.time_limit_s) {
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(*cfg.time_limit_s));
  }
  int pool_size = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (!g.is_support(v) && !g.is_leaf(v)) ++pool_size;
  }
  const std::uint64_t cap_cfg =
      cfg.max_bases_per_level ? *cfg.max_bases_per_level : 10ULL * (std::uint64_t)g.n();

  while (upper > s) {
    const int beta = beta_size(alpha, upper, s);
    assert(beta < upper);
    const std::uint64_t h_max = binom_sat(pool_size, beta - s);
    const std::uint64_t level_cap = std::min(h_max, cap_cfg);
    BaseDedup dedup;
    LevelStats level;
    level.beta = beta;
    bool space_exhausted = false;
    std::uint64_t h = 0;
    for (; h < level_cap; ++h) {
      if (deadline && std::chrono::steady_clock::now() >= *deadline) {
        res.stats.deadline_hit = true;
        break;
      }
      auto base = make_base(g, sigma, beta, h, rng, dedup);
      if (!base) {
        space_exhausted = true;
        break;
      }
      ++level.bases_tried;
      ++res.stats.total_bases;
      Solution cand(g);
      for (int v : base->members) cand.add(v);
      std::optional<Solution> found;
      if (cand.feasible()) {
        found = std::move(cand);
      } else {
        found = extend(g, *base, upper, h, rng);
      }
      if (found) {
        sigma = std::move(*found);
        upper = sigma.size();
        level.improved = true;
        level.found_size = upper;
        break;
      }
    }
    level.exhausted = space_exhausted || (!level.improved && h >= h_max);
    res.stats.levels.push_back(level);
    log_debug("dbs: level beta=" + std::to_string(level.beta) + " bases=" +
              std::to_string(level.bases_tried) +
              (level.improved ? " improved to " + std::to_string(upper) : " done"));
    if (!level.improved) break;
  }
  res.size = upper;
  res.witness = std::move(sigma);
  return res;
}

}  // namespace domset
