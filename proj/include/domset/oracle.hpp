#pragma once

// Ground-truth solver by exhaustive enumeration: subsets are tested in
// increasing size and, within a size, in lexicographic order, so the first
// dominating set found is a minimum one and the witness is reproducible.
// Deliberately simple; guarded to n <= 25.

#include <cstdint>
#include <optional>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

struct OracleResult {
  int gamma = 0;
  std::vector<int> witness;        // ascending vertex ids
  std::uint64_t subsets_tested = 0;
};

inline constexpr int kOracleVertexLimit = 25;

// Returns nullopt only when size_cap is given and no dominating set of
// size <= size_cap exists.
inline std::optional<OracleResult> brute_force(const Graph& g,
                                               std::optional<int> size_cap = {}) {
  const int n = g.n();
  if (n > kOracleVertexLimit) {
    fail(Errc::SizeGuardExceeded,
         "brute force limited to n <= " + std::to_string(kOracleVertexLimit) +
             ", got n = " + std::to_string(n));
  }
  std::vector<std::uint64_t> closed(n, 0);
  for (int v = 0; v < n; ++v) {
    closed[v] = 1ULL << v;
    for (int u : g.adjacency(v)) closed[v] |= 1ULL << u;
  }
  const std::uint64_t full = (n == 64) ? ~0ULL : (1ULL << n) - 1;

  OracleResult res;
  std::vector<int> pick;
  const int kmax = std::min(size_cap.value_or(n), n);
  for (int k = 1; k <= kmax; ++k) {
    pick.assign(k, 0);
    bool found = false;
    // lexicographic k-combinations with a running coverage mask
    auto rec = [&](auto&& self, int idx, int start, std::uint64_t mask) -> bool {
      if (idx == k) {
        ++res.subsets_tested;
        return mask == full;
      }
      for (int v = start; v <= n - (k - idx); ++v) {
        pick[idx] = v;
        if (self(self, idx + 1, v + 1, mask | closed[v])) return true;
      }
      return false;
    };
    found = rec(rec, 0, 0, 0);
    if (found) {
      res.gamma = k;
      res.witness = pick;
      return res;
    }
  }
  return std::nullopt;
}

}  // namespace domset
