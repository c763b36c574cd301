#pragma once

#include <cstdint>
#include <optional>

namespace domset {

// Budget and tuning knobs shared by the solvers and the CLI. Unset
// optionals mean "no limit" (or, for max_bases_per_level, the default of
// 10*n chosen at solve time).
struct SolverConfig {
  std::uint64_t seed = 1;
  std::optional<double> time_limit_s;
  std::optional<std::uint64_t> node_cap;
  std::optional<std::uint64_t> max_bases_per_level;
  std::optional<double> alpha;
  bool pruning = false;
};

enum class Proof { Exact, UpperBoundOnly };

inline const char* proof_name(Proof p) {
  return p == Proof::Exact ? "Exact" : "UpperBoundOnly";
}

}  // namespace domset
