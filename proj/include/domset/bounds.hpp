#pragma once

// Lower and upper bounds on the domination number of a connected graph:
//   gamma >= n/(max_degree+1), gamma >= (diameter+1)/3, gamma >= 2*radius/3,
//   gamma >= |Supp| (n >= 3), and gamma <= min(n - |Leaf|, n - max_degree).
// The combined lower bound L is the ceiling of the largest component; the
// components themselves are kept as exact rationals.

#include <optional>

#include "domset/graph.hpp"

namespace domset {

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return (double)num / (double)den; }
  long long floor() const { return num / den; }
  long long ceil() const { return (num + den - 1) / den; }
};

struct BoundsReport {
  Rational lb_degree;    // n / (max_degree + 1)
  Rational lb_diameter;  // (diameter + 1) / 3
  Rational lb_radius;    // 2 * radius / 3
  int lb_support = 0;    // |Supp|; enters L only when n >= 3 (fails on K2)
  int L = 0;             // ceil of the max applicable component
  int ub_leaf = 0;       // n - |Leaf|
  int ub_maxdeg = 0;     // n - max_degree
  std::optional<int> ub_heuristic;
};

inline BoundsReport lower_bound(const Graph& g) {
  BoundsReport r;
  r.lb_degree = {g.n(), g.max_degree() + 1};
  r.lb_diameter = {g.diameter() + 1, 3};
  r.lb_radius = {2LL * g.radius(), 3};
  r.lb_support = g.num_supports();
  long long L = std::max({r.lb_degree.ceil(), r.lb_diameter.ceil(), r.lb_radius.ceil()});
  if (g.n() >= 3) L = std::max(L, (long long)r.lb_support);
  r.L = (int)L;
  r.ub_leaf = g.n() - g.num_leaves();
  r.ub_maxdeg = g.n() - g.max_degree();
  return r;
}

inline BoundsReport upper_candidates(const Graph& g, std::optional<int> heuristic_size = {}) {
  BoundsReport r = lower_bound(g);
  r.ub_heuristic = heuristic_size;
  return r;
}

}  // namespace domset
