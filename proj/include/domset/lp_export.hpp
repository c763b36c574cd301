#pragma once

// Emits the covering integer program for a graph in LP text format:
// minimize the sum of one binary variable per vertex subject to one
// closed-neighborhood covering row per vertex. Export only; the
// companion parser re-reads the emitted text so round-trips can be
// validated without an external solver.

#include <sstream>
#include <string>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

struct LpDocument {
  int n = 0;                           // number of binary variables
  std::vector<int> objective;          // 0-based variable ids, ascending
  std::vector<std::vector<int>> rows;  // rows[i] = variables of cov_{i+1}
  std::vector<int> rhs;                // right-hand side per row
};

inline std::string write_lp(const Graph& g) {
  std::ostringstream o;
  o << "Minimize\n obj:";
  for (int j = 0; j < g.n(); ++j) o << (j ? " + x_" : " x_") << j + 1;
  o << "\nSubject To\n";
  for (int i = 0; i < g.n(); ++i) {
    o << " cov_" << i + 1 << ":";
    bool first = true;
    int self = i;
    // closed neighborhood in ascending order
    for (int u : g.adjacency(i)) {
      if (self >= 0 && self < u) {
        o << (first ? " x_" : " + x_") << self + 1;
        first = false;
        self = -1;
      }
      o << (first ? " x_" : " + x_") << u + 1;
      first = false;
    }
    if (self >= 0) o << (first ? " x_" : " + x_") << self + 1;
    o << " >= 1\n";
  }
  o << "Binary\n";
  for (int j = 0; j < g.n(); ++j) o << " x_" << j + 1 << "\n";
  o << "End\n";
  return o.str();
}

namespace detail {

// "x_<k>" -> k-1; anything else is a format error.
inline int parse_var(const std::string& tok, int lineno) {
  if (tok.rfind("x_", 0) != 0) {
    fail(Errc::MalformedHeader, "expected variable token at line " + std::to_string(lineno));
  }
  return std::stoi(tok.substr(2)) - 1;
}

}  // namespace detail

// Parses text produced by write_lp (and minor whitespace variations).
inline LpDocument parse_lp(const std::string& text) {
  LpDocument doc;
  std::istringstream in(text);
  std::string line;
  enum { None, Objective, Rows, Binaries, Done } section = None;
  int lineno = 0;
  int max_var = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "Minimize") {
      section = Objective;
      continue;
    }
    if (tok == "Subject") {
      section = Rows;
      continue;
    }
    if (tok == "Binary") {
      section = Binaries;
      continue;
    }
    if (tok == "End") {
      section = Done;
      continue;
    }
    switch (section) {
      case Objective: {
        if (tok.rfind("obj", 0) != 0) {
          fail(Errc::MalformedHeader, "expected objective at line " + std::to_string(lineno));
        }
        std::string t;
        while (ls >> t) {
          if (t == "+") continue;
          doc.objective.push_back(detail::parse_var(t, lineno));
        }
        break;
      }
      case Rows: {
        if (tok.rfind("cov_", 0) != 0) {
          fail(Errc::MalformedHeader, "expected 'cov_<i>:' at line " + std::to_string(lineno));
        }
        const int row_index = std::stoi(tok.substr(4)) - 1;
        if (row_index != (int)doc.rows.size()) {
          fail(Errc::MalformedHeader, "constraint rows out of order at line " + std::to_string(lineno));
        }
        std::vector<int> vars;
        std::string t;
        int rhs = -1;
        while (ls >> t) {
          if (t == "+") continue;
          if (t == ">=") {
            if (!(ls >> rhs)) {
              fail(Errc::MalformedHeader, "missing right-hand side at line " + std::to_string(lineno));
            }
            break;
          }
          vars.push_back(detail::parse_var(t, lineno));
        }
        if (rhs < 0) {
          fail(Errc::MalformedHeader, "constraint without '>=' at line " + std::to_string(lineno));
        }
        std::sort(vars.begin(), vars.end());
        for (int v : vars) max_var = std::max(max_var, v);
        doc.rows.push_back(std::move(vars));
        doc.rhs.push_back(rhs);
        break;
      }
      case Binaries:
        doc.n = std::max(doc.n, detail::parse_var(tok, lineno) + 1);
        break;
      default:
        fail(Errc::MalformedHeader, "token outside any section at line " + std::to_string(lineno));
    }
  }
  if (section != Done) fail(Errc::MalformedHeader, "missing 'End' line");
  if (max_var >= doc.n) fail(Errc::MalformedHeader, "constraint references undeclared variable");
  return doc;
}

// True iff the document is exactly the covering program of g: one row per
// vertex whose variables are the closed neighborhood, all rhs 1, all n
// variables binary and in the objective.
inline bool lp_matches_graph(const LpDocument& doc, const Graph& g) {
  if (doc.n != g.n() || (int)doc.rows.size() != g.n()) return false;
  if ((int)doc.objective.size() != g.n()) return false;
  for (int j = 0; j < g.n(); ++j) {
    if (doc.objective[j] != j) return false;
  }
  for (int i = 0; i < g.n(); ++i) {
    if (doc.rhs[i] != 1) return false;
    std::vector<int> closed(g.adjacency(i));
    closed.push_back(i);
    std::sort(closed.begin(), closed.end());
    if (doc.rows[i] != closed) return false;
  }
  return true;
}

}  // namespace domset
