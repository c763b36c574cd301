#pragma once

// Benchmark harness: runs the solvers over instances, collects one
// RunRecord per (instance, algorithm), and serializes records as JSON
// (single runs) or CSV rows plus a commented summary footer (batches).
// Instances in a batch may be solved in parallel; rows always come out in
// manifest order.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "domset/bounds.hpp"
#include "domset/config.hpp"
#include "domset/exact_bds.hpp"
#include "domset/graph.hpp"
#include "domset/greedy.hpp"
#include "domset/heuristic_dbs.hpp"
#include "domset/oracle.hpp"

namespace domset {

enum class Algo { Greedy, Bds, Dbs, Oracle };

inline const char* algo_name(Algo a) {
  switch (a) {
    case Algo::Greedy: return "greedy";
    case Algo::Bds: return "bds";
    case Algo::Dbs: return "dbs";
    case Algo::Oracle: return "oracle";
  }
  return "?";
}

inline std::optional<Algo> parse_algo(const std::string& s) {
  if (s == "greedy") return Algo::Greedy;
  if (s == "bds") return Algo::Bds;
  if (s == "dbs") return Algo::Dbs;
  if (s == "oracle") return Algo::Oracle;
  return std::nullopt;
}

struct RunRecord {
  std::string instance_id;
  int n = 0;
  int m = 0;
  double density = 0.0;
  Algo algorithm = Algo::Greedy;
  std::uint64_t seed = 0;
  int size_found = 0;
  int L = 0;
  int ub_leaf = 0;
  int ub_maxdeg = 0;
  double elapsed_ms = 0.0;
  Proof proof = Proof::UpperBoundOnly;
  std::optional<double> alpha;      // dbs only
  std::uint64_t counter = 0;        // bds nodes / dbs bases / oracle subsets
  std::vector<int> witness;         // ascending, 0-based
  std::optional<std::string> error; // set when the run failed
};

inline RunRecord run_algorithm(const std::string& instance_id, const Graph& g,
                               Algo algo, const SolverConfig& cfg) {
  RunRecord rec;
  rec.instance_id = instance_id;
  rec.n = g.n();
  rec.m = g.m();
  rec.density = g.density();
  rec.algorithm = algo;
  rec.seed = cfg.seed;
  const BoundsReport bounds = lower_bound(g);
  rec.L = bounds.L;
  rec.ub_leaf = bounds.ub_leaf;
  rec.ub_maxdeg = bounds.ub_maxdeg;

  const auto t0 = std::chrono::steady_clock::now();
  switch (algo) {
    case Algo::Greedy: {
      Solution sol = greedy_solve(g);
      rec.size_found = sol.size();
      rec.proof = Proof::UpperBoundOnly;
      rec.witness = sol.sorted_members();
      rec.counter = 0;
      break;
    }
    case Algo::Bds: {
      BdsResult r = bds_solve(g, cfg);
      rec.size_found = r.gamma;
      rec.proof = r.proof;
      rec.witness = r.witness.sorted_members();
      rec.counter = r.stats.nodes_total;
      break;
    }
    case Algo::Dbs: {
      DbsResult r = dbs_solve(g, cfg);
      rec.size_found = r.size;
      rec.proof = Proof::UpperBoundOnly;
      rec.alpha = r.stats.alpha;
      rec.witness = r.witness.sorted_members();
      rec.counter = r.stats.total_bases;
      break;
    }
    case Algo::Oracle: {
      OracleResult r = brute_force(g).value();
      rec.size_found = r.gamma;
      rec.proof = Proof::Exact;
      rec.witness = r.witness;
      rec.counter = r.subsets_tested;
      break;
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rec;
}

inline nlohmann::ordered_json to_json(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["density"] = r.density;
  j["algorithm"] = algo_name(r.algorithm);
  j["seed"] = r.seed;
  j["size"] = r.size_found;
  j["L"] = r.L;
  j["ub_leaf"] = r.ub_leaf;
  j["ub_maxdeg"] = r.ub_maxdeg;
  j["elapsed_ms"] = r.elapsed_ms;
  j["proof"] = r.error ? "Error" : proof_name(r.proof);
  if (r.alpha) {
    j["alpha"] = *r.alpha;
  } else {
    j["alpha"] = nullptr;
  }
  j["counter"] = r.counter;
  nlohmann::ordered_json w = nlohmann::ordered_json::array();
  for (int v : r.witness) w.push_back(v + 1);  // 1-based on the wire
  j["witness"] = w;
  if (r.error) j["error"] = *r.error;
  return j;
}

inline std::string csv_header() {
  return "instance,n,m,density,algorithm,seed,size,L,ub_leaf,ub_maxdeg,"
         "elapsed_ms,proof,alpha,counter";
}

namespace detail {

inline std::string fmt_double(double v, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

inline std::string csv_sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

}  // namespace detail

inline std::string to_csv_row(const RunRecord& r) {
  std::ostringstream o;
  o << detail::csv_sanitize(r.instance_id) << ',' << r.n << ',' << r.m << ','
    << detail::fmt_double(r.density, "%.6f") << ',' << algo_name(r.algorithm) << ','
    << r.seed << ',' << r.size_found << ',' << r.L << ',' << r.ub_leaf << ','
    << r.ub_maxdeg << ',' << detail::fmt_double(r.elapsed_ms, "%.3f") << ',';
  if (r.error) {
    o << "Error:" << detail::csv_sanitize(*r.error);
  } else {
    o << proof_name(r.proof);
  }
  o << ',';
  if (r.alpha) o << detail::fmt_double(*r.alpha, "%.6f");
  o << ',' << r.counter;
  return o.str();
}

// --- batch running -------------------------------------------------------

struct ManifestEntry {
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
};

// Lines of "<n> <m> <seed>"; '#' starts a comment, blanks are skipped.
inline std::vector<ManifestEntry> parse_manifest(const std::string& text) {
  std::vector<ManifestEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    ManifestEntry e;
    if (!(ls >> e.n)) continue;  // blank or comment-only
    if (!(ls >> e.m >> e.seed)) {
      fail(Errc::MalformedHeader,
           "manifest line " + std::to_string(lineno) + ": expected '<n> <m> <seed>'");
    }
    out.push_back(e);
  }
  return out;
}

inline std::string manifest_instance_id(const ManifestEntry& e) {
  return "rnd-n" + std::to_string(e.n) + "-m" + std::to_string(e.m) + "-s" +
         std::to_string(e.seed);
}

// A unit of bench work; `load` builds (generates or parses) the graph.
struct BenchTask {
  std::string id;
  std::uint64_t seed = 0;  // solver seed for this instance
  std::function<Graph()> load;
};

inline BenchTask task_from_manifest(const ManifestEntry& e) {
  return BenchTask{manifest_instance_id(e), e.seed,
                   [e] { return random_connected(e.n, e.m, e.seed); }};
}

// Runs every algorithm on every task; rows come back instance-major in
// task order. Per-instance failures are recorded in the row and never
// abort the batch.
inline std::vector<RunRecord> run_bench(const std::vector<BenchTask>& tasks,
                                        const std::vector<Algo>& algos,
                                        const SolverConfig& base_cfg, int jobs = 1) {
  std::vector<std::vector<RunRecord>> grouped(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const BenchTask& task = tasks[i];
      SolverConfig cfg = base_cfg;
      cfg.seed = task.seed;
      std::vector<RunRecord> rows;
      std::optional<Graph> g;
      std::string load_error;
      try {
        g.emplace(task.load());
      } catch (const std::exception& e) {
        load_error = e.what();
      }
      for (Algo a : algos) {
        if (!g) {
          RunRecord rec;
          rec.instance_id = task.id;
          rec.algorithm = a;
          rec.seed = cfg.seed;
          rec.size_found = -1;
          rec.error = load_error;
          rows.push_back(std::move(rec));
          continue;
        }
        try {
          rows.push_back(run_algorithm(task.id, *g, a, cfg));
        } catch (const std::exception& e) {
          RunRecord rec;
          rec.instance_id = task.id;
          rec.n = g->n();
          rec.m = g->m();
          rec.density = g->density();
          rec.algorithm = a;
          rec.seed = cfg.seed;
          rec.size_found = -1;
          rec.error = e.what();
          rows.push_back(std::move(rec));
        }
      }
      grouped[i] = std::move(rows);
    }
  };
  const int workers = std::max(1, std::min<int>(jobs, (int)tasks.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<RunRecord> out;
  for (auto& rows : grouped) {
    for (auto& r : rows) out.push_back(std::move(r));
  }
  return out;
}

// Batch footer: how often dbs hit the proven optimum (oracle or exact
// bds reference), its mean quality gap, and mean runtimes per algorithm.
struct BenchSummary {
  int instances = 0;
  int dbs_with_reference = 0;
  int dbs_optimal = 0;
  double dbs_mean_abs_gap_nonopt = 0.0;  // over non-optimal dbs runs
  double dbs_mean_ratio = 0.0;           // over dbs runs with a reference
  std::map<std::string, double> mean_ms; // per algorithm
};

inline BenchSummary compute_summary(const std::vector<RunRecord>& records) {
  BenchSummary s;
  std::map<std::string, int> reference;  // instance -> proven gamma
  std::map<std::string, bool> seen_instance;
  std::map<std::string, std::pair<double, int>> ms_acc;
  for (const auto& r : records) {
    if (r.error) continue;
    seen_instance[r.instance_id] = true;
    auto& acc = ms_acc[algo_name(r.algorithm)];
    acc.first += r.elapsed_ms;
    acc.second += 1;
    if (r.proof == Proof::Exact) reference[r.instance_id] = r.size_found;
  }
  s.instances = (int)seen_instance.size();
  double gap_sum = 0.0;
  int gap_count = 0;
  double ratio_sum = 0.0;
  for (const auto& r : records) {
    if (r.error || r.algorithm != Algo::Dbs) continue;
    const auto ref = reference.find(r.instance_id);
    if (ref == reference.end()) continue;
    ++s.dbs_with_reference;
    ratio_sum += (double)r.size_found / ref->second;
    if (r.size_found == ref->second) {
      ++s.dbs_optimal;
    } else {
      gap_sum += r.size_found - ref->second;
      ++gap_count;
    }
  }
  if (gap_count > 0) s.dbs_mean_abs_gap_nonopt = gap_sum / gap_count;
  if (s.dbs_with_reference > 0) s.dbs_mean_ratio = ratio_sum / s.dbs_with_reference;
  for (const auto& [name, acc] : ms_acc) {
    if (acc.second > 0) s.mean_ms[name] = acc.first / acc.second;
  }
  return s;
}

inline std::string summary_footer(const BenchSummary& s) {
  std::ostringstream o;
  o << "# instances=" << s.instances << "\n";
  if (s.dbs_with_reference > 0) {
    o << "# dbs_optimal_fraction="
      << detail::fmt_double((double)s.dbs_optimal / s.dbs_with_reference, "%.4f") << " ("
      << s.dbs_optimal << "/" << s.dbs_with_reference << " vs exact reference)\n";
    o << "# dbs_mean_abs_gap_nonoptimal="
      << detail::fmt_double(s.dbs_mean_abs_gap_nonopt, "%.4f") << "\n";
    o << "# dbs_mean_ratio=" << detail::fmt_double(s.dbs_mean_ratio, "%.4f") << "\n";
  }
  for (const auto& [name, ms] : s.mean_ms) {
    o << "# mean_ms_" << name << "=" << detail::fmt_double(ms, "%.3f") << "\n";
  }
  for (auto a = s.mean_ms.begin(); a != s.mean_ms.end(); ++a) {
    for (auto b = std::next(a); b != s.mean_ms.end(); ++b) {
      if (b->second > 0) {
        o << "# speed_ratio_" << a->first << "_over_" << b->first << "="
          << detail::fmt_double(a->second / b->second, "%.3f") << "\n";
      }
    }
  }
  return o.str();
}

}  // namespace domset
