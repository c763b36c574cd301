// Command-line front end: generate random instances, solve them with the
// greedy / bds / dbs / oracle solvers, batch-benchmark manifests or
// instance directories, and export the covering integer program.
//
// Exit codes: 0 success, 1 input or parse error, 2 bds budget exhausted
// (result is an upper bound only). Set DOMSET_LOG=info|debug for
// progress output on stderr.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "domset/bench.hpp"
#include "domset/graph.hpp"
#include "domset/log.hpp"
#include "domset/lp_export.hpp"

namespace fs = std::filesystem;
using namespace domset;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::MalformedHeader, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    std::ofstream out(*path, std::ios::binary);
    if (!out) fail(Errc::MalformedHeader, "cannot write '" + *path + "'");
    out << text;
  } else {
    std::cout << text;
  }
}

void append_csv(const std::string& path, const RunRecord& rec) {
  const bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) fail(Errc::MalformedHeader, "cannot write '" + path + "'");
  if (fresh) out << csv_header() << "\n";
  out << to_csv_row(rec) << "\n";
}

struct CommonOpts {
  std::uint64_t seed = 1;
  std::optional<double> time_limit_s;
  std::optional<std::uint64_t> node_cap;
  std::optional<std::uint64_t> max_bases;
  std::optional<double> alpha;
  bool pruning = false;
};

void add_config_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "solver seed");
  cmd->add_option("--time-limit", o.time_limit_s, "wall-clock budget in seconds");
  cmd->add_option("--node-cap", o.node_cap, "bds enumeration node budget");
  cmd->add_option("--max-bases", o.max_bases, "dbs base-solutions cap per level (default 10*n)");
  cmd->add_option("--alpha", o.alpha, "dbs base-size parameter in (0,1); random in [0.2,0.7] when unset");
  cmd->add_flag("--pruning", o.pruning, "enable dominance pruning in bds");
}

SolverConfig to_config(const CommonOpts& o) {
  SolverConfig cfg;
  cfg.seed = o.seed;
  cfg.time_limit_s = o.time_limit_s;
  cfg.node_cap = o.node_cap;
  cfg.max_bases_per_level = o.max_bases;
  cfg.alpha = o.alpha;
  cfg.pruning = o.pruning;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum dominating set toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded random connected instance");
  int gen_n = 0;
  long long gen_m = 0;
  std::uint64_t gen_seed = 1;
  std::optional<std::string> gen_out;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--m", gen_m, "edge count")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output path (stdout when omitted)");

  // solve
  auto* solve = app.add_subcommand("solve", "solve one instance, print a JSON record");
  std::string solve_path, solve_algo;
  std::optional<std::string> solve_csv;
  CommonOpts solve_opts;
  solve->add_option("path", solve_path, "DIMACS instance file")->required();
  solve->add_option("--algo", solve_algo, "greedy|bds|dbs|oracle")->required();
  solve->add_option("--csv", solve_csv, "append the record to this CSV file");
  add_config_flags(solve, solve_opts);

  // bench
  auto* bench = app.add_subcommand("bench", "run a batch and emit a CSV table");
  std::optional<std::string> bench_manifest, bench_dir, bench_csv;
  std::string bench_algos = "greedy,bds,dbs";
  int bench_jobs = (int)std::thread::hardware_concurrency();
  CommonOpts bench_opts;
  bench->add_option("--manifest", bench_manifest, "file with '<n> <m> <seed>' lines");
  bench->add_option("--dir", bench_dir, "directory of DIMACS instance files");
  bench->add_option("--algos", bench_algos, "comma list of algorithms");
  bench->add_option("--csv", bench_csv, "output path (stdout when omitted)");
  bench->add_option("--jobs", bench_jobs, "parallel workers");
  add_config_flags(bench, bench_opts);

  // export-lp
  auto* exp = app.add_subcommand("export-lp", "emit the covering integer program");
  std::string exp_path;
  std::optional<std::string> exp_out;
  exp->add_option("path", exp_path, "DIMACS instance file")->required();
  exp->add_option("--out", exp_out, "output path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const Graph g = random_connected(gen_n, gen_m, gen_seed);
      write_output(gen_out, write_dimacs(g, gen_seed));
      log_info("gen: n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()));
      return 0;
    }

    if (*solve) {
      const auto algo = parse_algo(solve_algo);
      if (!algo) {
        std::cerr << "unknown algorithm '" << solve_algo << "'\n";
        return 1;
      }
      const Graph g = parse_dimacs(read_file(solve_path));
      const std::string id = fs::path(solve_path).stem().string();
      const RunRecord rec = run_algorithm(id, g, *algo, to_config(solve_opts));
      std::cout << to_json(rec).dump() << "\n";
      if (solve_csv) append_csv(*solve_csv, rec);
      if (*algo == Algo::Bds && rec.proof == Proof::UpperBoundOnly) return 2;
      return 0;
    }

    if (*bench) {
      std::vector<BenchTask> tasks;
      if (bench_manifest && bench_dir) {
        std::cerr << "--manifest and --dir are mutually exclusive\n";
        return 1;
      }
      if (bench_manifest) {
        for (const auto& e : parse_manifest(read_file(*bench_manifest))) {
          tasks.push_back(task_from_manifest(e));
        }
      } else if (bench_dir) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(*bench_dir)) {
          if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
          tasks.push_back(BenchTask{f.stem().string(), bench_opts.seed,
                                    [f] { return parse_dimacs(read_file(f.string())); }});
        }
      } else {
        std::cerr << "bench needs --manifest or --dir\n";
        return 1;
      }
      std::vector<Algo> algos;
      std::stringstream ss(bench_algos);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto a = parse_algo(item);
        if (!a) {
          std::cerr << "unknown algorithm '" << item << "'\n";
          return 1;
        }
        algos.push_back(*a);
      }
      log_info("bench: " + std::to_string(tasks.size()) + " instances, " +
               std::to_string(algos.size()) + " algorithms");
      const auto records = run_bench(tasks, algos, to_config(bench_opts), bench_jobs);
      std::ostringstream out;
      out << csv_header() << "\n";
      for (const auto& r : records) out << to_csv_row(r) << "\n";
      out << summary_footer(compute_summary(records));
      write_output(bench_csv, out.str());
      return 0;
    }

    if (*exp) {
      const Graph g = parse_dimacs(read_file(exp_path));
      write_output(exp_out, write_lp(g));
      return 0;
    }
  } catch (const DomsetError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
