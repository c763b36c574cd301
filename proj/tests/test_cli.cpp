#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "domset/graph.hpp"
#include "support/families.hpp"

namespace fs = std::filesystem;
using namespace domset;
using namespace domset::testing;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("domset_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = env + (env.empty() ? "" : " ") + DOMSET_CLI_PATH + " " + args +
                          " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_instance(const std::string& name, const Graph& g) {
  const fs::path p = scratch_dir() / name;
  std::ofstream f(p, std::ios::binary);
  f << write_dimacs(g);
  return p;
}

}  // namespace

TEST_CASE("cli gen writes a parsable instance with the seed comment") {
  const fs::path out = scratch_dir() / "gen50.dimacs";
  const CliResult r = run_cli("gen --n 50 --m 286 --seed 7 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  const std::string text = slurp(out);
  REQUIRE(text.rfind("c generated seed=7\np edge 50 286\n", 0) == 0);
  const Graph g = parse_dimacs(text);
  REQUIRE(g.n() == 50);
  REQUIRE(g.m() == 286);
}

TEST_CASE("cli gen rejects an impossible edge budget") {
  const CliResult r = run_cli("gen --n 5 --m 20 --seed 1");
  REQUIRE(r.exit_code == 1);
  REQUIRE(r.err.find("EdgeBudgetOutOfRange") != std::string::npos);
}

TEST_CASE("cli solve emits a JSON record and exit code 0") {
  const fs::path p = write_instance("p4.dimacs", path_graph(4));
  const CliResult r = run_cli("solve " + p.string() + " --algo bds");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["size"] == 2);
  REQUIRE(j["proof"] == "Exact");
  REQUIRE(j["instance"] == "p4");
  REQUIRE(j["witness"] == nlohmann::json::array({2, 3}));
}

TEST_CASE("cli solve oracle refuses oversized instances with exit 1") {
  const fs::path p = write_instance("n30.dimacs", random_connected(30, 60, 2));
  const CliResult r = run_cli("solve " + p.string() + " --algo oracle");
  REQUIRE(r.exit_code == 1);
  REQUIRE(r.err.find("SizeGuardExceeded") != std::string::npos);
}

TEST_CASE("cli solve dbs is reproducible modulo elapsed_ms") {
  const fs::path p = write_instance("rnd14.dimacs", random_connected(14, 30, 9));
  const std::string args = "solve " + p.string() + " --algo dbs --alpha 0.5 --seed 3";
  auto a = nlohmann::json::parse(run_cli(args).out);
  auto b = nlohmann::json::parse(run_cli(args).out);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  REQUIRE(a == b);
}

TEST_CASE("cli solve reports budget exhaustion with exit 2") {
  const fs::path p = write_instance("rnd30.dimacs", random_connected(30, 100, 12345));
  const CliResult r = run_cli("solve " + p.string() + " --algo bds --node-cap 2");
  REQUIRE(r.exit_code == 2);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["proof"] == "UpperBoundOnly");
}

TEST_CASE("cli solve with pruning reaches the same optimum") {
  const fs::path p = write_instance("prune.dimacs", random_connected(24, 60, 4));
  const auto plain = nlohmann::json::parse(run_cli("solve " + p.string() + " --algo bds").out);
  const auto pruned =
      nlohmann::json::parse(run_cli("solve " + p.string() + " --algo bds --pruning").out);
  REQUIRE(plain["proof"] == "Exact");
  REQUIRE(pruned["proof"] == "Exact");
  REQUIRE(plain["size"] == pruned["size"]);
  REQUIRE(pruned["counter"].get<std::uint64_t>() <= plain["counter"].get<std::uint64_t>());
}

TEST_CASE("cli solve rejects an unparsable instance with exit 1") {
  const fs::path p = scratch_dir() / "broken.dimacs";
  std::ofstream(p) << "p edge 3 2\ne 1 2\ne 1 2\n";
  const CliResult r = run_cli("solve " + p.string() + " --algo greedy");
  REQUIRE(r.exit_code == 1);
  REQUIRE(r.err.find("EdgeCountMismatch") != std::string::npos);
  REQUIRE(run_cli("solve " + scratch_dir().string() + "/missing.dimacs --algo greedy").exit_code == 1);
}

TEST_CASE("cli export-lp matches the library writer") {
  const fs::path p = write_instance("p3.dimacs", path_graph(3));
  const CliResult r = run_cli("export-lp " + p.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out ==
          "Minimize\n"
          " obj: x_1 + x_2 + x_3\n"
          "Subject To\n"
          " cov_1: x_1 + x_2 >= 1\n"
          " cov_2: x_1 + x_2 + x_3 >= 1\n"
          " cov_3: x_2 + x_3 >= 1\n"
          "Binary\n"
          " x_1\n"
          " x_2\n"
          " x_3\n"
          "End\n");
}

TEST_CASE("cli export-lp rejects disconnected instances with exit 1") {
  const fs::path p = scratch_dir() / "disc.dimacs";
  std::ofstream(p) << "p edge 4 2\ne 1 2\ne 3 4\n";
  const CliResult r = run_cli("export-lp " + p.string());
  REQUIRE(r.exit_code == 1);
  REQUIRE(r.err.find("DisconnectedGraph") != std::string::npos);
}

TEST_CASE("cli bench produces ordered rows plus a summary footer") {
  const fs::path manifest = scratch_dir() / "manifest.txt";
  std::ofstream(manifest) << "8 12 5\n10 20 6\n";
  const CliResult r =
      run_cli("bench --manifest " + manifest.string() + " --algos greedy,bds --jobs 2");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  REQUIRE(line ==
          "instance,n,m,density,algorithm,seed,size,L,ub_leaf,ub_maxdeg,"
          "elapsed_ms,proof,alpha,counter");
  std::getline(lines, line);
  REQUIRE(line.rfind("rnd-n8-m12-s5,8,12,", 0) == 0);
  REQUIRE(line.find(",greedy,") != std::string::npos);
  std::getline(lines, line);
  REQUIRE(line.find(",bds,") != std::string::npos);
  std::getline(lines, line);
  REQUIRE(line.rfind("rnd-n10-m20-s6,10,20,", 0) == 0);
  std::getline(lines, line);  // second instance, bds
  std::getline(lines, line);
  REQUIRE(line.rfind("# instances=2", 0) == 0);
}

TEST_CASE("cli bench with an empty manifest emits only the header") {
  const fs::path manifest = scratch_dir() / "empty.txt";
  std::ofstream(manifest) << "# nothing here\n";
  const CliResult r = run_cli("bench --manifest " + manifest.string());
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  REQUIRE(line.rfind("instance,", 0) == 0);
  std::getline(lines, line);
  REQUIRE(line == "# instances=0");
}

TEST_CASE("cli bench over a directory of instances") {
  const fs::path dir = scratch_dir() / "instances";
  fs::create_directories(dir);
  std::ofstream(dir / "a_p4.dimacs") << write_dimacs(path_graph(4));
  std::ofstream(dir / "b_c5.dimacs") << write_dimacs(cycle_graph(5));
  const CliResult r = run_cli("bench --dir " + dir.string() + " --algos oracle");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("a_p4,4,3,") != std::string::npos);
  REQUIRE(r.out.find("b_c5,5,5,") != std::string::npos);
}

TEST_CASE("DOMSET_LOG controls stderr verbosity") {
  const fs::path out = scratch_dir() / "log_gen.dimacs";
  const CliResult quiet = run_cli("gen --n 8 --m 10 --seed 1 --out " + out.string());
  REQUIRE(quiet.exit_code == 0);
  REQUIRE(quiet.err.empty());
  const CliResult chatty =
      run_cli("gen --n 8 --m 10 --seed 1 --out " + out.string(), "DOMSET_LOG=info");
  REQUIRE(chatty.exit_code == 0);
  REQUIRE(chatty.err.find("[info] gen:") != std::string::npos);
}

TEST_CASE("cli solve appends csv rows") {
  const fs::path p = write_instance("csv_p4.dimacs", path_graph(4));
  const fs::path csv = scratch_dir() / "runs.csv";
  fs::remove(csv);
  REQUIRE(run_cli("solve " + p.string() + " --algo greedy --csv " + csv.string()).exit_code == 0);
  REQUIRE(run_cli("solve " + p.string() + " --algo bds --csv " + csv.string()).exit_code == 0);
  std::istringstream lines(slurp(csv));
  std::string line;
  std::getline(lines, line);
  REQUIRE(line.rfind("instance,", 0) == 0);
  std::getline(lines, line);
  REQUIRE(line.find(",greedy,") != std::string::npos);
  std::getline(lines, line);
  REQUIRE(line.find(",bds,") != std::string::npos);
}
