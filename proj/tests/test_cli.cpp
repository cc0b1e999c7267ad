#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "feasflow/cli.hpp"
#include "feasflow/generator.hpp"
#include "feasflow/io.hpp"

using namespace feasflow;

namespace {

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("feasflow-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  static int& counter() {
    static int value = 0;
    return value;
  }

  std::string file(const std::string& name, const std::string& content) const {
    const auto full = path / name;
    std::ofstream out(full, std::ios::binary);
    out << content;
    return full.string();
  }
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

const char* two_cycle_doc = "p feas 2 2\nn 1 1\nn 2 -1\na 1 2 1\na 2 1 1\n";
const char* tight_doc = "p feas 3 3\nn 2 1\nn 3 -1\na 1 2 1\na 2 3 1\na 3 1 1\n";

}  // namespace

TEST_CASE("solve writes the flow document and exit 0") {
  TempDir dir;
  const auto net = dir.file("two.net", two_cycle_doc);
  const CliResult r = run_cli({"solve", net});
  CHECK(r.code == 0);
  CHECK(r.out == "s feasible\nf 1 1 2 1\nf 2 2 1 0\n");
  CHECK(r.err.empty());
}

TEST_CASE("solve --trace reports routing events on stderr") {
  TempDir dir;
  const auto net = dir.file("tight.net", tight_doc);
  const CliResult r = run_cli({"solve", net, "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out == "s feasible\nf 1 1 2 0\nf 2 2 3 1\nf 3 3 1 0\n");
  CHECK(r.err.find("trace supply v=2 before=1 moved=0 after=1") != std::string::npos);
  CHECK(r.err.find("trace demand v=3 d=1") != std::string::npos);
}

TEST_CASE("solve honors --algorithm, --root and --out") {
  TempDir dir;
  const auto net = dir.file("tight.net", tight_doc);

  const CliResult cap2 = run_cli({"solve", net, "--algorithm", "cap2"});
  CHECK(cap2.code == 2);
  CHECK(cap2.err.find("capacity") != std::string::npos);

  const auto out_path = (dir.path / "flow.out").string();
  const CliResult rooted = run_cli({"solve", net, "--root", "2", "--out", out_path});
  CHECK(rooted.code == 0);
  CHECK(rooted.out.empty());
  std::ifstream in(out_path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str().substr(0, 11) == "s feasible\n");

  const CliResult bad_root = run_cli({"solve", net, "--root", "9"});
  CHECK(bad_root.code == 2);
}

TEST_CASE("verify prints residuals and distinguishes exit codes") {
  TempDir dir;
  const auto net = dir.file("two.net", two_cycle_doc);
  const auto good = dir.file("good.flow", "s feasible\nf 1 1 2 1\nf 2 2 1 0\n");
  const auto bad = dir.file("bad.flow", "s feasible\nf 1 1 2 0\nf 2 2 1 0\n");

  const CliResult ok = run_cli({"verify", net, good});
  CHECK(ok.code == 0);
  CHECK(ok.out == "feasible\n");

  const CliResult fail = run_cli({"verify", net, bad});
  CHECK(fail.code == 1);
  CHECK(fail.out == "balance 1 1\nbalance 2 -1\ninfeasible\n");
}

TEST_CASE("gen then solve then verify pipeline stays green") {
  TempDir dir;
  const auto net_path = (dir.path / "gen.net").string();
  const auto flow_path = (dir.path / "gen.flow").string();

  const CliResult gen = run_cli({"gen", "--n", "12", "--extra", "20", "--supply", "60",
                                 "--caps", "exact", "--spread-s", "3", "--spread-d", "4",
                                 "--seed", "77", "--out", net_path});
  CHECK(gen.code == 0);

  std::ifstream in(net_path);
  std::stringstream doc;
  doc << in.rdbuf();
  const Network net = parse_network(doc.str());
  CHECK(net.vertex_count() == 12);
  CHECK(net.arc_count() == 32);

  const CliResult solve = run_cli({"solve", net_path});
  CHECK(solve.code == 0);
  {
    std::ofstream flow_file(flow_path, std::ios::binary);
    flow_file << solve.out;
  }
  const CliResult verify = run_cli({"verify", net_path, flow_path});
  CHECK(verify.code == 0);
  CHECK(verify.out == "feasible\n");
}

TEST_CASE("gen determinism across invocations") {
  const std::vector<std::string> args{"gen", "--n", "9", "--extra", "5", "--supply", "4",
                                      "--seed", "31415"};
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("oracle prints the verdict and an optional witness") {
  TempDir dir;
  const auto net = dir.file("two.net", two_cycle_doc);
  const CliResult plain = run_cli({"oracle", net});
  CHECK(plain.code == 0);
  CHECK(plain.out == "feasible\n");

  const CliResult with_witness = run_cli({"oracle", net, "--witness"});
  CHECK(with_witness.code == 0);
  CHECK(with_witness.out == "feasible\ns feasible\nf 1 1 2 1\nf 2 2 1 0\n");

  const auto blocked = dir.file("blocked.net", "p feas 2 2\nn 1 1\nn 2 -1\na 1 2 0\na 2 1 1\n");
  const CliResult no = run_cli({"oracle", blocked, "--witness"});
  CHECK(no.code == 1);
  CHECK(no.out == "infeasible\n");
}

TEST_CASE("bench prints one tab-separated row per size") {
  const CliResult r = run_cli({"bench", "--sizes", "50,100", "--seed", "5"});
  CHECK(r.code == 0);
  std::istringstream rows(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(rows, line)) lines.push_back(line);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].substr(0, 7) == "50\t200\t");
  CHECK(lines[1].substr(0, 8) == "100\t400\t");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"solve"}).code == 2);
  CHECK(run_cli({"solve", "/nonexistent/net"}).code == 2);
  CHECK(run_cli({"gen", "--n", "3"}).code == 2);  // missing required flags
  CHECK(run_cli({"gen", "--n", "3", "--supply", "-4", "--seed", "1"}).code == 2);
  TempDir dir;
  const auto net = dir.file("two.net", two_cycle_doc);
  CHECK(run_cli({"solve", net, "--algorithm", "cap3"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}
