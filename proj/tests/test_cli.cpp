#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hspec/cli.hpp"
#include "hspec/hypergraph.hpp"

using namespace hspec;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = "hspec_cli_test_" + std::to_string(counter++) + ".tmp";
    std::ofstream f(path_);
    f << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("gen complete emits a parseable canonical file") {
  RunResult r = run_cli({"gen", "complete", "--n", "3", "--types", "2,3"});
  CHECK(r.status == 0);
  Hypergraph h = parse_hypergraph(r.out);
  CHECK(h == complete_r_graph(3, {2, 3}));
  CHECK(to_text(h) == r.out);
}

TEST_CASE("gen random round-trips and respects the seed") {
  RunResult a =
      run_cli({"gen", "random", "--n", "6", "--types", "2,3", "--prob", "0.5",
               "--seed", "7"});
  RunResult b =
      run_cli({"gen", "random", "--n", "6", "--types", "2,3", "--prob", "0.5",
               "--seed", "7"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(parse_hypergraph(a.out) == random_r_graph(6, {2, 3}, 0.5, 7));
}

TEST_CASE("gen then bounds: the complete-graph pipeline") {
  RunResult gen = run_cli({"gen", "complete", "--n", "3", "--types", "2,3"});
  TempFile file(gen.out);
  RunResult bounds = run_cli({"bounds", file.path(), "--format", "json"});
  CHECK(bounds.status == 0);
  auto j = nlohmann::json::parse(bounds.out);
  bool found = false;
  for (const auto& rec : j["bounds"]) {
    if (rec["name"] == "rho_lower_clique") {
      found = true;
      CHECK(rec["applicable"] == true);
      CHECK(rec["equality"] == true);
      CHECK(rec["satisfied"] == true);
    }
  }
  CHECK(found);
}

TEST_CASE("spectral verb prints rho at 12 significant digits") {
  TempFile file(to_text(complete_r_graph(4, {2})));
  RunResult r = run_cli({"spectral", file.path()});
  CHECK(r.status == 0);
  CHECK(r.out.find("rho 3.00000000000") != std::string::npos);
}

TEST_CASE("lagrangian verb hits the clique prediction") {
  TempFile file(to_text(complete_r_graph(4, {2, 3})));
  RunResult r =
      run_cli({"lagrangian", file.path(), "--starts", "32", "--seed", "42"});
  CHECK(r.status == 0);
  CHECK(r.out.find("value 0.156250000") != std::string::npos);
}

TEST_CASE("clique verb") {
  TempFile file(to_text(complete_r_graph(5, {2, 3})));
  RunResult r = run_cli({"clique", file.path(), "--format", "json"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["omega"] == 5);
}

TEST_CASE("analyze on the worked example file") {
  TempFile file("4\n1 3\n1 2 3\n1 3 4\n");
  RunResult r = run_cli({"analyze", file.path()});
  CHECK(r.status == 0);
  CHECK(r.out.find("rank:            3") != std::string::npos);
  CHECK(r.out.find("{2, 3}") != std::string::npos);

  RunResult j = run_cli({"analyze", file.path(), "--format", "json"});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["schema"] == "hspec/1");
  CHECK(parsed["rank"] == 3);
  CHECK(parsed["edge_types"] == nlohmann::json::array({2, 3}));
}

TEST_CASE("analyze on an edgeless file reports omega only") {
  TempFile file("5\n");
  RunResult r = run_cli({"analyze", file.path(), "--format", "json"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["clique"]["omega"] == 1);
  CHECK(j["spectral"].is_null());
  CHECK(j["lagrangian"].is_null());
}

TEST_CASE("analyze on a disconnected file shows per-component rho") {
  TempFile file("5\n1 2\n1 3\n2 3\n4 5\n");
  RunResult r = run_cli({"analyze", file.path(), "--format", "json"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["spectral"]["component_rho"].is_array());
  CHECK(j["spectral"]["component_rho"].size() == 2);
  CHECK(j["spectral"]["positive_support"] == false);
}

TEST_CASE("byte-identical repeated runs") {
  TempFile file(to_text(random_r_graph(7, {2, 3}, 0.5, 11)));
  RunResult a = run_cli(
      {"analyze", file.path(), "--format", "json", "--seed", "42"});
  RunResult b = run_cli(
      {"analyze", file.path(), "--format", "json", "--seed", "42"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("error paths and exit codes") {
  SUBCASE("missing file") {
    RunResult r = run_cli({"analyze", "no_such_file.hg"});
    CHECK(r.status == 1);
    CHECK(r.err.find("FileNotFound") != std::string::npos);
  }
  SUBCASE("parse error names the line") {
    TempFile file("3\n1 zzz\n");
    RunResult r = run_cli({"analyze", file.path()});
    CHECK(r.status == 1);
    CHECK(r.err.find("line 2") != std::string::npos);
  }
  SUBCASE("unknown flag") {
    RunResult r = run_cli({"analyze", "--frobnicate"});
    CHECK(r.status == 1);
  }
  SUBCASE("unknown verb") {
    RunResult r = run_cli({"dance"});
    CHECK(r.status == 1);
  }
  SUBCASE("invalid probability") {
    RunResult r = run_cli(
        {"gen", "random", "--n", "4", "--types", "2", "--prob", "1.5"});
    CHECK(r.status == 1);
  }
  SUBCASE("malformed type list") {
    RunResult r = run_cli({"gen", "complete", "--n", "4", "--types", "2,x"});
    CHECK(r.status == 1);
  }
  SUBCASE("non-convergence exits 2") {
    TempFile file("3\n1 2\n2 3\n");
    RunResult r = run_cli({"spectral", file.path(), "--max-iter", "1"});
    CHECK(r.status == 2);
  }
  SUBCASE("help exits 0") {
    RunResult r = run_cli({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("analyze") != std::string::npos);
  }
}

TEST_CASE("duplicate edge in input is rejected with its index") {
  TempFile file("3\n1 2\n2 1\n");
  RunResult r = run_cli({"clique", file.path()});
  CHECK(r.status == 1);
  CHECK(r.err.find("DuplicateEdge") != std::string::npos);
}
