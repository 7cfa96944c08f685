#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "abcmax/cli.hpp"
#include "abcmax/families.hpp"
#include "abcmax/graph6.hpp"
#include "abcmax/report.hpp"

using namespace abcmax;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = run_cli(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: bound") {
  CHECK(run({"bound", "--which", "cor3", "--n", "6", "--chi", "3"}).out == "7.348469228\n");
  CHECK(run({"bound", "--which", "thm1", "--n", "6", "--k", "3"}).out == "7.756443177\n");
  CHECK(run({"bound", "--which", "thm2", "--n", "6"}).out == "6.000000000\n");
  CHECK(run({"bound", "--which", "cs", "--n", "6", "--parts", "1,2,3"}).out ==
        "6.953565899 8.270429251\n");
  CHECK(run({"bound", "--which", "cor3", "--n", "6", "--chi", "3", "--precision", "12"}).out ==
        "7.348469228350\n");
  CHECK(run({"bound", "--which", "thm1", "--n", "6", "--k", "1", "--literal"}).status == kExitUsage);
  CHECK(run({"bound", "--which", "thm1", "--n", "6"}).status == kExitUsage);
  CHECK(run({"bound", "--which", "cs", "--n", "7", "--parts", "1,2,3"}).status == kExitUsage);
  CHECK(run({"bound", "--which", "cs", "--parts", "1,x"}).status == kExitUsage);
  CHECK(run({"bound", "--which", "nope", "--n", "6"}).status == kExitUsage);
}

TEST_CASE("cli: construct and invariants") {
  const Run c = run({"construct", "--family", "knk", "--n", "6", "--k", "3"});
  CHECK(c.status == kExitOk);
  CHECK(decode_graph6(c.out) == kn_k(6, 3));

  const Run inv = run({"invariants"}, c.out);
  CHECK(inv.status == kExitOk);
  const auto j = nlohmann::json::parse(inv.out);
  CHECK(j.at("abc").get<double>() == doctest::Approx(7.756443177).epsilon(1e-12));
  CHECK(j.at("edge_connectivity") == 3);
  CHECK(j.at("vertex_connectivity") == 3);
  CHECK(j.at("chromatic_number") == 5);
  CHECK(j.at("m") == 13);
  CHECK(j.at("degree_sequence") == std::vector<int>{5, 5, 5, 4, 4, 3});

  const Run two = run({"invariants"}, "C~\n\nBg\n");
  CHECK(std::count(two.out.begin(), two.out.end(), '\n') == 2);
  CHECK(run({"invariants", "--g6", "Bw"}).out.find("\"chromatic_number\":3") != std::string::npos);
  CHECK(run({"invariants", "--g6", "C"}).status == kExitUsage);

  CHECK(decode_graph6(run({"construct", "--family", "bridge", "--x", "3", "--y", "4"}).out) ==
        bridge_cliques(3, 4));
  CHECK(decode_graph6(run({"construct", "--family", "turan", "--n", "7", "--l", "3"}).out) == turan(7, 3));
  CHECK(run({"construct", "--family", "knk", "--n", "6"}).status == kExitUsage);
  CHECK(run({"construct", "--family", "wheel", "--n", "6"}).status == kExitUsage);
  CHECK(run({"construct", "--family", "cycle", "--n", "2"}).status == kExitUsage);
}

TEST_CASE("cli: enumerate") {
  const Run all = run({"enumerate", "--n", "5"});
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 34);
  const Run conn = run({"enumerate", "--n", "5", "--connected"});
  CHECK(std::count(conn.out.begin(), conn.out.end(), '\n') == 21);
  CHECK(run({"enumerate", "--n", "10"}).status == kExitUsage);
  CHECK(run({"enumerate"}).status == kExitUsage);
}

TEST_CASE("cli: verify writes a report and sets the exit code") {
  const auto path = std::filesystem::temp_directory_path() / "abcmax_cli_test_report.json";
  const Run v = run({"verify", "chromatic", "--n-range", "6..6", "--chi", "3", "--out", path.string(),
                     "--jobs", "2"});
  CHECK(v.status == kExitOk);
  CHECK(v.out.empty());
  std::ifstream file(path);
  const Report r = report_from_json(nlohmann::json::parse(file));
  REQUIRE(r.cells.size() == 1);
  CHECK(r.cells[0].matches);
  CHECK(r.run.jobs == 2);
  std::filesystem::remove(path);

  const Run csv = run({"verify", "edge-conn", "--n-range", "4..5", "--k", "1", "--format", "csv"});
  CHECK(csv.status == kExitOk);
  CHECK(csv.out.rfind("row,", 0) == 0);

  const Run a = run({"verify", "edge-conn", "--n-range", "4..6", "--jobs", "1"});
  const Run b = run({"verify", "edge-conn", "--n-range", "4..6", "--jobs", "3"});
  CHECK(deterministic_json_text(report_from_json(nlohmann::json::parse(a.out))) ==
        deterministic_json_text(report_from_json(nlohmann::json::parse(b.out))));

  const Run mono = run({"verify", "monotonicity", "--n-range", "3..8", "--trials", "200", "--seed", "5"});
  CHECK(mono.status == kExitOk);
  CHECK(nlohmann::json::parse(mono.out).at("parameters").at("seed") == 5);
}

TEST_CASE("cli: usage errors") {
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"frobnicate"}).status == kExitUsage);
  CHECK(run({"--help"}).status == kExitOk);
  CHECK(run({"verify", "edge-conn", "--n-range", "4..9"}).status == kExitUsage);
  CHECK(run({"verify", "edge-conn", "--n-range", "8..4"}).status == kExitUsage);
  CHECK(run({"verify", "edge-conn", "--n-range", "4..6", "--chi", "3"}).status == kExitUsage);
  CHECK(run({"verify", "chromatic", "--n-range", "4..6", "--k", "3"}).status == kExitUsage);
  CHECK(run({"verify", "chromatic", "--format", "xml"}).status == kExitUsage);
  CHECK(run({"verify", "all", "--jobs", "0"}).status == kExitUsage);
  const Run e = run({"verify", "edge-conn", "--n-range", "4..x"});
  CHECK(e.status == kExitUsage);
  CHECK_FALSE(e.err.empty());
}
