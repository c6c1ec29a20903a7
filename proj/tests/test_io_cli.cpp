#include "doctest.h"

#include "polyspec/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace polyspec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rounding to 12 significant digits") {
  CHECK(round12(1.0 / 3.0) == 0.333333333333);
  CHECK(round12(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(round12(-0.0)));
  CHECK_FALSE(std::signbit(round12(-1e-300 * 1e-300)));
  CHECK(round12(1 + std::sqrt(5.0)) == 3.2360679775);
  CHECK(dump_json(Json(round12(2.0 / 3.0))) == "0.666666666667\n");
}

TEST_CASE("edge lists round-trip") {
  const Graph g(4, {{2, 3}, {0, 1}, {1, 2}});
  const std::string text = edge_list_text(g);
  CHECK(text == "# vertices=4\n0 1\n1 2\n2 3\n");
  CHECK(parse_edge_list(text) == g);
  CHECK_THROWS_AS(parse_edge_list("0 1\n"), PreconditionError);
  CHECK_THROWS_AS(parse_edge_list("# vertices=2\n0 1 2\n"), PreconditionError);
  CHECK_THROWS_AS(parse_edge_list("# vertices=2\n0 5\n"), PreconditionError);
}

TEST_CASE("JSON objects have sorted keys") {
  const Json j = graph_json(Graph(2, {{0, 1}}), "k2");
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(j["regular_degree"] == 1);
  CHECK(j["connected"] == true);
}

TEST_CASE("graph command statistics") {
  const std::tuple<const char*, int, int> cases[] = {{"cell600", 120, 12},   {"p720", 720, 10},
                                                     {"p1440", 1440, 6},     {"dodecahedron", 20, 3},
                                                     {"icosidodecahedron", 30, 4}, {"truncdodecahedron", 60, 3}};
  for (auto [name, n, d] : cases) {
    const auto r = cli({"graph", "--fixture", name});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["vertices"] == n);
    CHECK(j["regular_degree"] == d);
    CHECK(j["connected"] == true);
  }
  const auto text = cli({"graph", "--fixture", "dodecahedron", "--format", "text"});
  CHECK(text.out.rfind("# vertices=20\n", 0) == 0);
  CHECK(parse_edge_list(text.out).edge_count() == 30);
}

TEST_CASE("graph command writes files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto json_path = (dir / "polyspec_graph_test.json").string();
  const auto edges_path = (dir / "polyspec_graph_test.txt").string();
  const auto r = cli({"graph", "--fixture", "icosidodecahedron", "--out", json_path, "--edges", edges_path});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream jf(json_path), ef(edges_path);
  const Json j = Json::parse(jf);
  CHECK(j["edges"] == 60);
  std::stringstream es;
  es << ef.rdbuf();
  CHECK(parse_edge_list(es.str()).vertex_count() == 30);
  std::filesystem::remove(json_path);
  std::filesystem::remove(edges_path);
  CHECK(cli({"graph", "--fixture", "p720", "--out", "/nonexistent-dir/x.json"}).code == kExitUsage);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"graph"}).code == kExitUsage);
  CHECK(cli({"graph", "--fixture", "tesseract"}).code == kExitUsage);
  CHECK(cli({"spectrum", "--fixture", "p720", "--method", "lanczos"}).code == kExitUsage);
  CHECK(cli({"spectrum", "--fixture", "p720", "--tol", "0"}).code == kExitUsage);
  CHECK(cli({"spectrum", "--fixture", "p720", "--tol", "-1"}).code == kExitUsage);
  CHECK(cli({"spectrum", "--fixture", "icosidodecahedron", "--format", "xml"}).code == kExitUsage);
  CHECK(cli({"spectrum", "--fixture", "cell600", "--method", "blocks"}).code == kExitUsage);
  CHECK(cli({"spectrum", "--fixture", "icosidodecahedron", "--jobs", "0"}).code == kExitUsage);
  CHECK(cli({"verify", "--suite", "everything"}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
  CHECK_THROWS_AS(run_verify_suite("everything"), PreconditionError);
}

TEST_CASE("spectrum command, A5 pipeline") {
  const auto r = cli({"spectrum", "--fixture", "icosidodecahedron", "--method", "both"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["graph"] == "icosidodecahedron");
  CHECK(j["method"] == "both");
  CHECK(j["comparison"]["equal"] == true);
  CHECK(j["comparison"]["zero_padding"] == 30);
  CHECK(j["per_irrep"].size() == 5);
  CHECK(j["block_checks"]["total_dimension"] == 60);
  CHECK(j["trace_check"]["passed"] == true);
  int total = 0;
  for (const auto& e : j["eigenvalues"]) total += e["multiplicity"].get<int>();
  CHECK(total == 30);
  CHECK(j["eigenvalues"].back()["value"] == 4);
  // Deterministic bytes.
  CHECK(cli({"spectrum", "--fixture", "icosidodecahedron", "--method", "both"}).out == r.out);
  CHECK(cli({"spectrum", "--fixture", "icosidodecahedron", "--method", "both", "--jobs", "4"}).out == r.out);

  const auto blocks = cli({"spectrum", "--fixture", "icosidodecahedron", "--method", "blocks"});
  REQUIRE(blocks.code == kExitOk);
  const Json b = Json::parse(blocks.out);
  CHECK(b["per_irrep"][0]["degree"] == 1);
  CHECK(b["per_irrep"][0]["eigenvalues"][0]["value"] == 4);
}

TEST_CASE("spectrum command, direct route on the 600-cell") {
  const auto r = cli({"spectrum", "--fixture", "cell600", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("value,multiplicity\n", 0) == 0);
  const auto last = r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1);
  CHECK(last == "12,1\n");
  const auto text = cli({"spectrum", "--fixture", "truncdodecahedron", "--format", "text"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("3 x1\n") != std::string::npos);
}

TEST_CASE("chartable command") {
  const auto r = cli({"chartable", "--group", "a5"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["group_order"] == 60);
  CHECK(j["characters"].size() == 5);
  CHECK(j["classes"][0]["size"] == 1);
}

TEST_CASE("verify suites pass") {
  for (const char* suite : {"identities", "chartable", "isomorphisms", "obstruction"}) {
    const auto r = cli({"verify", "--suite", suite});
    INFO(suite << ": " << r.out << r.err);
    CHECK(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(!j["checks"].empty());
  }
}
