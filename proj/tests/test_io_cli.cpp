#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latgeo/cli.hpp"
#include "latgeo/generators.hpp"
#include "latgeo/io.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace latgeo;

namespace {

const std::string kDataDir = LATGEO_DATA_DIR;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("latgeo");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("parsing the documented text format") {
  std::istringstream in(
      "# a triangle with noise\n"
      "\n"
      "dim 2\n"
      "0 0   # origin\n"
      "1 0\n"
      "1 1\n"
      "1 1\n"  // duplicates are allowed
      "0 0\n");
  LatticePolytope p = parse_polytope_text(in, "noise");
  CHECK(p.label() == "noise");
  REQUIRE(p.vertices().size() == 3);
  CHECK(points_equal(p.vertices()[0], make_point({0, 0})));
  CHECK(points_equal(p.vertices()[2], make_point({1, 1})));
}

TEST_CASE("parser failures carry line numbers") {
  {
    std::istringstream in("points first\ndim 2\n");
    CHECK_THROWS_WITH_AS(parse_polytope_text(in),
                         doctest::Contains("line 1"), parse_error);
  }
  {
    std::istringstream in("dim 2\n0 0\n1 0 3\n");
    CHECK_THROWS_WITH_AS(parse_polytope_text(in),
                         doctest::Contains("line 3: expected 2 coordinates"),
                         parse_error);
  }
  {
    std::istringstream in("dim 2\n0 zero\n");
    CHECK_THROWS_WITH_AS(parse_polytope_text(in),
                         doctest::Contains("bad integer 'zero'"), parse_error);
  }
  {
    std::istringstream in("dim 0\n0\n");
    CHECK_THROWS_AS(parse_polytope_text(in), parse_error);
  }
  {
    std::istringstream in("dim 65\n");
    CHECK_THROWS_AS(parse_polytope_text(in), parse_error);
  }
  {
    std::istringstream in("# only comments\n");
    CHECK_THROWS_WITH_AS(parse_polytope_text(in),
                         doctest::Contains("missing 'dim"), parse_error);
  }
  {
    std::istringstream in("dim 3\n");
    CHECK_THROWS_WITH_AS(parse_polytope_text(in),
                         doctest::Contains("no points"), parse_error);
  }
}

TEST_CASE("negative coordinates and wide dimensions parse fine") {
  std::istringstream in("dim 4\n-3 0 2 -7\n1 1 1 1\n0 0 0 0\n");
  LatticePolytope p = parse_polytope_text(in);
  CHECK(p.ambient_dim() == 4);
  CHECK(points_equal(p.vertices().front(), make_point({-3, 0, 2, -7})));
}

TEST_CASE("formatting inverts parsing") {
  LatticePolytope r = reeve(2);
  CHECK(format_polytope_text(r) == "dim 3\n0 0 0\n0 1 0\n1 0 0\n1 1 2\n");
  std::istringstream in(format_polytope_text(r));
  LatticePolytope back = parse_polytope_text(in);
  REQUIRE(back.vertices().size() == r.vertices().size());
  for (std::size_t i = 0; i < back.vertices().size(); ++i) {
    CHECK(points_equal(back.vertices()[i], r.vertices()[i]));
  }
}

TEST_CASE("file loading uses the path as the label") {
  LatticePolytope d = load_polytope_file(kDataDir + "/decagon.txt");
  CHECK(d.vertices().size() == 10);
  CHECK(d.label() == kDataDir + "/decagon.txt");
  CHECK_THROWS_WITH_AS(load_polytope_file(kDataDir + "/absent.txt"),
                       doctest::Contains("absent.txt"), io_error);
}

TEST_CASE("generator specs") {
  CHECK(generate_from_spec("triangle").label() == "triangle");
  CHECK(generate_from_spec("simplex 3").vertices().size() == 4);
  CHECK(generate_from_spec("cube 2").vertices().size() == 4);
  CHECK(generate_from_spec("reeve 4").label() == "reeve(4)");
  {
    LatticePolytope a = generate_from_spec("random 7");
    LatticePolytope b = random_polygon(7);
    REQUIRE(a.vertices().size() == b.vertices().size());
    for (std::size_t i = 0; i < a.vertices().size(); ++i) {
      CHECK(points_equal(a.vertices()[i], b.vertices()[i]));
    }
  }
  {
    LatticePolytope a = generate_from_spec("random 7 12 20");
    LatticePolytope b = random_polygon(7, 12, 20);
    CHECK(a.vertices().size() == b.vertices().size());
  }
  CHECK_THROWS_AS(generate_from_spec(""), parse_error);
  CHECK_THROWS_AS(generate_from_spec("dodecahedron"), parse_error);
  CHECK_THROWS_AS(generate_from_spec("simplex"), parse_error);
  CHECK_THROWS_AS(generate_from_spec("simplex x"), parse_error);
  CHECK_THROWS_AS(generate_from_spec("triangle 3"), parse_error);
  CHECK_THROWS_AS(generate_from_spec("reeve 0"), std::invalid_argument);
  CHECK_THROWS_AS(generate_from_spec("simplex 0"), std::invalid_argument);
}

TEST_CASE("cli golden outputs") {
  CHECK(run_cli({"ehrhart", "--gen", "triangle"}).out ==
        R"x({"coefficients":["1","3/2","1/2"]})x"
        "\n");
  CHECK(run_cli({"pick", kDataDir + "/decagon.txt"}).out ==
        R"x({"interior":23,"boundary":16,"area":"30","holds":true})x"
        "\n");
  CHECK(run_cli({"idp", "--gen", "reeve 2"}).out ==
        R"x({"holds":false,"checked_up_to":2,"used_default_bound":true,)x"
        R"x("witness":{"point":[1,1,1],"height":2}})x"
        "\n");
  CHECK(run_cli({"count", "--gen", "triangle", "--m", "3"}).out ==
        R"x({"m":3,"count":10})x"
        "\n");
  CHECK(run_cli({"hull", "--gen", "triangle"}).out ==
        R"x({"ambient_dim":2,"dim":2,"vertices":[[0,0],[1,0],[1,1]],"facets":3})x"
        "\n");
  CHECK(run_cli({"triangulate", "--gen", "triangle"}).out ==
        R"x({"triangles":1,"area":"1/2","cells":[[[0,0],[1,0],[1,1]]]})x"
        "\n");
  CHECK(run_cli({"smooth", "--gen", "reeve 2"}).out ==
        R"x({"smooth":false,"failures":[)x"
        R"x({"vertex":[0,0,0],"reason":"non-unimodular","det":2},)x"
        R"x({"vertex":[0,1,0],"reason":"non-unimodular","det":2},)x"
        R"x({"vertex":[1,0,0],"reason":"non-unimodular","det":2},)x"
        R"x({"vertex":[1,1,2],"reason":"non-unimodular","det":2}]})x"
        "\n");
}

TEST_CASE("cli text renderings") {
  CHECK(run_cli({"pick", kDataDir + "/decagon.txt", "--format", "text"}).out ==
        "interior 23, boundary 16, area 30, pick 30 -> holds\n");
  CHECK(run_cli({"ehrhart", "--gen", "triangle", "--format", "text"}).out ==
        "coefficients (ascending): 1 3/2 1/2\n");
  CHECK(run_cli({"idp", "--gen", "reeve 2", "--format", "text"}).out ==
        "IDP fails at height 2: point 1 1 1 has no height-1 summand\n");
  CHECK(run_cli({"count", "--gen", "cube 3", "--m", "2", "--format", "text"}).out ==
        "count(2) = 27\n");
}

TEST_CASE("cli hilbert output") {
  CliResult r = run_cli({"hilbert", "--gen", "reeve 3"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["height_bound"] == 2);
  CHECK(j["used_default_bound"] == true);
  CHECK(j["count"] == 6);
  REQUIRE(j["generators"].size() == 6);
  CHECK(j["generators"][4] ==
        nlohmann::json::parse(R"x({"point":[1,1,1],"height":2})x"));
  CHECK(j["generators"][5] ==
        nlohmann::json::parse(R"x({"point":[1,1,2],"height":2})x"));
}

TEST_CASE("cli reads stdin when the input is '-'") {
  std::istringstream fake("dim 2\n0 0\n1 0\n1 1\n");
  std::streambuf* old = std::cin.rdbuf(fake.rdbuf());
  CliResult r = run_cli({"count", "-", "--m", "2"});
  std::cin.rdbuf(old);
  CHECK(r.code == 0);
  CHECK(r.out == R"x({"m":2,"count":6})x" "\n");
}

TEST_CASE("cli exit codes by failure class") {
  // 1: input and parse trouble
  CHECK(run_cli({"ehrhart", "--gen", "dodecahedron"}).code == 1);
  CHECK(run_cli({"count", kDataDir + "/absent.txt"}).code == 1);
  CHECK(run_cli({"pick"}).code == 1);  // no input at all
  CHECK(run_cli({"pick", kDataDir + "/decagon.txt", "--gen", "triangle"}).code == 1);
  CHECK(run_cli({"pick", "--no-such-flag"}).code == 1);
  CHECK(run_cli({}).code == 1);  // subcommand required

  // 2: mathematically invalid requests on well-formed input
  CHECK(run_cli({"count", "--gen", "triangle", "--m", "-1"}).code == 2);
  CHECK(run_cli({"idp", "--gen", "triangle", "--max-height", "1"}).code == 2);
  CHECK(run_cli({"pick", "--gen", "reeve 2"}).code == 2);
  CHECK(run_cli({"triangulate", "--gen", "simplex 3"}).code == 2);
  CHECK(run_cli({"ehrhart", "--gen", "simplex 0"}).code == 2);

  // errors are reported on the error stream, not stdout
  CliResult r = run_cli({"pick", "--gen", "reeve 2"});
  CHECK(r.out.empty());
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("cli help exits cleanly") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"pick", "--help"}).code == 0);
  CHECK(run_cli({"--help"}).out.find("latgeo") != std::string::npos);
}

TEST_CASE("gen writes loadable text") {
  CliResult r = run_cli({"gen", "reeve", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "dim 3\n0 0 0\n0 1 0\n1 0 0\n1 1 2\n");

  const std::string path = "/tmp/latgeo_cli_gen.txt";
  CliResult w = run_cli({"gen", "random", "9", "-o", path});
  CHECK(w.code == 0);
  CHECK(w.out.empty());
  LatticePolytope back = load_polytope_file(path);
  LatticePolytope direct = random_polygon(9);
  REQUIRE(back.vertices().size() == direct.vertices().size());
  for (std::size_t i = 0; i < back.vertices().size(); ++i) {
    CHECK(points_equal(back.vertices()[i], direct.vertices()[i]));
  }
}

TEST_CASE("triangulate --svg writes the drawing") {
  const std::string path = "/tmp/latgeo_cli_tri.svg";
  CliResult r = run_cli({"triangulate", kDataDir + "/decagon.txt", "--svg", path});
  CHECK(r.code == 0);
  std::string svg = slurp(path);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("search subcommand reports and persists") {
  const std::string path = "/tmp/latgeo_cli_search.jsonl";
  CliResult r = run_cli({"search", "--limit", "15", "--seed", "3",
                         "--results", path});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["drawn"] == 15);
  CHECK(j["unique"].get<int>() >= 1);
  CHECK(j["counterexamples"].is_array());
  CHECK(j["counterexamples"].empty());
  CHECK(j["results"] == path);

  std::istringstream lines(slurp(path));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    ++count;
    CHECK(nlohmann::json::parse(line).contains("vertices"));
  }
  CHECK(count == j["unique"].get<int>());

  // reruns with one seed are byte-stable
  CliResult again = run_cli({"search", "--limit", "15", "--seed", "3",
                             "--results", path});
  CHECK(again.out == r.out);
}
