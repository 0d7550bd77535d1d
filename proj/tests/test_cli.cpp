#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "ternhom/cube.hpp"
#include "ternhom/cube_io.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ternhom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ternhom::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ternhom_cli_" + name);
}

}  // namespace

TEST_CASE("group") {
  const auto r = run({"group", "--triangle", "2", "2", "3"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["order"] == 6);
  CHECK(j["axioms"]["is_group"] == true);
  CHECK(j["t_axioms_hold"] == true);
  CHECK(j["division_contracts_hold"] == true);
  CHECK(j["skew"].size() == 6);
  CHECK(j["labels"].size() == 6);
  CHECK(j["cube"]["table"].size() == 216);

  const auto text = run({"group", "--cube", fixtures::data_path("printed_cube_223.txt").string(), "--format", "text"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("skew: (1,2,3,6,5,4)") != std::string::npos);
  CHECK(text.out.find("ternary group: yes") != std::string::npos);

  SUBCASE("corrupted cube exits 2 with a witness") {
    auto cube = fixtures::printed_cube();
    std::vector<ternhom::Element> table(cube.table().begin(), cube.table().end());
    table[40] = ternhom::Element{(table[40].index + 1) % 6};
    const auto path = temp_file("bad.json");
    ternhom::write_cube_file(path, ternhom::TernaryCube(6, table));
    const auto bad = run({"group", "--cube", path.string()});
    CHECK(bad.code == 2);
    const auto jb = json::parse(bad.out);
    CHECK(jb["axioms"]["is_group"] == false);
    CHECK_FALSE(jb["axioms"]["witnesses"].empty());
    std::filesystem::remove(path);
  }
  SUBCASE("odd relator length exits 2") {
    const auto p = run({"group", "--presentation", "a|a^3"});
    CHECK(p.code == 2);
    CHECK(p.err.find("parity") != std::string::npos);
  }
  SUBCASE("writes the cube") {
    const auto path = temp_file("out.json");
    CHECK(run({"group", "--triangle", "2", "2", "2", "--out", path.string()}).code == 0);
    CHECK(ternhom::read_cube_file(path).order() == 4);
    std::filesystem::remove(path);
  }
  SUBCASE("usage errors") {
    CHECK(run({"group"}).code == 1);
    CHECK(run({"group", "--triangle", "2", "2"}).code == 1);
    CHECK(run({"group", "--triangle", "2", "2", "3", "--presentation", "a|a^2"}).code == 1);
    CHECK(run({"group", "--cube", "/nonexistent/cube.json"}).code == 1);
    CHECK(run({"group", "--presentation", "a,b | (ab"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
  }
  SUBCASE("coset limit exits 3") {
    CHECK(run({"group", "--triangle", "2", "3", "7", "--max-cosets", "500"}).code == 3);
  }
}

TEST_CASE("homology") {
  const auto r = run({"homology", "--triangle", "2", "2", "5", "--degree", "1"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["torsion"] == json::array({5, 25}));
  CHECK(j["degree"] == 1);

  const auto z = run({"homology", "--triangle", "2", "2", "2", "--degree", "1", "--format", "text"});
  REQUIRE(z.code == 0);
  CHECK(z.out.find("H_1 = Z^") != std::string::npos);
  CHECK(z.out.find("Z_") == std::string::npos);

  const auto h0 = json::parse(run({"homology", "--triangle", "2", "2", "3", "--degree", "0"}).out);
  CHECK(h0["torsion"].empty());

  const auto path = temp_file("d2.mtx");
  CHECK(run({"homology", "--triangle", "2", "2", "3", "--export-boundary", path.string()}).code == 0);
  std::ifstream in(path);
  std::string banner;
  std::getline(in, banner);
  CHECK(banner.rfind("%%MatrixMarket", 0) == 0);
  in.close();
  std::filesystem::remove(path);

  CHECK(run({"homology", "--triangle", "2", "2", "3", "--max-basis", "50"}).code == 3);
}

TEST_CASE("knot") {
  const auto r = run({"knot", "--braid", "[1,1,1]", "--triangle", "2", "2", "3"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["total"] == 72);
  CHECK(j["order3_count"] == 36);

  const auto t = run({"knot", "--table", "--format", "text"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("3_1, [ 1, 1, 1 ], 72, 36") != std::string::npos);
  CHECK(t.out.find("8_18, [ 1, -2, 1, -2, 1, -2, 1, -2 ], 180, 144") != std::string::npos);

  const auto table = json::parse(run({"knot", "--table"}).out);
  REQUIRE(table.size() == 25);
  for (const auto& e : table) {
    CHECK(e["total"] == e["published_total"]);
    CHECK(e["order3_count"] == e["published_order3_count"]);
  }

  CHECK(run({"knot", "--braid", "[7]", "--strands", "2"}).code == 1);
  CHECK(run({"knot", "--braid", "[1,,1]"}).code == 1);
  CHECK(run({"knot"}).code == 1);
}

TEST_CASE("cocycle") {
  const auto r = run({"cocycle", "--modulus", "9", "--braid", "[1,1,1]"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["modulus"] == 9);
  bool split = false;
  for (const auto& e : j["cocycles"]) split = split || e["state_sum"]["counts"][0] == 36;
  CHECK(split);
  CHECK(run({"cocycle", "--modulus", "1"}).code == 1);
  CHECK(run({"cocycle"}).code == 1);
}

TEST_CASE("selftest and determinism") {
  const auto a = run({"selftest", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  CHECK(run({"knot", "--braid", "[1,-2,1,-2]"}).out == run({"knot", "--braid", "[1,-2,1,-2]", "--jobs", "3"}).out);
}
