#include <doctest.h>

#include <fstream>
#include <sstream>

#include "k3lat/io.hpp"

using namespace k3lat;

namespace {

std::string fixture(const std::string& name) { return std::string(K3LAT_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("fixtures round-trip byte for byte") {
    const std::string lat = slurp(fixture("u_a5_3.json"));
    CHECK(emit(lattice_to_json(lattice_from_json(parse_json(lat)))) == lat);
    CHECK(lattice_from_json(parse_json(lat)) == catalog("U+A5^3"));
    const std::string emb = slurp(fixture("a5_in_e8.json"));
    CHECK(emit(embedding_to_json(embedding_from_json(parse_json(emb)))) == emb);
    const std::string crv = slurp(fixture("c7.json"));
    CHECK(emit(curve_to_json(curve_from_json(parse_json(crv)))) == crv);
    CHECK(curve_from_json(parse_json(crv)) == curve_catalog("C7"));
    const std::string cfg = slurp(fixture("ivstar3.json"));
    CHECK(emit(config_to_json(config_from_json(parse_json(cfg)))) == cfg);
  }

  TEST_CASE("big integers survive") {
    Json j = parse_json(R"({"gram": [["-123456789012345678901234567890"]]})");
    Lattice l = lattice_from_json(j);
    CHECK(l.gram()(0, 0) == Int("-123456789012345678901234567890"));
    CHECK(emit(lattice_to_json(l)) == "{\n  \"gram\": [\n    [\n      \"-123456789012345678901234567890\"\n    ]\n  ]\n}\n");
  }

  TEST_CASE("error paths") {
    CHECK(error_of([] { lattice_from_json(parse_json(R"({"gram": [["2","1"],["0","2"]]})")); }) ==
          "$.gram: not symmetric: entries [0][1] = 1 and [1][0] = 0");
    CHECK(error_of([] { lattice_from_json(parse_json(R"({"gram": [["2","x"],["1","2"]]})")); }) ==
          "$.gram[0][1]: invalid integer \"x\"");
    CHECK(error_of([] { lattice_from_json(parse_json(R"({"gram": [[2]]})")); }) ==
          "$.gram[0][0]: expected a decimal integer string");
    CHECK(error_of([] { lattice_from_json(parse_json(R"({"grm": []})")); }) == "$: missing key \"gram\"");
    CHECK(error_of([] {
            curve_from_json(parse_json(R"({"degree": 3, "terms": [{"exp": [1,1,0], "coeff": "1"}]})"));
          }) == "$.terms[0].exp: exponent sum 2 != degree 3");
    CHECK(error_of([] {
            curve_from_json(parse_json(R"({"degree": 2, "terms": [{"exp": [1,1,0], "coeff": "1/0"}]})"));
          }) == "$.terms[0].coeff: zero denominator");
    CHECK(error_of([] { config_from_json(parse_json(R"({"fibers": ["IV*", "V"]})")); }).rfind("$.fibers[1]: ", 0) == 0);
    CHECK(error_of([] {
            embedding_from_json(parse_json(R"({"ambient": {"gram": [["-2"]]}, "basis": [["1"],["0"]]})"));
          }) == "$.basis: has 2 rows, ambient rank is 1");
  }

  TEST_CASE("syntax errors report line and column") {
    std::string e = error_of([] { parse_json("{\n  \"gram\": [\n    [\"1\" \"2\"]\n  ]\n}"); });
    CHECK(e.rfind("line 3, column 12: ", 0) == 0);
  }

  TEST_CASE("points and vectors") {
    auto p = parse_point("1, -2/3 ,0");
    CHECK(p[1] == Rat(-2, 3));
    CHECK_THROWS_AS(parse_point("1,2"), FormatError);
    CHECK_THROWS_AS(parse_point("0,0,0"), FormatError);
    CHECK(parse_int_vector("1,0,-4") == IntVector{Int(1), Int(0), Int(-4)});
  }
}
