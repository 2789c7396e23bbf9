#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pwc/io.hpp"

using namespace pwc;

namespace {

Scalar q(long p, long d) { return Scalar::rational(p, d); }

std::filesystem::path fixture(const char* name) { return std::filesystem::path(PWC_FIXTURES) / name; }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::io;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("fixtures parse to the documented maps") {
    const MapSpec a = parse_map_spec(read_json_file(fixture("example-a.json")));
    CHECK(a.b == 2);
    CHECK_FALSE(a.radicand.has_value());
    CHECK(a.map.breakpoints() == std::vector<Scalar>{0, q(2, 3), 1});
    CHECK(a.map.slope() == q(1, 2));
    const MapSpec b = parse_map_spec(read_json_file(fixture("example-b.json")));
    CHECK(b.map.branch_count() == 3);
    CHECK(b.map.slope() == q(1, 4));
  }

  TEST_CASE("interior breakpoints and integer scalars") {
    const json j = json::parse(R"({"b": 2, "breakpoints": ["2/3"], "offsets": ["2/3", "-1/3"]})");
    const json k = json::parse(R"({"b": 2, "breakpoints": [0, "2/3", 1], "offsets": ["2/3", "-1/3"]})");
    CHECK(parse_map_spec(j).map == parse_map_spec(k).map);
  }

  TEST_CASE("map round trip through JSON") {
    const MapSpec a = parse_map_spec(read_json_file(fixture("example-b.json")));
    json out = to_json(a.map);
    out["b"] = 4;
    CHECK(parse_map_spec(out).map == a.map);
  }

  TEST_CASE("schema errors") {
    CHECK(kind_of([] { parse_map_spec(json::parse("[]")); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_map_spec(json::parse(R"({"breakpoints": [], "offsets": []})")); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_map_spec(json::parse(R"({"b": 2, "offsets": ["0"]})")); }) == ErrorKind::parse);
    CHECK(kind_of([] { parse_map_spec(json::parse(R"({"b": 2, "breakpoints": ["1/2"], "offsets": ["0"]})")); }) ==
          ErrorKind::invalid_map);
    CHECK(kind_of([] { parse_map_spec(json::parse(R"({"b": 2, "breakpoints": [], "offsets": [0.5]})")); }) ==
          ErrorKind::parse);
    CHECK(kind_of([] { parse_map_spec(json::parse(R"({"b": 1, "breakpoints": [], "offsets": ["0"]})")); }) ==
          ErrorKind::slope_not_inverse_base);
    CHECK(kind_of([] {
            parse_map_spec(json::parse(R"({"b": 2, "radicand": 4, "breakpoints": [], "offsets": ["0"]})"));
          }) == ErrorKind::parse);
  }

  TEST_CASE("scalars outside the declared field") {
    CHECK(kind_of([] { parse_scalar(json("1+1*sqrt(5)")); }) == ErrorKind::incompatible_field);
    CHECK(kind_of([] { parse_scalar(json("1+1*sqrt(5)"), 3); }) == ErrorKind::incompatible_field);
    CHECK(parse_scalar(json("1+1*sqrt(5)"), 5) == Scalar(1) + Scalar::quadratic(0, 1, 5));
    CHECK(parse_scalar(json(3), 5) == 3);
  }

  TEST_CASE("file errors") {
    CHECK(kind_of([] { read_json_file(fixture("does-not-exist.json")); }) == ErrorKind::io);
    const auto bad = std::filesystem::temp_directory_path() / "pwc-io-bad.json";
    {
      std::ofstream(bad) << "{ not json";
    }
    CHECK(kind_of([&] { read_json_file(bad); }) == ErrorKind::parse);
    std::filesystem::remove(bad);
    CHECK(kind_of([] { write_text_file("/nonexistent-dir/x.txt", "x"); }) == ErrorKind::io);
  }

  TEST_CASE("certificate JSON") {
    const MapSpec a = parse_map_spec(read_json_file(fixture("example-a.json")));
    const auto fam = validate_family(a.map, a.b);
    const auto cert = certify(rotate_compose(fam, q(1, 4)), 8);
    const json j = to_json(cert);
    CHECK(j.at("verdict") == "fail");
    CHECK(j.at("certified_depth") == 0);
    CHECK(j.at("witness").at("kind") == "gap-hits-discontinuity");
    CHECK(j.at("witness").at("iterate") == 1);
    CHECK(Scalar::parse(j.at("witness").at("point").get<std::string>()) == q(1, 6));
    const json pass = to_json(certify(rotate_compose(fam, 0), 1));
    CHECK(pass.at("verdict") == "pass");
    CHECK(pass.at("witness").is_null());
  }

  TEST_CASE("IET spec round trip") {
    const auto T = parse_iet_spec(read_json_file(fixture("golden-3iet.json")));
    json j = to_json(T);
    j["radicand"] = 5;
    j["breakpoints"] = json::array({j["breakpoints"][1], j["breakpoints"][2]});
    const auto U = parse_iet_spec(j);
    CHECK(U.breakpoints() == T.breakpoints());
    CHECK(U.constants() == T.constants());
    CHECK(kind_of([] { parse_iet_spec(json::parse(R"({"breakpoints": ["1/2"], "constants": ["0"]})")); }) ==
          ErrorKind::invalid_iet);
  }
}
