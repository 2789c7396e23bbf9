#include <doctest.h>

#include <sstream>

#include "pwc/scan.hpp"
#include "support/oracles.hpp"

using namespace pwc;

namespace {

Scalar q(long p, long d) { return Scalar::rational(p, d); }

DeltaFamily family_a() {
  return validate_family(PiecewiseAffineMap({0, q(2, 3), 1}, q(1, 2), {q(2, 3), q(-1, 3)}), 2);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

TEST_SUITE("scan") {
  TEST_CASE("grid construction") {
    const auto fam = family_a();
    ScanConfig cfg;
    cfg.denominator = 12;
    CHECK(scan_grid(fam, cfg) == std::vector<Scalar>{q(-1, 12), 0, q(1, 12), q(1, 6), q(1, 4)});
    cfg.denominator.reset();
    cfg.points = 3;
    CHECK(scan_grid(fam, cfg) == std::vector<Scalar>{q(-1, 12), q(1, 12), q(1, 4)});
    cfg.lo = q(1, 100);
    cfg.hi = q(1, 50);
    cfg.points.reset();
    cfg.denominator = 2;
    CHECK_THROWS_AS(scan_grid(fam, cfg), Error);
    cfg.points = 2;
    CHECK_THROWS_AS(scan_grid(fam, cfg), Error);  // both modes
    cfg.denominator.reset();
    cfg.hi = q(1, 2);
    CHECK_THROWS_AS(scan_grid(fam, cfg), Error);  // leaves the window
  }

  TEST_CASE("config parsing") {
    const auto cfg = parse_scan_config(json::parse(R"({"lo": "-1/8", "denominator": 64, "depth": 5, "jobs": 3})"));
    CHECK(cfg.lo == q(-1, 8));
    CHECK_FALSE(cfg.hi.has_value());
    CHECK(cfg.denominator == 64);
    CHECK(cfg.depth == 5);
    CHECK(cfg.jobs == 3);
    CHECK_THROWS_AS(parse_scan_config(json::parse(R"({"depth": -1})")), Error);
    CHECK_THROWS_AS(parse_scan_config(json::parse("[1]")), Error);
  }

  TEST_CASE("depth 0 checks only G against the discontinuity") {
    ScanConfig cfg;
    cfg.denominator = 60;
    cfg.depth = 0;
    cfg.word_depth = 0;
    const auto r = run_scan(family_a(), cfg);
    CHECK(r.summary.grid_points == 29);
    // The wrap point 2/3 - 2 delta lies in G_delta exactly for 0 < delta <= 1/6: i = 1..10.
    CHECK(r.summary.survivors == 19);
  }

  TEST_CASE("single point grid") {
    ScanConfig cfg;
    cfg.points = 1;
    cfg.lo = q(1, 5);
    cfg.hi = q(3, 10);
    cfg.depth = 3;
    const auto r = run_scan(family_a(), cfg);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].delta == q(1, 4));
    CHECK_FALSE(r.records[0].pass);
    CHECK(r.records[0].witness->iterate == 1);
    for (const auto& b : r.summary.box_counts) CHECK(b.boxes <= 1);
  }

  TEST_CASE("survivors by depth are non-increasing and records are deterministic") {
    ScanConfig cfg;
    cfg.denominator = 1024;
    cfg.depth = 12;
    cfg.word_depth = 24;
    cfg.jobs = 1;
    const auto one = run_scan(family_a(), cfg);
    cfg.jobs = 4;
    const auto four = run_scan(family_a(), cfg);
    CHECK(scan_csv(one, false) == scan_csv(four, false));
    CHECK(to_json(one.summary) == to_json(four.summary));
    const auto& by = one.summary.survivors_by_depth;
    CHECK(by.front() <= one.summary.grid_points);
    for (std::size_t k = 1; k < by.size(); ++k) CHECK(by[k] <= by[k - 1]);
    CHECK(by.back() == one.summary.survivors);
    for (const auto& r : one.records) {
      if (!r.pass) continue;
      CHECK(r.complexity_verified);
      CHECK(r.coding_p == r.census_k + 1);
    }
  }

  TEST_CASE("CSV exact columns round trip") {
    ScanConfig cfg;
    cfg.denominator = 200;
    cfg.depth = 6;
    cfg.word_depth = 10;
    const auto r = run_scan(family_a(), cfg);
    std::istringstream csv(scan_csv(r, false));
    std::string line;
    std::getline(csv, line);
    const auto header = split(line, ',');
    REQUIRE(header.size() == 13);
    CHECK(header[1] == "delta");
    std::size_t rows = 0;
    while (std::getline(csv, line)) {
      const auto cells = split(line, ',');
      REQUIRE(cells.size() == 13);
      const auto& rec = r.records[rows];
      CHECK(Scalar::parse(cells[1]) == rec.delta);
      CHECK(Scalar::parse(cells[11]) == rec.reconstruction_error);
      CHECK(cells[3] == (rec.pass ? "pass" : "fail"));
      ++rows;
    }
    CHECK(rows == r.records.size());
    std::istringstream survivors(scan_csv(r, true));
    std::size_t kept = 0;
    while (std::getline(survivors, line)) ++kept;
    CHECK(kept == r.summary.survivors + 1);
  }

  TEST_CASE("box counts") {
    const auto boxes = box_counts({q(1, 3), q(1, 3) + q(1, 4096), q(-1, 7)}, 4, 12);
    REQUIRE(boxes.size() == 9);
    CHECK(boxes.front().boxes == 2);
    CHECK(boxes.back().boxes == 3);
    CHECK(*boxes.front().slope == doctest::Approx(0.25));
    CHECK(box_counts({}, 4, 5).front().slope == std::nullopt);
  }

  TEST_CASE("reconstruction error in certified records") {
    ScanConfig cfg;
    const Scalar center = testing::golden_delta_star(200);
    cfg.lo = center - pow(q(1, 2), 40);
    cfg.hi = center + pow(q(1, 2), 40);
    cfg.points = 8;
    cfg.depth = 30;
    cfg.word_depth = 30;
    const auto r = run_scan(family_a(), cfg);
    CHECK(r.summary.survivors > 0);
    for (const auto& rec : r.records)
      if (rec.pass) CHECK(rec.reconstruction_error <= pow(q(1, 2), 30));
  }
}
