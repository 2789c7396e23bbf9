#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pwc/io.hpp"

namespace pwc {

struct ScanConfig {
  std::optional<Scalar> lo;  // defaults to the family window
  std::optional<Scalar> hi;
  /// Exactly one of these: all i / denominator + offset strictly inside
  /// (lo, hi), or `points` cell midpoints of [lo, hi) shifted by offset.
  std::optional<long> denominator;
  std::optional<std::size_t> points;
  Scalar offset{0};
  std::size_t depth = 20;
  std::size_t word_depth = 64;
  unsigned jobs = 1;
  bool survivors_only = false;  // CSV keeps only passing records
};

/// Reads {"lo", "hi", "denominator" | "points", "offset", "depth",
/// "word_depth", "jobs", "survivors_only"}; every key is optional.
ScanConfig parse_scan_config(const json& j, std::optional<long> radicand = {});

struct ScanRecord {
  std::size_t index = 0;
  Scalar delta;
  bool pass = false;
  long certified_depth = -1;
  std::optional<Witness> witness;
  bool complexity_verified = false;
  std::size_t census_k = 0;  // coding census depth used below
  std::uint64_t coding_p = 0;  // p(census_k) of the first gap-midpoint coding
  std::vector<Word> words;
  Scalar reconstruction_error;  // |delta'_{word_depth} - delta|
  long double entropy_tail = 0;  // E_k of the sum word at k = census_k
};

struct BoxCount {
  int exponent;  // eps = 2^-exponent
  std::size_t boxes;
  std::optional<double> slope;  // log N / log(1 / eps)
};

struct ScanSummary {
  std::size_t grid_points = 0;
  std::size_t depth = 0;
  std::size_t survivors = 0;
  std::vector<std::size_t> survivors_by_depth;  // [k]: certified to depth >= k
  std::vector<BoxCount> box_counts;
};

struct ScanResult {
  std::vector<ScanRecord> records;
  ScanSummary summary;
};

std::vector<Scalar> scan_grid(const DeltaFamily& fam, const ScanConfig& cfg);
ScanRecord scan_one(const DeltaFamily& fam, const Scalar& delta, std::size_t depth, std::size_t word_depth);
/// Worker pool over the grid; records come back in grid order.
ScanResult run_scan(const DeltaFamily& fam, const ScanConfig& cfg);

std::vector<BoxCount> box_counts(const std::vector<Scalar>& points, int first_exponent = 4, int last_exponent = 12);

std::string scan_csv(const ScanResult& result, bool survivors_only);
json to_json(const ScanSummary& s);

}  // namespace pwc
