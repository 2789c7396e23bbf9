#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "pwc/badic.hpp"
#include "pwc/iet.hpp"
#include "pwc/semiconj.hpp"

namespace pwc {

using nlohmann::json;

/// {"b": int, "breakpoints": [...], "offsets": [...], "radicand": int?}
/// Breakpoints may list all of 0 = x_0 < ... < x_n = 1 or only the interior.
struct MapSpec {
  int b = 2;
  std::optional<long> radicand;
  PiecewiseAffineMap map;
};

MapSpec parse_map_spec(const json& j);
/// {"breakpoints": [...], "constants": [...], "radicand": int?}
IntervalExchange parse_iet_spec(const json& j);

/// A JSON string in scalar syntax, or a JSON integer.
Scalar parse_scalar(const json& j, std::optional<long> radicand = {});

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

json to_json(const PiecewiseAffineMap& g);
json to_json(const Witness& w);
json to_json(const Certificate& c);
json to_json(const GapWord& w);
json to_json(const Reconstruction& r, const Scalar& delta);
json to_json(const ComplexityProfile& p);
json to_json(const EntropyEstimate& e);
json to_json(const BoundsReport& r);
json to_json(const IntervalExchange& T);
json to_json(const IdocReport& r);
json to_json(const Semiconjugacy& s);

/// "x,h" rows, both exact.
std::string h_grid_csv(const Semiconjugacy& s);

}  // namespace pwc
