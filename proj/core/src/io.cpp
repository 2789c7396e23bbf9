#include "pwc/io.hpp"

#include <fstream>
#include <sstream>

namespace pwc {

Scalar parse_scalar(const json& j, std::optional<long> radicand) {
  Scalar x;
  if (j.is_number_integer()) {
    x = Scalar(j.get<long>());
  } else if (j.is_string()) {
    x = Scalar::parse(j.get<std::string>());
  } else {
    throw Error(ErrorKind::parse, "expected a scalar string or integer, got " + j.dump());
  }
  if (!x.is_rational() && x.radicand() != radicand.value_or(0))
    throw Error(ErrorKind::incompatible_field,
                "scalar " + x.str() + " is outside the declared field" +
                    (radicand ? " Q(sqrt(" + std::to_string(*radicand) + "))" : std::string(" Q")));
  return x;
}

namespace {

std::vector<Scalar> scalar_list(const json& j, const char* key, std::optional<long> radicand) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw Error(ErrorKind::parse, std::string("missing array \"") + key + "\"");
  std::vector<Scalar> out;
  for (const auto& item : j.at(key)) out.push_back(parse_scalar(item, radicand));
  return out;
}

std::optional<long> radicand_of(const json& j) {
  if (!j.contains("radicand") || j.at("radicand").is_null()) return std::nullopt;
  if (!j.at("radicand").is_number_integer()) throw Error(ErrorKind::parse, "\"radicand\" must be an integer");
  const long d = j.at("radicand").get<long>();
  if (d < 2 || !is_square_free(d))
    throw Error(ErrorKind::parse, "radicand " + std::to_string(d) + " is not a square-free integer >= 2");
  return d;
}

std::vector<Scalar> full_breakpoints(std::vector<Scalar> given, std::size_t n) {
  if (given.size() == n + 1) return given;
  if (given.size() + 1 == n) {
    given.insert(given.begin(), Scalar(0));
    given.emplace_back(1);
    return given;
  }
  throw Error(ErrorKind::invalid_map, std::to_string(given.size()) + " breakpoints do not fit " + std::to_string(n) +
                                          " pieces");
}

json scalar_array(const std::vector<Scalar>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

}  // namespace

MapSpec parse_map_spec(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "map spec must be a JSON object");
  if (!j.contains("b") || !j.at("b").is_number_integer()) throw Error(ErrorKind::parse, "missing integer \"b\"");
  const long b = j.at("b").get<long>();
  if (b < 2 || b > 1000000) throw Error(ErrorKind::slope_not_inverse_base, "b = " + std::to_string(b) + " is not >= 2");
  const auto radicand = radicand_of(j);
  auto offsets = scalar_list(j, "offsets", radicand);
  auto breakpoints = full_breakpoints(scalar_list(j, "breakpoints", radicand), offsets.size());
  return MapSpec{static_cast<int>(b), radicand,
                 PiecewiseAffineMap(std::move(breakpoints), Scalar::rational(1, b), std::move(offsets))};
}

IntervalExchange parse_iet_spec(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::parse, "exchange spec must be a JSON object");
  const auto radicand = radicand_of(j);
  auto constants = scalar_list(j, "constants", radicand);
  std::vector<Scalar> breakpoints;
  try {
    breakpoints = full_breakpoints(scalar_list(j, "breakpoints", radicand), constants.size());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::invalid_map) throw;
    throw Error(ErrorKind::invalid_iet, e.what());
  }
  return IntervalExchange(std::move(breakpoints), std::move(constants));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::io, "write failed for " + path.string());
}

json to_json(const PiecewiseAffineMap& g) {
  return {{"breakpoints", scalar_array(g.breakpoints())}, {"slope", g.slope().str()},
          {"offsets", scalar_array(g.offsets())}};
}

json to_json(const Witness& w) {
  json out{{"kind", to_string(w.kind)},
           {"iterate", w.iterate},
           {"discontinuity", w.discontinuity},
           {"point", w.point.str()}};
  if (w.kind == Witness::Kind::connection)
    out["source"] = w.source;
  else
    out["gap_component"] = w.gap_component;
  return out;
}

json to_json(const Certificate& c) {
  json out{{"verdict", c.pass ? "pass" : "fail"},
           {"depth", c.depth},
           {"certified_depth", c.certified_depth},
           {"disjoint", c.disjoint},
           {"covered_measure", c.covered_measure.str()},
           {"expected_measure", c.expected_measure.str()},
           {"complexity_verified", c.complexity_verified}};
  out["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
  return out;
}

json to_json(const GapWord& w) {
  return {{"component", w.component},
          {"bits", to_string(w.bits)},
          {"midpoint", w.midpoint.str()},
          {"threshold", w.threshold.str()},
          {"threshold_hits", w.threshold_hits}};
}

json to_json(const Reconstruction& r, const Scalar& delta) {
  return {{"delta_exact", delta.str()},
          {"delta_reconstructed", r.value.str()},
          {"K", r.depth},
          {"tail_bound", r.tail_bound.str()},
          {"error", abs(r.value - delta).str()},
          {"certificate_depth", r.certificate_depth},
          {"guaranteed", r.guaranteed}};
}

json to_json(const ComplexityProfile& p) {
  json out{{"values", p.values}};
  if (!p.new_points.empty()) out["new_points"] = p.new_points;
  return out;
}

json to_json(const EntropyEstimate& e) {
  std::vector<double> values(e.values.begin(), e.values.end());
  return {{"b", e.b}, {"counts", e.counts}, {"values", values}};
}

json to_json(const BoundsReport& r) {
  return {{"k_max", r.k_max},           {"certificate_depth", r.certificate_depth},
          {"certified", r.certified},   {"word_bound", r.word_bound},
          {"product_bound", r.product_bound}, {"power_bound", r.power_bound},
          {"violations", r.violations}};
}

json to_json(const IntervalExchange& T) {
  return {{"breakpoints", scalar_array(T.breakpoints())},
          {"constants", scalar_array(T.constants())},
          {"permutation", T.permutation()}};
}

json to_json(const IdocReport& r) {
  json out{{"depth", r.depth},
           {"no_collision", r.no_collision},
           {"keane", to_string(r.keane)},
           {"verdict", r.pass() ? "pass" : "fail"}};
  if (r.witness)
    out["witness"] = {{"source", r.witness->source}, {"target", r.witness->target}, {"iterate", r.witness->iterate}};
  else
    out["witness"] = nullptr;
  return out;
}

json to_json(const Semiconjugacy& s) {
  json out{{"samples", s.options.samples},
           {"k_iter", s.options.k_iter},
           {"grid", s.options.grid},
           {"window", s.options.window},
           {"certificate_depth", s.certificate_depth},
           {"orbit_length", s.orbit_length},
           {"closure", s.closure},
           {"yhat", scalar_array(s.yhat)},
           {"constants", scalar_array(s.constants)},
           {"tolerance", s.tolerance.str()},
           {"residual", s.residual.str()},
           {"residual_ok", s.residual_ok()},
           {"tiling_error", s.tiling_error.str()},
           {"snap_error", s.snap_error.str()},
           {"gap_jump", s.gap_jump.str()},
           {"monotone", s.monotone},
           {"spacing_collapse", s.spacing_collapse},
           {"transfer", {{"matches", s.transfer_matches},
                         {"samples", s.options.transfer_samples},
                         {"depth", s.options.transfer_depth}}},
           {"ok", s.ok()}};
  out["iet"] = s.iet ? to_json(*s.iet) : json(nullptr);
  return out;
}

std::string h_grid_csv(const Semiconjugacy& s) {
  std::ostringstream os;
  os << "x,h\n";
  const auto grid = static_cast<long>(s.options.grid);
  for (std::size_t i = 0; i < s.h_grid.size(); ++i) {
    os << Scalar::rational(static_cast<long>(i), grid).str() << ',' << s.h_grid[i].str() << '\n';
  }
  return os.str();
}

}  // namespace pwc
