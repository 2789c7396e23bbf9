#include "pwc/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace pwc {

ScanConfig parse_scan_config(const json& j, std::optional<long> radicand) {
  if (!j.is_object()) throw Error(ErrorKind::invalid_config, "scan config must be a JSON object");
  ScanConfig cfg;
  auto count = [&](const char* key) -> std::optional<std::size_t> {
    if (!j.contains(key)) return std::nullopt;
    if (!j.at(key).is_number_unsigned())
      throw Error(ErrorKind::invalid_config, std::string("\"") + key + "\" must be a non-negative integer");
    return j.at(key).get<std::size_t>();
  };
  if (j.contains("lo")) cfg.lo = parse_scalar(j.at("lo"), radicand);
  if (j.contains("hi")) cfg.hi = parse_scalar(j.at("hi"), radicand);
  if (j.contains("offset")) cfg.offset = parse_scalar(j.at("offset"), radicand);
  if (auto d = count("denominator")) cfg.denominator = static_cast<long>(*d);
  cfg.points = count("points");
  if (auto d = count("depth")) cfg.depth = *d;
  if (auto d = count("word_depth")) cfg.word_depth = *d;
  if (auto d = count("jobs")) cfg.jobs = static_cast<unsigned>(*d);
  if (j.contains("survivors_only")) cfg.survivors_only = j.at("survivors_only").get<bool>();
  return cfg;
}

std::vector<Scalar> scan_grid(const DeltaFamily& fam, const ScanConfig& cfg) {
  const Scalar lo = cfg.lo.value_or(fam.window_lo);
  const Scalar hi = cfg.hi.value_or(fam.window_hi);
  if (!(lo < hi)) throw Error(ErrorKind::invalid_config, "empty scan interval [" + lo.str() + ", " + hi.str() + ")");
  if (lo < fam.window_lo || fam.window_hi < hi)
    throw Error(ErrorKind::invalid_config, "scan interval leaves the parameter window");
  if (cfg.denominator.has_value() == cfg.points.has_value())
    throw Error(ErrorKind::invalid_config, "give exactly one of denominator or points");

  std::vector<Scalar> grid;
  if (cfg.denominator) {
    const long D = *cfg.denominator;
    if (D <= 0) throw Error(ErrorKind::invalid_config, "denominator must be positive");
    const Scalar scale(D);
    mpz_class first = ((lo - cfg.offset) * scale).floor_integer() + 1;
    mpz_class last = ((hi - cfg.offset) * scale).floor_integer();
    for (mpz_class i = first; i <= last; ++i) {
      Scalar delta = Scalar::rational(i, mpz_class(D)) + cfg.offset;
      if (lo < delta && delta < hi) grid.push_back(std::move(delta));
    }
  } else {
    const std::size_t N = *cfg.points;
    const Scalar step = (hi - lo) / Scalar(static_cast<long>(N));
    for (std::size_t i = 0; i < N; ++i) {
      Scalar delta = lo + step * Scalar::rational(static_cast<long>(2 * i + 1), 2) + cfg.offset;
      if (!fam.in_window(delta)) throw Error(ErrorKind::invalid_config, "offset grid point " + delta.str() + " leaves the window");
      grid.push_back(std::move(delta));
    }
  }
  for (const auto& delta : grid) {
    if (!fam.in_window(delta)) throw Error(ErrorKind::invalid_config, "grid point " + delta.str() + " leaves the window");
  }
  if (grid.empty()) throw Error(ErrorKind::invalid_config, "scan grid is empty");
  return grid;
}

ScanRecord scan_one(const DeltaFamily& fam, const Scalar& delta, std::size_t depth, std::size_t word_depth) {
  ScanRecord r;
  r.delta = delta;
  const PiecewiseAffineMap g = rotate_compose(fam, delta);
  const GapSet gap = g.gap_set();
  Certificate cert = certify(g, gap, depth);
  r.pass = cert.pass;
  r.certified_depth = cert.certified_depth;
  r.witness = cert.witness;
  r.complexity_verified = cert.complexity_verified;

  r.census_k = (word_depth + 1) / 5;
  if (r.census_k > 0) {
    Coding c = natural_coding(g, gap.components.front().midpoint(), word_depth);
    r.coding_p = factor_count(c.word, r.census_k);
  }

  auto words = gap_words(fam, delta, word_depth);
  Reconstruction rec = reconstruct_delta(fam, words, word_depth, cert.certified_depth);
  r.reconstruction_error = abs(rec.value - delta);
  if (r.census_k > 0) {
    SumWord s = sum_words(words, fam.b);
    r.entropy_tail = entropy_profile(s.letters, fam.b, r.census_k).values.back();
  }
  for (auto& w : words) r.words.push_back(std::move(w.bits));
  return r;
}

std::vector<BoxCount> box_counts(const std::vector<Scalar>& points, int first_exponent, int last_exponent) {
  std::vector<BoxCount> out;
  for (int e = first_exponent; e <= last_exponent; ++e) {
    const Scalar scale = pow(Scalar(2), static_cast<unsigned>(e));
    std::set<mpz_class> boxes;
    for (const auto& x : points) boxes.insert((x * scale).floor_integer());
    BoxCount bc{e, boxes.size(), std::nullopt};
    if (!boxes.empty()) bc.slope = std::log(static_cast<double>(boxes.size())) / (e * std::log(2.0));
    out.push_back(bc);
  }
  return out;
}

ScanResult run_scan(const DeltaFamily& fam, const ScanConfig& cfg) {
  const std::vector<Scalar> grid = scan_grid(fam, cfg);
  ScanResult result;
  result.records.resize(grid.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        result.records[i] = scan_one(fam, grid[i], cfg.depth, cfg.word_depth);
        result.records[i].index = i;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(grid.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  ScanSummary& s = result.summary;
  s.grid_points = grid.size();
  s.depth = cfg.depth;
  s.survivors_by_depth.assign(cfg.depth + 1, 0);
  std::vector<Scalar> survivors;
  for (const auto& r : result.records) {
    for (long k = 0; k <= r.certified_depth; ++k) ++s.survivors_by_depth[static_cast<std::size_t>(k)];
    if (r.pass) survivors.push_back(r.delta);
  }
  s.survivors = survivors.size();
  s.box_counts = box_counts(survivors);
  return result;
}

namespace {

std::string format_long_double(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lf", x);
  return buf;
}

}  // namespace

std::string scan_csv(const ScanResult& result, bool survivors_only) {
  std::ostringstream os;
  os << "index,delta,delta_approx,verdict,certified_depth,witness_kind,witness_iterate,complexity_verified,"
        "census_k,coding_p,words,reconstruction_error,entropy_tail\n";
  for (const auto& r : result.records) {
    if (survivors_only && !r.pass) continue;
    char approx[64];
    std::snprintf(approx, sizeof approx, "%.17g", r.delta.to_double());
    os << r.index << ',' << r.delta.str() << ',' << approx << ',' << (r.pass ? "pass" : "fail") << ','
       << r.certified_depth << ',';
    if (r.witness)
      os << to_string(r.witness->kind) << ',' << r.witness->iterate;
    else
      os << ',';
    os << ',' << (r.complexity_verified ? 1 : 0) << ',' << r.census_k << ',' << r.coding_p << ',';
    for (std::size_t j = 0; j < r.words.size(); ++j) os << (j ? ";" : "") << to_string(r.words[j]);
    os << ',' << r.reconstruction_error.str() << ',' << format_long_double(r.entropy_tail) << '\n';
  }
  return os.str();
}

json to_json(const ScanSummary& s) {
  json boxes = json::array();
  for (const auto& b : s.box_counts) {
    boxes.push_back({{"exponent", b.exponent},
                     {"boxes", b.boxes},
                     {"slope", b.slope ? json(*b.slope) : json(nullptr)}});
  }
  return {{"grid_points", s.grid_points},
          {"depth", s.depth},
          {"survivors", s.survivors},
          {"survivor_fraction", s.grid_points ? static_cast<double>(s.survivors) / static_cast<double>(s.grid_points) : 0.0},
          {"survivors_by_depth", s.survivors_by_depth},
          {"box_counts", boxes}};
}

}  // namespace pwc
