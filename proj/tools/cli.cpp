#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "pwc/plot.hpp"
#include "pwc/scan.hpp"

namespace pwc::cli {

namespace {

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto log = std::make_shared<spdlog::logger>("pwc", sink);
  log->set_pattern("[%l] %v");
  const char* level = std::getenv("PWC_LOG");
  log->set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
  return log;
}

struct Loaded {
  MapSpec spec;
  std::optional<DeltaFamily> family;
  std::optional<Scalar> delta;
  PiecewiseAffineMap map;  // f_delta when delta is given, else f
};

Loaded load(const std::string& map_file, const std::optional<std::string>& delta_text, bool need_family) {
  MapSpec spec = parse_map_spec(read_json_file(map_file));
  std::optional<DeltaFamily> family;
  std::optional<Scalar> delta;
  if (delta_text) delta = parse_scalar(json(*delta_text), spec.radicand);
  if (delta || need_family) family = validate_family(spec.map, spec.b);
  PiecewiseAffineMap g = delta ? rotate_compose(*family, *delta) : spec.map;
  return {std::move(spec), std::move(family), std::move(delta), std::move(g)};
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_text_file(out_path, text);
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto log = make_logger(err);
  CLI::App app{"Exact piecewise contraction toolkit", "pwc"};
  app.require_subcommand(1);

  std::string map_file;
  std::string out_path;
  std::optional<std::string> delta_text;
  std::size_t depth = 20;

  auto common = [&](CLI::App* sub, bool map_required = true) {
    auto* opt = sub->add_option("--map", map_file, "JSON map specification")->check(CLI::ExistingFile);
    if (map_required) opt->required();
    sub->add_option("--out", out_path, "output path (stdout when omitted)");
  };

  auto* certify_cmd = app.add_subcommand("certify", "finite-depth certificate for f or f_delta");
  common(certify_cmd);
  certify_cmd->add_option("--delta", delta_text, "rotation parameter");
  certify_cmd->add_option("--depth", depth, "certification depth K");

  auto* scan_cmd = app.add_subcommand("scan", "certify every delta of a grid");
  common(scan_cmd);
  std::string config_file;
  std::string summary_path;
  std::optional<std::string> lo_text, hi_text, offset_text;
  std::optional<long> denominator;
  std::optional<std::size_t> points;
  std::optional<std::size_t> scan_depth, word_depth;
  std::optional<unsigned> jobs;
  bool survivors_only = false;
  scan_cmd->add_option("--config", config_file, "JSON scan config")->check(CLI::ExistingFile);
  scan_cmd->add_option("--lo", lo_text, "grid interval start");
  scan_cmd->add_option("--hi", hi_text, "grid interval end");
  scan_cmd->add_option("--denominator", denominator, "grid of i / D");
  scan_cmd->add_option("--points", points, "grid of N cell midpoints");
  scan_cmd->add_option("--offset", offset_text, "shift added to every grid point");
  scan_cmd->add_option("--depth", scan_depth, "certification depth K");
  scan_cmd->add_option("--word-depth", word_depth, "gap word depth");
  scan_cmd->add_option("--jobs", jobs, "worker threads");
  scan_cmd->add_option("--summary", summary_path, "summary JSON path (stdout when omitted)");
  scan_cmd->add_flag("--survivors-only", survivors_only, "write passing records only");

  auto* plot_cmd = app.add_subcommand("plot", "SVG graph of f or f_delta");
  common(plot_cmd);
  plot_cmd->add_option("--delta", delta_text, "rotation parameter");

  auto* words_cmd = app.add_subcommand("words", "gap words, reconstruction and entropy");
  common(words_cmd);
  words_cmd->add_option("--delta", delta_text, "rotation parameter")->required();
  words_cmd->add_option("--depth", depth, "word depth K");
  std::optional<std::size_t> k_max;
  words_cmd->add_option("--k-max", k_max, "census depth (default (K + 1) / 5)");

  auto* semi_cmd = app.add_subcommand("semiconj", "numerical semiconjugacy to an interval exchange");
  common(semi_cmd);
  semi_cmd->add_option("--delta", delta_text, "rotation parameter")->required();
  SemiconjugacyOptions semi;
  semi_cmd->add_option("--samples", semi.samples, "orbit samples N");
  semi_cmd->add_option("--k-iter", semi.k_iter, "burn-in and required certificate depth");
  semi_cmd->add_option("--grid", semi.grid, "h grid resolution");
  std::string report_path;
  semi_cmd->add_option("--report", report_path, "report JSON path (stdout when omitted)");

  auto* iet_cmd = app.add_subcommand("iet-check", "i.d.o.c. and complexity of an interval exchange");
  std::string iet_file;
  iet_cmd->add_option("--iet", iet_file, "JSON exchange specification")->required()->check(CLI::ExistingFile);
  iet_cmd->add_option("--depth", depth, "orbit depth K");
  iet_cmd->add_option("--out", out_path, "output path (stdout when omitted)");
  std::optional<std::string> x_text;
  iet_cmd->add_option("--x", x_text, "coding start point (default: first discontinuity)");
  iet_cmd->add_option("--k-max", k_max, "complexity depth (default: depth)");

  // Accepted everywhere for uniformity; only scan runs in parallel.
  for (auto* sub : {certify_cmd, plot_cmd, words_cmd, semi_cmd}) sub->add_option("--jobs", jobs, "worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    if (certify_cmd->parsed()) {
      Loaded m = load(map_file, delta_text, false);
      Certificate cert = certify(m.map, depth);
      json j = to_json(cert);
      if (m.delta) j["delta"] = m.delta->str();
      j["map"] = to_json(m.map);
      emit(j.dump(2) + "\n", out_path, out);
      log->info("certificate {} at depth {}", cert.pass ? "passes" : "fails", depth);
      return cert.pass ? kPass : kFail;
    }

    if (scan_cmd->parsed()) {
      Loaded m = load(map_file, std::nullopt, true);
      const json config = config_file.empty() ? json::object() : read_json_file(config_file);
      ScanConfig cfg = parse_scan_config(config, m.spec.radicand);
      if (!config.contains("jobs")) cfg.jobs = default_jobs();
      auto scalar = [&](const std::optional<std::string>& t) { return parse_scalar(json(*t), m.spec.radicand); };
      if (lo_text) cfg.lo = scalar(lo_text);
      if (hi_text) cfg.hi = scalar(hi_text);
      if (offset_text) cfg.offset = scalar(offset_text);
      if (denominator) {
        cfg.denominator = denominator;
        cfg.points.reset();
      }
      if (points) {
        cfg.points = points;
        cfg.denominator.reset();
      }
      if (scan_depth) cfg.depth = *scan_depth;
      if (word_depth) cfg.word_depth = *word_depth;
      if (jobs) cfg.jobs = *jobs;
      if (survivors_only) cfg.survivors_only = true;
      log->info("scanning with {} worker(s)", cfg.jobs);
      ScanResult result = run_scan(*m.family, cfg);
      emit(scan_csv(result, cfg.survivors_only), out_path, out);
      const std::string summary = to_json(result.summary).dump(2) + "\n";
      if (summary_path.empty())
        out << summary;
      else
        write_text_file(summary_path, summary);
      log->info("{} of {} grid points survive depth {}", result.summary.survivors, result.summary.grid_points,
                cfg.depth);
      return kPass;
    }

    if (plot_cmd->parsed()) {
      Loaded m = load(map_file, delta_text, false);
      std::string caption = m.delta ? "delta = " + m.delta->str() : std::string();
      emit(plot_svg(m.map, caption), out_path, out);
      return kPass;
    }

    if (words_cmd->parsed()) {
      Loaded m = load(map_file, delta_text, true);
      const DeltaFamily& fam = *m.family;
      Certificate cert = certify(m.map, depth);
      auto words = gap_words(fam, *m.delta, depth);
      Reconstruction rec = reconstruct_delta(fam, words, depth, cert.certified_depth);
      SumWord sum = sum_words(words, fam.b);
      const std::size_t census = k_max.value_or((depth + 1) / 5);
      json j{{"delta", m.delta->str()}, {"depth", depth}, {"certificate", to_json(cert)}};
      json list = json::array();
      for (const auto& w : words) list.push_back(to_json(w));
      j["words"] = list;
      j["sum_word"] = to_string(sum.letters);
      j["reconstruction"] = to_json(rec, *m.delta);
      j["overshoot"] = fam.base.offsets().front() + *m.delta < rec.partial_sum;
      if (census > 0) {
        j["entropy"] = to_json(entropy_profile(sum.letters, fam.b, census));
        j["bounds"] = to_json(complexity_bounds_check(words, fam.n(), fam.b, census, cert.certified_depth));
      }
      if (!rec.guaranteed) log->warn("reconstruction is not guaranteed: certificate reaches depth {} < {}",
                                     cert.certified_depth, depth);
      emit(j.dump(2) + "\n", out_path, out);
      return kPass;
    }

    if (semi_cmd->parsed()) {
      Loaded m = load(map_file, delta_text, true);
      Semiconjugacy s;
      try {
        s = estimate_semiconjugacy(m.map, semi);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::refused_uncertified) throw;
        Certificate cert = certify(m.map, semi.k_iter);
        json j{{"refused", e.what()}, {"certificate", to_json(cert)}};
        err << "refused: " << e.what() << '\n';
        if (report_path.empty())
          out << j.dump(2) << '\n';
        else
          write_text_file(report_path, j.dump(2) + "\n");
        return kFail;
      }
      emit(h_grid_csv(s), out_path, out);
      json j = to_json(s);
      j["delta"] = m.delta->str();
      if (report_path.empty())
        out << j.dump(2) << '\n';
      else
        write_text_file(report_path, j.dump(2) + "\n");
      return s.ok() ? kPass : kFail;
    }

    if (iet_cmd->parsed()) {
      json spec = read_json_file(iet_file);
      IntervalExchange T = parse_iet_spec(spec);
      std::optional<long> radicand;
      if (spec.contains("radicand")) radicand = spec.at("radicand").get<long>();
      IdocReport report = idoc_certify(T, depth);
      Scalar x = x_text ? parse_scalar(json(*x_text), radicand)
                        : (T.size() > 1 ? T.discontinuities().front() : Scalar(0));
      const std::size_t km = k_max.value_or(depth);
      json j = to_json(report);
      j["iet"] = to_json(T);
      if (km > 0) {
        ComplexityProfile p = iet_coding_complexity(T, x, km);
        j["complexity"] = {{"x", x.str()}, {"values", p.values}};
        bool maximal = true;
        for (std::size_t k = 1; k <= km; ++k) maximal = maximal && p(k) == (T.size() - 1) * k + 1;
        j["complexity"]["maximal"] = maximal;
      }
      emit(j.dump(2) + "\n", out_path, out);
      return report.pass() ? kPass : kFail;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const json::exception& e) {
    err << "error: parse: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace pwc::cli
