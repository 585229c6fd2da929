#include "emdstego/bench.hpp"

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "emdstego/error.hpp"
#include "emdstego/reported.hpp"
#include "emdstego/rng.hpp"

namespace emdstego {

BenchConfig BenchConfig::defaults() {
  BenchConfig c;
  c.schemes = {
      {"emd", {{"n", 2}}},
      {"emd", {{"n", 3}}},
      {"iemd", {}},
      {"pva", {{"t", 2}}},
      {"femd", {{"t", 2}}},
      {"de", {{"k", 1}}},
      {"de", {{"k", 2}}},
      {"mpemd", {{"n", 2}, {"key", 0}}},
      {"emd2", {{"n", 2}}},
      {"twoemd", {{"n", 2}}},
      {"gemd", {{"n", 2}}},
      {"gemd", {{"n", 3}}},
      {"egemd", {{"n", 4}}},
      {"mbe", {{"n", 2}, {"k", 1}}},
      {"mbe", {{"n", 3}, {"k", 1}}},
      {"msd", {{"n", 3}}},
      {"hemd", {{"n", 3}, {"w", 3}}},
      {"aemd", {{"n", 2}, {"m", 4}}},
  };
  return c;
}

BenchConfig BenchConfig::from_json(const std::string& text) {
  BenchConfig c = defaults();
  const auto j = nlohmann::json::parse(text);
  if (j.contains("schemes")) {
    c.schemes.clear();
    for (const auto& s : j.at("schemes")) {
      SchemeConfig sc;
      sc.name = s.at("name").get<std::string>();
      if (s.contains("params")) {
        for (const auto& [k, v] : s.at("params").items()) sc.params[k] = v.get<int>();
      }
      c.schemes.push_back(std::move(sc));
    }
  }
  if (j.contains("cover_paths")) c.cover_paths = j.at("cover_paths").get<std::vector<std::string>>();
  if (j.contains("synthetic")) c.synthetic = j.at("synthetic").get<std::string>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("cover_seed")) c.cover_seed = j.at("cover_seed").get<std::uint64_t>();
  if (j.contains("fill")) c.fill = j.at("fill").get<double>();
  if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
  if (j.contains("standard_normalization")) {
    c.standard_normalization = parse_normalization(j.at("standard_normalization").get<std::string>());
  }
  if (j.contains("proposed_normalization")) {
    c.proposed_normalization = parse_normalization(j.at("proposed_normalization").get<std::string>());
  }
  if (j.contains("distance_mode")) c.distance_mode = parse_distance_mode(j.at("distance_mode").get<std::string>());
  if (j.contains("distance_coords")) {
    const auto coords = j.at("distance_coords").get<std::string>();
    if (coords != "inv-alpha" && coords != "alpha") {
      throw Error(Errc::InvalidParameter, "distance_coords must be inv-alpha or alpha");
    }
    c.distance_on_inverse_payload = coords == "inv-alpha";
  }
  if (j.contains("max_n")) c.frontier_n.hi = j.at("max_n").get<int>();
  if (j.contains("max_z")) c.frontier_z.hi = j.at("max_z").get<int>();
  c.validate();
  return c;
}

void BenchConfig::validate() const {
  if (schemes.empty()) throw Error(Errc::InvalidParameter, "bench needs at least one scheme");
  if (!(fill > 0.0 && fill <= 1.0)) throw Error(Errc::InvalidParameter, "fill must be in (0, 1]");
  if (frontier_n.lo < 1 || frontier_n.hi < frontier_n.lo || frontier_z.lo < 1 || frontier_z.hi < frontier_z.lo) {
    throw Error(Errc::EmptyRange, "frontier ranges must be non-empty");
  }
}

GrayImage synthetic_cover(const std::string& text, std::uint64_t seed) {
  static const std::regex pattern(R"((\d+)x(\d+):(random|\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw Error(Errc::InvalidParameter, "synthetic cover must look like WxH:V or WxH:random");
  }
  const int w = std::stoi(m[1]);
  const int h = std::stoi(m[2]);
  if (w <= 0 || h <= 0 || w > 16384 || h > 16384) throw Error(Errc::InvalidParameter, "bad synthetic size");
  if (m[3] == "random") return seeded_interior_image(w, h, seed);
  const int v = std::stoi(m[3]);
  if (v > 255) throw Error(Errc::InvalidParameter, "flat value must be <= 255");
  return GrayImage::filled(w, h, static_cast<std::uint8_t>(v));
}

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

const SchemeRun* find_run(const std::vector<SchemeRun>& runs, std::string_view id, std::string_view params) {
  for (const auto& r : runs) {
    if (r.spec.id == id && r.report.params == params) return &r;
  }
  return nullptr;
}

const SchemeRun* find_first_run(const std::vector<SchemeRun>& runs, std::string_view id) {
  for (const auto& r : runs) {
    if (r.spec.id == id) return &r;
  }
  return nullptr;
}

const ReportedRow* find_reported(SourceTable table, std::string_view id) {
  for (const auto& r : reported_rows()) {
    if (r.table == table && r.scheme_id == id) return &r;
  }
  return nullptr;
}

std::optional<double> diff(const std::optional<double>& reported, const std::optional<double>& computed) {
  if (!reported || !computed) return std::nullopt;
  return *reported - *computed;
}

std::string table_header() { return metrics_csv_header() + ",source,delta_computed,delta_rederived\n"; }

std::string computed_line(const SchemeRun& run) { return to_csv_row(run.report) + ",bench,,\n"; }

std::string reported_line(const ReportedRow& row, std::optional<double> psnr_value, std::optional<double> d_comp,
                          std::optional<double> d_rederived) {
  MetricsReport r;
  r.scheme_id = std::string(row.scheme_id);
  r.params = std::string(row.params);
  r.alpha = row.alpha;
  r.psnr_db = psnr_value;
  r.efficiency_standard = row.eff_standard;
  r.efficiency_proposed = row.eff_proposed;
  r.distance_from_bound = row.distance;
  r.provenance = Provenance::Reported;
  return to_csv_row(r) + "," + std::string(source_table_name(row.table)) + "," + opt(d_comp) + "," +
         opt(d_rederived) + "\n";
}

double curve_distance(const BenchConfig& config, double alpha, double eff) {
  const double x = config.distance_on_inverse_payload ? 1.0 / alpha : alpha;
  return distance_to_curve(kReferenceBoundCurve, {x, eff}, config.distance_mode, 0.0, 3.0);
}

std::string params_of(const BoundQuery& q) {
  return "n=" + std::to_string(q.n) + ";z=" + std::to_string(q.z) + ";q=" + std::to_string(q.q);
}

std::string figure(const BenchConfig& config, const std::vector<BoundPoint>& envelope,
                   const std::vector<SchemeRun>& runs, BoundMetric metric) {
  std::ostringstream os;
  os << "series,scheme,params,inv_alpha,efficiency,normalization,provenance\n";
  const Normalization norm =
      metric == BoundMetric::Standard ? config.standard_normalization : config.proposed_normalization;
  for (const auto& p : envelope) {
    os << "bound,bound," << params_of(p.query) << ',' << format_number(p.inv_alpha) << ','
       << format_number(p.efficiency()) << ',' << normalization_name(norm) << ",computed\n";
  }
  for (const auto& run : runs) {
    const double alpha = relative_payload(run.spec, PayloadMode::Exact);
    const double eff = metric == BoundMetric::Standard ? *run.report.efficiency_standard
                                                       : run.theoretical_eff_proposed;
    os << "computed," << run.spec.id << ',' << run.report.params << ',' << format_number(1.0 / alpha) << ','
       << format_number(eff) << ",scheme,computed\n";
  }
  const SourceTable source = metric == BoundMetric::Standard ? SourceTable::Standard : SourceTable::Proposed;
  for (const auto& row : reported_rows()) {
    if (row.table != source) continue;
    const auto eff = metric == BoundMetric::Standard ? row.eff_standard : row.eff_proposed;
    os << "reported," << row.scheme_id << ',' << row.params << ',' << format_number(1.0 / *row.alpha) << ','
       << format_number(*eff) << ",scheme,reported\n";
  }
  return os.str();
}

}  // namespace

BenchResult run_bench(const BenchConfig& config) {
  config.validate();
  std::vector<GrayImage> covers;
  if (config.cover_paths.empty()) {
    covers.push_back(synthetic_cover(config.synthetic, config.cover_seed));
  } else {
    for (const auto& p : config.cover_paths) covers.push_back(read_pgm_file(p));
  }

  BenchResult result;
  for (std::size_t idx = 0; idx < config.schemes.size(); ++idx) {
    const auto& sc = config.schemes[idx];
    SchemeRun run;
    run.spec = make_scheme(sc.name, sc.params);
    double sq_total = 0.0;
    double pixel_total = 0.0;
    for (std::size_t c = 0; c < covers.size(); ++c) {
      const auto& cover = covers[c];
      const auto cap = static_cast<std::size_t>(capacity(cover, run.spec, PayloadMode::Operational));
      const auto bits = static_cast<std::size_t>(std::floor(config.fill * static_cast<double>(cap)));
      const BitStream msg = seeded_bits(config.seed + 0x1000 * idx + c, bits);
      const EmbedResult emb = embed_message(cover, run.spec, msg);
      if (extract_message(emb.stego, run.spec, bits) != msg) {
        throw std::runtime_error("round trip failed for " + sc.name + " " + run.spec.param_string());
      }
      sq_total += mse(cover, emb.stego) * static_cast<double>(cover.pixels.size());
      pixel_total += static_cast<double>(cover.pixels.size());
      run.message_bits += bits;
    }
    MetricsReport& r = run.report;
    r.scheme_id = run.spec.id;
    r.params = run.spec.param_string();
    r.alpha = relative_payload(run.spec, PayloadMode::Exact);
    r.mse = sq_total / pixel_total;
    r.psnr_db = psnr(*r.mse);
    r.efficiency_standard = standard_efficiency(run.spec.payload_bits_exact(), max_change_units(run.spec));
    if (*r.mse > 0.0) {
      r.efficiency_proposed = proposed_efficiency(*r.alpha, *r.mse);
      r.distance_from_bound = curve_distance(config, *r.alpha, *r.efficiency_proposed);
    }
    run.theory = theoretical_distortion(run.spec);
    run.theoretical_eff_proposed = proposed_efficiency(*r.alpha, run.theory.expected_sq_per_pixel);
    result.runs.push_back(std::move(run));
  }

  result.standard_frontier =
      frontier(config.frontier_n, config.frontier_z, BoundMetric::Standard, config.standard_normalization);
  result.proposed_frontier =
      frontier(config.frontier_n, config.frontier_z, BoundMetric::Proposed, config.proposed_normalization);

  std::vector<Sample> samples;
  for (const auto& p : result.proposed_frontier) samples.push_back({p.inv_alpha, p.efficiency()});
  try {
    result.frontier_fit = cubic_fit(samples);
  } catch (const Error& e) {
    if (e.code() != Errc::RankDeficient) throw;
  }

  const auto& runs = result.runs;

  std::string t2 = table_header();
  for (const auto& run : runs) t2 += computed_line(run);
  for (const auto& row : reported_rows()) {
    if (row.table != SourceTable::Parameters) continue;
    const SchemeRun* match = find_first_run(runs, row.scheme_id);
    for (double v : row.psnr_values) {
      t2 += reported_line(row, v, match ? diff(v, match->report.psnr_db) : std::nullopt, std::nullopt);
    }
  }

  std::string t3 = table_header();
  for (const auto& run : runs) t3 += computed_line(run);
  for (const auto& row : reported_rows()) {
    if (row.table != SourceTable::Standard) continue;
    const SchemeRun* match = find_run(runs, row.scheme_id, row.params);
    t3 += reported_line(row, std::nullopt, match ? diff(row.eff_standard, match->report.efficiency_standard)
                                                 : std::nullopt,
                        std::nullopt);
  }

  std::string t4 = table_header();
  for (const auto& run : runs) t4 += computed_line(run);
  for (const auto& row : reported_rows()) {
    if (row.table != SourceTable::Proposed) continue;
    const SchemeRun* match = find_run(runs, row.scheme_id, row.params);
    std::optional<double> rederived;
    if (const ReportedRow* p = find_reported(SourceTable::Parameters, row.scheme_id); p && !p->psnr_values.empty()) {
      rederived = *row.eff_proposed - proposed_efficiency(*row.alpha, mse_from_psnr(p->psnr_values.front()));
    }
    t4 += reported_line(row, std::nullopt,
                        match ? diff(row.eff_proposed, match->report.efficiency_proposed) : std::nullopt, rederived);
  }

  std::string t5 = table_header();
  for (const auto& run : runs) t5 += computed_line(run);
  for (const auto& row : reported_rows()) {
    if (row.table != SourceTable::Distance) continue;
    const SchemeRun* match = find_run(runs, row.scheme_id, row.params);
    std::optional<double> rederived;
    if (const ReportedRow* p = find_reported(SourceTable::Proposed, row.scheme_id)) {
      rederived = *row.distance - curve_distance(config, *p->alpha, *p->eff_proposed);
    }
    t5 += reported_line(row, std::nullopt,
                        match ? diff(row.distance, match->report.distance_from_bound) : std::nullopt, rederived);
  }

  result.files["table2.csv"] = std::move(t2);
  result.files["table3.csv"] = std::move(t3);
  result.files["table4.csv"] = std::move(t4);
  result.files["table5.csv"] = std::move(t5);
  result.files["fig2.csv"] = figure(config, result.standard_frontier, runs, BoundMetric::Standard);
  result.files["fig3.csv"] = figure(config, result.proposed_frontier, runs, BoundMetric::Proposed);

  nlohmann::ordered_json fit;
  fit["normalization"] = std::string(normalization_name(config.proposed_normalization));
  fit["points"] = samples.size();
  if (result.frontier_fit) {
    fit["refit"] = nlohmann::ordered_json::parse(to_json(*result.frontier_fit));
  } else {
    fit["refit"] = nullptr;
  }
  fit["reference"] = {{"c3", kReferenceBoundCurve.c3},
                      {"c2", kReferenceBoundCurve.c2},
                      {"c1", kReferenceBoundCurve.c1},
                      {"c0", kReferenceBoundCurve.c0}};
  result.files["bound_fit.json"] = fit.dump(2) + "\n";
  return result;
}

void write_bench(const BenchResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, contents] : result.files) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << contents;
  }
}

}  // namespace emdstego
