#include "emdstego/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "emdstego/bench.hpp"
#include "emdstego/bound.hpp"
#include "emdstego/cubic.hpp"
#include "emdstego/error.hpp"
#include "emdstego/metrics.hpp"
#include "emdstego/rng.hpp"
#include "emdstego/scheme.hpp"

namespace emdstego::cli {

namespace {

/// Raised for failures that are the user's fault (bad flags, bad config).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised for unreadable or malformed input files.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::MalformedHeader:
    case Errc::UnsupportedMaxval:
    case Errc::TruncatedPayload:
    case Errc::DimensionMismatch:
    case Errc::SymbolOutOfRange:
    case Errc::GroupSizeMismatch:
    case Errc::NegativeMSE:
    case Errc::ZeroMSE:
      return kData;
    default:
      return kUsage;
  }
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_text(const std::string& path) {
  const auto b = read_bytes(path);
  return {b.begin(), b.end()};
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("short write to " + path);
}

void write_text(const std::string& path, const std::string& text) {
  write_bytes(path, std::vector<std::uint8_t>(text.begin(), text.end()));
}

GrayImage load_image(const std::string& path) {
  try {
    return read_pgm_file(path);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw DataError(e.what());
  }
}

struct SchemeOptions {
  std::string name;
  std::map<std::string, int> values;

  void attach(CLI::App* app) {
    app->add_option("--scheme", name, "scheme token (emd, iemd, pva, ...)")->required();
    for (const char* key : {"n", "t", "k", "w", "m", "key", "n1", "wbase"}) {
      app->add_option_function<int>(std::string("--") + key, [this, key](int v) { values[key] = v; },
                                    std::string("scheme parameter ") + key);
    }
  }

  SchemeSpec build() const { return make_scheme(name, values); }
};

nlohmann::ordered_json params_json(const SchemeSpec& spec) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : spec.params) j[k] = v;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"EMD-family steganography workbench"};
  app.require_subcommand(1);

  // embed
  auto* embed = app.add_subcommand("embed", "hide a message in a PGM cover");
  SchemeOptions embed_scheme;
  embed_scheme.attach(embed);
  std::string cover_path, synthetic, message_path, message_out, stego_out, sidecar_path;
  std::optional<std::size_t> random_bits;
  std::uint64_t seed = 0, cover_seed = 7;
  auto* cover_opt = embed->add_option("--cover", cover_path, "cover PGM");
  auto* synth_opt = embed->add_option("--synthetic", synthetic, "synthetic cover WxH:V or WxH:random");
  cover_opt->excludes(synth_opt);
  embed->add_option("--cover-seed", cover_seed, "seed for WxH:random covers");
  auto* msg_opt = embed->add_option("--message", message_path, "message file (all bits of every byte)");
  auto* rnd_opt = embed->add_option("--random-bits", random_bits, "embed N seeded random bits");
  msg_opt->excludes(rnd_opt);
  embed->add_option("--seed", seed, "seed for --random-bits");
  embed->add_option("--message-out", message_out, "write the embedded message as packed bytes");
  embed->add_option("--out", stego_out, "stego PGM")->required();
  embed->add_option("--sidecar", sidecar_path, "sidecar JSON (default: <out>.json)");

  // extract
  auto* extract = app.add_subcommand("extract", "read a message back from a stego PGM");
  SchemeOptions extract_scheme;
  extract_scheme.attach(extract);
  std::string stego_path, extract_out;
  std::size_t extract_bits = 0;
  extract->add_option("--stego", stego_path, "stego PGM")->required();
  extract->add_option("--bits", extract_bits, "message length in bits")->required();
  extract->add_option("--out", extract_out, "packed message output")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "compare a cover and a stego image");
  SchemeOptions analyze_scheme;
  analyze_scheme.attach(analyze);
  std::string an_cover, an_stego, an_poly, an_mode = "euclidean", an_coords = "inv-alpha";
  bool an_reference = false;
  analyze->add_option("--cover", an_cover, "cover PGM")->required();
  analyze->add_option("--stego", an_stego, "stego PGM")->required();
  analyze->add_option("--bound-poly", an_poly, "cubic bound curve JSON {c3,c2,c1,c0}");
  analyze->add_flag("--reference-curve,--eq43", an_reference, "use the reference bound curve");
  analyze->add_option("--mode", an_mode, "euclidean | vertical");
  analyze->add_option("--coords", an_coords, "inv-alpha | alpha");

  // bound
  auto* bound = app.add_subcommand("bound", "bound tables and frontiers");
  int max_n = 0, max_z = 0;
  std::string metric = "proposed", normalization, bound_out;
  bool want_frontier = false;
  bound->add_option("--max-n", max_n)->required();
  bound->add_option("--max-z", max_z)->required();
  bound->add_option("--metric", metric, "standard | proposed");
  bound->add_option("--normalization", normalization, "literal | mean | mean-per-pixel");
  bound->add_flag("--frontier", want_frontier, "emit only the upper envelope");
  bound->add_option("--out", bound_out, "CSV output (default: stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "reproduce the comparison tables and chart data");
  std::string bench_config, bench_out, bench_synth, bench_mode, bench_coords;
  std::vector<std::string> bench_covers;
  std::optional<std::uint64_t> bench_seed;
  std::optional<double> bench_fill;
  std::optional<int> bench_max_n, bench_max_z;
  bench->add_option("--config", bench_config, "JSON config");
  bench->add_option("--out", bench_out, "output directory");
  bench->add_option("--seed", bench_seed, "message seed");
  bench->add_option("--fill", bench_fill, "fraction of capacity in (0, 1]");
  bench->add_option("--synthetic", bench_synth, "synthetic cover WxH:V or WxH:random");
  bench->add_option("--cover", bench_covers, "cover PGM (repeatable)");
  bench->add_option("--max-n", bench_max_n);
  bench->add_option("--max-z", bench_max_z);
  bench->add_option("--distance-mode", bench_mode, "euclidean | vertical");
  bench->add_option("--distance-coords", bench_coords, "inv-alpha | alpha");

  // fit
  auto* fit = app.add_subcommand("fit", "least-squares cubic through x,y points");
  std::string fit_points;
  fit->add_option("--points", fit_points, "CSV with x,y columns")->required();

  // distance
  auto* distance = app.add_subcommand("distance", "distance of a point from a cubic curve");
  std::string dist_poly, dist_mode = "euclidean";
  bool dist_reference = false;
  double dist_x = 0, dist_y = 0, dist_lo = 0.0, dist_hi = 3.0;
  auto* poly_opt = distance->add_option("--poly", dist_poly, "curve JSON {c3,c2,c1,c0}");
  auto* reference_opt = distance->add_flag("--reference-curve,--eq43", dist_reference, "use the reference bound curve");
  poly_opt->excludes(reference_opt);
  distance->add_option("--x", dist_x)->required();
  distance->add_option("--y", dist_y)->required();
  distance->add_option("--mode", dist_mode, "euclidean | vertical");
  distance->add_option("--lo", dist_lo);
  distance->add_option("--hi", dist_hi);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (embed->parsed()) {
      const SchemeSpec spec = embed_scheme.build();
      GrayImage cover;
      if (!cover_path.empty()) {
        cover = load_image(cover_path);
      } else if (!synthetic.empty()) {
        cover = synthetic_cover(synthetic, cover_seed);
      } else {
        throw UsageError("one of --cover or --synthetic is required");
      }
      BitStream msg;
      nlohmann::ordered_json seed_json = nullptr;
      if (!message_path.empty()) {
        const auto bytes = read_bytes(message_path);
        msg = unpack_bits(bytes, bytes.size() * 8);
      } else if (random_bits) {
        msg = seeded_bits(seed, *random_bits);
        seed_json = seed;
      } else {
        throw UsageError("one of --message or --random-bits is required");
      }
      const EmbedResult res = embed_message(cover, spec, msg);
      write_pgm_file(stego_out, res.stego);
      if (!message_out.empty()) write_bytes(message_out, pack_bits(msg));
      nlohmann::ordered_json side;
      side["scheme"] = spec.id;
      side["params"] = params_json(spec);
      side["bit_length"] = msg.bit_length();
      side["seed"] = seed_json;
      write_text(sidecar_path.empty() ? stego_out + ".json" : sidecar_path, side.dump(2) + "\n");
      out << "embedded " << msg.bit_length() << " bits in " << res.used_groups << " groups\n";
    } else if (extract->parsed()) {
      const SchemeSpec spec = extract_scheme.build();
      const GrayImage stego = load_image(stego_path);
      const BitStream bits = extract_message(stego, spec, extract_bits);
      write_bytes(extract_out, pack_bits(bits));
    } else if (analyze->parsed()) {
      const SchemeSpec spec = analyze_scheme.build();
      const GrayImage cover = load_image(an_cover);
      const GrayImage stego = load_image(an_stego);
      MetricsReport report = analyze_pair(cover, stego, spec);
      std::optional<CubicPoly> poly;
      if (an_reference) poly = kReferenceBoundCurve;
      if (!an_poly.empty()) poly = poly_from_json(read_text(an_poly));
      if (an_coords != "inv-alpha" && an_coords != "alpha") throw UsageError("--coords must be inv-alpha or alpha");
      if (poly && report.efficiency_proposed) {
        const double x = an_coords == "alpha" ? *report.alpha : 1.0 / *report.alpha;
        report.distance_from_bound =
            distance_to_curve(*poly, {x, *report.efficiency_proposed}, parse_distance_mode(an_mode));
      }
      out << to_json(report) << "\n";
    } else if (bound->parsed()) {
      if (max_n < 1 || max_z < 1) throw Error(Errc::EmptyRange, "--max-n and --max-z must be >= 1");
      const BoundMetric m = parse_metric(metric);
      const Normalization norm = normalization.empty()
                                     ? (m == BoundMetric::Standard ? Normalization::Mean : Normalization::MeanPerPixel)
                                     : parse_normalization(normalization);
      std::ostringstream csv;
      csv << bound_csv_header() << "\n";
      BoundRecurrences rec;
      if (want_frontier) {
        for (const auto& p : frontier({1, max_n}, {1, max_z}, m, norm)) {
          csv << to_csv_row(p, rec.evaluate(p.query)) << "\n";
        }
      } else {
        for (int n = 1; n <= max_n; ++n) {
          for (int z = 1; z <= max_z; ++z) {
            for (int q = 0; q <= n; ++q) {
              const BoundQuery qy{n, z, q};
              const BoundResult counts = rec.evaluate(qy);
              if (counts.state_count < 2) {
                csv << n << ',' << z << ',' << q << ',' << counts.state_count << ',' << counts.change_sum_linear
                    << ',' << counts.change_sum_squared << ",,,," << metric_name(m) << ','
                    << normalization_name(norm) << "\n";
              } else {
                csv << to_csv_row(bound_point(qy, counts, m, norm), counts) << "\n";
              }
            }
          }
        }
      }
      if (bound_out.empty()) {
        out << csv.str();
      } else {
        write_text(bound_out, csv.str());
      }
    } else if (bench->parsed()) {
      BenchConfig config;
      if (!bench_config.empty()) {
        std::string text;
        try {
          text = read_text(bench_config);
        } catch (const DataError& e) {
          throw UsageError(e.what());
        }
        try {
          config = BenchConfig::from_json(text);
        } catch (const nlohmann::json::exception& e) {
          throw UsageError(std::string("bad config: ") + e.what());
        }
      } else {
        config = BenchConfig::defaults();
      }
      if (!bench_out.empty()) config.output_dir = bench_out;
      if (bench_seed) config.seed = *bench_seed;
      if (bench_fill) config.fill = *bench_fill;
      if (!bench_synth.empty()) config.synthetic = bench_synth;
      if (!bench_covers.empty()) config.cover_paths = bench_covers;
      if (bench_max_n) config.frontier_n.hi = *bench_max_n;
      if (bench_max_z) config.frontier_z.hi = *bench_max_z;
      if (!bench_mode.empty()) config.distance_mode = parse_distance_mode(bench_mode);
      if (!bench_coords.empty()) {
        if (bench_coords != "inv-alpha" && bench_coords != "alpha") {
          throw UsageError("--distance-coords must be inv-alpha or alpha");
        }
        config.distance_on_inverse_payload = bench_coords == "inv-alpha";
      }
      config.validate();
      for (const auto& path : config.cover_paths) load_image(path);
      const BenchResult result = run_bench(config);
      write_bench(result, config.output_dir);
      out << "wrote " << result.files.size() << " files to " << config.output_dir << "\n";
    } else if (fit->parsed()) {
      std::istringstream in(read_text(fit_points));
      std::vector<Sample> samples;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        Sample s;
        if (!(ls >> s.x >> s.y)) continue;  // header or comment
        samples.push_back(s);
      }
      out << to_json(cubic_fit(samples)) << "\n";
    } else if (distance->parsed()) {
      CubicPoly poly = kReferenceBoundCurve;
      if (!dist_poly.empty()) {
        poly = poly_from_json(read_text(dist_poly));
      } else if (!dist_reference) {
        throw UsageError("one of --poly or --reference-curve is required");
      }
      out << format_number(distance_to_curve(poly, {dist_x, dist_y}, parse_distance_mode(dist_mode), dist_lo, dist_hi))
          << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == Errc::UnknownScheme) {
      err << "known schemes:";
      for (const auto& name : scheme_names()) err << ' ' << name;
      err << "\n";
    }
    return exit_code_for(e.code());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  }
  return kOk;
}

}  // namespace emdstego::cli
