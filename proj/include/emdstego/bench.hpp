#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "emdstego/bound.hpp"
#include "emdstego/cubic.hpp"
#include "emdstego/metrics.hpp"
#include "emdstego/scheme.hpp"

namespace emdstego {

struct SchemeConfig {
  std::string name;
  ParamMap params;
};

struct BenchConfig {
  std::vector<SchemeConfig> schemes;
  std::vector<std::string> cover_paths;
  // Used when cover_paths is empty: "WxH:V" (flat) or "WxH:random".
  std::string synthetic = "256x256:random";
  std::uint64_t seed = 42;
  std::uint64_t cover_seed = 7;
  double fill = 1.0;
  std::string output_dir = "bench_out";
  Normalization standard_normalization = Normalization::Mean;
  Normalization proposed_normalization = Normalization::MeanPerPixel;
  DistanceMode distance_mode = DistanceMode::Euclidean;
  bool distance_on_inverse_payload = true;
  IntRange frontier_n{1, 8};
  IntRange frontier_z{1, 4};

  /// Every in-scope scheme at the parameter rows of the comparison tables.
  static BenchConfig defaults();
  /// Keys mirror the field names; absent keys keep their defaults.
  static BenchConfig from_json(const std::string& text);
  void validate() const;
};

struct SchemeRun {
  SchemeSpec spec;
  MetricsReport report;      // empirical, from the embedded covers
  DistortionProfile theory;  // exact expectation over uniform symbols
  double theoretical_eff_proposed = 0.0;
  std::size_t message_bits = 0;
};

struct BenchResult {
  std::vector<SchemeRun> runs;
  std::vector<BoundPoint> standard_frontier;
  std::vector<BoundPoint> proposed_frontier;
  std::optional<CubicFit> frontier_fit;
  std::map<std::string, std::string> files;  // output file name -> contents
};

/// "WxH:V" gives a flat image, "WxH:random" a seeded interior-valued one.
GrayImage synthetic_cover(const std::string& text, std::uint64_t seed);

BenchResult run_bench(const BenchConfig& config);
void write_bench(const BenchResult& result, const std::filesystem::path& dir);

}  // namespace emdstego
