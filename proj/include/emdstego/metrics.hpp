#pragma once

#include <optional>
#include <string>

#include "emdstego/image.hpp"
#include "emdstego/scheme.hpp"

namespace emdstego {

enum class PayloadMode { Exact, Operational };
enum class Provenance { Computed, Reported };

std::string_view provenance_name(Provenance p) noexcept;

/// One row of a comparison table. Reported rows leave the fields the
/// source table does not give as nullopt.
struct MetricsReport {
  std::string scheme_id;
  std::string params;  // canonical "k=v;..." text
  std::optional<double> alpha;
  std::optional<double> mse;
  std::optional<double> psnr_db;
  std::optional<double> efficiency_standard;
  std::optional<double> efficiency_proposed;
  std::optional<double> distance_from_bound;
  Provenance provenance = Provenance::Computed;
};

struct DistortionProfile {
  double expected_abs_per_pixel = 0.0;
  double expected_sq_per_pixel = 0.0;  // theoretical MSE
  int max_group_change = 0;            // largest sum |delta| over all symbols
};

double mse(const GrayImage& cover, const GrayImage& stego);

/// +infinity when mse_value == 0.
double psnr(double mse_value);
double mse_from_psnr(double psnr_db);

double relative_payload(const SchemeSpec& spec, PayloadMode mode);

/// rho: the worst-case number of change units per group, z * k, further
/// capped by the L1 radius when the scheme has one.
int max_change_units(const SchemeSpec& spec);

double standard_efficiency(double payload_bits, double rho);
double proposed_efficiency(double alpha, double mse_value);

/// Embeds every symbol into a flat-128 group and averages the change.
DistortionProfile theoretical_distortion(const SchemeSpec& spec);

double capacity(const GrayImage& img, const SchemeSpec& spec, PayloadMode mode);

MetricsReport analyze_pair(const GrayImage& cover, const GrayImage& stego, const SchemeSpec& spec);

/// Field order is fixed: scheme, params, alpha, mse, psnr_db, eff_standard,
/// eff_proposed, distance, provenance.
std::string metrics_csv_header();
std::string to_csv_row(const MetricsReport& r);
std::string to_json(const MetricsReport& r);

/// Shortest round-trippable decimal; "inf" for +infinity.
std::string format_number(double v);

}  // namespace emdstego
