#include "emdstego/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include <json.hpp>

#include "emdstego/error.hpp"

namespace emdstego {

std::string_view provenance_name(Provenance p) noexcept {
  return p == Provenance::Computed ? "computed" : "reported";
}

double mse(const GrayImage& cover, const GrayImage& stego) {
  if (cover.width != stego.width || cover.height != stego.height) {
    throw Error(Errc::DimensionMismatch, "cover and stego dimensions differ");
  }
  if (cover.pixels.empty()) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < cover.pixels.size(); ++i) {
    const double d = static_cast<double>(cover.pixels[i]) - static_cast<double>(stego.pixels[i]);
    acc += d * d;
  }
  return acc / static_cast<double>(cover.pixels.size());
}

double psnr(double mse_value) {
  if (mse_value < 0.0) throw Error(Errc::NegativeMSE, "mse must be non-negative");
  if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(65025.0 / mse_value);
}

double mse_from_psnr(double psnr_db) { return 65025.0 / std::pow(10.0, psnr_db / 10.0); }

double relative_payload(const SchemeSpec& spec, PayloadMode mode) {
  const double bits = mode == PayloadMode::Exact ? spec.payload_bits_exact()
                                                 : static_cast<double>(spec.payload_bits_operational());
  return bits / static_cast<double>(spec.n);
}

int max_change_units(const SchemeSpec& spec) {
  int rho = spec.constraint.per_pixel_max * spec.constraint.max_changed_pixels;
  if (spec.constraint.l1_radius) rho = std::min(rho, *spec.constraint.l1_radius);
  return rho;
}

double standard_efficiency(double payload_bits, double rho) {
  if (rho <= 0.0) throw Error(Errc::ZeroRho, "rho must be positive");
  return payload_bits / rho;
}

double proposed_efficiency(double alpha, double mse_value) {
  if (mse_value <= 0.0) throw Error(Errc::ZeroMSE, "proposed efficiency is undefined without distortion");
  return alpha / std::sqrt(mse_value);
}

DistortionProfile theoretical_distortion(const SchemeSpec& spec) {
  const PixelGroup reference(static_cast<std::size_t>(spec.n), 128);
  double abs_total = 0.0;
  double sq_total = 0.0;
  DistortionProfile out;
  for (std::uint64_t s = 0; s < spec.modulus; ++s) {
    const PixelGroup g = embed_group(spec, reference, s);
    int group_abs = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const int d = g[i] - reference[i];
      group_abs += std::abs(d);
      sq_total += static_cast<double>(d) * d;
    }
    abs_total += group_abs;
    out.max_group_change = std::max(out.max_group_change, group_abs);
  }
  const double denom = static_cast<double>(spec.modulus) * spec.n;
  out.expected_abs_per_pixel = abs_total / denom;
  out.expected_sq_per_pixel = sq_total / denom;
  return out;
}

double capacity(const GrayImage& img, const SchemeSpec& spec, PayloadMode mode) {
  const double groups = static_cast<double>(img.pixels.size() / static_cast<std::size_t>(spec.n));
  const double bits = mode == PayloadMode::Exact ? spec.payload_bits_exact()
                                                 : static_cast<double>(spec.payload_bits_operational());
  return groups * bits;
}

MetricsReport analyze_pair(const GrayImage& cover, const GrayImage& stego, const SchemeSpec& spec) {
  MetricsReport r;
  r.scheme_id = spec.id;
  r.params = spec.param_string();
  r.alpha = relative_payload(spec, PayloadMode::Exact);
  r.mse = mse(cover, stego);
  r.psnr_db = psnr(*r.mse);
  r.efficiency_standard = standard_efficiency(spec.payload_bits_exact(), max_change_units(spec));
  if (*r.mse > 0.0) r.efficiency_proposed = proposed_efficiency(*r.alpha, *r.mse);
  r.provenance = Provenance::Computed;
  return r;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

namespace {

std::string opt_field(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

nlohmann::json opt_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  if (std::isinf(*v)) return "inf";
  return *v;
}

}  // namespace

std::string metrics_csv_header() {
  return "scheme,params,alpha,mse,psnr_db,eff_standard,eff_proposed,distance,provenance";
}

std::string to_csv_row(const MetricsReport& r) {
  std::string out = r.scheme_id + "," + r.params;
  for (const auto* f : {&r.alpha, &r.mse, &r.psnr_db, &r.efficiency_standard, &r.efficiency_proposed,
                        &r.distance_from_bound}) {
    out += "," + opt_field(*f);
  }
  out += ",";
  out += provenance_name(r.provenance);
  return out;
}

std::string to_json(const MetricsReport& r) {
  nlohmann::ordered_json j;
  j["scheme"] = r.scheme_id;
  j["params"] = r.params;
  j["alpha"] = opt_json(r.alpha);
  j["mse"] = opt_json(r.mse);
  j["psnr_db"] = opt_json(r.psnr_db);
  j["eff_standard"] = opt_json(r.efficiency_standard);
  j["eff_proposed"] = opt_json(r.efficiency_proposed);
  j["distance"] = opt_json(r.distance_from_bound);
  j["provenance"] = std::string(provenance_name(r.provenance));
  return j.dump();
}

}  // namespace emdstego
