#include "emdstego/reported.hpp"

#include <algorithm>
#include <string>

#include "emdstego/scheme.hpp"

namespace emdstego {

namespace {

using T = SourceTable;

ReportedRow standard(std::string_view id, std::string_view params, double alpha, double eff) {
  return {T::Standard, id, params, alpha, eff, std::nullopt, {}, std::nullopt};
}

ReportedRow proposed(std::string_view id, std::string_view params, double alpha, double eff) {
  return {T::Proposed, id, params, alpha, std::nullopt, eff, {}, std::nullopt};
}

ReportedRow distance(std::string_view id, std::string_view params, double alpha, double dist) {
  return {T::Distance, id, params, alpha, std::nullopt, std::nullopt, {}, dist};
}

ReportedRow psnr(std::string_view id, std::vector<double> values) {
  return {T::Parameters, id, "", std::nullopt, std::nullopt, std::nullopt, std::move(values), std::nullopt};
}

std::vector<ReportedRow> build() {
  return {
      psnr("emd", {56.15, 54.14}),
      psnr("iemd", {50.17}),
      psnr("emd2", {52.03, 49.89}),
      psnr("de", {52.10, 47.80}),
      psnr("femd", {52.39, 46.75}),
      psnr("appm", {52.11, 47.80}),
      psnr("gemd", {50.78, 51.02}),
      psnr("egemd", {47.69, 47.78}),
      psnr("rgemd", {44.74}),
      psnr("pvd", {42.46}),
      psnr("mbe", {50.50, 43.00}),
      psnr("msd", {52.11, 51.85}),
      psnr("hemd", {49.89, 34.33}),
      psnr("pva", {42.84, 37.04}),
      psnr("eemdhw", {48.52}),
      psnr("mpemd", {55.00, 53.47}),
      psnr("kirsch", {44.90, 37.35}),
      psnr("aemd", {46.21}),
      psnr("catalan", {48.62, 27.93}),
      psnr("twofunction", {43.72, 34.80}),

      standard("catalan", "", 1, 0.125),
      standard("femd", "t=2", 1, 1),
      standard("mpemd", "key=0;n=2", 1, 1),
      standard("msd", "n=3", 1.15, 1.15),
      standard("kirsch", "t=1;z=2", 1.33, 0.66),
      standard("mbe", "k=1;n=2", 1.5, 1),
      standard("iemd", "", 1.5, 1.5),
      standard("gemd", "n=2", 1.5, 1.5),
      standard("egemd", "n=4;n1=2", 1.5, 1.5),
      standard("hemd", "n=3;w=3", 1.58, 1.58),
      standard("emd2", "n=2", 1.58, 1.58),
      standard("de", "k=2", 1.85, 1.85),
      standard("rgemd", "n=3", 2, 0.85),
      standard("pva", "t=2", 2, 1),
      standard("aemd", "m=4;n=2", 2, 1),
      standard("appm", "B=16", 2, 1.33),
      standard("twofunction", "k1=2;k2=3", 2.5, 0.71),
      standard("pvd", "k_i", 2.5, 0.45),
      standard("eemdhw", "k=4", 4, 0.5),

      proposed("emd", "n=3", 0.9357, 1.0107),
      proposed("catalan", "", 1, 1.057),
      proposed("mpemd", "key=0;n=2", 1, 1.15),
      proposed("femd", "t=2", 1, 1.6329),
      proposed("msd", "n=3", 1.15, 1.77),
      proposed("de", "k=1", 1.16, 1.83),
      proposed("gemd", "n=3", 1.33, 1.804),
      proposed("mbe", "k=1;n=3", 1.33, 1.751),
      proposed("iemd", "", 1.5, 1.897845),
      proposed("appm", "B=9", 1.5, 1.9),
      proposed("pvd", "", 1.53, 0.7964),
      proposed("emd2", "n=2", 1.58, 1.94),
      proposed("hemd", "n=3;w=3", 1.58, 1.94),
      proposed("egemd", "n=3;n1=1", 1.67, 1.587),
      proposed("kirsch", "", 1.84, 1.2792),
      proposed("pva", "t=2", 2, 0.5914),
      proposed("rgemd", "n=3", 2, 1.35),
      proposed("aemd", "", 2.037, 1.6278),
      proposed("twofunction", "k1=2;k2=3", 2.5, 1.05),
      proposed("eemdhw", "k=2", 3, 1.11),

      distance("emd", "n=3", 0.9357, 0.3595),
      distance("femd", "t=2", 1, 0.5871),
      distance("mpemd", "key=0;n=2", 1, 1.0653),
      distance("catalan", "", 1, 1.1621),
      distance("msd", "n=3", 1.15, 0.5728),
      distance("de", "k=1", 1.16, 0.5149),
      distance("gemd", "n=3", 1.33, 0.5708),
      distance("mbe", "k=1;n=3", 1.33, 0.6234),
      distance("iemd", "", 1.5, 0.4362),
      distance("appm", "B=9", 1.5, 0.4258),
      distance("pvd", "", 1.53, 1.5275),
      distance("emd2", "n=2", 1.58, 0.3595),
      distance("hemd", "n=3;w=3", 1.59, 0.3492),
      distance("egemd", "n=3;n1=1", 1.67, 0.67121),
      distance("kirsch", "", 1.849, 0.8758),
      distance("rgemd", "n=3", 2, 0.7096),
      distance("pva", "t=2", 2, 1.4687),
      distance("aemd", "", 2.037, 0.6385),
      distance("twofunction", "k1=2;k2=3", 2.5, 0.2354),
      distance("eemdhw", "k=2", 3, 0.3395),
  };
}

}  // namespace

std::span<const ReportedRow> reported_rows() {
  static const std::vector<ReportedRow> rows = build();
  return rows;
}

std::string_view source_table_name(SourceTable t) noexcept {
  switch (t) {
    case T::Parameters: return "table2";
    case T::Standard: return "table3";
    case T::Proposed: return "table4";
    case T::Distance: return "table5";
  }
  return "table";
}

bool is_implemented(std::string_view scheme_id) {
  const auto& names = scheme_names();
  return std::find(names.begin(), names.end(), std::string(scheme_id)) != names.end();
}

}  // namespace emdstego
