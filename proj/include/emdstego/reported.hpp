#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace emdstego {

enum class SourceTable { Parameters = 2, Standard = 3, Proposed = 4, Distance = 5 };

/// A value transcribed from a published comparison table. Scheme ids match
/// make_scheme tokens where implemented; params are canonical "k=v;...".
struct ReportedRow {
  SourceTable table;
  std::string_view scheme_id;
  std::string_view params;
  std::optional<double> alpha;
  std::optional<double> eff_standard;
  std::optional<double> eff_proposed;
  std::vector<double> psnr_values;
  std::optional<double> distance;
};

std::span<const ReportedRow> reported_rows();

std::string_view source_table_name(SourceTable t) noexcept;

/// True for scheme ids that make_scheme accepts.
bool is_implemented(std::string_view scheme_id);

}  // namespace emdstego
