#pragma once

// Rendering of results as aligned tables, JSON, or CSV.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpcode/closed_forms.hpp"
#include "gpcode/code.hpp"
#include "gpcode/curves.hpp"
#include "gpcode/graph.hpp"
#include "gpcode/periods.hpp"

namespace gpcode {

enum class Format { table, json, csv };

/// "table", "json" or "csv"; nullopt otherwise.
std::optional<Format> parse_format(std::string_view s);

/// Rows of equal length; first row is the header.
std::string render_columns(const std::vector<std::vector<std::string>>& rows);

/// {p, m, k, n, source, table: [[w, "A_w"], ...], indexed: [...]}.
/// Frequencies are decimal strings (they outgrow 64 bits).
std::string emit(const WeightDistribution& d, const CodeParams& params, Format format);
std::string emit(const Spectrum& s, const GraphSpec& g, Format format);
/// "{[12]^1, [2]^12, [-3]^12}".
std::string spectrum_notation(const Spectrum& s);
std::string emit(const GaussPeriodSet& s, const RelationReport* report, Format format);
std::string emit(const GraphSpec& g, Format format);
std::string emit(const std::vector<CurveCount>& rows, const Field& f, Format format);

/// Side-by-side comparison; lines where the tables differ are marked "*".
std::string diff_tables(const WeightDistribution& left, std::string_view left_name, const WeightDistribution& right,
                        std::string_view right_name);

}  // namespace gpcode
