#pragma once

// Dataset ingestion and deterministic report serialization.
//
// Input CSV: header row naming at least the columns id, mu, nu (any order,
// extra columns ignored), comma separated, "." decimal point. Input JSON: a
// top-level array of {"id": string, "mu": number, "nu": number} objects.
//
// Report output is a pure function of the report value and the number style:
// fixed key and column order, fixed-notation numbers, no timestamps.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bipolar/algebra.hpp"
#include "bipolar/audit.hpp"
#include "bipolar/kernel.hpp"

namespace bipolar {

enum class Format { Csv, Json };

std::string_view to_string(Format format) noexcept;
std::optional<Format> parse_format(std::string_view name) noexcept;
/// ".json" (any case) selects JSON, everything else CSV.
Format format_from_path(std::string_view path) noexcept;

struct NumberStyle {
  enum class Mode {
    /// Fixed notation with this many significant digits.
    Significant,
    /// Two decimals, truncated toward zero, as printed in published tables.
    Paper,
  };
  Mode mode = Mode::Significant;
  int digits = 6;

  static NumberStyle paper() { return {Mode::Paper, 2}; }
};

/// Never scientific notation; negative zero renders as zero.
std::string format_number(double x, const NumberStyle& style = {});

/// Throws ParseError for malformed input, duplicate ids, missing columns and
/// degrees outside [0, 1]; the message names the line or record.
BipolarFuzzySet read_dataset(std::istream& in, Format format);

/// Writes a set in the input schema (id, mu, nu).
void write_dataset(std::ostream& out, const BipolarFuzzySet& set, Format format,
                   const NumberStyle& style = {});

struct ElementRow {
  std::string id;
  BipolarValue value;
  PentaValue penta;
  TauOmega polar;
  ValueClass cls;
  /// Aligned with MeasureReport::cardinality_kinds / entropy_kinds.
  std::vector<double> cardinality;
  std::vector<double> entropy;
};

/// Decomposition columns for one element; measure columns left empty.
ElementRow describe(std::string id, const BipolarValue& value);

struct PairwiseMatrix {
  /// "similarity" or "distance".
  std::string measure;
  std::string kind;
  std::vector<std::string> ids;
  /// Row k holds entries against elements 0 .. k-1.
  std::vector<std::vector<double>> lower;
};

struct ReportMetadata {
  std::string dataset;
  std::vector<std::pair<std::string, std::string>> settings;
  std::string tool_version;
};

struct MeasureReport {
  ReportMetadata metadata;
  std::vector<std::string> cardinality_kinds;
  std::vector<std::string> entropy_kinds;
  std::vector<ElementRow> elements;
  std::vector<std::pair<std::string, double>> aggregates;
  std::optional<PairwiseMatrix> similarity;
};

void write_report(std::ostream& out, const MeasureReport& report, Format format,
                  const NumberStyle& style = {});

void write_audit(std::ostream& out, const AuditReport& report, const ReportMetadata& metadata,
                 Format format, const NumberStyle& style = {});

}  // namespace bipolar
