#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "credits/core.hpp"
#include "credits/indices.hpp"
#include "credits/resequencing.hpp"

namespace credits {

enum class OutputFormat { Table, Csv };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// Six decimal places, as used in table output.
std::string format_fixed(double value);

/// Shortest text that parses back to the same double, as used in CSV output.
std::string format_shortest(double value);

/// RFC 4180 quoting, applied only when the field needs it.
std::string csv_field(std::string_view field);

/// h and g are printed as integers; wsum follows the format's float style.
std::string format_index_value(IndexKind kind, double value, OutputFormat format);

std::string render_weights(const WeightVector& weights, OutputFormat format);

std::string render_assignment(const CreditAssignment& assignment, OutputFormat format);

std::string render_index_report(const IndexReport& report, OutputFormat format);

struct ComparisonRow {
  std::string convention;
  ResequenceMode mode = ResequenceMode::Author;
  IndexKind index = IndexKind::H;
  double value = 0.0;
};

std::string render_comparison(std::span<const ComparisonRow> rows, OutputFormat format);

}  // namespace credits
