#include "credits/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace credits {

namespace {

enum class Align { Left, Right };

// Space-padded columns, two spaces apart, no trailing whitespace.
class TextTable {
 public:
  TextTable(std::vector<std::string> header, std::vector<Align> align)
      : align_(std::move(align))
  {
    rows_.push_back(std::move(header));
  }

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const
  {
    std::vector<std::size_t> width(align_.size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) line += "  ";
        const std::string pad(width[c] - row[c].size(), ' ');
        line += align_[c] == Align::Right ? pad + row[c] : row[c] + pad;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line;
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<Align> align_;
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_line(std::initializer_list<std::string_view> fields)
{
  std::string line;
  bool first = true;
  for (auto f : fields) {
    if (!first) line += ',';
    first = false;
    line += csv_field(f);
  }
  return line + '\n';
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name)
{
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::string format_fixed(double value)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  // Tiny negative rounding noise would otherwise print as -0.000000.
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string format_shortest(double value)
{
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view field)
{
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string format_index_value(IndexKind kind, double value, OutputFormat format)
{
  if (kind != IndexKind::WeightedSum) {
    return std::to_string(static_cast<long long>(std::llround(value)));
  }
  return format == OutputFormat::Table ? format_fixed(value) : format_shortest(value);
}

std::string render_weights(const WeightVector& weights, OutputFormat format)
{
  if (format == OutputFormat::Csv) {
    std::string out = "position,weight\n";
    for (std::size_t i = 0; i < weights.size(); ++i) {
      out += csv_line({std::to_string(i + 1), format_shortest(weights.weights[i])});
    }
    return out;
  }
  TextTable t({"position", "weight"}, {Align::Right, Align::Right});
  for (std::size_t i = 0; i < weights.size(); ++i) {
    t.add({std::to_string(i + 1), format_fixed(weights.weights[i])});
  }
  return t.str();
}

std::string render_assignment(const CreditAssignment& assignment, OutputFormat format)
{
  const double sum = assignment.total();
  if (format == OutputFormat::Csv) {
    std::string out = "position,family,given,weight\n";
    for (std::size_t i = 0; i < assignment.entries.size(); ++i) {
      const auto& e = assignment.entries[i];
      out += csv_line({std::to_string(i + 1), e.author.family_name(), e.author.given_names(),
                       format_shortest(e.weight)});
    }
    out += csv_line({"sum", "", "", format_shortest(sum)});
    return out;
  }
  TextTable t({"position", "family", "given", "weight"},
              {Align::Right, Align::Left, Align::Left, Align::Right});
  for (std::size_t i = 0; i < assignment.entries.size(); ++i) {
    const auto& e = assignment.entries[i];
    t.add({std::to_string(i + 1), e.author.family_name(), e.author.given_names(),
           format_fixed(e.weight)});
  }
  t.add({"sum", "", "", format_fixed(sum)});
  return t.str();
}

std::string render_index_report(const IndexReport& report, OutputFormat format)
{
  const std::string kind(to_string(report.index_kind));
  const std::string value = format_index_value(report.index_kind, report.value, format);
  if (format == OutputFormat::Csv) {
    std::string out = "paper_id,citations,weight,weighted_citations\n";
    for (const auto& p : report.per_paper) {
      out += csv_line({p.paper_id, std::to_string(p.citations), format_shortest(p.weight),
                       format_shortest(p.weighted_citations)});
    }
    out += csv_line({"index", kind, value});
    return out;
  }
  TextTable t({"paper_id", "citations", "weight", "weighted_citations"},
              {Align::Left, Align::Right, Align::Right, Align::Right});
  for (const auto& p : report.per_paper) {
    t.add({p.paper_id, std::to_string(p.citations), format_fixed(p.weight),
           format_fixed(p.weighted_citations)});
  }
  return t.str() + "index " + kind + ": " + value + "\n";
}

std::string render_comparison(std::span<const ComparisonRow> rows, OutputFormat format)
{
  if (format == OutputFormat::Csv) {
    std::string out = "convention,mode,index,value\n";
    for (const auto& r : rows) {
      out += csv_line({r.convention, to_string(r.mode), to_string(r.index),
                       format_index_value(r.index, r.value, format)});
    }
    return out;
  }
  TextTable t({"convention", "mode", "index", "value"},
              {Align::Left, Align::Left, Align::Left, Align::Right});
  for (const auto& r : rows) {
    t.add({r.convention, std::string(to_string(r.mode)), std::string(to_string(r.index)),
           format_index_value(r.index, r.value, format)});
  }
  return t.str();
}

}  // namespace credits
