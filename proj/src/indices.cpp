#include "credits/indices.hpp"

#include <algorithm>
#include <functional>

namespace credits {

namespace {

std::vector<double> sorted_descending(std::span<const double> values)
{
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

std::string_view to_string(IndexKind kind)
{
  switch (kind) {
    case IndexKind::H: return "h";
    case IndexKind::G: return "g";
    case IndexKind::WeightedSum: return "wsum";
  }
  return "unknown";
}

std::optional<IndexKind> parse_index_kind(std::string_view name)
{
  if (name == "h") return IndexKind::H;
  if (name == "g") return IndexKind::G;
  if (name == "wsum") return IndexKind::WeightedSum;
  return std::nullopt;
}

double weighted_citations(long long citations, double weight)
{
  return static_cast<double>(citations) * weight;
}

long long h_index(std::span<const double> weighted)
{
  const std::vector<double> v = sorted_descending(weighted);
  long long h = 0;
  while (h < static_cast<long long>(v.size()) && v[h] >= static_cast<double>(h + 1)) ++h;
  return h;
}

long long g_index(std::span<const double> weighted)
{
  const std::vector<double> v = sorted_descending(weighted);
  long long g = 0;
  double top = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    top += v[i];
    const double n = static_cast<double>(i + 1);
    if (top >= n * n) g = static_cast<long long>(i + 1);
  }
  return g;
}

double wsum(std::span<const double> weighted)
{
  double total = 0.0;
  for (double x : weighted) total += x;
  return total;
}

double compute_index(IndexKind kind, std::span<const double> weighted)
{
  switch (kind) {
    case IndexKind::H: return static_cast<double>(h_index(weighted));
    case IndexKind::G: return static_cast<double>(g_index(weighted));
    case IndexKind::WeightedSum: return wsum(weighted);
  }
  return 0.0;
}

IndexReport evaluate_author(const Corpus& corpus, const Author& target,
                            const SchemeSpec& scheme, const ConventionPolicy& policy,
                            ResequenceMode mode, IndexKind index)
{
  IndexReport report{target, index, 0.0, {},
                     {scheme.tag(), policy.tag(), std::string(to_string(mode))}};
  std::vector<double> values;

  for (const Paper& paper : corpus.papers) {
    if (!paper.position_of(target)) continue;
    CreditAssignment assignment = [&] {
      try {
        return assignment_for(paper, scheme, policy, mode);
      } catch (const Error& e) {
        throw Error(e.code(), "while evaluating paper '" + paper.id + "': " + e.message());
      }
    }();
    const double w = *assignment.weight_of(target);
    const double c_prime = weighted_citations(paper.citations, w);
    report.per_paper.push_back({paper.id, paper.citations, w, c_prime});
    values.push_back(c_prime);
  }

  report.value = compute_index(index, values);
  return report;
}

}  // namespace credits
