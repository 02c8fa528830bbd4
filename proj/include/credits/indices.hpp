#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "credits/core.hpp"
#include "credits/corpus.hpp"
#include "credits/resequencing.hpp"
#include "credits/weights.hpp"

namespace credits {

enum class IndexKind { H, G, WeightedSum };

std::string_view to_string(IndexKind kind);
std::optional<IndexKind> parse_index_kind(std::string_view name);

struct PaperCredit {
  std::string paper_id;
  long long citations = 0;
  double weight = 0.0;
  double weighted_citations = 0.0;

  friend bool operator==(const PaperCredit&, const PaperCredit&) = default;
};

struct IndexReport {
  Author author;
  IndexKind index_kind = IndexKind::H;
  double value = 0.0;
  std::vector<PaperCredit> per_paper;
  Provenance provenance;

  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

/// c' = c * w, unrounded.
double weighted_citations(long long citations, double weight);

/// Largest integer h such that at least h values are >= h.
long long h_index(std::span<const double> weighted);

/// Largest g in 1..N whose top-g values sum to at least g*g; 0 when empty.
long long g_index(std::span<const double> weighted);

/// Sum in the given order.
double wsum(std::span<const double> weighted);

double compute_index(IndexKind kind, std::span<const double> weighted);

/// Scores `target` over every corpus paper that lists them, in corpus order.
/// Any per-paper failure aborts the evaluation; the rethrown Error keeps its
/// code and names the offending paper.
IndexReport evaluate_author(const Corpus& corpus, const Author& target,
                            const SchemeSpec& scheme, const ConventionPolicy& policy,
                            ResequenceMode mode, IndexKind index);

}  // namespace credits
