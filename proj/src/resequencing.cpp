#include "credits/resequencing.hpp"

#include <vector>

#include "credits/corpus.hpp"

namespace credits {

namespace {

void require_sizes(const Paper& paper, const WeightVector& weights,
                   const Permutation& perm)
{
  const std::size_t k = paper.author_count();
  if (weights.size() != k || perm.size() != k) {
    throw Error(ErrorCode::SizeMismatch,
                "paper '" + paper.id + "' has " + std::to_string(k) +
                    " authors but got " + std::to_string(weights.size()) +
                    " weights and a permutation of size " +
                    std::to_string(perm.size()));
  }
}

CreditAssignment assignment_skeleton(const Paper& paper, const WeightVector& weights,
                                     std::string_view mode_tag)
{
  CreditAssignment out;
  out.paper_id = paper.id;
  out.entries.reserve(paper.author_count());
  for (const auto& a : paper.authors) out.entries.push_back({a, 0.0});
  out.provenance = {weights.scheme_tag, "", std::string(mode_tag)};
  return out;
}

// Roles listed in priority order; a position already placed is skipped, and
// whatever positions remain follow in listing order.
Permutation from_priority(std::initializer_list<Position> roles, std::size_t k)
{
  std::vector<Position> mapping;
  mapping.reserve(k);
  std::vector<bool> used(k + 1, false);
  auto place = [&](Position p) {
    if (!used[p]) {
      used[p] = true;
      mapping.push_back(p);
    }
  };
  for (Position p : roles) place(p);
  for (Position p = 1; p <= k; ++p) place(p);
  return Permutation(std::move(mapping));
}

}  // namespace

std::string_view to_string(ConventionKind kind)
{
  switch (kind) {
    case ConventionKind::None: return "none";
    case ConventionKind::Convention1: return "c1";
    case ConventionKind::Convention2: return "c2";
    case ConventionKind::Convention3: return "c3";
    case ConventionKind::Custom: return "custom";
  }
  return "unknown";
}

std::optional<ConventionKind> parse_convention_kind(std::string_view name)
{
  if (name == "none") return ConventionKind::None;
  if (name == "c1" || name == "convention1") return ConventionKind::Convention1;
  if (name == "c2" || name == "convention2") return ConventionKind::Convention2;
  if (name == "c3" || name == "convention3") return ConventionKind::Convention3;
  if (name == "custom") return ConventionKind::Custom;
  return std::nullopt;
}

std::string ConventionPolicy::tag() const
{
  std::string s(to_string(kind));
  if (kind == ConventionKind::Custom && custom_mapping) {
    s += custom_mapping->to_string();
  }
  return s;
}

std::string_view to_string(ResequenceMode mode)
{
  return mode == ResequenceMode::Author ? "author" : "weight";
}

std::optional<ResequenceMode> parse_resequence_mode(std::string_view name)
{
  if (name == "author") return ResequenceMode::Author;
  if (name == "weight") return ResequenceMode::Weight;
  return std::nullopt;
}

Permutation convention_permutation(const ConventionPolicy& policy, std::size_t k,
                                   std::optional<Position> corresponding)
{
  if (k == 0) {
    throw Error(ErrorCode::ZeroAuthors, "convention needs at least one author");
  }
  switch (policy.kind) {
    case ConventionKind::None:
      return Permutation::identity(k);
    case ConventionKind::Convention1:
      return from_priority({k}, k);
    case ConventionKind::Convention2:
      return from_priority({1, k}, k);
    case ConventionKind::Convention3: {
      if (!corresponding) {
        throw Error(ErrorCode::MissingCorresponding,
                    "convention c3 requires a corresponding author");
      }
      const Position j = *corresponding;
      if (j < 1 || j > k) {
        throw Error(ErrorCode::OutOfRangePosition,
                    "corresponding position " + std::to_string(j) +
                        " outside 1.." + std::to_string(k));
      }
      return from_priority({j, 1, k}, k);
    }
    case ConventionKind::Custom:
      if (!policy.custom_mapping) {
        throw Error(ErrorCode::EmptyMapping, "custom convention without a mapping");
      }
      if (policy.custom_mapping->size() != k) {
        throw Error(ErrorCode::SizeMismatch,
                    "custom permutation " + policy.custom_mapping->to_string() +
                        " does not fit " + std::to_string(k) + " authors");
      }
      return *policy.custom_mapping;
  }
  throw Error(ErrorCode::SchemaError, "unknown convention kind");
}

CreditAssignment author_resequence(const Paper& paper, const WeightVector& weights,
                                   const Permutation& perm)
{
  require_sizes(paper, weights, perm);
  CreditAssignment out = assignment_skeleton(paper, weights, "author");
  for (Position i = 1; i <= perm.size(); ++i) {
    out.entries[perm(i) - 1].weight = weights.at(i);
  }
  return out;
}

CreditAssignment weight_resequence(const Paper& paper, const WeightVector& weights,
                                   const Permutation& perm)
{
  require_sizes(paper, weights, perm);
  CreditAssignment out = assignment_skeleton(paper, weights, "weight");
  const std::vector<double> reordered = perm.apply(weights.weights);
  for (std::size_t i = 0; i < reordered.size(); ++i) {
    out.entries[i].weight = reordered[i];
  }
  return out;
}

SchemeSpec alphabetical_guard(const Paper& paper, const SchemeSpec& requested)
{
  const bool alphabetical =
      paper.alphabetical.value_or(detect_alphabetical(paper.authors));
  if (alphabetical && !paper.contribution_declared) return SchemeSpec::equal();
  return requested;
}

CreditAssignment assignment_for(const Paper& paper, const SchemeSpec& scheme,
                                const ConventionPolicy& policy, ResequenceMode mode)
{
  const SchemeSpec effective = alphabetical_guard(paper, scheme);
  const WeightVector weights = make_weights(effective, paper.author_count());
  if (validate_descending(weights) == DescendingVerdict::Invalid) {
    throw Error(ErrorCode::DescendingViolated,
                "scheme " + effective.tag() + " produced weights that are neither "
                "strictly descending nor flat for paper '" + paper.id + "'");
  }
  const Permutation perm =
      convention_permutation(policy, paper.author_count(), paper.corresponding);

  CreditAssignment out = mode == ResequenceMode::Author
                             ? author_resequence(paper, weights, perm)
                             : weight_resequence(paper, weights, invert(perm));
  out.provenance.policy_tag = policy.tag();
  return out;
}

}  // namespace credits
