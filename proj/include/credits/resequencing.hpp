#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "credits/core.hpp"
#include "credits/weights.hpp"

namespace credits {

enum class ConventionKind { None, Convention1, Convention2, Convention3, Custom };

/// Short names used on the command line and in corpus files: none, c1, c2,
/// c3, custom.
std::string_view to_string(ConventionKind kind);
std::optional<ConventionKind> parse_convention_kind(std::string_view name);

/// Which author positions carry the most credit.
///
///   convention1  the last author leads
///   convention2  first author leads, last author (group leader) is second
///   convention3  corresponding author, then first, then last
///   custom       an explicit author-resequencing permutation
struct ConventionPolicy {
  ConventionKind kind = ConventionKind::None;
  std::optional<Permutation> custom_mapping;

  static ConventionPolicy none() { return {ConventionKind::None, std::nullopt}; }
  static ConventionPolicy convention1() { return {ConventionKind::Convention1, std::nullopt}; }
  static ConventionPolicy convention2() { return {ConventionKind::Convention2, std::nullopt}; }
  static ConventionPolicy convention3() { return {ConventionKind::Convention3, std::nullopt}; }
  static ConventionPolicy custom(Permutation mapping) { return {ConventionKind::Custom, std::move(mapping)}; }

  std::string tag() const;

  friend bool operator==(const ConventionPolicy&, const ConventionPolicy&) = default;
};

enum class ResequenceMode { Author, Weight };

std::string_view to_string(ResequenceMode mode);
std::optional<ResequenceMode> parse_resequence_mode(std::string_view name);

/// The author-resequencing permutation for `policy` on a k-author paper.
/// `corresponding` is required for convention3 and ignored otherwise.
Permutation convention_permutation(const ConventionPolicy& policy, std::size_t k,
                                   std::optional<Position> corresponding = std::nullopt);

/// The author at original position perm(i) receives w_i.
CreditAssignment author_resequence(const Paper& paper, const WeightVector& weights,
                                   const Permutation& perm);

/// Author a_i receives w_{perm(i)}.
CreditAssignment weight_resequence(const Paper& paper, const WeightVector& weights,
                                   const Permutation& perm);

/// Alphabetically ordered papers without a contribution declaration fall back
/// to the equal scheme. The paper's explicit `alphabetical` flag wins over
/// detection.
SchemeSpec alphabetical_guard(const Paper& paper, const SchemeSpec& requested);

/// Guard, generate weights, build the convention permutation and apply it in
/// the requested mode. Weight mode uses the inverse of the author-mode
/// permutation, so both modes give the same author -> weight map.
CreditAssignment assignment_for(const Paper& paper, const SchemeSpec& scheme,
                                const ConventionPolicy& policy, ResequenceMode mode);

}  // namespace credits
