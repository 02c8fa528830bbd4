#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "credits/core.hpp"
#include "credits/resequencing.hpp"
#include "credits/weights.hpp"

namespace credits {

/// Evaluation defaults carried by a corpus file. Absent fields fall through
/// to the caller's built-in defaults.
struct CorpusDefaults {
  std::optional<SchemeSpec> scheme;
  std::optional<ConventionPolicy> policy;
  std::optional<ResequenceMode> mode;

  friend bool operator==(const CorpusDefaults&, const CorpusDefaults&) = default;
};

struct Corpus {
  std::vector<Paper> papers;
  CorpusDefaults defaults;

  const Paper* find(std::string_view paper_id) const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

enum class Severity { Error, Warning };

struct ValidationIssue {
  std::string paper_id;
  std::string code;
  std::string message;
  Severity severity = Severity::Warning;
};

/// Parses and validates a JSON corpus document:
///
///   { "defaults": { "scheme": "equal|arithmetic|geometric|harmonic",
///                   "ratio": number?, "convention": "none|c1|c2|c3",
///                   "mode": "author|weight" },
///     "papers": [ { "id": string,
///                   "authors": [ { "family": string, "given": string } ],
///                   "corresponding": integer?, "citations": integer,
///                   "alphabetical": boolean?,
///                   "contribution_declared": boolean? } ] }
///
/// Unknown keys are rejected. Throws Error with SyntaxError (carrying line
/// and column), SchemaError, DuplicatePaperId, DuplicateAuthorInPaper,
/// BadCorrespondingIndex or NegativeCitations.
Corpus parse_corpus(std::string_view text);
Corpus parse_corpus(std::istream& in);

/// Reads and parses a corpus file; an unreadable file is a SchemaError.
Corpus load_corpus(const std::filesystem::path& path);

/// Inverse of parse_corpus (pretty-printed JSON, two-space indent).
std::string serialize_corpus(const Corpus& corpus);

/// True iff case-folded family names, ties broken by case-folded given names,
/// are in non-decreasing order. Single-author lists are sorted.
bool detect_alphabetical(std::span<const Author> authors);

/// Non-blocking warnings: AlphabeticalLikely, ConventionNeedsCorresponding.
std::vector<ValidationIssue> validate_corpus(const Corpus& corpus);

}  // namespace credits
