#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace credits {

enum class ErrorCode {
  EmptyMapping,
  DuplicatePosition,
  OutOfRangePosition,
  SizeMismatch,
  ZeroAuthors,
  RatioOutOfRange,
  MissingCorresponding,
  DescendingViolated,
  InvalidAuthor,
  SyntaxError,
  SchemaError,
  DuplicatePaperId,
  DuplicateAuthorInPaper,
  BadCorrespondingIndex,
  NegativeCitations,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can branch on the kind of failure rather
/// than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

// Positions are 1-based everywhere in the public API.
using Position = std::size_t;

class Author {
 public:
  /// Trims both fields; throws InvalidAuthor when the family name is blank.
  Author(std::string_view family_name, std::string_view given_names = {});

  const std::string& family_name() const noexcept { return family_; }
  const std::string& given_names() const noexcept { return given_; }

  /// "Family, Given" or just "Family".
  std::string display_name() const;

  friend bool operator==(const Author&, const Author&) = default;

 private:
  std::string family_;
  std::string given_;
};

struct Paper {
  std::string id;
  std::vector<Author> authors;
  std::optional<Position> corresponding;
  long long citations = 0;
  std::optional<bool> alphabetical;
  bool contribution_declared = false;

  std::size_t author_count() const noexcept { return authors.size(); }

  /// 1-based position of `author`, if present.
  std::optional<Position> position_of(const Author& author) const;

  friend bool operator==(const Paper&, const Paper&) = default;
};

/// Checks the Paper invariants (k >= 1, no duplicate authors, corresponding in
/// range, citations >= 0). Throws Error on the first violation.
void validate_paper(const Paper& paper);

struct WeightVector {
  std::vector<double> weights;
  std::string scheme_tag;

  std::size_t size() const noexcept { return weights.size(); }
  /// 1-based access.
  double at(Position i) const { return weights.at(i - 1); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// A bijection on {1..k}. mapping()[i-1] is the original position that ends
/// up at new position i.
class Permutation {
 public:
  /// Validating constructor; see make_permutation.
  explicit Permutation(std::vector<Position> mapping);

  static Permutation identity(std::size_t k);

  std::size_t size() const noexcept { return mapping_.size(); }
  std::span<const Position> mapping() const noexcept { return mapping_; }

  /// Original position placed at new position `i` (1-based).
  Position operator()(Position i) const { return mapping_.at(i - 1); }

  bool is_identity() const noexcept;

  /// result[i] = items[mapping[i]] (1-based), i.e. the reordered sequence.
  template <typename T>
  std::vector<T> apply(std::span<const T> items) const
  {
    if (items.size() != mapping_.size()) {
      throw Error(ErrorCode::SizeMismatch,
                  "permutation of size " + std::to_string(mapping_.size()) +
                      " applied to sequence of length " +
                      std::to_string(items.size()));
    }
    std::vector<T> out;
    out.reserve(items.size());
    for (Position p : mapping_) out.push_back(items[p - 1]);
    return out;
  }

  template <typename T>
  std::vector<T> apply(const std::vector<T>& items) const
  {
    return apply(std::span<const T>(items));
  }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Position> mapping_;
};

Permutation make_permutation(std::vector<Position> mapping);

Permutation invert(const Permutation& p);

/// Applying the result is the same as applying `p` and then `q`:
/// r[i] = p[q[i]].
Permutation compose(const Permutation& p, const Permutation& q);

struct Provenance {
  std::string scheme_tag;
  std::string policy_tag;
  std::string mode_tag;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct CreditEntry {
  Author author;
  double weight = 0.0;

  friend bool operator==(const CreditEntry&, const CreditEntry&) = default;
};

/// Resolved author -> weight map for one paper; entries are in the paper's
/// original author order.
struct CreditAssignment {
  std::string paper_id;
  std::vector<CreditEntry> entries;
  Provenance provenance;

  std::optional<double> weight_of(const Author& author) const;
  double total() const;
};

}  // namespace credits
