#include "credits/core.hpp"

#include <algorithm>
#include <cctype>

namespace credits {

namespace {

std::string_view trim(std::string_view s)
{
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::EmptyMapping: return "EmptyMapping";
    case ErrorCode::DuplicatePosition: return "DuplicatePosition";
    case ErrorCode::OutOfRangePosition: return "OutOfRangePosition";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ZeroAuthors: return "ZeroAuthors";
    case ErrorCode::RatioOutOfRange: return "RatioOutOfRange";
    case ErrorCode::MissingCorresponding: return "MissingCorresponding";
    case ErrorCode::DescendingViolated: return "DescendingViolated";
    case ErrorCode::InvalidAuthor: return "InvalidAuthor";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::DuplicatePaperId: return "DuplicatePaperId";
    case ErrorCode::DuplicateAuthorInPaper: return "DuplicateAuthorInPaper";
    case ErrorCode::BadCorrespondingIndex: return "BadCorrespondingIndex";
    case ErrorCode::NegativeCitations: return "NegativeCitations";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      message_(message)
{
}

Author::Author(std::string_view family_name, std::string_view given_names)
    : family_(trim(family_name)), given_(trim(given_names))
{
  if (family_.empty()) {
    throw Error(ErrorCode::InvalidAuthor, "family name must not be empty");
  }
}

std::string Author::display_name() const
{
  return given_.empty() ? family_ : family_ + ", " + given_;
}

std::optional<Position> Paper::position_of(const Author& author) const
{
  auto it = std::find(authors.begin(), authors.end(), author);
  if (it == authors.end()) return std::nullopt;
  return static_cast<Position>(it - authors.begin()) + 1;
}

void validate_paper(const Paper& paper)
{
  const std::string where = "paper '" + paper.id + "'";
  if (paper.authors.empty()) {
    throw Error(ErrorCode::ZeroAuthors, where + " has no authors");
  }
  for (std::size_t i = 0; i < paper.authors.size(); ++i) {
    for (std::size_t m = i + 1; m < paper.authors.size(); ++m) {
      if (paper.authors[i] == paper.authors[m]) {
        throw Error(ErrorCode::DuplicateAuthorInPaper,
                    where + " lists '" + paper.authors[i].display_name() +
                        "' more than once");
      }
    }
  }
  if (paper.corresponding &&
      (*paper.corresponding < 1 ||
       *paper.corresponding > paper.authors.size())) {
    throw Error(ErrorCode::BadCorrespondingIndex,
                where + " has corresponding author " +
                    std::to_string(*paper.corresponding) + " but only " +
                    std::to_string(paper.authors.size()) + " authors");
  }
  if (paper.citations < 0) {
    throw Error(ErrorCode::NegativeCitations,
                where + " has negative citation count");
  }
}

Permutation::Permutation(std::vector<Position> mapping)
    : mapping_(std::move(mapping))
{
  if (mapping_.empty()) {
    throw Error(ErrorCode::EmptyMapping, "permutation mapping is empty");
  }
  const std::size_t k = mapping_.size();
  std::vector<bool> seen(k + 1, false);
  for (Position p : mapping_) {
    if (p < 1 || p > k) {
      throw Error(ErrorCode::OutOfRangePosition,
                  "position " + std::to_string(p) + " outside 1.." +
                      std::to_string(k));
    }
    if (seen[p]) {
      throw Error(ErrorCode::DuplicatePosition,
                  "position " + std::to_string(p) + " appears more than once");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t k)
{
  std::vector<Position> m(k);
  for (std::size_t i = 0; i < k; ++i) m[i] = i + 1;
  return Permutation(std::move(m));
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    if (mapping_[i] != i + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const
{
  std::string s = "[";
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(mapping_[i]);
  }
  return s + "]";
}

Permutation make_permutation(std::vector<Position> mapping)
{
  return Permutation(std::move(mapping));
}

Permutation invert(const Permutation& p)
{
  std::vector<Position> q(p.size());
  for (Position i = 1; i <= p.size(); ++i) q[p(i) - 1] = i;
  return Permutation(std::move(q));
}

Permutation compose(const Permutation& p, const Permutation& q)
{
  if (p.size() != q.size()) {
    throw Error(ErrorCode::SizeMismatch,
                "cannot compose permutations of size " +
                    std::to_string(p.size()) + " and " +
                    std::to_string(q.size()));
  }
  std::vector<Position> r(p.size());
  for (Position i = 1; i <= p.size(); ++i) r[i - 1] = p(q(i));
  return Permutation(std::move(r));
}

std::optional<double> CreditAssignment::weight_of(const Author& author) const
{
  for (const auto& e : entries) {
    if (e.author == author) return e.weight;
  }
  return std::nullopt;
}

double CreditAssignment::total() const
{
  double sum = 0.0;
  for (const auto& e : entries) sum += e.weight;
  return sum;
}

}  // namespace credits
