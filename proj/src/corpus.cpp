#include "credits/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace credits {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what)
{
  throw Error(ErrorCode::SchemaError, where + ": " + what);
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where)
{
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      schema_error(where, "unknown field '" + key + "'");
    }
  }
}

const json& require(const json& obj, const char* key, const std::string& where)
{
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where)
{
  const json& v = require(obj, key, where);
  if (!v.is_string()) schema_error(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

long long as_integer(const json& v, const char* key, const std::string& where)
{
  if (!v.is_number_integer()) {
    schema_error(where, std::string("field '") + key + "' must be an integer");
  }
  if (v.is_number_unsigned() &&
      v.get<unsigned long long>() >
          static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
    schema_error(where, std::string("field '") + key + "' is too large");
  }
  return v.get<long long>();
}

std::optional<bool> optional_bool(const json& obj, const char* key, const std::string& where)
{
  auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (!it->is_boolean()) schema_error(where, std::string("field '") + key + "' must be a boolean");
  return it->get<bool>();
}

CorpusDefaults parse_defaults(const json& obj)
{
  const std::string where = "defaults";
  if (!obj.is_object()) schema_error(where, "must be an object");
  reject_unknown_keys(obj, {"scheme", "ratio", "convention", "mode"}, where);

  CorpusDefaults d;
  std::optional<double> ratio;
  if (auto it = obj.find("ratio"); it != obj.end()) {
    if (!it->is_number()) schema_error(where, "field 'ratio' must be a number");
    ratio = it->get<double>();
  }
  if (obj.contains("scheme")) {
    const std::string name = require_string(obj, "scheme", where);
    auto kind = parse_scheme_kind(name);
    if (!kind) schema_error(where, "unknown scheme '" + name + "'");
    if (*kind == SchemeKind::Geometric) {
      d.scheme = SchemeSpec::geometric(ratio.value_or(kDefaultGeometricRatio));
    } else {
      if (ratio) schema_error(where, "'ratio' is only valid with the geometric scheme");
      d.scheme = SchemeSpec{*kind, std::nullopt};
    }
  } else if (ratio) {
    schema_error(where, "'ratio' given without 'scheme'");
  }
  if (obj.contains("convention")) {
    const std::string name = require_string(obj, "convention", where);
    auto kind = parse_convention_kind(name);
    if (!kind || *kind == ConventionKind::Custom) {
      schema_error(where, "unknown convention '" + name + "'");
    }
    d.policy = ConventionPolicy{*kind, std::nullopt};
  }
  if (obj.contains("mode")) {
    const std::string name = require_string(obj, "mode", where);
    auto mode = parse_resequence_mode(name);
    if (!mode) schema_error(where, "unknown mode '" + name + "'");
    d.mode = *mode;
  }
  return d;
}

Author parse_author(const json& obj, const std::string& where)
{
  if (!obj.is_object()) schema_error(where, "author must be an object");
  reject_unknown_keys(obj, {"family", "given"}, where);
  const std::string family = require_string(obj, "family", where);
  const std::string given = require_string(obj, "given", where);
  try {
    return Author(family, given);
  } catch (const Error&) {
    schema_error(where, "author family name must not be empty");
  }
}

Paper parse_paper(const json& obj, std::size_t index)
{
  std::string where = "papers[" + std::to_string(index) + "]";
  if (!obj.is_object()) schema_error(where, "must be an object");
  reject_unknown_keys(obj,
                      {"id", "authors", "corresponding", "citations", "alphabetical",
                       "contribution_declared"},
                      where);

  Paper p;
  p.id = require_string(obj, "id", where);
  if (p.id.empty()) schema_error(where, "'id' must not be empty");
  where = "paper '" + p.id + "'";

  const json& authors = require(obj, "authors", where);
  if (!authors.is_array()) schema_error(where, "'authors' must be an array");
  if (authors.empty()) schema_error(where, "'authors' must not be empty");
  for (std::size_t i = 0; i < authors.size(); ++i) {
    p.authors.push_back(parse_author(authors[i], where + " author " + std::to_string(i + 1)));
  }

  if (auto it = obj.find("corresponding"); it != obj.end()) {
    const long long j = as_integer(*it, "corresponding", where);
    if (j < 1 || static_cast<std::size_t>(j) > p.authors.size()) {
      throw Error(ErrorCode::BadCorrespondingIndex,
                  where + " has corresponding author " + std::to_string(j) +
                      " but only " + std::to_string(p.authors.size()) + " authors");
    }
    p.corresponding = static_cast<Position>(j);
  }

  p.citations = as_integer(require(obj, "citations", where), "citations", where);
  p.alphabetical = optional_bool(obj, "alphabetical", where);
  p.contribution_declared = optional_bool(obj, "contribution_declared", where).value_or(false);

  validate_paper(p);
  return p;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte)
{
  // nlohmann reports a 1-based byte index of the offending character.
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string fold(std::string_view s)
{
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const Paper* Corpus::find(std::string_view paper_id) const
{
  for (const auto& p : papers) {
    if (p.id == paper_id) return &p;
  }
  return nullptr;
}

Corpus parse_corpus(std::string_view text)
{
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_and_column(text, e.byte);
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) +
                    ": malformed corpus document");
  }

  if (!doc.is_object()) schema_error("document", "top level must be an object");
  reject_unknown_keys(doc, {"defaults", "papers"}, "document");

  Corpus corpus;
  if (auto it = doc.find("defaults"); it != doc.end()) corpus.defaults = parse_defaults(*it);

  const json& papers = require(doc, "papers", "document");
  if (!papers.is_array()) schema_error("document", "'papers' must be an array");

  std::set<std::string> ids;
  for (std::size_t i = 0; i < papers.size(); ++i) {
    Paper p = parse_paper(papers[i], i);
    if (!ids.insert(p.id).second) {
      throw Error(ErrorCode::DuplicatePaperId, "paper id '" + p.id + "' appears more than once");
    }
    corpus.papers.push_back(std::move(p));
  }
  return corpus;
}

Corpus parse_corpus(std::istream& in)
{
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_corpus(text);
}

Corpus load_corpus(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::SchemaError, "cannot read corpus file '" + path.string() + "'");
  }
  return parse_corpus(in);
}

std::string serialize_corpus(const Corpus& corpus)
{
  using nlohmann::ordered_json;
  ordered_json doc = ordered_json::object();

  const CorpusDefaults& d = corpus.defaults;
  if (d.scheme || d.policy || d.mode) {
    ordered_json defaults = ordered_json::object();
    if (d.scheme) {
      defaults["scheme"] = std::string(to_string(d.scheme->kind));
      if (d.scheme->ratio) defaults["ratio"] = *d.scheme->ratio;
    }
    if (d.policy) defaults["convention"] = std::string(to_string(d.policy->kind));
    if (d.mode) defaults["mode"] = std::string(to_string(*d.mode));
    doc["defaults"] = std::move(defaults);
  }

  ordered_json papers = ordered_json::array();
  for (const auto& p : corpus.papers) {
    ordered_json jp = ordered_json::object();
    jp["id"] = p.id;
    ordered_json authors = ordered_json::array();
    for (const auto& a : p.authors) {
      authors.push_back({{"family", a.family_name()}, {"given", a.given_names()}});
    }
    jp["authors"] = std::move(authors);
    if (p.corresponding) jp["corresponding"] = *p.corresponding;
    jp["citations"] = p.citations;
    if (p.alphabetical) jp["alphabetical"] = *p.alphabetical;
    if (p.contribution_declared) jp["contribution_declared"] = true;
    papers.push_back(std::move(jp));
  }
  doc["papers"] = std::move(papers);
  return doc.dump(2) + "\n";
}

bool detect_alphabetical(std::span<const Author> authors)
{
  for (std::size_t i = 1; i < authors.size(); ++i) {
    const auto prev = std::make_pair(fold(authors[i - 1].family_name()),
                                     fold(authors[i - 1].given_names()));
    const auto cur = std::make_pair(fold(authors[i].family_name()),
                                    fold(authors[i].given_names()));
    if (cur < prev) return false;
  }
  return true;
}

std::vector<ValidationIssue> validate_corpus(const Corpus& corpus)
{
  std::vector<ValidationIssue> issues;
  const bool needs_corresponding =
      corpus.defaults.policy && corpus.defaults.policy->kind == ConventionKind::Convention3;

  for (const auto& p : corpus.papers) {
    if (!p.alphabetical && p.author_count() > 1 && detect_alphabetical(p.authors)) {
      issues.push_back({p.id, "AlphabeticalLikely",
                        "authors appear in alphabetical order but the paper has no "
                        "'alphabetical' flag; equal weights will be applied unless "
                        "contributions are declared",
                        Severity::Warning});
    }
    if (needs_corresponding && !p.corresponding) {
      issues.push_back({p.id, "ConventionNeedsCorresponding",
                        "default convention c3 requires a corresponding author",
                        Severity::Warning});
    }
  }
  return issues;
}

}  // namespace credits
