#include "credits/cli.hpp"

#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "credits/corpus.hpp"
#include "credits/indices.hpp"
#include "credits/report.hpp"
#include "credits/resequencing.hpp"
#include "credits/weights.hpp"

namespace credits::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LookupFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::optional<std::string> corpus;
  std::string format = "table";
  std::optional<std::string> scheme;
  std::optional<double> ratio;
  std::optional<std::string> convention;
  std::optional<std::string> custom_perm;
  std::optional<std::string> mode;
  std::optional<std::string> index;
  long long k = 0;
  std::string paper;
  std::string family;
  std::string given;
  bool strict = false;
  std::vector<std::string> conventions;
};

// Resolved settings: flags > corpus defaults > built-ins.
struct RunConfig {
  SchemeSpec scheme = SchemeSpec::equal();
  ConventionPolicy policy = ConventionPolicy::none();
  ResequenceMode mode = ResequenceMode::Author;
  IndexKind index = IndexKind::H;
  OutputFormat format = OutputFormat::Table;
};

void add_scheme_flags(CLI::App* cmd, Flags& f)
{
  cmd->add_option("--scheme", f.scheme, "equal|arithmetic|geometric|harmonic");
  cmd->add_option("--ratio", f.ratio, "Geometric ratio in (0, 1]");
}

void add_policy_flags(CLI::App* cmd, Flags& f)
{
  cmd->add_option("--convention", f.convention, "none|c1|c2|c3|custom");
  cmd->add_option("--custom-perm", f.custom_perm,
                  "Comma-separated author permutation for --convention custom");
}

void add_mode_flag(CLI::App* cmd, Flags& f)
{
  cmd->add_option("--mode", f.mode, "author|weight");
}

void add_index_flag(CLI::App* cmd, Flags& f)
{
  cmd->add_option("--index", f.index, "h|g|wsum");
}

void add_author_flags(CLI::App* cmd, Flags& f)
{
  cmd->add_option("--family", f.family, "Family name of the evaluated author")->required();
  cmd->add_option("--given", f.given, "Given names of the evaluated author");
  cmd->add_flag("--strict", f.strict, "Fail with exit code 3 when the author has no papers");
}

Permutation parse_custom_perm(const std::string& text)
{
  std::vector<Position> mapping;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--custom-perm: '" + item + "' is not an integer");
    }
    if (used != item.size() || v < 1) {
      throw UsageError("--custom-perm: '" + item + "' is not a positive integer");
    }
    mapping.push_back(static_cast<Position>(v));
  }
  try {
    return make_permutation(std::move(mapping));
  } catch (const Error& e) {
    throw UsageError("--custom-perm: " + std::string(e.what()));
  }
}

SchemeSpec resolve_scheme(const Flags& f, const Corpus* corpus)
{
  SchemeSpec scheme = SchemeSpec::equal();
  if (f.scheme) {
    auto kind = parse_scheme_kind(*f.scheme);
    if (!kind) throw UsageError("unknown scheme '" + *f.scheme + "'");
    scheme = *kind == SchemeKind::Geometric ? SchemeSpec::geometric() : SchemeSpec{*kind, std::nullopt};
  } else if (corpus && corpus->defaults.scheme) {
    scheme = *corpus->defaults.scheme;
  }
  if (f.ratio) {
    if (scheme.kind != SchemeKind::Geometric) {
      throw UsageError("--ratio is only valid with the geometric scheme");
    }
    try {
      scheme = SchemeSpec::geometric(*f.ratio);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  return scheme;
}

ConventionPolicy policy_from_name(const std::string& name, const Flags& f)
{
  auto kind = parse_convention_kind(name);
  if (!kind) throw UsageError("unknown convention '" + name + "'");
  if (*kind == ConventionKind::Custom) {
    if (!f.custom_perm) throw UsageError("--convention custom requires --custom-perm");
    return ConventionPolicy::custom(parse_custom_perm(*f.custom_perm));
  }
  return {*kind, std::nullopt};
}

RunConfig resolve(const Flags& f, const Corpus* corpus)
{
  RunConfig cfg;
  cfg.format = *parse_output_format(f.format);
  cfg.scheme = resolve_scheme(f, corpus);

  if (f.convention) {
    cfg.policy = policy_from_name(*f.convention, f);
  } else if (corpus && corpus->defaults.policy) {
    cfg.policy = *corpus->defaults.policy;
  }
  const bool custom_requested =
      cfg.policy.kind == ConventionKind::Custom ||
      std::find(f.conventions.begin(), f.conventions.end(), "custom") != f.conventions.end();
  if (f.custom_perm && !custom_requested) {
    throw UsageError("--custom-perm is only valid with the custom convention");
  }

  if (f.mode) {
    auto mode = parse_resequence_mode(*f.mode);
    if (!mode) throw UsageError("unknown mode '" + *f.mode + "'");
    cfg.mode = *mode;
  } else if (corpus && corpus->defaults.mode) {
    cfg.mode = *corpus->defaults.mode;
  }

  if (f.index) {
    auto index = parse_index_kind(*f.index);
    if (!index) throw UsageError("unknown index '" + *f.index + "'");
    cfg.index = *index;
  }
  return cfg;
}

std::optional<Corpus> load_if_given(const Flags& f, std::ostream& err)
{
  if (!f.corpus) return std::nullopt;
  Corpus corpus = load_corpus(*f.corpus);
  for (const auto& issue : validate_corpus(corpus)) {
    err << "warning: " << issue.code << " [" << issue.paper_id << "]: " << issue.message
        << '\n';
  }
  return corpus;
}

const Corpus& require_corpus(const std::optional<Corpus>& corpus)
{
  if (!corpus) throw UsageError("--corpus is required for this command");
  return *corpus;
}

// Convention c3 needs a corresponding author on every paper it touches.
void check_corresponding(const ConventionPolicy& policy, const Paper& paper)
{
  if (policy.kind == ConventionKind::Convention3 && !paper.corresponding) {
    throw Error(ErrorCode::MissingCorresponding,
                "ConventionNeedsCorresponding: paper '" + paper.id +
                    "' has no corresponding author, required by convention c3");
  }
}

Author target_author(const Flags& f)
{
  try {
    return Author(f.family, f.given);
  } catch (const Error& e) {
    throw UsageError("--family: " + std::string(e.what()));
  }
}

IndexReport evaluate(const Corpus& corpus, const Author& target, const RunConfig& cfg,
                     const ConventionPolicy& policy, bool strict)
{
  bool found = false;
  for (const auto& p : corpus.papers) {
    if (!p.position_of(target)) continue;
    found = true;
    check_corresponding(policy, p);
  }
  if (!found && strict) {
    throw LookupFailure("author '" + target.display_name() + "' has no papers in the corpus");
  }
  return evaluate_author(corpus, target, cfg.scheme, policy, cfg.mode, cfg.index);
}

int cmd_weights(const Flags& f, std::ostream& out, std::ostream& err)
{
  if (f.k < 1) throw UsageError("--k must be at least 1");
  const auto corpus = load_if_given(f, err);
  const RunConfig cfg = resolve(f, corpus ? &*corpus : nullptr);
  out << render_weights(make_weights(cfg.scheme, static_cast<std::size_t>(f.k)), cfg.format);
  return kOk;
}

int cmd_assign(const Flags& f, std::ostream& out, std::ostream& err)
{
  const auto loaded = load_if_given(f, err);
  const Corpus& corpus = require_corpus(loaded);
  const RunConfig cfg = resolve(f, &corpus);
  const Paper* paper = corpus.find(f.paper);
  if (!paper) throw LookupFailure("unknown paper id '" + f.paper + "'");
  check_corresponding(cfg.policy, *paper);
  out << render_assignment(assignment_for(*paper, cfg.scheme, cfg.policy, cfg.mode), cfg.format);
  return kOk;
}

int cmd_index(const Flags& f, std::ostream& out, std::ostream& err)
{
  const auto loaded = load_if_given(f, err);
  const Corpus& corpus = require_corpus(loaded);
  const RunConfig cfg = resolve(f, &corpus);
  const Author target = target_author(f);
  out << render_index_report(evaluate(corpus, target, cfg, cfg.policy, f.strict), cfg.format);
  return kOk;
}

int cmd_compare(const Flags& f, std::ostream& out, std::ostream& err)
{
  const auto loaded = load_if_given(f, err);
  const Corpus& corpus = require_corpus(loaded);
  if (f.conventions.empty()) throw UsageError("--conventions needs at least one entry");
  const RunConfig cfg = resolve(f, &corpus);
  const Author target = target_author(f);

  std::vector<ComparisonRow> rows;
  for (const auto& name : f.conventions) {
    const ConventionPolicy policy = policy_from_name(name, f);
    const IndexReport report = evaluate(corpus, target, cfg, policy, f.strict);
    rows.push_back({policy.tag(), cfg.mode, cfg.index, report.value});
  }
  out << render_comparison(rows, cfg.format);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Authorship credit allocation and weighted citation indices", "credits"};
  app.require_subcommand(1);

  Flags f;
  app.add_option("--corpus", f.corpus, "Corpus JSON file");
  app.add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"table", "csv"}));

  auto* weights = app.add_subcommand("weights", "Print the weight vector of a scheme");
  weights->fallthrough();
  weights->add_option("--k", f.k, "Number of authors")->required();
  add_scheme_flags(weights, f);

  auto* assign = app.add_subcommand("assign", "Show the credit assignment for one paper");
  assign->fallthrough();
  assign->add_option("--paper", f.paper, "Paper id")->required();
  add_scheme_flags(assign, f);
  add_policy_flags(assign, f);
  add_mode_flag(assign, f);

  auto* index = app.add_subcommand("index", "Compute a weighted citation index for an author");
  index->fallthrough();
  add_author_flags(index, f);
  add_scheme_flags(index, f);
  add_policy_flags(index, f);
  add_mode_flag(index, f);
  add_index_flag(index, f);

  auto* compare = app.add_subcommand("compare", "Compare an author's index across conventions");
  compare->fallthrough();
  add_author_flags(compare, f);
  compare->add_option("--conventions", f.conventions, "Comma-separated convention list")
      ->required()
      ->delimiter(',');
  add_scheme_flags(compare, f);
  compare->add_option("--custom-perm", f.custom_perm,
                      "Comma-separated author permutation for the custom convention");
  add_mode_flag(compare, f);
  add_index_flag(compare, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (weights->parsed()) return cmd_weights(f, out, err);
    if (assign->parsed()) return cmd_assign(f, out, err);
    if (index->parsed()) return cmd_index(f, out, err);
    return cmd_compare(f, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const LookupFailure& e) {
    err << "not found: " << e.what() << '\n';
    return kLookupFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCorpusError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("credits");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace credits::cli
