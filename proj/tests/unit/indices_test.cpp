#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "credits/indices.hpp"
#include "oracles.hpp"

using namespace credits;

namespace {

std::vector<double> random_values(std::mt19937_64& rng, bool integral)
{
  std::uniform_int_distribution<std::size_t> len(0, 20);
  std::uniform_real_distribution<double> real(0.0, 50.0);
  std::uniform_int_distribution<int> whole(0, 50);
  std::vector<double> v(len(rng));
  for (auto& x : v) x = integral ? whole(rng) : real(rng);
  return v;
}

Paper paper(std::string id, std::vector<Author> authors, long long citations)
{
  Paper p;
  p.id = std::move(id);
  p.authors = std::move(authors);
  p.citations = citations;
  p.alphabetical = false;
  return p;
}

}  // namespace

TEST(WeightedCitations, Examples)
{
  EXPECT_EQ(weighted_citations(10, 0.25), 2.5);
  EXPECT_EQ(weighted_citations(0, 0.3), 0.0);
  EXPECT_EQ(weighted_citations(7, 1.0), 7.0);
}

TEST(HIndex, Examples)
{
  const std::vector<double> a{3.2, 2.5, 1.0};
  const std::vector<double> b{5, 4, 3, 2, 1};
  ASSERT_EQ(oracle::h_index(a), 2);
  ASSERT_EQ(oracle::h_index(b), 3);
  EXPECT_EQ(h_index({}), 0);
  EXPECT_EQ(h_index(a), 2);
  EXPECT_EQ(h_index(b), 3);
  EXPECT_EQ(h_index(std::vector<double>{0.5, 0.9}), 0);
}

TEST(GIndex, Examples)
{
  const std::vector<double> a{10, 5, 3};
  const std::vector<double> b{1, 1, 1};
  ASSERT_EQ(oracle::g_index(a), 3);
  ASSERT_EQ(oracle::g_index(b), 1);
  EXPECT_EQ(g_index({}), 0);
  EXPECT_EQ(g_index(a), 3);
  EXPECT_EQ(g_index(b), 1);
}

TEST(WeightedSum, Examples)
{
  EXPECT_EQ(wsum({}), 0.0);
  EXPECT_EQ(wsum(std::vector<double>{2.5, 0.5}), 3.0);
  EXPECT_EQ(wsum(std::vector<double>{7}), 7.0);
}

TEST(Indices, MatchBruteForceOracles)
{
  std::mt19937_64 rng(2024);
  for (int n = 0; n < 1000; ++n) {
    const auto v = random_values(rng, n % 2 == 0);
    EXPECT_EQ(h_index(v), oracle::h_index(v));
    EXPECT_EQ(g_index(v), oracle::g_index(v));
  }
}

TEST(Indices, Monotone)
{
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> bump(0.0, 10.0);
  for (int n = 0; n < 500; ++n) {
    auto v = random_values(rng, n % 3 == 0);
    if (v.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
    auto up = v;
    up[pick(rng)] += bump(rng);
    EXPECT_GE(h_index(up), h_index(v));
    EXPECT_GE(g_index(up), g_index(v));
    EXPECT_GE(wsum(up), wsum(v));
  }
}

TEST(Indices, WeightedHNeverExceedsUnweighted)
{
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  for (int n = 0; n < 500; ++n) {
    const auto raw = random_values(rng, true);
    auto weighted = raw;
    for (auto& x : weighted) x *= weight(rng);
    EXPECT_LE(h_index(weighted), h_index(raw));
  }
}

TEST(Indices, CitationConservationPerPaper)
{
  std::mt19937_64 rng(17);
  const Author target("Abbas", "Ash");
  for (int n = 0; n < 100; ++n) {
    const Corpus corpus = oracle::random_corpus(rng, target, {20, 6, 50, true});
    for (const Paper& p : corpus.papers) {
      for (const auto& scheme : {SchemeSpec::equal(), SchemeSpec::arithmetic(),
                                 SchemeSpec::geometric(), SchemeSpec::harmonic()}) {
        const auto a = assignment_for(p, scheme, ConventionPolicy::convention3(),
                                      ResequenceMode::Weight);
        double total = 0.0;
        for (const auto& e : a.entries) total += weighted_citations(p.citations, e.weight);
        EXPECT_NEAR(total, static_cast<double>(p.citations), 1e-9);
      }
    }
  }
}

TEST(EvaluateAuthor, Examples)
{
  const Author target("Abbas", "Ash");
  const Author other("Zed", "Z");

  Corpus none_by_target{{paper("x", {other}, 4)}, {}};
  auto empty = evaluate_author(none_by_target, target, SchemeSpec::arithmetic(),
                               ConventionPolicy::none(), ResequenceMode::Author, IndexKind::H);
  EXPECT_EQ(empty.value, 0.0);
  EXPECT_TRUE(empty.per_paper.empty());

  Corpus solo{{paper("s", {target}, 9)}, {}};
  auto single = evaluate_author(solo, target, SchemeSpec::harmonic(),
                                ConventionPolicy::convention1(), ResequenceMode::Weight,
                                IndexKind::H);
  EXPECT_EQ(single.value, 1.0);
  ASSERT_EQ(single.per_paper.size(), 1u);
  EXPECT_EQ(single.per_paper[0], (PaperCredit{"s", 9, 1.0, 9.0}));

  Corpus two{{paper("first", {target, other}, 10), paper("second", {other, target}, 10)}, {}};
  auto sum = evaluate_author(two, target, SchemeSpec::arithmetic(), ConventionPolicy::none(),
                             ResequenceMode::Author, IndexKind::WeightedSum);
  ASSERT_EQ(sum.per_paper.size(), 2u);
  EXPECT_EQ(sum.per_paper[0].weight, 2.0 / 3.0);
  EXPECT_EQ(sum.per_paper[1].weight, 1.0 / 3.0);
  EXPECT_NEAR(sum.value, 10.0, 1e-12);
  EXPECT_EQ(sum.provenance, (Provenance{"arithmetic", "none", "author"}));
}

TEST(EvaluateAuthor, ReportsPapersInCorpusOrderWithExactProducts)
{
  std::mt19937_64 rng(3);
  const Author target("Abbas", "Ash");
  for (int n = 0; n < 50; ++n) {
    const Corpus corpus = oracle::random_corpus(rng, target);
    const auto r = evaluate_author(corpus, target, SchemeSpec::harmonic(),
                                   ConventionPolicy::convention2(), ResequenceMode::Author,
                                   IndexKind::G);
    std::size_t next = 0;
    for (const Paper& p : corpus.papers) {
      if (!p.position_of(target)) continue;
      ASSERT_LT(next, r.per_paper.size());
      const auto& row = r.per_paper[next++];
      EXPECT_EQ(row.paper_id, p.id);
      EXPECT_EQ(row.weighted_citations, static_cast<double>(row.citations) * row.weight);
    }
    EXPECT_EQ(next, r.per_paper.size());
  }
}

TEST(EvaluateAuthor, ErrorAbortsWithPaperId)
{
  const Author target("Abbas", "Ash");
  Corpus corpus{{paper("ok", {target, Author("Zed")}, 3), paper("bad", {Author("Zed"), target}, 5)},
                {}};
  corpus.papers[0].corresponding = 1;
  try {
    evaluate_author(corpus, target, SchemeSpec::arithmetic(), ConventionPolicy::convention3(),
                    ResequenceMode::Author, IndexKind::H);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingCorresponding);
    EXPECT_NE(std::string(e.what()).find("'bad'"), std::string::npos) << e.what();
  }
}

TEST(EvaluateAuthor, EqualSchemeIgnoresPolicyAndMode)
{
  std::mt19937_64 rng(8);
  const Author target("Abbas", "Ash");
  for (int n = 0; n < 50; ++n) {
    const Corpus corpus = oracle::random_corpus(rng, target, {20, 6, 50, true});
    for (auto index : {IndexKind::H, IndexKind::G, IndexKind::WeightedSum}) {
      const auto base = evaluate_author(corpus, target, SchemeSpec::equal(),
                                        ConventionPolicy::none(), ResequenceMode::Author, index);
      for (auto kind : {ConventionKind::Convention1, ConventionKind::Convention2,
                        ConventionKind::Convention3}) {
        for (auto mode : {ResequenceMode::Author, ResequenceMode::Weight}) {
          const auto r = evaluate_author(corpus, target, SchemeSpec::equal(),
                                         {kind, std::nullopt}, mode, index);
          EXPECT_EQ(r.value, base.value);
          EXPECT_EQ(r.per_paper, base.per_paper);
        }
      }
    }
  }
}
