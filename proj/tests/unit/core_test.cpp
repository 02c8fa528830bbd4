#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "credits/core.hpp"
#include "oracles.hpp"

using namespace credits;

namespace {

void expect_error(ErrorCode code, auto&& fn)
{
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::vector<Position> mapping_of(const Permutation& p)
{
  return {p.mapping().begin(), p.mapping().end()};
}

}  // namespace

TEST(Author, TrimsAndComparesExactly)
{
  Author a("  Abbas ", " Ash ");
  EXPECT_EQ(a.family_name(), "Abbas");
  EXPECT_EQ(a.given_names(), "Ash");
  EXPECT_EQ(a, Author("Abbas", "Ash"));
  EXPECT_NE(a, Author("abbas", "Ash"));
  EXPECT_EQ(Author("Solo").display_name(), "Solo");
  expect_error(ErrorCode::InvalidAuthor, [] { Author("   ", "X"); });
}

TEST(Paper, InvariantsChecked)
{
  Paper p{"p1", {Author("A"), Author("B")}, 2, 10, std::nullopt, false};
  EXPECT_NO_THROW(validate_paper(p));
  EXPECT_EQ(p.position_of(Author("B")), Position{2});
  EXPECT_FALSE(p.position_of(Author("C")));

  Paper bad_j = p;
  bad_j.corresponding = 3;
  expect_error(ErrorCode::BadCorrespondingIndex, [&] { validate_paper(bad_j); });

  Paper dup = p;
  dup.authors.push_back(Author("A"));
  expect_error(ErrorCode::DuplicateAuthorInPaper, [&] { validate_paper(dup); });

  Paper neg = p;
  neg.citations = -1;
  expect_error(ErrorCode::NegativeCitations, [&] { validate_paper(neg); });

  Paper empty = p;
  empty.authors.clear();
  empty.corresponding.reset();
  expect_error(ErrorCode::ZeroAuthors, [&] { validate_paper(empty); });
}

TEST(Permutation, MakeAcceptsBijections)
{
  EXPECT_TRUE(make_permutation({1, 2, 3}).is_identity());
  EXPECT_EQ(mapping_of(make_permutation({5, 1, 2, 3, 4})), (std::vector<Position>{5, 1, 2, 3, 4}));
}

TEST(Permutation, MakeRejectsNonBijections)
{
  expect_error(ErrorCode::DuplicatePosition, [] { make_permutation({1, 1, 2}); });
  expect_error(ErrorCode::OutOfRangePosition, [] { make_permutation({0, 1, 2}); });
  expect_error(ErrorCode::OutOfRangePosition, [] { make_permutation({1, 2, 4}); });
  expect_error(ErrorCode::EmptyMapping, [] { make_permutation({}); });
}

TEST(Permutation, InvertExamples)
{
  EXPECT_TRUE(invert(Permutation::identity(3)).is_identity());

  // Frozen from the compose-to-identity oracle.
  const std::vector<Position> p1{5, 1, 2, 3, 4};
  const std::vector<Position> q1{2, 3, 4, 5, 1};
  ASSERT_TRUE(oracle::undoes(p1, q1));
  EXPECT_EQ(mapping_of(invert(make_permutation(p1))), q1);

  const std::vector<Position> p2{4, 1, 6, 2, 3, 5};
  const std::vector<Position> q2{2, 4, 5, 1, 6, 3};
  ASSERT_TRUE(oracle::undoes(p2, q2));
  EXPECT_EQ(mapping_of(invert(make_permutation(p2))), q2);
}

TEST(Permutation, ComposeExamples)
{
  const auto p = make_permutation({4, 1, 6, 2, 3, 5});
  EXPECT_EQ(compose(Permutation::identity(6), p), p);
  EXPECT_EQ(compose(p, Permutation::identity(6)), p);
  EXPECT_TRUE(compose(make_permutation({5, 1, 2, 3, 4}), make_permutation({2, 3, 4, 5, 1}))
                  .is_identity());
  EXPECT_TRUE(compose(make_permutation({2, 1}), make_permutation({2, 1})).is_identity());
  expect_error(ErrorCode::SizeMismatch,
               [] { compose(Permutation::identity(2), Permutation::identity(3)); });
}

TEST(Permutation, ComposeMatchesSequentialApplication)
{
  const std::vector<int> items{10, 20, 30, 40};
  for (const auto& a : oracle::all_mappings(4)) {
    for (const auto& b : oracle::all_mappings(4)) {
      const auto r = compose(make_permutation(a), make_permutation(b));
      EXPECT_EQ(r.apply(items), oracle::reorder(oracle::reorder(items, a), b));
    }
  }
}

TEST(Permutation, InverseLawsForEverySmallPermutation)
{
  for (std::size_t k = 1; k <= 6; ++k) {
    for (const auto& m : oracle::all_mappings(k)) {
      const auto p = make_permutation(m);
      EXPECT_TRUE(compose(p, invert(p)).is_identity()) << p.to_string();
      EXPECT_TRUE(compose(invert(p), p).is_identity()) << p.to_string();
    }
  }
}

// Acceptance iff entries are distinct: exhaustive over {1..k}^k for k <= 4,
// sampled for k = 5, 6.
TEST(Permutation, AcceptsExactlyTheBijections)
{
  auto check = [](const std::vector<Position>& m) {
    std::vector<Position> sorted = m;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    bool accepted = true;
    try {
      make_permutation(m);
    } catch (const Error&) {
      accepted = false;
    }
    EXPECT_EQ(accepted, distinct);
  };

  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<Position> m(k, 1);
    while (true) {
      check(m);
      std::size_t i = 0;
      while (i < k && m[i] == k) m[i++] = 1;
      if (i == k) break;
      ++m[i];
    }
  }

  std::mt19937_64 rng(7);
  for (std::size_t k = 5; k <= 6; ++k) {
    std::uniform_int_distribution<Position> d(1, k);
    for (int n = 0; n < 2000; ++n) {
      std::vector<Position> m(k);
      for (auto& x : m) x = d(rng);
      check(m);
    }
  }
}

TEST(Permutation, ApplyPreservesMultiset)
{
  std::mt19937_64 rng(11);
  for (std::size_t k = 1; k <= 7; ++k) {
    std::vector<int> items(k);
    std::uniform_int_distribution<int> d(0, 3);
    for (auto& x : items) x = d(rng);
    std::vector<Position> m(k);
    std::iota(m.begin(), m.end(), Position{1});
    std::shuffle(m.begin(), m.end(), rng);
    auto out = make_permutation(m).apply(items);
    std::sort(out.begin(), out.end());
    std::sort(items.begin(), items.end());
    EXPECT_EQ(out, items);
  }
  expect_error(ErrorCode::SizeMismatch,
               [] { Permutation::identity(2).apply(std::vector<int>{1, 2, 3}); });
}
