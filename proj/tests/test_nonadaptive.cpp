#include <gtest/gtest.h>

#include <map>
#include <random>

#include "support.hpp"
#include "twosided/errors.hpp"
#include "twosided/nonadaptive.hpp"

using namespace twosided;

namespace {

const std::vector<std::string> kGolden16 = {
    "0000000011111111", "0000000110000000", "0000001100111111",
    "0000011001100000", "0000110011001111", "0001100110011000",
};

// Accuracy guaranteed by stopping at the first small enough prefix,
// computed from walks alone: for each answer prefix, the positions the
// target can occupy when the prefix ends.
std::int64_t walk_accuracy(const SearchSpace& sp, const TestMatrix& m) {
  const auto tests = m.tests();
  std::map<std::vector<int>, std::set<Vertex>> at;
  support::for_each_walk(sp, tests.size() + 1, [&](const std::vector<Vertex>& w) {
    std::vector<int> prefix;
    at[prefix].insert(w[0]);
    for (std::size_t i = 0; i < tests.size(); ++i) {
      prefix.push_back(support::member(tests[i], w[i]) ? 1 : 0);
      at[prefix].insert(w[i + 1]);
    }
  });
  std::int64_t worst = 0;
  for (const auto& [answers, ends] : at) {
    if (answers.size() != tests.size()) continue;
    std::int64_t best = static_cast<std::int64_t>(at[{}].size());
    for (std::size_t i = 1; i <= answers.size(); ++i) {
      const std::vector<int> p(answers.begin(), answers.begin() + static_cast<std::ptrdiff_t>(i));
      best = std::min<std::int64_t>(best, static_cast<std::int64_t>(at[p].size()));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

TEST(ExpandingMatrix, GoldenN16) {
  const TestMatrix m = expanding_accuracy_matrix(16);
  EXPECT_EQ(m, TestMatrix::from_rows(kGolden16));
  EXPECT_EQ(m.rows(), 6);
  EXPECT_EQ(m.at(2, 8), 1);
  const MatrixEvaluation e = evaluate_matrix(SearchSpace::path(16, 1), m, 4);
  EXPECT_TRUE(e.success);
  EXPECT_EQ(e.achieved_accuracy, 4);
}

TEST(ExpandingMatrix, RowCountAndWalks) {
  for (std::int64_t n = 5; n <= 30; ++n) {
    const TestMatrix m = expanding_accuracy_matrix(n);
    EXPECT_EQ(m.rows(), (n + 1) / 2 - 2);
    EXPECT_TRUE(evaluate_matrix(SearchSpace::path(n, 1), m, 4).success) << n;
  }
  const SearchSpace p10 = SearchSpace::path(10, 1);
  EXPECT_LE(walk_accuracy(p10, expanding_accuracy_matrix(10)), 4);
  EXPECT_THROW(expanding_accuracy_matrix(4), DomainError);
}

TEST(GeneralK, Examples) {
  EXPECT_EQ(general_k_matrix(16, 1), expanding_accuracy_matrix(16));
  const TestMatrix m = general_k_matrix(20, 2);
  EXPECT_EQ(m.cols(), 20);
  EXPECT_TRUE(evaluate_matrix(SearchSpace::path(20, 2), m, 8).success);
  EXPECT_THROW(general_k_matrix(12, 2), DomainError);
  EXPECT_THROW(general_k_matrix(13, 0), DomainError);
}

TEST(GeneralK, DilationSucceeds) {
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t n = 6 * k + 1; n <= 20; ++n) {
      const MatrixEvaluation e = evaluate_matrix(SearchSpace::path(n, k), general_k_matrix(n, k), 4 * k);
      EXPECT_TRUE(e.success) << "N=" << n << " k=" << k << " achieved " << e.achieved_accuracy;
    }
  }
}

TEST(Thresholds, Examples) {
  EXPECT_EQ(nonadaptive_min_accuracy(4, 2), 4);
  EXPECT_EQ(nonadaptive_min_accuracy(5, 2), 5);
  EXPECT_EQ(nonadaptive_min_accuracy(10, 2), 7);
  EXPECT_EQ(nonadaptive_min_accuracy(12, 2), 8);
  EXPECT_EQ(nonadaptive_min_accuracy(13, 2), 8);
  EXPECT_EQ(nonadaptive_min_accuracy(100, 1), 4);
  EXPECT_THROW(nonadaptive_min_accuracy(0, 1), DomainError);
}

TEST(Evaluate, FailingMatrices) {
  const SearchSpace p12 = SearchSpace::path(12, 1);
  TestMatrix zero(3, 12);
  const MatrixEvaluation z = evaluate_matrix(p12, zero, 4);
  EXPECT_FALSE(z.success);
  EXPECT_EQ(z.worst_stop_row, -1);
  EXPECT_EQ(z.consistent_branches, 1);

  const TestMatrix dropped = expanding_accuracy_matrix(12).without_last_row();
  const MatrixEvaluation d = evaluate_matrix(p12, dropped, 4);
  EXPECT_FALSE(d.success);
  EXPECT_GT(d.achieved_accuracy, 4);
  EXPECT_EQ(d.worst_answers.size(), 3u);

  EXPECT_THROW(evaluate_matrix(SearchSpace::path(11, 1), zero, 4), DomainError);
}

// evaluate_matrix against the walk-level reference on random matrices.
TEST(Evaluate, MatchesWalkReference) {
  std::mt19937_64 rng(7);
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t n = 2; n <= 10; ++n) {
      for (int trial = 0; trial < 6; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 3);
        TestMatrix m(rows, n);
        for (int i = 1; i <= rows; ++i) {
          for (std::int64_t j = 1; j <= n; ++j) m.set(i, j, static_cast<int>(rng() % 2));
        }
        const SearchSpace sp = SearchSpace::path(n, k);
        ASSERT_EQ(evaluate_matrix(sp, m, 1).achieved_accuracy, walk_accuracy(sp, m)) << m.to_text();
      }
    }
  }
}

TEST(TestMatrix, TextRoundTrip) {
  const TestMatrix m = expanding_accuracy_matrix(11);
  EXPECT_EQ(TestMatrix::parse(m.to_text()), m);
  EXPECT_EQ(TestMatrix::parse("01\r\n10\n\n"), TestMatrix::from_rows({"01", "10"}));
  EXPECT_THROW(TestMatrix::parse("01\n1\n"), DomainError);
  EXPECT_THROW(TestMatrix::parse("02\n"), DomainError);
  EXPECT_THROW(TestMatrix::parse(""), DomainError);
  EXPECT_THROW(m.at(0, 1), DomainError);
  EXPECT_EQ(m.row_set(1).to_string(), "7-11");
}
