#include <gtest/gtest.h>

#include <map>

#include <json.hpp>

#include "support.hpp"
#include "twosided/adaptive.hpp"
#include "twosided/errors.hpp"
#include "twosided/nonadaptive.hpp"
#include "twosided/oracle.hpp"

using namespace twosided;

namespace {

// Plain minimax over bitmasks with the neighborhood taken from the
// distance scan.  Tests range over subsets of the current candidates.
struct Reference {
  SearchSpace sp;
  std::int64_t s;
  std::map<std::pair<unsigned, int>, bool> memo;

  unsigned grow(unsigned kept) const {
    unsigned out = 0;
    for (Vertex v = 1; v <= sp.num_vertices; ++v) {
      if (!(kept >> (v - 1) & 1u)) continue;
      for (Vertex u : support::reachable(sp, v)) out |= 1u << (u - 1);
    }
    return out;
  }
  int announced(unsigned kept) const {
    return __builtin_popcount(sp.moves_after_last_test ? grow(kept) : kept);
  }
  bool win(unsigned d, int left) {
    if (left == 0) return false;
    const auto key = std::make_pair(d, left);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (unsigned t = d;; t = (t - 1) & d) {
      bool both = true;
      for (unsigned kept : {d & t, d & ~t}) {
        if (kept == 0 || announced(kept) <= s) continue;
        if (!win(grow(kept), left - 1)) {
          both = false;
          break;
        }
      }
      if (both) {
        ok = true;
        break;
      }
      if (t == 0) break;
    }
    memo[key] = ok;
    return ok;
  }
  std::optional<int> min_tests(int budget) {
    const unsigned full = (1u << sp.num_vertices) - 1;
    if (sp.num_vertices <= s) return 0;
    for (int n = 1; n <= budget; ++n) {
      if (win(full, n)) return n;
    }
    return std::nullopt;
  }
};

}  // namespace

TEST(Oracle, Examples) {
  EXPECT_EQ(exact_min_tests(SearchSpace::path(10, 1), 4, TestClass::Intervals, 6).min_tests, 3);
  EXPECT_EQ(exact_min_tests(SearchSpace::path(4, 1), 4, TestClass::Intervals, 3).min_tests, 0);
  const auto c8a = exact_min_tests(SearchSpace::cycle(8, 1), 5, TestClass::AllSubsets, 4).min_tests;
  const auto c8i = exact_min_tests(SearchSpace::cycle(8, 1), 5, TestClass::Intervals, 4).min_tests;
  EXPECT_EQ(c8a, 2);
  EXPECT_EQ(c8i, 2);
  EXPECT_EQ(exact_min_accuracy(SearchSpace::path(9, 1), std::nullopt, TestClass::AllSubsets), 4);
  EXPECT_EQ(exact_min_accuracy(SearchSpace::cycle(4, 1), std::nullopt, TestClass::AllSubsets), 4);
  EXPECT_EQ(exact_min_accuracy(SearchSpace::cycle(9, 1), std::nullopt, TestClass::AllSubsets), 5);
  EXPECT_EQ(exact_min_tests(SearchSpace::path(6, 1).frozen_at_end(), 4, TestClass::Intervals, 3).min_tests, 1);
  EXPECT_FALSE(exact_min_tests(SearchSpace::path(16, 1), 4, TestClass::Intervals, 5).min_tests.has_value());
}

TEST(Oracle, MatchesBitmaskReference) {
  for (const bool cyc : {false, true}) {
    for (const bool frozen : {false, true}) {
      for (int k = 1; k <= 2; ++k) {
        for (std::int64_t n = 1; n <= 7; ++n) {
          SearchSpace sp = cyc ? SearchSpace::cycle(n, k) : SearchSpace::path(n, k);
          if (frozen) sp = sp.frozen_at_end();
          for (std::int64_t s = 1; s <= n; ++s) {
            Reference ref{sp, s, {}};
            ASSERT_EQ(exact_min_tests(sp, s, TestClass::AllSubsets, 4).min_tests, ref.min_tests(4))
                << (cyc ? "C" : "P") << n << " k=" << k << " s=" << s << " frozen=" << frozen;
          }
        }
      }
    }
  }
}

TEST(Oracle, UnboundedAgreesWithThresholds) {
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t n = 1; n <= 9; ++n) {
      EXPECT_EQ(exact_min_accuracy(SearchSpace::path(n, k), std::nullopt, TestClass::AllSubsets),
                path_min_accuracy(n, k))
          << "P" << n << " k=" << k;
      EXPECT_EQ(exact_min_accuracy(SearchSpace::cycle(n, k), std::nullopt, TestClass::AllSubsets),
                cycle_min_accuracy(n, k))
          << "C" << n << " k=" << k;
    }
  }
}

TEST(Oracle, IntervalsMatchAllSubsetsOnSmallPaths) {
  for (std::int64_t n = 2; n <= 9; ++n) {
    for (std::int64_t s = 4; s <= 5; ++s) {
      const SearchSpace sp = SearchSpace::path(n, 1);
      EXPECT_EQ(exact_min_tests(sp, s, TestClass::Intervals, 6).min_tests,
                exact_min_tests(sp, s, TestClass::AllSubsets, 6).min_tests)
          << n << " s=" << s;
    }
  }
}

TEST(Oracle, ExtractedStrategyReplays) {
  for (const auto& [n, s, k] : std::vector<std::tuple<std::int64_t, std::int64_t, int>>{
           {10, 4, 1}, {12, 5, 1}, {9, 4, 1}, {14, 8, 2}}) {
    const SearchSpace sp = SearchSpace::path(n, k);
    const GameValue v = exact_min_tests(sp, s, TestClass::Intervals, 6, true);
    ASSERT_TRUE(v.min_tests.has_value());
    ASSERT_TRUE(v.strategy.has_value());
    const StrategyCheck c = check_strategy(*v.strategy, s);
    EXPECT_TRUE(c.successful) << c.problem;
    EXPECT_EQ(c.depth, *v.min_tests);
    EXPECT_EQ(support::strategy_walk_failures(*v.strategy, s), 0);
  }
  GameSolver solver(SearchSpace::path(10, 1), 4, TestClass::Intervals);
  EXPECT_THROW(solver.extract_strategy(2), DomainError);
}

TEST(Oracle, Caps) {
  EXPECT_THROW(exact_min_tests(SearchSpace::path(11, 1), 4, TestClass::AllSubsets, 3), ResourceLimitError);
  EXPECT_THROW(exact_min_tests(SearchSpace::path(41, 1), 4, TestClass::Intervals, 3), ResourceLimitError);
  EXPECT_THROW(exact_min_tests(SearchSpace::open_segment(8, 1), 5, TestClass::Intervals, 3), DomainError);
  EXPECT_THROW(exact_best_matrix(SearchSpace::path(9, 1), 4, 4), ResourceLimitError);
  EXPECT_THROW(exact_min_tests(SearchSpace::path(8, 1), 4, TestClass::Intervals, -1), DomainError);
}

TEST(MatrixSearch, Examples) {
  const MatrixSearchResult a = exact_best_matrix(SearchSpace::path(8, 1), 4, 2);
  EXPECT_TRUE(a.exists);
  ASSERT_TRUE(a.matrix.has_value());
  EXPECT_TRUE(evaluate_matrix(SearchSpace::path(8, 1), *a.matrix, 4).success);
  EXPECT_FALSE(exact_best_matrix(SearchSpace::path(8, 1), 4, 1).exists);
  EXPECT_FALSE(exact_best_matrix(SearchSpace::path(7, 1), 3, 4).exists);
  EXPECT_TRUE(exact_best_matrix(SearchSpace::path(4, 1), 4, 0).exists);
  EXPECT_FALSE(exact_best_matrix(SearchSpace::path(5, 1), 4, 0).exists);
}

// The adaptive cut only removes dead branches.
TEST(MatrixSearch, PruningDoesNotChangeAnswer) {
  MatrixSearchOptions plain;
  plain.adaptive_pruning = false;
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t n = 3; n <= 8; ++n) {
      for (int rows = 1; rows * n <= 24; ++rows) {
        for (std::int64_t s = 2; s < n; ++s) {
          const SearchSpace sp = SearchSpace::path(n, k);
          const MatrixSearchResult with = exact_best_matrix(sp, s, rows);
          const MatrixSearchResult without = exact_best_matrix(sp, s, rows, plain);
          ASSERT_EQ(with.exists, without.exists) << n << " k=" << k << " rows=" << rows << " s=" << s;
          if (with.exists) ASSERT_TRUE(evaluate_matrix(sp, *with.matrix, s).success);
        }
      }
    }
  }
}

// Smallest accuracy reachable by some matrix with enough rows equals the
// non-adaptive threshold.
TEST(MatrixSearch, ThresholdsSmallPaths) {
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t n = 2; n <= 8; ++n) {
      const int rows = static_cast<int>(std::min<std::int64_t>(4, 32 / n));
      const SearchSpace sp = SearchSpace::path(n, k);
      std::int64_t best = n;
      for (std::int64_t s = n - 1; s >= 1; --s) {
        if (!exact_best_matrix(sp, s, rows).exists) break;
        best = s;
      }
      EXPECT_EQ(best, nonadaptive_min_accuracy(n, k)) << "P" << n << " k=" << k;
    }
  }
}

TEST(OracleRecord, Json) {
  OracleRecord r;
  r.n_vertices = 10;
  r.s = 4;
  r.min_tests = 3;
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["topology"], "path");
  EXPECT_EQ(j["N"], 10);
  EXPECT_EQ(j["min_tests"], 3);
  r.min_tests.reset();
  EXPECT_TRUE(nlohmann::json::parse(r.to_json())["min_tests"].is_null());
}

// Existence against plain enumeration of every matrix, tiny sizes.
TEST(MatrixSearch, MatchesEnumeration) {
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t n = 2; n <= 6; ++n) {
      for (int rows = 1; rows * n <= 12; ++rows) {
        const SearchSpace sp = SearchSpace::path(n, k);
        const unsigned cells = static_cast<unsigned>(rows * n);
        for (std::int64_t s = 1; s < n; ++s) {
          bool any = false;
          for (unsigned bits = 0; bits < (1u << cells) && !any; ++bits) {
            TestMatrix m(rows, n);
            for (unsigned c = 0; c < cells; ++c) {
              m.set(static_cast<int>(c / n) + 1, static_cast<std::int64_t>(c % n) + 1, static_cast<int>(bits >> c & 1u));
            }
            any = evaluate_matrix(sp, m, s).success;
          }
          ASSERT_EQ(exact_best_matrix(sp, s, rows).exists, any) << "P" << n << " k=" << k << " rows=" << rows << " s=" << s;
        }
      }
    }
  }
}

// Frozen target on a cycle: one test splits 2s vertices into two arcs of s,
// so one test handles N = 2s.  Confirmed here walk by walk.
TEST(Oracle, FrozenCycleOneTest) {
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t s = 4 * k; s <= 4 * k + 1; ++s) {
      const SearchSpace sp = SearchSpace::cycle(2 * s, k).frozen_at_end();
      const GameValue v = exact_min_tests(sp, s, TestClass::Intervals, 2, true);
      ASSERT_EQ(v.min_tests, 1);
      EXPECT_EQ(support::strategy_walk_failures(*v.strategy, s), 0);
      EXPECT_EQ(exact_min_tests(SearchSpace::cycle(2 * s + 1, k).frozen_at_end(), s, TestClass::Intervals, 2).min_tests, 2);
    }
  }
}
