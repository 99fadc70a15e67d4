#include <gtest/gtest.h>

#include "support.hpp"
#include "twosided/adaptive.hpp"
#include "twosided/adversary.hpp"
#include "twosided/errors.hpp"
#include "twosided/oracle.hpp"

using namespace twosided;

namespace {
PositionSet P(const char* text) { return PositionSet::parse(text); }

std::vector<std::int64_t> sizes_along(const AdaptiveStrategy& st, std::vector<int> answers) {
  std::vector<PositionSet> tests;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    const auto t = st.next_test(std::span<const int>(answers.data(), i));
    if (!t) break;
    tests.push_back(*t);
  }
  answers.resize(tests.size());
  const Replay rr = replay(st.space(), tests, answers);
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < rr.candidates.size(); ++i) out.push_back(rr.candidates[i].size());
  return out;
}
}  // namespace

TEST(Capacity, Examples) {
  EXPECT_EQ(cycle_capacity(3, 5, 1), 12);
  EXPECT_EQ(cycle_capacity(0, 7, 1), 7);
  EXPECT_EQ(path_capacity(6, 4, 1), 16);
  EXPECT_EQ(path_capacity(2, 8, 2), 16);
  EXPECT_EQ(path_capacity(0, 5, 1), 5);
  EXPECT_EQ(half_open_capacity(2, 5, 1), 10);
  EXPECT_EQ(open_capacity(2, 5, 1), 8);
  EXPECT_THROW(cycle_capacity(2, 3, 1), DomainError);
  EXPECT_THROW(path_capacity(2, 7, 2), DomainError);
}

TEST(Thresholds, Examples) {
  EXPECT_EQ(path_min_accuracy(3, 1), 3);
  EXPECT_EQ(path_min_accuracy(4, 1), 3);
  EXPECT_EQ(path_min_accuracy(9, 1), 4);
  EXPECT_EQ(path_min_accuracy(8, 2), 6);
  EXPECT_EQ(path_min_accuracy(100, 3), 10);
  EXPECT_EQ(cycle_min_accuracy(4, 1), 4);
  EXPECT_EQ(cycle_min_accuracy(5, 1), 5);
  EXPECT_EQ(cycle_min_accuracy(30, 2), 9);
}

TEST(CycleStrategy, HalvingSizes) {
  const AdaptiveStrategy st = cycle_strategy(12, 5, 1);
  EXPECT_EQ(st.depth(), 3);
  EXPECT_EQ(sizes_along(st, {0, 0, 0}), (std::vector<std::int64_t>{8, 6, 5}));
  EXPECT_EQ(sizes_along(st, {1, 0, 1}), (std::vector<std::int64_t>{8, 6, 5}));
  const StrategyCheck c = check_strategy(st, 5);
  EXPECT_TRUE(c.successful) << c.problem;
  EXPECT_TRUE(c.leaves_match);
  EXPECT_EQ(c.worst_size, 5);
}

TEST(CycleStrategy, SmallCases) {
  const AdaptiveStrategy zero = cycle_strategy(4, 4, 1);
  EXPECT_EQ(zero.depth(), 0);
  EXPECT_EQ(zero.node(zero.root()).answer, P("1-4"));
  const AdaptiveStrategy st = cycle_strategy(8, 5, 1);
  EXPECT_EQ(support::strategy_walk_failures(st, 5), 0);
}

TEST(ShiftingStrategy, Examples) {
  const AdaptiveStrategy st = path_shifting_strategy(9, 1);
  EXPECT_EQ(st.accuracy(), 4);
  EXPECT_EQ(st.depth(), 3);
  EXPECT_TRUE(check_strategy(st, 4).successful);
  EXPECT_EQ(support::strategy_walk_failures(st, 4), 0);

  const AdaptiveStrategy one = path_shifting_strategy(5, 1);
  EXPECT_EQ(one.depth(), 1);
  EXPECT_TRUE(check_strategy(one, 4).successful);

  const AdaptiveStrategy k2 = path_shifting_strategy(13, 2);
  EXPECT_TRUE(check_strategy(k2, 7).successful);
  EXPECT_EQ(support::strategy_walk_failures(k2, 7), 0);

  EXPECT_THROW(path_shifting_strategy(4, 1), DomainError);
  EXPECT_THROW(path_shifting_strategy(10, 0), DomainError);
}

TEST(SlidingStrategy, Examples) {
  const AdaptiveStrategy st = path_sliding_window_strategy(14, 2, 1);
  EXPECT_EQ(st.accuracy(), 7);
  EXPECT_EQ(st.depth(), 3);
  EXPECT_TRUE(check_strategy(st, 7).successful);
  EXPECT_EQ(support::strategy_walk_failures(st, 7), 0);

  const AdaptiveStrategy none = path_sliding_window_strategy(7, 2, 1);
  EXPECT_EQ(none.depth(), 0);

  const AdaptiveStrategy wide = path_sliding_window_strategy(12, 2, 2);
  EXPECT_EQ(wide.depth(), 1);
  EXPECT_TRUE(check_strategy(wide, 8).successful);

  // Too small a budget leaves oversized leaves.
  const AdaptiveStrategy short_budget = path_sliding_window_strategy(14, 2, 1, 1);
  EXPECT_FALSE(check_strategy(short_budget, 7).successful);

  EXPECT_THROW(path_sliding_window_strategy(14, 2, 3), DomainError);
  EXPECT_THROW(path_sliding_window_strategy(14, 2, 0), DomainError);
  EXPECT_THROW(path_sliding_window_strategy(14, 2, 1, -1), DomainError);
}

TEST(PathStrategy, Examples) {
  const AdaptiveStrategy a = path_strategy(10, 4, 1);
  EXPECT_EQ(a.depth(), 3);
  EXPECT_TRUE(check_strategy(a, 4).successful);

  const AdaptiveStrategy b = path_strategy(16, 8, 2);
  EXPECT_EQ(b.depth(), 2);
  EXPECT_TRUE(check_strategy(b, 8).successful);
  EXPECT_EQ(support::strategy_walk_failures(b, 8), 0);

  const AdaptiveStrategy c = path_strategy(6, 4, 1);
  EXPECT_EQ(c.node(c.root()).test, P("1-3"));
}

TEST(MinTests, Examples) {
  EXPECT_EQ(min_tests(Topology::Path, 16, 4, 1).tests, 6);
  EXPECT_EQ(min_tests(Topology::Cycle, 8, 8, 2).tests, 0);
  EXPECT_EQ(min_tests(Topology::Cycle, 12, 5, 1).tests, 3);
  const MinTests sliding = min_tests(Topology::Path, 14, 7, 2);
  EXPECT_EQ(sliding.tests, 3);
  EXPECT_FALSE(sliding.proven_optimal);
  EXPECT_TRUE(min_tests(Topology::Path, 10, 7, 2).proven_optimal);
  EXPECT_EQ(min_tests(Topology::Path, 4, 3, 1).tests, 1);
}

TEST(MinTests, Errors) {
  EXPECT_THROW(min_tests(Topology::Cycle, 9, 4, 1), DomainError);
  EXPECT_THROW(min_tests(Topology::Path, 9, 3, 1), DomainError);
  EXPECT_THROW(min_tests(Topology::Path, 10, 6, 2), DomainError);
  EXPECT_THROW(min_tests(Topology::Path, 0, 3, 1), DomainError);
  EXPECT_THROW(min_tests(Topology::Cycle, 20, 7, 2), DomainError);
}

// Every walk, every construction, small instances.
TEST(Constructions, EveryWalkSucceeds) {
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t n = 1; n <= 12; ++n) {
      for (std::int64_t s = 4 * k; s <= 4 * k + 2; ++s) {
        const AdaptiveStrategy p = path_strategy(n, s, k);
        ASSERT_EQ(support::strategy_walk_failures(p, s), 0) << "path N=" << n << " s=" << s << " k=" << k;
        ASSERT_EQ(p.depth(), min_tests(Topology::Path, n, s, k).tests);
        if (s > 4 * k || n <= s) {
          const AdaptiveStrategy c = cycle_strategy(n, s, k);
          ASSERT_EQ(support::strategy_walk_failures(c, s), 0) << "cycle N=" << n << " s=" << s << " k=" << k;
        }
      }
      if (n >= 4 * k + 1) {
        ASSERT_EQ(support::strategy_walk_failures(path_shifting_strategy(n, k), 3 * k + 1), 0) << n;
      }
      for (int l = 1; l <= k; ++l) {
        const AdaptiveStrategy w = path_sliding_window_strategy(n, k, l);
        ASSERT_EQ(support::strategy_walk_failures(w, 3 * k + l), 0) << n << " l=" << l;
      }
    }
  }
}

// At capacity the construction wins; one vertex more and the interval
// oracle needs an extra test.
TEST(Constructions, CapacityIsTight) {
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t s : {4 * k + 1, 4 * k + 2}) {
      for (int n = 1; n <= 3; ++n) {
        const std::int64_t nc = cycle_capacity(n, s, k);
        if (nc + 1 > 40) continue;
        EXPECT_TRUE(check_strategy(cycle_strategy(nc, s, k), s).successful);
        EXPECT_EQ(exact_min_tests(SearchSpace::cycle(nc, k), s, TestClass::Intervals, n + 1).min_tests, n);
        EXPECT_EQ(exact_min_tests(SearchSpace::cycle(nc + 1, k), s, TestClass::Intervals, n + 1).min_tests, n + 1);
      }
      for (int n = 1; n <= 3; ++n) {
        const std::int64_t np = path_capacity(n, s, k);
        if (np + 1 > 40) continue;
        EXPECT_TRUE(check_strategy(path_strategy(np, s, k), s).successful);
        EXPECT_EQ(exact_min_tests(SearchSpace::path(np, k), s, TestClass::Intervals, n + 1).min_tests, n);
        EXPECT_EQ(exact_min_tests(SearchSpace::path(np + 1, k), s, TestClass::Intervals, n + 1).min_tests, n + 1);
      }
    }
  }
}

TEST(Constructions, GreedyBeatsOneVertexPastCapacity) {
  const std::int64_t n_over = cycle_capacity(2, 5, 1) + 1;
  const SearchSpace sp = SearchSpace::cycle(n_over, 1);
  EXPECT_GE(sweep_greedy(sp, TestClass::AllSubsets, 2).value, 6);
}

TEST(SegmentStrategy, UnboundedVariants) {
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t s = 4 * k + 1; s <= 4 * k + 3; ++s) {
      for (int n = 0; n <= 4; ++n) {
        const auto open = SearchSpace::open_segment(open_capacity(n, s, k), k);
        const AdaptiveStrategy a = segment_strategy(open, s);
        EXPECT_LE(a.depth(), n);
        EXPECT_TRUE(check_strategy(a, s).successful) << "open n=" << n << " s=" << s << " k=" << k;
        const auto half = SearchSpace::half_open_segment(half_open_capacity(n, s, k), k);
        const AdaptiveStrategy b = segment_strategy(half, s);
        EXPECT_LE(b.depth(), n);
        EXPECT_TRUE(check_strategy(b, s).successful) << "half-open n=" << n << " s=" << s << " k=" << k;
      }
    }
  }
  EXPECT_THROW(segment_strategy(SearchSpace::cycle(10, 1), 5), DomainError);
}

TEST(Serialization, RoundTrip) {
  const AdaptiveStrategy st = path_strategy(10, 4, 1);
  const std::string text = st.serialize();
  const AdaptiveStrategy back = AdaptiveStrategy::parse(text, st.space(), 4, st.test_budget());
  EXPECT_EQ(back.serialize(), text);
  EXPECT_EQ(back.depth(), st.depth());
  EXPECT_TRUE(check_strategy(back, 4).successful);
  EXPECT_THROW(AdaptiveStrategy::parse("node 0 test=1-3 on0=7 on1=8\n", st.space(), 4, 3), DomainError);
}

TEST(StrategyCheck, DetectsWrongLeaf) {
  const SearchSpace sp = SearchSpace::path(6, 1);
  AdaptiveStrategy bad(sp, 4, 1);
  const int l0 = bad.add_leaf(P("4-6"));
  const int l1 = bad.add_leaf(P("1-4"));
  bad.set_root(bad.add_test(P("1-3"), l0, l1));
  const StrategyCheck c = check_strategy(bad, 4);
  EXPECT_FALSE(c.leaves_match);
  EXPECT_FALSE(c.problem.empty());
}
