#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twosided/search_space.hpp"

namespace twosided {

// Internal nodes carry a test and two children (index 0 for answer 0);
// leaves carry the announced answer set. An empty leaf set marks an
// answer sequence no target walk can produce.
struct StrategyNode {
  std::optional<PositionSet> test;
  PositionSet answer;
  std::array<int, 2> child{-1, -1};

  bool is_leaf() const { return !test.has_value(); }
};

// Adaptive strategy as a decision tree over answer bits.
class AdaptiveStrategy {
 public:
  static constexpr std::size_t kDefaultNodeBudget = std::size_t{1} << 22;

  AdaptiveStrategy(SearchSpace space, std::int64_t accuracy, int test_budget,
                   std::size_t node_budget = kDefaultNodeBudget);

  int add_leaf(PositionSet answer);
  int add_test(PositionSet test, int on0, int on1);
  void set_root(int id) { root_ = id; }

  const SearchSpace& space() const { return space_; }
  std::int64_t accuracy() const { return accuracy_; }
  int test_budget() const { return test_budget_; }
  int root() const { return root_; }
  const StrategyNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return nodes_.size(); }
  int depth() const;

  // Test to run after `answers`, or nullopt once the strategy has stopped.
  std::optional<PositionSet> next_test(std::span<const int> answers) const;
  // Leaf reached by following `answers` from the root (answers must end there).
  const StrategyNode& leaf_for(std::span<const int> answers) const;

  // Line format, root first:
  //   node <id> test=<set> on0=<id> on1=<id>
  //   leaf <id> answer=<set>
  std::string serialize() const;
  static AdaptiveStrategy parse(std::string_view text, SearchSpace space, std::int64_t accuracy,
                                int test_budget);

 private:
  int push(StrategyNode node);

  SearchSpace space_;
  std::int64_t accuracy_;
  int test_budget_;
  std::size_t node_budget_;
  std::vector<StrategyNode> nodes_;
  int root_ = -1;
};

struct StrategyCheck {
  bool successful = false;       // every consistent branch reaches an announced set of size <= s
  bool leaves_match = true;      // leaf sets equal the replayed announced sets
  bool within_budget = true;     // depth <= test budget
  int depth = 0;
  std::int64_t worst_size = 0;   // largest leaf set over consistent branches
  std::vector<int> worst_answers;
  std::string problem;           // first mismatch found, if any
};

// Replays every root-to-leaf path through update/final_expand.
StrategyCheck check_strategy(const AdaptiveStrategy& strategy, std::int64_t s);

// Source of tests for simulations and adversaries: given the answers so far
// it returns the next test, or nullopt when the searcher stops.
using Searcher = std::function<std::optional<PositionSet>(std::span<const int>)>;

// The returned searcher references `strategy`, which must outlive it.
Searcher searcher_for(const AdaptiveStrategy& strategy);
// Fixed sequence of tests, independent of the answers.
Searcher searcher_for(std::vector<PositionSet> tests);

}  // namespace twosided
