#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twosided/nonadaptive.hpp"
#include "twosided/strategy.hpp"

namespace twosided {

// Exact minimax solver for the adaptive game on a path or cycle with at most
// 62 vertices.  States are candidate sets D_i.  A state is won when its
// announced set has at most s vertices: D_i itself in the main model, or the
// pre-move set when the target freezes after the last test.  Answers that
// leave no candidate are vacuous wins.
class GameSolver {
 public:
  GameSolver(SearchSpace space, std::int64_t s, TestClass cls, std::size_t state_cap = 2'000'000);
  ~GameSolver();
  GameSolver(GameSolver&&) noexcept;
  GameSolver& operator=(GameSolver&&) noexcept;

  // Can the searcher win from `state` within `budget` tests?
  bool solvable(const PositionSet& state, int budget);
  // Fewest tests needed from D_0, searching budgets 0..max_budget.
  std::optional<int> min_tests(int max_budget);
  // Fewest tests from D_0 with no budget: solved by a fixpoint over every
  // reachable state.  nullopt when the searcher can never win.
  std::optional<int> min_tests_unbounded();
  // Strategy built from the stored winning tests; requires solvable(D_0, budget).
  AdaptiveStrategy extract_strategy(int budget);

  std::size_t states() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct GameValue {
  std::optional<int> min_tests;  // nullopt: not reachable within the budget
  int budget = 0;
  std::size_t states = 0;
  std::optional<AdaptiveStrategy> strategy;
};

// Fewest tests for accuracy s.  Caps: all subsets need N <= 10, intervals
// N <= 40.
GameValue exact_min_tests(const SearchSpace& space, std::int64_t s, TestClass cls, int budget,
                          bool extract = false);

// Smallest s winnable within n_budget tests, or with any number of tests
// when n_budget is nullopt.
std::int64_t exact_min_accuracy(const SearchSpace& space, std::optional<int> n_budget, TestClass cls);

struct MatrixSearchOptions {
  // Cut a partial matrix as soon as some open branch cannot be finished
  // even adaptively with the rows that remain.
  bool adaptive_pruning = true;
  std::size_t node_cap = 50'000'000;
};

struct MatrixSearchResult {
  bool exists = false;
  std::optional<TestMatrix> matrix;  // a successful matrix; absent when none exists or n = 0
  std::size_t nodes = 0;
};

// Exhaustive search for an n-row matrix succeeding with accuracy s on a path
// or cycle.  Rows and their complements give the same branches, so only rows
// avoiding the last vertex are tried; the first row is also reduced under
// reflection.  Capped at n*N <= 32.
MatrixSearchResult exact_best_matrix(const SearchSpace& space, std::int64_t s, int n,
                                     const MatrixSearchOptions& options = {});

// One oracle evaluation in the record format consumed by verification.
struct OracleRecord {
  Topology topology = Topology::Path;
  std::int64_t n_vertices = 0;
  int k = 1;
  std::int64_t s = 0;
  TestClass cls = TestClass::Intervals;
  bool moves_after_last_test = true;
  std::optional<int> min_tests;

  std::string to_json() const;
};

}  // namespace twosided
