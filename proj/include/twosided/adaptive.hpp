#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "twosided/strategy.hpp"

namespace twosided {

// Largest N admitting an n-test strategy of accuracy s on the cycle C_N:
// 2^n (s - 4k) + 4k.  Requires s >= 4k.
std::int64_t cycle_capacity(int n, std::int64_t s, int k);
// Same for the path P_N: (s - 4k) 2^n + k (2n + 4).  Requires s >= 4k.
std::int64_t path_capacity(int n, std::int64_t s, int k);
// Auxiliary capacities of the unbounded variants used to build path strategies:
// a block with no boundary in reach (2^n (s-4k) + 4k) and one resting on a
// single boundary (2^n (s-4k) + (n+4) k).
std::int64_t open_capacity(int n, std::int64_t s, int k);
std::int64_t half_open_capacity(int n, std::int64_t s, int k);

// Minimum achievable accuracy with any number of adaptive tests.
std::int64_t path_min_accuracy(std::int64_t n_vertices, int k);
std::int64_t cycle_min_accuracy(std::int64_t n_vertices, int k);

// Halving strategy over arcs; uses the minimum number of tests.
AdaptiveStrategy cycle_strategy(std::int64_t n_vertices, std::int64_t s, int k,
                                std::size_t node_budget = AdaptiveStrategy::kDefaultNodeBudget);

// Accuracy 3k+1 on P_N for N >= 4k+1: split in half, then probe k+1
// vertices at the inner end of the surviving half, one step further in
// per round.
AdaptiveStrategy path_shifting_strategy(std::int64_t n_vertices, int k);

// Accuracy 3k+l (1 <= l <= k): like the shifting strategy with a probe of
// width k+l that advances l vertices per round.  Without a budget the
// smallest n with 2nl + 4k >= N is used; with one, branches that are still
// too large when it runs out end in an oversized leaf.
AdaptiveStrategy path_sliding_window_strategy(std::int64_t n_vertices, int k, int l,
                                              std::optional<int> test_budget = std::nullopt);

// Optimal strategy for s >= 4k on a path, open segment or half-open segment
// (the space's N is the initial block 1..N).  Each candidate interval is
// split by a prefix or suffix test sized by the capacity of the boundary
// situation it is in: touching both ends, one end, or neither.
AdaptiveStrategy segment_strategy(const SearchSpace& space, std::int64_t s,
                                  std::size_t node_budget = AdaptiveStrategy::kDefaultNodeBudget);
inline AdaptiveStrategy path_strategy(std::int64_t n_vertices, std::int64_t s, int k) {
  return segment_strategy(SearchSpace::path(n_vertices, k), s);
}

struct MinTests {
  int tests = 0;
  // False when the count is only known to be achievable (3k < s < 4k on paths).
  bool proven_optimal = true;
  std::string basis;
};

// Smallest number of tests for accuracy s; throws DomainError when no
// finite number exists.
MinTests min_tests(Topology topology, std::int64_t n_vertices, std::int64_t s, int k);

}  // namespace twosided
