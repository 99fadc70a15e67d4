#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twosided/position_set.hpp"

namespace twosided {

enum class Topology {
  Path,             // vertices 1..N
  Cycle,            // vertices 1..N, N adjacent to 1
  OpenSegment,      // all integers; N = size of the initial candidate block 1..N
  HalfOpenSegment,  // positive integers; N = size of the initial block 1..N
};

std::string_view to_string(Topology topology);
Topology parse_topology(std::string_view text);

// The arena of a search game: graph, target speed, and whether the target
// still moves after the final test (the default) or freezes there.
struct SearchSpace {
  Topology topology = Topology::Path;
  std::int64_t num_vertices = 1;
  int speed = 1;
  bool moves_after_last_test = true;

  static SearchSpace path(std::int64_t n, int k) { return {Topology::Path, n, k, true}; }
  static SearchSpace cycle(std::int64_t n, int k) { return {Topology::Cycle, n, k, true}; }
  static SearchSpace open_segment(std::int64_t n, int k) { return {Topology::OpenSegment, n, k, true}; }
  static SearchSpace half_open_segment(std::int64_t n, int k) {
    return {Topology::HalfOpenSegment, n, k, true};
  }
  SearchSpace frozen_at_end() const {
    SearchSpace copy = *this;
    copy.moves_after_last_test = false;
    return copy;
  }

  // Throws DomainError unless N >= 1 and k >= 1.
  void validate() const;
  bool is_bounded() const { return topology == Topology::Path || topology == Topology::Cycle; }
  bool is_member(Vertex v) const;
  // D_0: the vertices 1..N.
  PositionSet initial() const { return PositionSet::range(1, num_vertices); }
  // Graph distance; loops make every distance-0 move legal.
  std::int64_t distance(Vertex u, Vertex v) const;

  friend bool operator==(const SearchSpace&, const SearchSpace&) = default;
};

// Throws DomainError if any member of `set` is not a vertex of `space`.
void require_members(const SearchSpace& space, const PositionSet& set);

// All vertices within `steps` moves of some member of `a`.
PositionSet neighborhood(const SearchSpace& space, const PositionSet& a, int steps);
inline PositionSet neighborhood(const SearchSpace& space, const PositionSet& a) {
  return neighborhood(space, a, space.speed);
}

// The part of `candidates` compatible with `answer` to test `test`:
// candidates ∩ test for 1, candidates \ test for 0.
PositionSet restrict_to_answer(const PositionSet& candidates, const PositionSet& test, int answer);

// Next candidate set after a test: neighborhood of restrict_to_answer(...).
// Empty when the answer is inconsistent with every candidate.
PositionSet update(const SearchSpace& space, const PositionSet& d_prev, const PositionSet& test,
                   int answer);

// The set a searcher announces when stopping with pre-move candidates `kept`.
PositionSet final_expand(const SearchSpace& space, const PositionSet& kept);

// Positions d_1..d_{n+1} of the target; d_i is its location at test i.
struct Walk {
  std::vector<Vertex> positions;

  std::string to_string() const;
  static Walk parse(std::string_view text);
  friend bool operator==(const Walk&, const Walk&) = default;
};

bool is_valid_walk(const SearchSpace& space, const Walk& walk);

// Answer bit a test returns for a target at `position`.
inline int test_answer(const PositionSet& test, Vertex position) { return test.contains(position) ? 1 : 0; }

// Answer sequence induced by a walk on a fixed sequence of tests.
std::vector<int> induced_answers(std::span<const PositionSet> tests, const Walk& walk);

// Replays tests/answers from D_0.  kept[i] is the pre-move candidate set at
// test i+1; candidates[i] is D_i (candidates[0] = D_0).
struct Replay {
  std::vector<PositionSet> kept;
  std::vector<PositionSet> candidates;
  bool consistent = true;  // false if some kept set became empty

  // The set announced after the last replayed test (D_0 with no tests).
  PositionSet announced(const SearchSpace& space) const;
};
Replay replay(const SearchSpace& space, std::span<const PositionSet> tests, std::span<const int> answers);

// Some walk consistent with the answers, found by forward propagation and
// backward reconstruction; optionally forced to end at `end`.
std::optional<Walk> consistent_walk(const SearchSpace& space, std::span<const PositionSet> tests,
                                    std::span<const int> answers, std::optional<Vertex> end = std::nullopt);

enum class TestClass { Intervals, AllSubsets };
std::string_view to_string(TestClass cls);
TestClass parse_test_class(std::string_view text);

// Every nonempty proper test set of the class on a bounded space: intervals
// [a,b] on paths, arcs (wraparound included) on cycles, or all subsets.
std::vector<PositionSet> enumerate_tests(const SearchSpace& space, TestClass cls);

}  // namespace twosided
