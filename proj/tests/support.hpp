#pragma once

// Brute-force references used by the unit tests.  None of these call the
// neighborhood or update code under test.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "twosided/search_space.hpp"
#include "twosided/strategy.hpp"

namespace support {

using twosided::PositionSet;
using twosided::SearchSpace;
using twosided::Topology;
using twosided::Vertex;

inline std::int64_t dist(const SearchSpace& sp, Vertex a, Vertex b) {
  const std::int64_t d = std::llabs(a - b);
  if (sp.topology == Topology::Cycle) return std::min(d, sp.num_vertices - d);
  return d;
}

// Vertices 1..N within k of v, by scanning all vertices.
inline std::vector<Vertex> reachable(const SearchSpace& sp, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u = 1; u <= sp.num_vertices; ++u) {
    if (dist(sp, u, v) <= sp.speed) out.push_back(u);
  }
  return out;
}

inline void for_each_walk(const SearchSpace& sp, std::size_t length, const std::function<void(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> w;
  std::function<void()> rec = [&]() {
    if (w.size() == length) {
      fn(w);
      return;
    }
    if (w.empty()) {
      for (Vertex v = 1; v <= sp.num_vertices; ++v) {
        w.push_back(v);
        rec();
        w.pop_back();
      }
      return;
    }
    for (Vertex v : reachable(sp, w.back())) {
      w.push_back(v);
      rec();
      w.pop_back();
    }
  };
  rec();
}

inline bool member(const PositionSet& set, Vertex v) {
  for (const auto& iv : set.intervals()) {
    if (iv.lo <= v && v <= iv.hi) return true;
  }
  return false;
}

// Endpoints of every walk whose induced answers equal `answers`.
inline std::set<Vertex> walk_endpoints(const SearchSpace& sp, const std::vector<PositionSet>& tests,
                                       const std::vector<int>& answers) {
  std::set<Vertex> ends;
  for_each_walk(sp, tests.size() + 1, [&](const std::vector<Vertex>& w) {
    for (std::size_t i = 0; i < tests.size(); ++i) {
      if (static_cast<int>(member(tests[i], w[i])) != answers[i]) return;
    }
    ends.insert(w.back());
  });
  return ends;
}

inline std::set<Vertex> as_set(const PositionSet& p) {
  const auto m = p.members();
  return {m.begin(), m.end()};
}

// Follows `strategy` along every walk; returns the number of walks whose
// final position escaped the leaf or whose leaf exceeded s.
inline int strategy_walk_failures(const twosided::AdaptiveStrategy& st, std::int64_t s) {
  const SearchSpace& sp = st.space();
  int failures = 0;
  const std::size_t length = static_cast<std::size_t>(st.depth()) + 1;
  for_each_walk(sp, length, [&](const std::vector<Vertex>& w) {
    int id = st.root();
    std::size_t i = 0;
    while (!st.node(id).is_leaf()) {
      id = st.node(id).child[member(*st.node(id).test, w[i]) ? 1 : 0];
      ++i;
    }
    const Vertex final_pos = sp.moves_after_last_test ? w[i] : w[i == 0 ? 0 : i - 1];
    const PositionSet& leaf = st.node(id).answer;
    if (!member(leaf, final_pos) || leaf.size() > s) ++failures;
  });
  return failures;
}

}  // namespace support
