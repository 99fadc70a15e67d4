#include "twosided/search_space.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "twosided/errors.hpp"

namespace twosided {

std::string_view to_string(Topology topology) {
  switch (topology) {
    case Topology::Path: return "path";
    case Topology::Cycle: return "cycle";
    case Topology::OpenSegment: return "open";
    case Topology::HalfOpenSegment: return "half-open";
  }
  return "?";
}

Topology parse_topology(std::string_view text) {
  if (text == "path") return Topology::Path;
  if (text == "cycle") return Topology::Cycle;
  if (text == "open") return Topology::OpenSegment;
  if (text == "half-open") return Topology::HalfOpenSegment;
  throw DomainError("unknown topology '" + std::string(text) + "'");
}

void SearchSpace::validate() const {
  if (num_vertices < 1) throw DomainError("search space needs N >= 1");
  if (speed < 1) throw DomainError("search space needs speed k >= 1");
}

bool SearchSpace::is_member(Vertex v) const {
  switch (topology) {
    case Topology::Path:
    case Topology::Cycle: return v >= 1 && v <= num_vertices;
    case Topology::OpenSegment: return true;
    case Topology::HalfOpenSegment: return v >= 1;
  }
  return false;
}

std::int64_t SearchSpace::distance(Vertex u, Vertex v) const {
  const std::int64_t d = std::llabs(u - v);
  if (topology == Topology::Cycle) return std::min(d % num_vertices, num_vertices - d % num_vertices);
  return d;
}

void require_members(const SearchSpace& space, const PositionSet& set) {
  if (set.empty()) return;
  if (!space.is_member(set.min()) || !space.is_member(set.max())) {
    throw DomainError("position set " + set.to_string() + " has members outside the " +
                      std::string(to_string(space.topology)) + " of size " +
                      std::to_string(space.num_vertices));
  }
}

PositionSet neighborhood(const SearchSpace& space, const PositionSet& a, int steps) {
  require_members(space, a);
  if (steps < 0) throw DomainError("neighborhood radius must be non-negative");
  if (steps == 0 || a.empty()) return a;
  const std::int64_t n = space.num_vertices;
  std::vector<Interval> grown;
  grown.reserve(a.intervals().size() * 2);
  for (const Interval& iv : a.intervals()) {
    Interval g{iv.lo - steps, iv.hi + steps};
    switch (space.topology) {
      case Topology::Path:
        grown.push_back({std::max<Vertex>(g.lo, 1), std::min<Vertex>(g.hi, n)});
        break;
      case Topology::HalfOpenSegment:
        grown.push_back({std::max<Vertex>(g.lo, 1), g.hi});
        break;
      case Topology::OpenSegment:
        grown.push_back(g);
        break;
      case Topology::Cycle:
        if (g.length() >= n) return space.initial();
        if (g.lo < 1) {
          grown.push_back({g.lo + n, n});
          grown.push_back({1, g.hi});
        } else if (g.hi > n) {
          grown.push_back({g.lo, n});
          grown.push_back({1, g.hi - n});
        } else {
          grown.push_back(g);
        }
        break;
    }
  }
  return PositionSet::from_intervals(std::move(grown));
}

PositionSet restrict_to_answer(const PositionSet& candidates, const PositionSet& test, int answer) {
  return answer != 0 ? candidates.intersect(test) : candidates.subtract(test);
}

PositionSet update(const SearchSpace& space, const PositionSet& d_prev, const PositionSet& test,
                   int answer) {
  return neighborhood(space, restrict_to_answer(d_prev, test, answer));
}

PositionSet final_expand(const SearchSpace& space, const PositionSet& kept) {
  return space.moves_after_last_test ? neighborhood(space, kept) : kept;
}

std::string Walk::to_string() const {
  std::string out;
  for (Vertex v : positions) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

Walk Walk::parse(std::string_view text) {
  Walk walk;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      walk.positions.push_back(std::stoll(token, &used));
      if (used != token.size()) throw DomainError("bad walk label '" + token + "'");
    } catch (const std::logic_error&) {
      throw DomainError("bad walk label '" + token + "'");
    }
  }
  return walk;
}

bool is_valid_walk(const SearchSpace& space, const Walk& walk) {
  for (std::size_t i = 0; i < walk.positions.size(); ++i) {
    if (!space.is_member(walk.positions[i])) return false;
    if (i > 0 && space.distance(walk.positions[i - 1], walk.positions[i]) > space.speed) return false;
  }
  return true;
}

std::vector<int> induced_answers(std::span<const PositionSet> tests, const Walk& walk) {
  if (walk.positions.size() < tests.size()) throw DomainError("walk shorter than test sequence");
  std::vector<int> out;
  out.reserve(tests.size());
  for (std::size_t i = 0; i < tests.size(); ++i) out.push_back(test_answer(tests[i], walk.positions[i]));
  return out;
}

PositionSet Replay::announced(const SearchSpace& space) const {
  if (kept.empty()) return candidates.front();
  return final_expand(space, kept.back());
}

Replay replay(const SearchSpace& space, std::span<const PositionSet> tests, std::span<const int> answers) {
  if (tests.size() != answers.size()) throw DomainError("tests and answers differ in length");
  Replay out;
  out.candidates.push_back(space.initial());
  for (std::size_t i = 0; i < tests.size(); ++i) {
    PositionSet kept = restrict_to_answer(out.candidates.back(), tests[i], answers[i]);
    if (kept.empty()) out.consistent = false;
    out.candidates.push_back(neighborhood(space, kept));
    out.kept.push_back(std::move(kept));
  }
  return out;
}

std::optional<Walk> consistent_walk(const SearchSpace& space, std::span<const PositionSet> tests,
                                    std::span<const int> answers, std::optional<Vertex> end) {
  const Replay chain = replay(space, tests, answers);
  if (!chain.consistent) return std::nullopt;
  const PositionSet& last = chain.candidates.back();
  if (end && !last.contains(*end)) return std::nullopt;
  const std::size_t n = tests.size();
  Walk walk;
  walk.positions.assign(n + 1, 0);
  walk.positions[n] = end ? *end : last.min();
  for (std::size_t i = n; i-- > 0;) {
    const PositionSet reach = neighborhood(space, PositionSet::of({walk.positions[i + 1]}));
    const PositionSet options = chain.kept[i].intersect(reach);
    // Nonempty: positions[i+1] lies in the neighborhood of kept[i].
    walk.positions[i] = options.min();
  }
  return walk;
}

std::string_view to_string(TestClass cls) {
  return cls == TestClass::Intervals ? "intervals" : "all_subsets";
}

TestClass parse_test_class(std::string_view text) {
  if (text == "intervals") return TestClass::Intervals;
  if (text == "all_subsets" || text == "all-subsets") return TestClass::AllSubsets;
  throw DomainError("unknown test class '" + std::string(text) + "'");
}

std::vector<PositionSet> enumerate_tests(const SearchSpace& space, TestClass cls) {
  if (!space.is_bounded()) throw DomainError("test enumeration needs a path or cycle");
  const std::int64_t n = space.num_vertices;
  std::vector<PositionSet> out;
  if (cls == TestClass::AllSubsets) {
    if (n > 20) throw ResourceLimitError("all-subset test enumeration capped at N <= 20");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t m = 1; m < full; ++m) out.push_back(PositionSet::from_mask(m));
    return out;
  }
  if (space.topology == Topology::Path) {
    for (Vertex a = 1; a <= n; ++a) {
      for (Vertex b = a; b <= n; ++b) {
        if (a == 1 && b == n) continue;
        out.push_back(PositionSet::range(a, b));
      }
    }
    return out;
  }
  // Arcs of length 1..N-1 starting at every vertex.
  for (Vertex start = 1; start <= n; ++start) {
    for (std::int64_t len = 1; len < n; ++len) {
      const Vertex end = start + len - 1;
      if (end <= n) {
        out.push_back(PositionSet::range(start, end));
      } else {
        out.push_back(PositionSet::range(start, n).unite(PositionSet::range(1, end - n)));
      }
    }
  }
  return out;
}

}  // namespace twosided
