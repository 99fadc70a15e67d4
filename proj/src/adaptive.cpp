#include "twosided/adaptive.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "twosided/errors.hpp"

namespace twosided {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max() / 4;

void require_regime(std::int64_t s, int k, int n) {
  if (k < 1) throw DomainError("speed k must be >= 1");
  if (n < 0) throw DomainError("test count must be >= 0");
  if (s < 4 * static_cast<std::int64_t>(k)) {
    throw DomainError("capacity formula needs s >= 4k (s=" + std::to_string(s) + ", k=" + std::to_string(k) + ")");
  }
}

// 2^n * factor + addend, saturating at kMax.
std::int64_t scaled(int n, std::int64_t factor, std::int64_t addend) {
  if (factor == 0) return addend;
  if (n >= 62 || factor > (kMax >> n)) return kMax;
  return (factor << n) + addend;
}

std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

}  // namespace

std::int64_t cycle_capacity(int n, std::int64_t s, int k) {
  require_regime(s, k, n);
  return scaled(n, s - 4 * k, 4 * static_cast<std::int64_t>(k));
}

std::int64_t path_capacity(int n, std::int64_t s, int k) {
  require_regime(s, k, n);
  return scaled(n, s - 4 * k, static_cast<std::int64_t>(k) * (2 * n + 4));
}

std::int64_t open_capacity(int n, std::int64_t s, int k) { return cycle_capacity(n, s, k); }

std::int64_t half_open_capacity(int n, std::int64_t s, int k) {
  require_regime(s, k, n);
  return scaled(n, s - 4 * k, static_cast<std::int64_t>(k) * (n + 4));
}

std::int64_t path_min_accuracy(std::int64_t n_vertices, int k) {
  if (n_vertices < 1 || k < 1) throw DomainError("path_min_accuracy needs N >= 1 and k >= 1");
  if (n_vertices <= 2 * k + 1) return n_vertices;
  if (n_vertices < 4 * k + 1) return ceil_half(n_vertices) + k;
  return 3 * static_cast<std::int64_t>(k) + 1;
}

std::int64_t cycle_min_accuracy(std::int64_t n_vertices, int k) {
  if (n_vertices < 1 || k < 1) throw DomainError("cycle_min_accuracy needs N >= 1 and k >= 1");
  if (n_vertices <= 4 * k) return n_vertices;
  return 4 * static_cast<std::int64_t>(k) + 1;
}

// ---------------------------------------------------------------------------
// Cycle

namespace {

PositionSet arc(std::int64_t n, std::int64_t anchor, std::int64_t length) {
  // Vertices anchor+1 .. anchor+length, wrapped into 1..n.
  if (length >= n) return PositionSet::range(1, n);
  std::int64_t start = ((anchor % n) + n) % n + 1;
  std::int64_t end = start + length - 1;
  if (end <= n) return PositionSet::range(start, end);
  return PositionSet::range(start, n).unite(PositionSet::range(1, end - n));
}

struct CycleBuilder {
  AdaptiveStrategy& out;
  const SearchSpace& space;
  std::int64_t s;

  int build(std::int64_t anchor, std::int64_t length, int remaining) {
    const std::int64_t n = space.num_vertices;
    const PositionSet d = arc(n, anchor, length);
    if (d.size() <= s) return out.add_leaf(d);
    if (remaining == 0) throw std::logic_error("cycle construction ran out of tests");
    const std::int64_t k = space.speed;
    const std::int64_t t = ceil_half(length);
    const PositionSet test = arc(n, anchor, t);
    const int on0 = build(anchor + t - k, length - t + 2 * k, remaining - 1);
    const int on1 = build(anchor - k, t + 2 * k, remaining - 1);
    return out.add_test(test, on0, on1);
  }
};

}  // namespace

AdaptiveStrategy cycle_strategy(std::int64_t n_vertices, std::int64_t s, int k, std::size_t node_budget) {
  const MinTests budget = min_tests(Topology::Cycle, n_vertices, s, k);
  require_regime(s, k, budget.tests);
  const SearchSpace space = SearchSpace::cycle(n_vertices, k);
  AdaptiveStrategy out(space, s, budget.tests, node_budget);
  CycleBuilder builder{out, space, s};
  out.set_root(builder.build(0, n_vertices, budget.tests));
  return out;
}

// ---------------------------------------------------------------------------
// Paths with accuracy below 4k: shifting and sliding-window strategies.

namespace {

// Probes of `width` vertices at the inner end of a candidate interval that
// rests on one boundary of the path, until it shrinks to `s` vertices.
struct ProbeBuilder {
  AdaptiveStrategy& out;
  const SearchSpace& space;
  std::int64_t s;
  std::int64_t width;

  int build(const PositionSet& d, int remaining) {
    if (d.size() <= s || remaining == 0) return out.add_leaf(d);
    const std::int64_t lo = d.min();
    const std::int64_t hi = d.max();
    const PositionSet test =
        lo == 1 ? PositionSet::range(std::max<std::int64_t>(1, hi - width + 1), hi)
                : PositionSet::range(lo, std::min(space.num_vertices, lo + width - 1));
    const int on0 = child(d, test, 0, remaining);
    const int on1 = child(d, test, 1, remaining);
    return out.add_test(test, on0, on1);
  }

  int child(const PositionSet& d, const PositionSet& test, int answer, int remaining) {
    const PositionSet kept = restrict_to_answer(d, test, answer);
    if (kept.empty()) return out.add_leaf({});
    return build(neighborhood(space, kept), remaining - 1);
  }
};

AdaptiveStrategy probe_strategy(std::int64_t n_vertices, int k, std::int64_t s, std::int64_t width,
                                int budget) {
  const SearchSpace space = SearchSpace::path(n_vertices, k);
  AdaptiveStrategy out(space, s, budget);
  const PositionSet d0 = space.initial();
  if (d0.size() <= s || budget == 0) {
    out.set_root(out.add_leaf(d0));
    return out;
  }
  ProbeBuilder builder{out, space, s, width};
  const PositionSet first = PositionSet::range(1, ceil_half(n_vertices));
  const int on0 = builder.child(d0, first, 0, budget);
  const int on1 = builder.child(d0, first, 1, budget);
  out.set_root(out.add_test(first, on0, on1));
  return out;
}

}  // namespace

AdaptiveStrategy path_shifting_strategy(std::int64_t n_vertices, int k) {
  if (k < 1) throw DomainError("speed k must be >= 1");
  if (n_vertices < 4 * static_cast<std::int64_t>(k) + 1) {
    throw DomainError("shifting strategy needs N >= 4k+1");
  }
  const std::int64_t s = 3 * static_cast<std::int64_t>(k) + 1;
  const int budget =
      n_vertices < 4 * k + 3 ? 1 : static_cast<int>(ceil_half(n_vertices) - 2 * static_cast<std::int64_t>(k));
  return probe_strategy(n_vertices, k, s, k + 1, budget);
}

AdaptiveStrategy path_sliding_window_strategy(std::int64_t n_vertices, int k, int l,
                                              std::optional<int> test_budget) {
  if (k < 1) throw DomainError("speed k must be >= 1");
  if (l < 1 || l > k) throw DomainError("sliding window needs 1 <= l <= k");
  if (n_vertices < 1) throw DomainError("N must be >= 1");
  const std::int64_t s = 3 * static_cast<std::int64_t>(k) + l;
  int budget = 0;
  if (test_budget) {
    if (*test_budget < 0) throw DomainError("test budget must be >= 0");
    budget = *test_budget;
  } else if (n_vertices > s) {
    const std::int64_t excess = n_vertices - 4 * static_cast<std::int64_t>(k);
    budget = static_cast<int>(std::max<std::int64_t>(1, (excess + 2 * l - 1) / (2 * l)));
  }
  return probe_strategy(n_vertices, k, s, static_cast<std::int64_t>(k) + l, budget);
}

// ---------------------------------------------------------------------------
// Paths and segments with accuracy at least 4k.

namespace {

struct SegmentBuilder {
  AdaptiveStrategy& out;
  const SearchSpace& space;
  std::int64_t s;
  int k;

  bool touches_left(const PositionSet& d) const {
    return space.topology != Topology::OpenSegment && d.min() == 1;
  }
  bool touches_right(const PositionSet& d) const {
    return space.topology == Topology::Path && d.max() == space.num_vertices;
  }

  int build(const PositionSet& d, int remaining) {
    if (d.size() <= s) return out.add_leaf(d);
    if (remaining == 0) throw std::logic_error("segment construction ran out of tests");
    const std::int64_t x = d.size();
    const bool left = touches_left(d);
    const bool right = touches_right(d);
    std::int64_t t = 0;  // test size
    bool suffix = false;
    if (left && right) {
      t = ceil_half(x);
      if (t + k > half_open_capacity(remaining - 1, s, k)) {
        throw std::logic_error("segment construction exceeded capacity");
      }
    } else if (left || right) {
      // The boundary-side child must fit a one-boundary budget, the far
      // child an unbounded one.
      const std::int64_t lo_t = std::max<std::int64_t>(1, x + 2 * k - open_capacity(remaining - 1, s, k));
      const std::int64_t hi_t = std::min<std::int64_t>(x - 1, half_open_capacity(remaining - 1, s, k) - k);
      if (lo_t > hi_t) throw std::logic_error("segment construction exceeded capacity");
      t = std::clamp(ceil_half(x), lo_t, hi_t);
      suffix = right;
    } else {
      t = ceil_half(x);
      if (t + 2 * k > open_capacity(remaining - 1, s, k)) {
        throw std::logic_error("segment construction exceeded capacity");
      }
    }
    const std::int64_t lo = d.min();
    const std::int64_t hi = d.max();
    const PositionSet test = suffix ? PositionSet::range(hi - t + 1, hi) : PositionSet::range(lo, lo + t - 1);
    const int on0 = build(update(space, d, test, 0), remaining - 1);
    const int on1 = build(update(space, d, test, 1), remaining - 1);
    return out.add_test(test, on0, on1);
  }
};

std::int64_t segment_capacity(Topology topology, int n, std::int64_t s, int k) {
  switch (topology) {
    case Topology::Path: return path_capacity(n, s, k);
    case Topology::HalfOpenSegment: return half_open_capacity(n, s, k);
    case Topology::OpenSegment:
    case Topology::Cycle: return open_capacity(n, s, k);
  }
  return 0;
}

}  // namespace

AdaptiveStrategy segment_strategy(const SearchSpace& space, std::int64_t s, std::size_t node_budget) {
  space.validate();
  if (space.topology == Topology::Cycle) throw DomainError("segment_strategy is for paths and segments");
  const MinTests budget = min_tests(space.topology, space.num_vertices, s, space.speed);
  require_regime(s, space.speed, budget.tests);
  SearchSpace main_model = space;
  main_model.moves_after_last_test = true;
  AdaptiveStrategy out(main_model, s, budget.tests, node_budget);
  SegmentBuilder builder{out, main_model, s, space.speed};
  out.set_root(builder.build(main_model.initial(), budget.tests));
  return out;
}

// ---------------------------------------------------------------------------

MinTests min_tests(Topology topology, std::int64_t n_vertices, std::int64_t s, int k) {
  if (n_vertices < 1 || k < 1 || s < 1) throw DomainError("min_tests needs N, s, k >= 1");
  if (n_vertices <= s) return {0, true, "N <= s"};
  const std::int64_t k4 = 4 * static_cast<std::int64_t>(k);
  if (s >= k4) {
    if (s == k4 && (topology == Topology::Cycle || topology == Topology::OpenSegment)) {
      throw DomainError("no finite number of tests reaches s = 4k once N > 4k on this topology");
    }
    for (int n = 0; n < 62; ++n) {
      if (segment_capacity(topology, n, s, k) >= n_vertices) {
        return {n, true, std::string(to_string(topology)) + "-capacity"};
      }
    }
    throw DomainError("N too large for the capacity formula");
  }
  if (topology == Topology::Path) {
    if (s >= 3 * static_cast<std::int64_t>(k) + 1) {
      const std::int64_t l = s - 3 * static_cast<std::int64_t>(k);
      const std::int64_t n = std::max<std::int64_t>(1, (n_vertices - k4 + 2 * l - 1) / (2 * l));
      // One test is optimal whenever N > s; beyond that only achievability is known.
      return {static_cast<int>(n), n == 1, "sliding-window"};
    }
    if (s >= path_min_accuracy(n_vertices, k)) return {1, true, "single halving test"};
  }
  throw DomainError("accuracy s=" + std::to_string(s) + " is not attainable for N=" + std::to_string(n_vertices) +
                    ", k=" + std::to_string(k) + " on a " + std::string(to_string(topology)));
}

}  // namespace twosided
