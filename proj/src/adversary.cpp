#include "twosided/adversary.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "twosided/errors.hpp"

namespace twosided {

namespace {

int greedy_answer(const SearchSpace& space, const PositionSet& d, const PositionSet& test) {
  return update(space, d, test, 1).size() > update(space, d, test, 0).size() ? 1 : 0;
}

void attach_witness(const SearchSpace& space, Transcript& t) {
  const std::vector<PositionSet> tests = t.tests();
  const std::vector<int> answers = t.answers();
  t.witness = consistent_walk(space, tests, answers);
}

void require_path(const SearchSpace& space, const char* who) {
  space.validate();
  if (space.topology != Topology::Path) throw DomainError(std::string(who) + " is defined on paths only");
}

// ---------------------------------------------------------------------------
// Window rule

struct WindowStep {
  int answer = 0;
  int rule = 5;
  std::optional<Vertex> next_start;
};

WindowStep window_step(const SearchSpace& space, Vertex start, const PositionSet& test) {
  const std::int64_t k = space.speed;
  const std::int64_t n = space.num_vertices;
  const PositionSet window = PositionSet::range(start, start + 3 * k);
  const PositionSet inside = window.intersect(test);
  WindowStep step;
  if (!inside.empty()) {
    const std::int64_t c = inside.size();
    const std::int64_t l = inside.min() - 1;
    const std::int64_t r = n - inside.max();
    if (c >= k + 1 && l >= k && r >= k) {
      step.rule = 1;
    } else if (c + l >= 2 * k + 1 && l < k) {
      step.rule = 2;
    } else if (c + r >= 2 * k + 1 && r < k) {
      step.rule = 3;
    } else if (c > 2 * k) {
      step.rule = 4;
    }
  }
  step.answer = step.rule == 5 ? 0 : 1;

  const PositionSet reach = neighborhood(space, restrict_to_answer(window, test, step.answer));
  Vertex preferred = start;
  switch (step.rule) {
    case 1: preferred = start - k; break;
    case 2: preferred = 1; break;
    case 3: preferred = n - 3 * k; break;
    case 4: preferred = start >= k + 1 ? start - k : start; break;
    default: break;
  }
  auto fits = [&](Vertex j) { return j >= 1 && j + 3 * k <= n && PositionSet::range(j, j + 3 * k).is_subset_of(reach); };
  if (fits(preferred)) {
    step.next_start = preferred;
    return step;
  }
  // Nearest window inside the reachable part of the old window.
  std::optional<Vertex> best;
  for (const Interval& iv : reach.intervals()) {
    for (Vertex j = iv.lo; j + 3 * k <= iv.hi; ++j) {
      if (!fits(j)) continue;
      if (!best || std::llabs(j - start) < std::llabs(*best - start)) best = j;
    }
  }
  step.next_start = best;
  return step;
}

// ---------------------------------------------------------------------------
// Margin rule

std::int64_t pow2_times(int e, std::int64_t factor) { return factor << e; }

struct MarginStep {
  int answer = 0;
  PositionSet tracked;
};

MarginStep margin_step(const SearchSpace& space, const PositionSet& tracked, const PositionSet& test) {
  const PositionSet with = neighborhood(space, tracked.intersect(test));
  const PositionSet without = neighborhood(space, tracked.subtract(test));
  if (with.size() < without.size()) return {0, without};
  return {1, with};
}

bool margin_invariants(const SearchSpace& space, const PositionSet& tracked, const PositionSet& candidates,
                       int n, int i, std::int64_t s, std::string* why) {
  const std::int64_t k = space.speed;
  const std::int64_t margin = k * (n - i);
  const std::int64_t min_size = pow2_times(n - i, s - 4 * k) + 4 * k + 1;
  if (tracked.empty()) {
    if (why) *why = "tracked set empty at round " + std::to_string(i);
    return false;
  }
  if (!tracked.is_subset_of(candidates)) {
    if (why) *why = "tracked set escapes D at round " + std::to_string(i);
    return false;
  }
  if (tracked.min() < margin + 1 || tracked.max() > space.num_vertices - margin) {
    if (why) *why = "margin below k(n-i) at round " + std::to_string(i);
    return false;
  }
  if (tracked.size() < min_size) {
    if (why) *why = "tracked set smaller than 2^(n-i)(s-4k)+4k+1 at round " + std::to_string(i);
    return false;
  }
  return true;
}

PositionSet margin_initial(const SearchSpace& space, int n, std::int64_t s) {
  const std::int64_t k = space.speed;
  const std::int64_t lo = n * k + 1;
  const std::int64_t hi = n * k + pow2_times(n, s - 4 * k) + 4 * k + 1;
  return PositionSet::range(lo, hi).clipped(1, space.num_vertices);
}

// ---------------------------------------------------------------------------
// Exhaustive sweep over test sequences against a deterministic adversary.

template <class State, class Policy>
class Sweeper {
 public:
  Sweeper(const SearchSpace& space, std::vector<PositionSet> tests, Policy policy)
      : space_(space), tests_(std::move(tests)), policy_(std::move(policy)) {}

  SweepResult run(const State& root, int n) {
    SweepResult result;
    result.value = value(root, n);
    result.states = memo_.size();
    result.invariants_held = invariants_held_;
    State cur = root;
    for (int rem = n; rem > 0; --rem) {
      const auto it = memo_.find(key(cur, rem));
      if (it == memo_.end() || it->second.second < 0) break;
      const PositionSet& t = tests_[static_cast<std::size_t>(it->second.second)];
      result.best_tests.push_back(t);
      cur = policy_.advance(cur, t, nullptr);
    }
    return result;
  }

 private:
  std::string key(const State& s, int rem) const { return policy_.key(s) + '#' + std::to_string(rem); }

  std::int64_t value(const State& s, int rem) {
    const std::int64_t here = policy_.candidates(s).size();
    if (rem == 0) return here;
    const std::string k = key(s, rem);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second.first;
    std::int64_t best = here;
    int best_test = -1;
    for (std::size_t i = 0; i < tests_.size(); ++i) {
      bool ok = true;
      const State next = policy_.advance(s, tests_[i], &ok);
      if (!ok) invariants_held_ = false;
      const std::int64_t v = value(next, rem - 1);
      if (v < best) {
        best = v;
        best_test = static_cast<int>(i);
      }
    }
    memo_.emplace(k, std::make_pair(best, best_test));
    return best;
  }

  const SearchSpace& space_;
  std::vector<PositionSet> tests_;
  Policy policy_;
  std::unordered_map<std::string, std::pair<std::int64_t, int>> memo_;
  bool invariants_held_ = true;
};

struct GreedyState {
  PositionSet d;
};

struct GreedyPolicy {
  const SearchSpace* space;
  std::string key(const GreedyState& s) const { return s.d.to_string(); }
  const PositionSet& candidates(const GreedyState& s) const { return s.d; }
  GreedyState advance(const GreedyState& s, const PositionSet& t, bool*) const {
    return {update(*space, s.d, t, greedy_answer(*space, s.d, t))};
  }
};

struct WindowState {
  PositionSet d;
  std::optional<Vertex> start;
};

struct WindowPolicy {
  const SearchSpace* space;
  std::string key(const WindowState& s) const {
    return s.d.to_string() + '|' + (s.start ? std::to_string(*s.start) : "-");
  }
  const PositionSet& candidates(const WindowState& s) const { return s.d; }
  WindowState advance(const WindowState& s, const PositionSet& t, bool* ok) const {
    if (!s.start) return {update(*space, s.d, t, greedy_answer(*space, s.d, t)), std::nullopt};
    const WindowStep step = window_step(*space, *s.start, t);
    WindowState next{update(*space, s.d, t, step.answer), step.next_start};
    const bool held = step.next_start &&
                      PositionSet::range(*step.next_start, *step.next_start + 3 * space->speed).is_subset_of(next.d);
    if (ok && !held) *ok = false;
    return next;
  }
};

struct MarginState {
  PositionSet d;
  PositionSet tracked;
  int round = 0;
};

struct MarginPolicy {
  const SearchSpace* space;
  int n;
  std::int64_t s;
  std::string key(const MarginState& st) const {
    return st.d.to_string() + '|' + st.tracked.to_string() + '|' + std::to_string(st.round);
  }
  const PositionSet& candidates(const MarginState& st) const { return st.d; }
  MarginState advance(const MarginState& st, const PositionSet& t, bool* ok) const {
    const MarginStep step = margin_step(*space, st.tracked, t);
    MarginState next{update(*space, st.d, t, step.answer), step.tracked, st.round + 1};
    if (ok && !margin_invariants(*space, next.tracked, next.d, n, next.round, s, nullptr)) *ok = false;
    return next;
  }
};

}  // namespace

// ---------------------------------------------------------------------------

Transcript greedy_adversary(const SearchSpace& space, const Searcher& searcher, int max_rounds) {
  space.validate();
  Transcript t;
  t.initial = space.initial();
  PositionSet d = t.initial;
  std::vector<int> answers;
  for (int i = 0; i < max_rounds; ++i) {
    const auto test = searcher(answers);
    if (!test) break;
    const int y = greedy_answer(space, d, *test);
    d = update(space, d, *test, y);
    t.rounds.push_back({*test, y, d});
    answers.push_back(y);
  }
  attach_witness(space, t);
  return t;
}

WindowPlay window_adversary(const SearchSpace& space, const Searcher& searcher, int max_rounds) {
  require_path(space, "window adversary");
  const std::int64_t k = space.speed;
  if (space.num_vertices < 4 * k + 1) throw DomainError("window adversary needs N >= 4k+1");
  WindowPlay play;
  play.transcript.initial = space.initial();
  PositionSet d = play.transcript.initial;
  Vertex start = 1;  // 0 once no window survives
  play.window_starts.push_back(1);
  std::vector<int> answers;
  for (int i = 0; i < max_rounds; ++i) {
    const auto test = searcher(answers);
    if (!test) break;
    int y = 0;
    if (start != 0) {
      const WindowStep step = window_step(space, start, *test);
      y = step.answer;
      play.cases.push_back(step.rule);
      start = step.next_start.value_or(0);
    } else {
      y = greedy_answer(space, d, *test);
      play.cases.push_back(0);
    }
    d = update(space, d, *test, y);
    if (start != 0 && !PositionSet::range(start, start + 3 * k).is_subset_of(d)) start = 0;
    if (start == 0 && play.invariant_held) {
      play.invariant_held = false;
      play.findings.push_back("no window of 3k+1 vertices survives round " + std::to_string(i + 1) +
                              " (rule " + std::to_string(play.cases.back()) + ", test " + test->to_string() + ")");
    }
    play.window_starts.push_back(start);
    play.transcript.rounds.push_back({*test, y, d});
    answers.push_back(y);
  }
  attach_witness(space, play.transcript);
  return play;
}

std::int64_t margin_critical_size(int n, std::int64_t s, int k) {
  if (s < 4 * static_cast<std::int64_t>(k)) throw DomainError("margin adversary needs s >= 4k");
  if (n < 0 || n > 40) throw DomainError("margin adversary needs 0 <= n <= 40");
  return pow2_times(n, s - 4 * k) + 2 * static_cast<std::int64_t>(k) * n + 4 * k + 1;
}

MarginPlay margin_adversary(const SearchSpace& space, const Searcher& searcher, int n, std::int64_t s) {
  require_path(space, "margin adversary");
  MarginPlay play;
  play.critical_size = space.num_vertices == margin_critical_size(n, s, space.speed);
  play.transcript.initial = space.initial();
  PositionSet d = play.transcript.initial;
  PositionSet tracked = margin_initial(space, n, s);
  play.tracked.push_back(tracked);
  std::string why;
  if (!margin_invariants(space, tracked, d, n, 0, s, &why)) {
    play.invariants_held = false;
    play.findings.push_back(why);
  }
  std::vector<int> answers;
  for (int i = 1; i <= n; ++i) {
    const auto test = searcher(answers);
    if (!test) break;
    const MarginStep step = margin_step(space, tracked, *test);
    tracked = step.tracked;
    d = update(space, d, *test, step.answer);
    play.tracked.push_back(tracked);
    play.transcript.rounds.push_back({*test, step.answer, d});
    answers.push_back(step.answer);
    if (!margin_invariants(space, tracked, d, n, i, s, &why)) {
      play.invariants_held = false;
      play.findings.push_back(why);
    }
  }
  attach_witness(space, play.transcript);
  return play;
}

CounterCertificate nonadaptive_counter(const SearchSpace& space, const TestMatrix& matrix) {
  require_path(space, "non-adaptive counter-strategy");
  const std::int64_t k = space.speed;
  const std::int64_t n = space.num_vertices;
  if (n <= 6 * k) throw DomainError("non-adaptive counter-strategy needs N > 6k");
  if (matrix.cols() != n) throw DomainError("matrix width differs from N");
  const int t = matrix.rows();
  const std::int64_t c = (n + 1) / 2;

  CounterCertificate cert;
  std::optional<Vertex> pivot;
  for (Vertex x = c - k; x < c + k; ++x) {
    if (matrix.at(t, x) != matrix.at(t, x + 1)) {
      pivot = x;
      break;
    }
  }

  std::vector<Vertex> common(static_cast<std::size_t>(t - 1));
  if (!pivot) {
    cert.constant_middle = true;
    cert.pivot = c;
    std::fill(common.begin(), common.end(), c);
    cert.first.positions = common;
    cert.first.positions.push_back(c - k);
    cert.first.positions.push_back(c - 2 * k);
    cert.second.positions = common;
    cert.second.positions.push_back(c + k);
    cert.second.positions.push_back(c + 2 * k);
  } else {
    const Vertex x = *pivot;
    cert.pivot = x;
    // Right of the centre the mirrored construction keeps x*+3k on the path:
    // the pair is read as (x*+1, x*) and the walks head left.
    const Vertex dir = x <= c ? 1 : -1;
    const Vertex a = x <= c ? x : x + 1;
    std::fill(common.begin(), common.end(), a + dir * k);
    const Vertex far = a + dir * 2 * k;
    const Vertex near = matrix.at(t, a) == matrix.at(t, far) ? a : a + dir;
    cert.first.positions = common;
    cert.first.positions.push_back(far);
    cert.first.positions.push_back(far + dir * k);
    cert.second.positions = common;
    cert.second.positions.push_back(near);
    cert.second.positions.push_back(near - dir * k);
  }

  const std::vector<PositionSet> tests = matrix.tests();
  cert.answers = induced_answers(tests, cert.first);
  const Replay chain = replay(space, tests, cert.answers);
  cert.final_set = chain.candidates.back();
  cert.forced_accuracy = cert.final_set.size();
  cert.branch_min_size = cert.final_set.size();
  for (const PositionSet& d : chain.candidates) cert.branch_min_size = std::min(cert.branch_min_size, d.size());

  const Walk& a = cert.first;
  const Walk& b = cert.second;
  cert.certified = is_valid_walk(space, a) && is_valid_walk(space, b) && induced_answers(tests, b) == cert.answers &&
                   cert.final_set.contains(a.positions.back()) && cert.final_set.contains(b.positions.back());
  return cert;
}

SweepResult sweep_greedy(const SearchSpace& space, TestClass cls, int n) {
  space.validate();
  Sweeper<GreedyState, GreedyPolicy> sweeper(space, enumerate_tests(space, cls), GreedyPolicy{&space});
  return sweeper.run(GreedyState{space.initial()}, n);
}

SweepResult sweep_window(const SearchSpace& space, TestClass cls, int n) {
  require_path(space, "window adversary");
  if (space.num_vertices < 4 * static_cast<std::int64_t>(space.speed) + 1) {
    throw DomainError("window adversary needs N >= 4k+1");
  }
  Sweeper<WindowState, WindowPolicy> sweeper(space, enumerate_tests(space, cls), WindowPolicy{&space});
  return sweeper.run(WindowState{space.initial(), Vertex{1}}, n);
}

SweepResult sweep_margin(const SearchSpace& space, TestClass cls, int n, std::int64_t s) {
  require_path(space, "margin adversary");
  Sweeper<MarginState, MarginPolicy> sweeper(space, enumerate_tests(space, cls), MarginPolicy{&space, n, s});
  return sweeper.run(MarginState{space.initial(), margin_initial(space, n, s), 0}, n);
}

}  // namespace twosided
