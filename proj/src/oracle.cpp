#include "twosided/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "twosided/errors.hpp"

namespace twosided {

namespace {

using Mask = std::uint64_t;
constexpr int kNever = std::numeric_limits<int>::max();

// The game on bitmasks; bit j-1 stands for vertex j.
class MaskGame {
 public:
  MaskGame(const SearchSpace& space, std::int64_t s, std::vector<Mask> tests, std::size_t cap)
      : space_(space), s_(s), tests_(std::move(tests)), cap_(cap) {
    n_ = static_cast<int>(space.num_vertices);
    full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  const SearchSpace& space() const { return space_; }
  std::int64_t accuracy() const { return s_; }
  const std::vector<Mask>& tests() const { return tests_; }
  Mask full() const { return full_; }
  std::size_t states() const { return memo_.size(); }

  Mask grow(Mask m) const {
    for (int i = 0; i < space_.speed; ++i) {
      if (space_.topology == Topology::Cycle) {
        const Mask left = ((m << 1) | (m >> (n_ - 1))) & full_;
        const Mask right = ((m >> 1) | (m << (n_ - 1))) & full_;
        m |= left | right;
      } else {
        m |= ((m << 1) | (m >> 1)) & full_;
      }
    }
    return m;
  }
  Mask announce(Mask kept) const { return space_.moves_after_last_test ? grow(kept) : kept; }
  bool won(Mask d) const { return std::popcount(d) <= s_; }
  // The branch is over: nothing is consistent or the announced set is small.
  bool terminal(Mask kept) const { return kept == 0 || std::popcount(announce(kept)) <= s_; }

  bool solvable(Mask d, int budget) {
    if (won(d)) return true;
    {
      const Entry& e = entry(d);
      if (e.win_at <= budget) return true;
      if (e.fail_upto >= budget) return false;
    }
    if (budget == 0) {
      entry(d).fail_upto = 0;
      return false;
    }
    for (std::size_t i = 0; i < tests_.size(); ++i) {
      if (wins_with(d, tests_[i], budget)) {
        Entry& e = entry(d);
        if (budget < e.win_at) {
          e.win_at = budget;
          e.best = static_cast<int>(i);
        }
        return true;
      }
    }
    Entry& e = entry(d);
    e.fail_upto = std::max(e.fail_upto, budget);
    return false;
  }

  // Fixpoint over every state reachable from `root`; returns its value.
  std::optional<int> solve_unbounded(Mask root) {
    if (won(root)) return 0;
    std::vector<Mask> order{root};
    std::unordered_set<Mask> seen{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Mask t : tests_) {
        for (int y = 0; y < 2; ++y) {
          const Mask kept = y ? (order[i] & t) : (order[i] & ~t);
          if (terminal(kept)) continue;
          const Mask child = grow(kept);
          if (seen.insert(child).second) {
            order.push_back(child);
            if (order.size() > cap_) throw ResourceLimitError("oracle state cap exceeded");
          }
        }
      }
    }
    std::unordered_map<Mask, int> value;
    auto child_value = [&](Mask kept) -> int {
      if (terminal(kept)) return 0;
      const auto it = value.find(grow(kept));
      return it == value.end() ? kNever : it->second;
    };
    for (int depth = 1;; ++depth) {
      std::vector<std::pair<Mask, int>> fresh;
      for (Mask d : order) {
        if (value.count(d)) continue;
        for (std::size_t i = 0; i < tests_.size(); ++i) {
          const int worst = std::max(child_value(d & ~tests_[i]), child_value(d & tests_[i]));
          if (worst < depth) {
            fresh.emplace_back(d, static_cast<int>(i));
            break;
          }
        }
      }
      if (fresh.empty()) break;
      for (const auto& [d, best] : fresh) {
        value[d] = depth;
        Entry& e = entry(d);
        if (depth < e.win_at) {
          e.win_at = depth;
          e.best = best;
        }
        e.fail_upto = std::max(e.fail_upto, depth - 1);
      }
      if (value.count(root)) return value[root];
    }
    return std::nullopt;
  }

  int best_test(Mask d) const { return memo_.at(d).best; }

 private:
  struct Entry {
    int fail_upto = -1;  // unsolvable with this many tests (and fewer)
    int win_at = kNever;  // solvable with this many tests
    int best = -1;        // a test achieving win_at
  };

  Entry& entry(Mask d) {
    auto [it, inserted] = memo_.try_emplace(d);
    if (inserted && memo_.size() > cap_) throw ResourceLimitError("oracle state cap exceeded");
    return it->second;
  }

  bool wins_with(Mask d, Mask t, int budget) {
    for (int y = 0; y < 2; ++y) {
      const Mask kept = y ? (d & t) : (d & ~t);
      if (terminal(kept)) continue;
      if (!solvable(grow(kept), budget - 1)) return false;
    }
    return true;
  }

  SearchSpace space_;
  std::int64_t s_;
  std::vector<Mask> tests_;
  std::size_t cap_;
  int n_ = 0;
  Mask full_ = 0;
  std::unordered_map<Mask, Entry> memo_;
};

void check_oracle_space(const SearchSpace& space, TestClass cls) {
  space.validate();
  if (!space.is_bounded()) throw DomainError("the oracle works on paths and cycles");
  if (cls == TestClass::AllSubsets && space.num_vertices > 10) {
    throw ResourceLimitError("all-subset oracle capped at N <= 10");
  }
  if (space.num_vertices > 40) throw ResourceLimitError("interval oracle capped at N <= 40");
}

std::vector<Mask> test_masks(const SearchSpace& space, TestClass cls) {
  std::vector<Mask> out;
  for (const PositionSet& t : enumerate_tests(space, cls)) out.push_back(t.to_mask());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

struct GameSolver::Impl {
  MaskGame game;
};

GameSolver::GameSolver(SearchSpace space, std::int64_t s, TestClass cls, std::size_t state_cap) {
  check_oracle_space(space, cls);
  impl_ = std::make_unique<Impl>(Impl{MaskGame(space, s, test_masks(space, cls), state_cap)});
}
GameSolver::~GameSolver() = default;
GameSolver::GameSolver(GameSolver&&) noexcept = default;
GameSolver& GameSolver::operator=(GameSolver&&) noexcept = default;

bool GameSolver::solvable(const PositionSet& state, int budget) {
  require_members(impl_->game.space(), state);
  return impl_->game.solvable(state.to_mask(), budget);
}

std::optional<int> GameSolver::min_tests(int max_budget) {
  const Mask root = impl_->game.full();
  for (int d = 0; d <= max_budget; ++d) {
    if (impl_->game.solvable(root, d)) return d;
  }
  return std::nullopt;
}

std::optional<int> GameSolver::min_tests_unbounded() { return impl_->game.solve_unbounded(impl_->game.full()); }

std::size_t GameSolver::states() const { return impl_->game.states(); }

AdaptiveStrategy GameSolver::extract_strategy(int budget) {
  MaskGame& g = impl_->game;
  const SearchSpace& space = g.space();
  if (!g.solvable(g.full(), budget)) throw DomainError("no strategy within the given budget");
  AdaptiveStrategy strategy(space, g.accuracy(), budget);
  auto build = [&](auto&& self, Mask d, int left) -> int {
    if (!g.solvable(d, left)) throw std::logic_error("oracle memo lost a winning state");
    const Mask t = g.tests()[static_cast<std::size_t>(g.best_test(d))];
    std::array<int, 2> kids{};
    for (int y = 0; y < 2; ++y) {
      const Mask kept = y ? (d & t) : (d & ~t);
      if (g.terminal(kept)) {
        kids[static_cast<std::size_t>(y)] = strategy.add_leaf(PositionSet::from_mask(g.announce(kept)));
      } else {
        kids[static_cast<std::size_t>(y)] = self(self, g.grow(kept), left - 1);
      }
    }
    return strategy.add_test(PositionSet::from_mask(t), kids[0], kids[1]);
  };
  const Mask root = g.full();
  strategy.set_root(g.won(root) ? strategy.add_leaf(space.initial()) : build(build, root, budget));
  return strategy;
}

GameValue exact_min_tests(const SearchSpace& space, std::int64_t s, TestClass cls, int budget, bool extract) {
  if (budget < 0) throw DomainError("test budget must be >= 0");
  GameSolver solver(space, s, cls);
  GameValue value;
  value.budget = budget;
  value.min_tests = solver.min_tests(budget);
  if (extract && value.min_tests) value.strategy = solver.extract_strategy(*value.min_tests);
  value.states = solver.states();
  return value;
}

std::int64_t exact_min_accuracy(const SearchSpace& space, std::optional<int> n_budget, TestClass cls) {
  check_oracle_space(space, cls);
  for (std::int64_t s = 1; s < space.num_vertices; ++s) {
    GameSolver solver(space, s, cls);
    const auto v = n_budget ? solver.min_tests(*n_budget) : solver.min_tests_unbounded();
    if (v) return s;
  }
  return space.num_vertices;
}

// ---------------------------------------------------------------------------

namespace {

class MatrixSearch {
 public:
  MatrixSearch(const SearchSpace& space, std::int64_t s, int rows, const MatrixSearchOptions& options)
      : game_(space, s, {}, 4'000'000), rows_(rows), options_(options) {
    n_ = static_cast<int>(space.num_vertices);
    if (options.adaptive_pruning && n_ <= 10) {
      pruner_.emplace(space, s, test_masks(space, TestClass::AllSubsets), 4'000'000);
    }
  }

  bool run(std::vector<Mask>& chosen) {
    const Mask root = game_.full();
    if (game_.won(root)) {
      chosen.assign(static_cast<std::size_t>(rows_), 0);
      return true;
    }
    return search({root}, rows_, chosen);
  }

  std::size_t nodes() const { return nodes_; }

 private:
  Mask canonical(Mask row) const {
    const Mask top = Mask{1} << (n_ - 1);
    return (row & top) ? (~row & game_.full()) : row;
  }
  Mask reflect(Mask row) const {
    Mask out = 0;
    for (int j = 0; j < n_; ++j) {
      if (row >> j & 1) out |= Mask{1} << (n_ - 1 - j);
    }
    return out;
  }

  std::string key(const std::vector<Mask>& frontier, int left) const {
    std::string k(reinterpret_cast<const char*>(frontier.data()), frontier.size() * sizeof(Mask));
    k.push_back(static_cast<char>(left));
    return k;
  }

  bool search(const std::vector<Mask>& frontier, int left, std::vector<Mask>& chosen) {
    if (frontier.empty()) {
      chosen.resize(static_cast<std::size_t>(rows_), 0);
      return true;
    }
    if (left == 0) return false;
    if (pruner_) {
      for (Mask d : frontier) {
        if (!pruner_->solvable(d, left)) return false;
      }
    }
    const std::string k = key(frontier, left);
    if (failed_.count(k)) return false;
    const bool first = left == rows_;
    const Mask limit = Mask{1} << (n_ - 1);
    for (Mask row = 0; row < limit; ++row) {
      if (first && canonical(reflect(row)) < row) continue;
      if (++nodes_ > options_.node_cap) throw ResourceLimitError("matrix search node cap exceeded");
      std::vector<Mask> next;
      for (Mask d : frontier) {
        for (int y = 0; y < 2; ++y) {
          const Mask kept = y ? (d & row) : (d & ~row);
          if (game_.terminal(kept)) continue;
          next.push_back(game_.grow(kept));
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      chosen.push_back(row);
      if (search(next, left - 1, chosen)) return true;
      chosen.pop_back();
    }
    failed_.insert(k);
    return false;
  }

  MaskGame game_;
  std::optional<MaskGame> pruner_;
  int rows_;
  int n_ = 0;
  MatrixSearchOptions options_;
  std::size_t nodes_ = 0;
  std::unordered_set<std::string> failed_;
};

}  // namespace

MatrixSearchResult exact_best_matrix(const SearchSpace& space, std::int64_t s, int n,
                                     const MatrixSearchOptions& options) {
  space.validate();
  if (!space.is_bounded()) throw DomainError("matrix search works on paths and cycles");
  if (n < 0) throw DomainError("row count must be >= 0");
  if (static_cast<std::int64_t>(n) * space.num_vertices > 32) throw ResourceLimitError("matrix search capped at n*N <= 32");
  MatrixSearchResult result;
  if (n == 0) {
    result.exists = space.num_vertices <= s;
    return result;
  }
  MatrixSearch search(space, s, n, options);
  std::vector<Mask> rows;
  result.exists = search.run(rows);
  result.nodes = search.nodes();
  if (result.exists) {
    TestMatrix m(n, space.num_vertices);
    for (int i = 0; i < n; ++i) {
      for (std::int64_t j = 1; j <= space.num_vertices; ++j) {
        m.set(i + 1, j, static_cast<int>(rows[static_cast<std::size_t>(i)] >> (j - 1) & 1));
      }
    }
    result.matrix = m;
  }
  return result;
}

std::string OracleRecord::to_json() const {
  nlohmann::ordered_json j;
  j["topology"] = std::string(to_string(topology));
  j["N"] = n_vertices;
  j["k"] = k;
  j["s"] = s;
  j["class"] = std::string(to_string(cls));
  j["moves_after_last_test"] = moves_after_last_test;
  if (min_tests) {
    j["min_tests"] = *min_tests;
  } else {
    j["min_tests"] = nullptr;
  }
  return j.dump();
}

}  // namespace twosided
