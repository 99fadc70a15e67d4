#include "twosided/strategy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "twosided/errors.hpp"

namespace twosided {

AdaptiveStrategy::AdaptiveStrategy(SearchSpace space, std::int64_t accuracy, int test_budget,
                                   std::size_t node_budget)
    : space_(space), accuracy_(accuracy), test_budget_(test_budget), node_budget_(node_budget) {
  space_.validate();
}

int AdaptiveStrategy::push(StrategyNode node) {
  if (nodes_.size() >= node_budget_) {
    throw ResourceLimitError("strategy exceeds node budget of " + std::to_string(node_budget_));
  }
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size() - 1);
}

int AdaptiveStrategy::add_leaf(PositionSet answer) {
  StrategyNode node;
  node.answer = std::move(answer);
  return push(std::move(node));
}

int AdaptiveStrategy::add_test(PositionSet test, int on0, int on1) {
  StrategyNode node;
  node.test = std::move(test);
  node.child = {on0, on1};
  return push(std::move(node));
}

int AdaptiveStrategy::depth() const {
  if (root_ < 0) return 0;
  std::vector<std::pair<int, int>> stack{{root_, 0}};
  int best = 0;
  while (!stack.empty()) {
    auto [id, d] = stack.back();
    stack.pop_back();
    const StrategyNode& n = node(id);
    if (n.is_leaf()) {
      best = std::max(best, d);
    } else {
      stack.push_back({n.child[0], d + 1});
      stack.push_back({n.child[1], d + 1});
    }
  }
  return best;
}

std::optional<PositionSet> AdaptiveStrategy::next_test(std::span<const int> answers) const {
  int id = root_;
  for (int a : answers) {
    const StrategyNode& n = node(id);
    if (n.is_leaf()) return std::nullopt;
    id = n.child[a != 0 ? 1 : 0];
  }
  return node(id).test;
}

const StrategyNode& AdaptiveStrategy::leaf_for(std::span<const int> answers) const {
  int id = root_;
  for (int a : answers) {
    const StrategyNode& n = node(id);
    if (n.is_leaf()) break;
    id = n.child[a != 0 ? 1 : 0];
  }
  const StrategyNode& n = node(id);
  if (!n.is_leaf()) throw DomainError("answer sequence ends before reaching a leaf");
  return n;
}

std::string AdaptiveStrategy::serialize() const {
  if (root_ < 0) throw DomainError("strategy has no root");
  // Renumber in preorder so the root is 0 and output is independent of
  // construction order.
  std::vector<int> order;
  std::map<int, int> renumber;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    renumber[id] = static_cast<int>(order.size());
    order.push_back(id);
    const StrategyNode& n = node(id);
    if (!n.is_leaf()) {
      stack.push_back(n.child[1]);
      stack.push_back(n.child[0]);
    }
  }
  std::ostringstream out;
  for (int id : order) {
    const StrategyNode& n = node(id);
    if (n.is_leaf()) {
      out << "leaf " << renumber[id] << " answer=" << n.answer.to_string() << '\n';
    } else {
      out << "node " << renumber[id] << " test=" << n.test->to_string() << " on0=" << renumber[n.child[0]]
          << " on1=" << renumber[n.child[1]] << '\n';
    }
  }
  return out.str();
}

namespace {

std::string_view field(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key || token.size() <= key.size() || token[key.size()] != '=') {
    throw DomainError("expected field '" + std::string(key) + "=' in strategy line, got '" + std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

}  // namespace

AdaptiveStrategy AdaptiveStrategy::parse(std::string_view text, SearchSpace space, std::int64_t accuracy,
                                         int test_budget) {
  struct Raw {
    bool leaf;
    PositionSet set;
    int on0 = -1, on1 = -1;
  };
  std::map<int, Raw> raw;
  std::istringstream in{std::string(text)};
  std::string line;
  int first = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kind, id_text, a, b, c;
    ls >> kind >> id_text;
    int id = 0;
    try {
      id = std::stoi(id_text);
    } catch (const std::logic_error&) {
      throw DomainError("bad node id in strategy line: '" + line + "'");
    }
    if (raw.count(id)) throw DomainError("duplicate node id " + id_text);
    if (first < 0) first = id;
    if (kind == "leaf") {
      ls >> a;
      raw[id] = {true, PositionSet::parse(field(a, "answer"))};
    } else if (kind == "node") {
      ls >> a >> b >> c;
      Raw r{false, PositionSet::parse(field(a, "test"))};
      try {
        r.on0 = std::stoi(std::string(field(b, "on0")));
        r.on1 = std::stoi(std::string(field(c, "on1")));
      } catch (const std::logic_error&) {
        throw DomainError("bad child id in strategy line: '" + line + "'");
      }
      raw[id] = r;
    } else {
      throw DomainError("unknown strategy line kind '" + kind + "'");
    }
  }
  if (first < 0) throw DomainError("empty strategy text");

  AdaptiveStrategy out(space, accuracy, test_budget);
  std::map<int, int> built;
  // Post-order construction; depth is small so recursion is fine.
  std::function<int(int, int)> build = [&](int id, int depth) -> int {
    auto it = raw.find(id);
    if (it == raw.end()) throw DomainError("strategy references missing node " + std::to_string(id));
    if (depth > static_cast<int>(raw.size())) throw DomainError("strategy text contains a cycle");
    const Raw& r = it->second;
    if (r.leaf) return out.add_leaf(r.set);
    const int c0 = build(r.on0, depth + 1);
    const int c1 = build(r.on1, depth + 1);
    return out.add_test(r.set, c0, c1);
  };
  out.set_root(build(first, 0));
  return out;
}

StrategyCheck check_strategy(const AdaptiveStrategy& strategy, std::int64_t s) {
  StrategyCheck report;
  report.successful = true;
  report.depth = strategy.depth();
  report.within_budget = report.depth <= strategy.test_budget();
  const SearchSpace& space = strategy.space();

  struct Frame {
    int id;
    PositionSet candidates;
    PositionSet announced;
    std::int64_t best;  // smallest announced size along the branch
    std::vector<int> answers;
  };
  const PositionSet d0 = space.initial();
  std::vector<Frame> stack{{strategy.root(), d0, d0, d0.size(), {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const StrategyNode& n = strategy.node(f.id);
    if (n.is_leaf()) {
      if (n.answer != f.announced) {
        if (report.leaves_match) {
          report.problem = "leaf " + n.answer.to_string() + " differs from replayed " + f.announced.to_string();
        }
        report.leaves_match = false;
      }
      if (f.best > s) report.successful = false;
      if (f.announced.size() > report.worst_size) {
        report.worst_size = f.announced.size();
        report.worst_answers = f.answers;
      }
      continue;
    }
    for (int y = 0; y < 2; ++y) {
      PositionSet kept = restrict_to_answer(f.candidates, *n.test, y);
      if (kept.empty()) continue;  // no walk produces this answer
      PositionSet announced = final_expand(space, kept);
      Frame child{n.child[y], neighborhood(space, kept), announced, std::min(f.best, announced.size()),
                  f.answers};
      child.answers.push_back(y);
      stack.push_back(std::move(child));
    }
  }
  if (!report.within_budget) report.successful = false;
  return report;
}

Searcher searcher_for(const AdaptiveStrategy& strategy) {
  return [&strategy](std::span<const int> answers) { return strategy.next_test(answers); };
}

Searcher searcher_for(std::vector<PositionSet> tests) {
  return [tests = std::move(tests)](std::span<const int> answers) -> std::optional<PositionSet> {
    if (answers.size() >= tests.size()) return std::nullopt;
    return tests[answers.size()];
  };
}

}  // namespace twosided
