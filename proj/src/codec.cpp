#include "twosided/codec.hpp"

#include <random>

#include "twosided/adversary.hpp"
#include "twosided/errors.hpp"

namespace twosided {

std::optional<PositionSet> codec_next_test(const CodecStrategy& strategy, std::span<const int> bits) {
  if (const auto* tree = std::get_if<AdaptiveStrategy>(&strategy)) return tree->next_test(bits);
  const auto& matrix = std::get<TestMatrix>(strategy);
  if (static_cast<int>(bits.size()) >= matrix.rows()) return std::nullopt;
  return matrix.row_set(static_cast<int>(bits.size()) + 1);
}

CodecSession::CodecSession(SearchSpace space, CodecStrategy strategy)
    : space_(space), strategy_(std::move(strategy)) {
  space_.validate();
  if (const auto* m = std::get_if<TestMatrix>(&strategy_); m && m->cols() != space_.num_vertices) {
    throw DomainError("matrix width differs from N");
  }
  candidates_ = space_.initial();
  transcript_.initial = candidates_;
}

bool CodecSession::finished() const { return !codec_next_test(strategy_, bits_).has_value(); }

int CodecSession::encode_step(Vertex position) {
  if (!space_.is_member(position)) throw DomainError("source position " + std::to_string(position) + " is off the graph");
  if (!positions_.empty() && space_.distance(positions_.back(), position) > space_.speed) {
    throw DomainError("source moved more than k between ticks");
  }
  const auto test = codec_next_test(strategy_, bits_);
  if (!test) throw DomainError("strategy has no test left");
  const int bit = test_answer(*test, position);
  positions_.push_back(position);
  bits_.push_back(bit);
  kept_ = restrict_to_answer(candidates_, *test, bit);
  candidates_ = neighborhood(space_, kept_);
  transcript_.rounds.push_back({*test, bit, candidates_});
  return bit;
}

PositionSet CodecSession::decoded() const {
  return bits_.empty() ? candidates_ : final_expand(space_, kept_);
}

PositionSet decode(const SearchSpace& space, const CodecStrategy& strategy, std::span<const int> bits) {
  std::vector<PositionSet> tests;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    auto t = codec_next_test(strategy, bits.first(i));
    if (!t) throw DomainError("more bits than the strategy has tests");
    tests.push_back(std::move(*t));
  }
  const Replay chain = replay(space, tests, bits);
  if (!chain.consistent) throw DomainError("bit sequence is not produced by any walk");
  return chain.announced(space);
}

std::string bits_to_string(std::span<const int> bits) {
  std::string out;
  for (int b : bits) out.push_back(b ? '1' : '0');
  return out;
}

std::vector<int> parse_bits(std::string_view text) {
  std::vector<int> out;
  for (char c : text) {
    if (c != '0' && c != '1') throw DomainError(std::string("bit must be 0 or 1, got '") + c + "'");
    out.push_back(c - '0');
  }
  return out;
}

namespace {

int tick_limit(const CodecStrategy& strategy) {
  if (const auto* tree = std::get_if<AdaptiveStrategy>(&strategy)) return tree->depth();
  return std::get<TestMatrix>(strategy).rows();
}

}  // namespace

SessionResult simulate_session(const SearchSpace& space, const CodecStrategy& strategy, std::int64_t s,
                               const WalkSource& source) {
  CodecSession session(space, strategy);
  const int ticks = tick_limit(strategy);
  std::vector<Vertex> walk;

  if (const auto* fixed = std::get_if<FixedWalkSource>(&source)) {
    if (!is_valid_walk(space, fixed->walk)) throw DomainError("walk moves more than k per tick");
    walk = fixed->walk.positions;
  } else if (const auto* rnd = std::get_if<RandomWalkSource>(&source)) {
    std::mt19937_64 rng(rnd->seed);
    std::uniform_int_distribution<Vertex> start(1, space.num_vertices);
    walk.push_back(start(rng));
    for (int i = 0; i < ticks; ++i) {
      const std::vector<Vertex> next = neighborhood(space, PositionSet::of({walk.back()})).members();
      std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
      walk.push_back(next[pick(rng)]);
    }
  } else {
    const Searcher searcher = [&strategy](std::span<const int> bits) { return codec_next_test(strategy, bits); };
    const Transcript t = greedy_adversary(space, searcher, ticks);
    if (!t.witness) throw std::logic_error("greedy adversary produced an unrealizable transcript");
    walk = t.witness->positions;
  }

  std::size_t i = 0;
  while (!session.finished()) {
    if (i >= walk.size()) throw DomainError("walk is shorter than the strategy");
    session.encode_step(walk[i++]);
  }

  SessionResult result;
  result.transcript = session.transcript();
  result.bits = session.bits();
  result.decoded = session.decoded();
  if (space.moves_after_last_test && i < walk.size()) {
    result.final_position = walk[i];
    ++i;
  } else {
    result.final_position = i == 0 ? walk.front() : walk[i - 1];
    if (i == 0) ++i;
  }
  walk.resize(i);
  result.transcript.witness = Walk{walk};

  const Replay chain = replay(space, result.transcript.tests(), result.bits);
  for (std::size_t r = 0; r < result.transcript.rounds.size(); ++r) {
    if (chain.candidates[r + 1] != result.transcript.rounds[r].candidates) result.lockstep = false;
  }
  if (decode(space, strategy, result.bits) != result.decoded) result.lockstep = false;
  result.contains = result.decoded.contains(result.final_position);
  result.accurate = result.decoded.size() <= s;
  return result;
}

}  // namespace twosided
