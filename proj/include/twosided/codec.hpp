#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twosided/nonadaptive.hpp"
#include "twosided/strategy.hpp"
#include "twosided/transcript.hpp"

namespace twosided {

// Either a decision tree or a fixed matrix; both are run one test per tick.
using CodecStrategy = std::variant<AdaptiveStrategy, TestMatrix>;

// Test for the next tick given the bits sent so far, or nullopt when the
// strategy has no more tests.
std::optional<PositionSet> codec_next_test(const CodecStrategy& strategy, std::span<const int> bits);

// Encoder and decoder of one noiseless one-bit-per-tick link.  The encoder
// sees the source position each tick and sends whether it lies in the
// current test; the decoder keeps the candidate set D_i.
class CodecSession {
 public:
  CodecSession(SearchSpace space, CodecStrategy strategy);

  // Throws DomainError if the source moved more than k since the previous
  // tick, or if the strategy has no test left.
  int encode_step(Vertex position);

  bool finished() const;
  const std::vector<int>& bits() const { return bits_; }
  const std::vector<Vertex>& positions() const { return positions_; }
  // D_i after the bits so far.
  const PositionSet& decoder_state() const { return candidates_; }
  // The set the receiver announces now.
  PositionSet decoded() const;
  const Transcript& transcript() const { return transcript_; }

 private:
  SearchSpace space_;
  CodecStrategy strategy_;
  std::vector<int> bits_;
  std::vector<Vertex> positions_;
  PositionSet kept_;
  PositionSet candidates_;
  Transcript transcript_;
};

// Announced set after replaying `bits`; throws DomainError when no walk
// produces them.
PositionSet decode(const SearchSpace& space, const CodecStrategy& strategy, std::span<const int> bits);

std::string bits_to_string(std::span<const int> bits);
std::vector<int> parse_bits(std::string_view text);

struct FixedWalkSource {
  Walk walk;
};
// Start uniform on 1..N, then move uniformly to one of the positions within
// k steps.  Uses std::mt19937_64.
struct RandomWalkSource {
  std::uint64_t seed = 0;
};
// Walk realizing the greedy adversary's answers against the strategy.
struct AdversarialSource {};
using WalkSource = std::variant<FixedWalkSource, RandomWalkSource, AdversarialSource>;

struct SessionResult {
  Transcript transcript;  // witness holds the source walk
  std::vector<int> bits;
  PositionSet decoded;
  Vertex final_position = 0;  // where the source is when the answer is announced
  bool lockstep = true;       // decoder state matched the replayed D_i every tick
  bool contains = false;      // final_position is in decoded
  bool accurate = false;      // |decoded| <= s
  bool success() const { return lockstep && contains && accurate; }
};

// Runs encoder and decoder in lockstep until the strategy stops.
SessionResult simulate_session(const SearchSpace& space, const CodecStrategy& strategy, std::int64_t s,
                               const WalkSource& source);

}  // namespace twosided
