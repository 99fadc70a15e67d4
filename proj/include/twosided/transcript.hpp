#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twosided/search_space.hpp"

namespace twosided {

struct Round {
  PositionSet test;
  int answer = 0;
  PositionSet candidates;  // D_i after this round
  friend bool operator==(const Round&, const Round&) = default;
};

// Record of one play of the search game.
struct Transcript {
  PositionSet initial;
  std::vector<Round> rounds;
  std::optional<Walk> witness;  // a target walk realizing the answers

  std::vector<PositionSet> tests() const;
  std::vector<int> answers() const;
  const PositionSet& final_candidates() const;
  // min |D_i| over i = 0..n: the best accuracy the searcher saw.
  std::int64_t smallest_candidate_size() const;

  // One line per round: round=<i> test=<set> answer=<bit> D=<set>, with a
  // trailing bit=<b> field when `with_bits` is set.
  std::string serialize(bool with_bits = false) const;
  static Transcript parse(std::string_view text, const SearchSpace& space);

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

// True if every prefix of the transcript is produced by some valid walk and
// each recorded D_i matches the replayed update chain.
bool is_realizable(const SearchSpace& space, const Transcript& transcript);

}  // namespace twosided
