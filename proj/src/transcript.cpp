#include "twosided/transcript.hpp"

#include <algorithm>
#include <sstream>

#include "twosided/errors.hpp"

namespace twosided {

std::vector<PositionSet> Transcript::tests() const {
  std::vector<PositionSet> out;
  out.reserve(rounds.size());
  for (const Round& r : rounds) out.push_back(r.test);
  return out;
}

std::vector<int> Transcript::answers() const {
  std::vector<int> out;
  out.reserve(rounds.size());
  for (const Round& r : rounds) out.push_back(r.answer);
  return out;
}

const PositionSet& Transcript::final_candidates() const {
  return rounds.empty() ? initial : rounds.back().candidates;
}

std::int64_t Transcript::smallest_candidate_size() const {
  std::int64_t best = initial.size();
  for (const Round& r : rounds) best = std::min(best, r.candidates.size());
  return best;
}

std::string Transcript::serialize(bool with_bits) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    const Round& r = rounds[i];
    out << "round=" << i + 1 << " test=" << r.test.to_string() << " answer=" << r.answer
        << " D=" << r.candidates.to_string();
    if (with_bits) out << " bit=" << r.answer;
    out << '\n';
  }
  return out.str();
}

Transcript Transcript::parse(std::string_view text, const SearchSpace& space) {
  Transcript t;
  t.initial = space.initial();
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string token;
    Round r;
    bool have_test = false, have_answer = false, have_d = false;
    while (ls >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) throw DomainError("malformed transcript field '" + token + "'");
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (key == "test") {
        r.test = PositionSet::parse(value);
        have_test = true;
      } else if (key == "answer") {
        if (value != "0" && value != "1") throw DomainError("answer must be 0 or 1");
        r.answer = value[0] - '0';
        have_answer = true;
      } else if (key == "D") {
        r.candidates = PositionSet::parse(value);
        have_d = true;
      }
      // round= and bit= are informational.
    }
    if (!have_test || !have_answer || !have_d) throw DomainError("transcript line missing fields: '" + line + "'");
    t.rounds.push_back(std::move(r));
  }
  return t;
}

bool is_realizable(const SearchSpace& space, const Transcript& transcript) {
  const std::vector<PositionSet> tests = transcript.tests();
  const std::vector<int> answers = transcript.answers();
  const Replay chain = replay(space, tests, answers);
  if (!chain.consistent) return false;
  for (std::size_t i = 0; i < transcript.rounds.size(); ++i) {
    if (chain.candidates[i + 1] != transcript.rounds[i].candidates) return false;
  }
  // Every prefix of a consistent chain is consistent; one full witness walk
  // certifies the whole sequence.
  const auto walk = consistent_walk(space, tests, answers);
  if (!walk || !is_valid_walk(space, *walk)) return false;
  return induced_answers(tests, *walk) == answers;
}

}  // namespace twosided
