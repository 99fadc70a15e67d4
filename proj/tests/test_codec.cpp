#include <gtest/gtest.h>

#include "support.hpp"
#include "twosided/adaptive.hpp"
#include "twosided/codec.hpp"
#include "twosided/errors.hpp"
#include "twosided/nonadaptive.hpp"

using namespace twosided;

namespace {
PositionSet P(const char* text) { return PositionSet::parse(text); }
}  // namespace

TEST(Codec, PrintedMatrixAllZero) {
  const SearchSpace p16 = SearchSpace::path(16, 1);
  const CodecStrategy m = expanding_accuracy_matrix(16);
  const SessionResult r = simulate_session(p16, m, 4, FixedWalkSource{Walk::parse("3,3,2,2,1,1,2")});
  EXPECT_EQ(bits_to_string(r.bits), "000000");
  EXPECT_EQ(r.decoded, P("1-4"));
  EXPECT_EQ(r.final_position, 2);
  EXPECT_TRUE(r.success());
  EXPECT_EQ(decode(p16, m, parse_bits("000000")), P("1-4"));
}

TEST(Codec, EncoderDecoderLockstep) {
  const SearchSpace p10 = SearchSpace::path(10, 1);
  CodecSession session(p10, path_strategy(10, 4, 1));
  const std::vector<Vertex> walk{7, 8, 8, 9};
  for (std::size_t i = 0; !session.finished(); ++i) {
    session.encode_step(walk[i]);
    const Replay r = replay(p10, session.transcript().tests(), session.bits());
    ASSERT_EQ(r.candidates.back(), session.decoder_state());
  }
  EXPECT_EQ(session.bits().size(), 3u);
  EXPECT_TRUE(session.decoded().contains(9));
  EXPECT_LE(session.decoded().size(), 4);
  EXPECT_THROW(session.encode_step(9), DomainError);
}

TEST(Codec, RandomWalksOnP20) {
  const SearchSpace p20 = SearchSpace::path(20, 1);
  const CodecStrategy tree = path_strategy(20, 4, 1);
  const CodecStrategy matrix = expanding_accuracy_matrix(20);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const SessionResult a = simulate_session(p20, tree, 4, RandomWalkSource{seed});
    ASSERT_TRUE(a.success()) << "tree seed " << seed;
    ASSERT_TRUE(is_valid_walk(p20, *a.transcript.witness));
    const SessionResult b = simulate_session(p20, matrix, 4, RandomWalkSource{seed});
    ASSERT_TRUE(b.success()) << "matrix seed " << seed;
  }
}

TEST(Codec, RandomWalksAreDeterministic) {
  const SearchSpace c12 = SearchSpace::cycle(12, 1);
  const CodecStrategy st = cycle_strategy(12, 5, 1);
  const SessionResult a = simulate_session(c12, st, 5, RandomWalkSource{99});
  const SessionResult b = simulate_session(c12, st, 5, RandomWalkSource{99});
  EXPECT_EQ(a.bits, b.bits);
  EXPECT_EQ(a.transcript.witness, b.transcript.witness);
  EXPECT_TRUE(a.success());
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ASSERT_TRUE(simulate_session(c12, st, 5, RandomWalkSource{seed}).success()) << seed;
  }
}

TEST(Codec, AdversarialSource) {
  const SearchSpace p10 = SearchSpace::path(10, 1);
  const SessionResult r = simulate_session(p10, path_strategy(10, 4, 1), 4, AdversarialSource{});
  EXPECT_TRUE(r.success());
  EXPECT_EQ(r.bits.size(), 3u);
  EXPECT_EQ(r.decoded.size(), 4);
}

// Every walk of P_8 and C_8 through each strategy lands in the decoded set.
TEST(Codec, ContainsEveryWalk) {
  struct Case {
    SearchSpace sp;
    CodecStrategy st;
    std::int64_t s;
  };
  const std::vector<Case> cases{
      {SearchSpace::path(8, 1), path_strategy(8, 4, 1), 4},
      {SearchSpace::path(8, 1), path_shifting_strategy(8, 1), 4},
      {SearchSpace::path(8, 1), expanding_accuracy_matrix(8), 4},
      {SearchSpace::cycle(8, 1), cycle_strategy(8, 5, 1), 5},
  };
  for (const Case& c : cases) {
    int ticks = 0;
    std::vector<int> zeros;
    while (codec_next_test(c.st, zeros)) {
      zeros.push_back(0);
      ++ticks;
    }
    support::for_each_walk(c.sp, static_cast<std::size_t>(ticks) + 4, [&](const std::vector<Vertex>& w) {
      const SessionResult r = simulate_session(c.sp, c.st, c.s, FixedWalkSource{Walk{w}});
      ASSERT_TRUE(r.lockstep);
      ASSERT_TRUE(r.contains) << Walk{w}.to_string();
    });
  }
}

TEST(Codec, Errors) {
  const SearchSpace p10 = SearchSpace::path(10, 1);
  CodecSession session(p10, path_strategy(10, 4, 1));
  EXPECT_THROW(session.encode_step(11), DomainError);
  session.encode_step(3);
  EXPECT_THROW(session.encode_step(5), DomainError);
  EXPECT_THROW(CodecSession(p10, expanding_accuracy_matrix(12)), DomainError);
  EXPECT_THROW(decode(p10, path_strategy(10, 4, 1), parse_bits("0000")), DomainError);
  EXPECT_THROW(simulate_session(p10, path_strategy(10, 4, 1), 4, FixedWalkSource{Walk::parse("1,3")}), DomainError);
  EXPECT_THROW(simulate_session(p10, path_strategy(10, 4, 1), 4, FixedWalkSource{Walk::parse("1,2")}), DomainError);
  // Vertex 1 then vertex 4 in consecutive ticks is a move of 3.
  const SearchSpace frozen = SearchSpace::path(4, 1).frozen_at_end();
  const TestMatrix m = TestMatrix::from_rows({"1000", "0001"});
  EXPECT_THROW(decode(frozen, m, parse_bits("11")), DomainError);
}

TEST(Codec, Bits) {
  EXPECT_EQ(parse_bits("0110"), (std::vector<int>{0, 1, 1, 0}));
  EXPECT_EQ(bits_to_string(parse_bits("")), "");
  EXPECT_THROW(parse_bits("012"), DomainError);
}

TEST(Codec, TranscriptWithBits) {
  const SearchSpace p16 = SearchSpace::path(16, 1);
  const SessionResult r =
      simulate_session(p16, expanding_accuracy_matrix(16), 4, FixedWalkSource{Walk::parse("3,3,2,2,1,1,2")});
  const std::string text = r.transcript.serialize(true);
  EXPECT_NE(text.find("bit=0"), std::string::npos);
  const Transcript back = Transcript::parse(text, p16);
  EXPECT_EQ(back.rounds, r.transcript.rounds);
}
