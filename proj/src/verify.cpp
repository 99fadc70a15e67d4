#include "twosided/verify.hpp"

#include <bit>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "twosided/adaptive.hpp"
#include "twosided/adversary.hpp"
#include "twosided/codec.hpp"
#include "twosided/errors.hpp"
#include "twosided/nonadaptive.hpp"

namespace twosided {

Scale parse_scale(std::string_view text) {
  if (text == "tiny") return Scale::Tiny;
  if (text == "default") return Scale::Default;
  throw DomainError("unknown scale '" + std::string(text) + "' (tiny or default)");
}

std::string CheckResult::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = id;
  j["name"] = name;
  j["passed"] = passed;
  j["seconds"] = seconds;
  j["summary"] = summary;
  j["failures"] = failures;
  j["findings"] = findings;
  j["checked"] = details.size();
  return j.dump();
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"golden",    "pathtests",        "cycle",     "path",   "thresholds",
                                              "nonadaptive", "restricted", "soundness", "sliding"};
  return names;
}

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

std::int64_t ceil_half(std::int64_t n) { return (n + 1) / 2; }

struct Ctx {
  CheckResult& r;
  Scale scale;
  bool tiny() const { return scale == Scale::Tiny; }

  void expect(bool ok, const std::string& what) {
    r.details.push_back(what);
    if (!ok) r.failures.push_back(what);
  }
  void finding(const std::string& what) { r.findings.push_back(what); }

  std::optional<int> oracle_tests(const SearchSpace& space, std::int64_t s, TestClass cls, int budget) {
    const GameValue v = exact_min_tests(space, s, cls, budget);
    r.records.push_back({space.topology, space.num_vertices, space.speed, s, cls, space.moves_after_last_test,
                         v.min_tests});
    return v.min_tests;
  }
};

// ---------------------------------------------------------------------------

const std::vector<std::string> kExample1Rows{
    "0000000011111111", "0000000110000000", "0000001100111111",
    "0000011001100000", "0000110011001111", "0001100110011000",
};

void check_golden(Ctx& c) {
  const TestMatrix golden = TestMatrix::from_rows(kExample1Rows);
  const TestMatrix built = expanding_accuracy_matrix(16);
  c.expect(built == golden, "expanding_accuracy_matrix(16) equals the printed 6x16 matrix");
  c.expect(built.rows() == ceil_half(16) - 2, "row count is ceil(16/2)-2 = 6");
  const SearchSpace p16 = SearchSpace::path(16, 1);
  const MatrixEvaluation ev = evaluate_matrix(p16, built, 4);
  c.expect(ev.success && ev.achieved_accuracy == 4, "evaluate_matrix succeeds with s=4 (achieved " +
                                                        str(ev.achieved_accuracy) + ")");
  const std::vector<int> zeros(6, 0);
  const PositionSet decoded = decode(p16, CodecStrategy{built}, zeros);
  c.expect(decoded == PositionSet::range(1, 4), "bits 000000 decode to {1,2,3,4} (got " + decoded.to_string() + ")");
  c.r.summary = "matrix golden, s=4 with 6 rows, 000000 -> " + decoded.to_string();
}

void check_pathtests(Ctx& c) {
  const std::int64_t hi = c.tiny() ? 9 : 14;
  int agree = 0;
  for (std::int64_t n = 5; n <= hi; ++n) {
    const SearchSpace p = SearchSpace::path(n, 1);
    const int expected = static_cast<int>(ceil_half(n) - 2);
    const auto iv = c.oracle_tests(p, 4, TestClass::Intervals, expected + 1);
    c.expect(iv == expected, "P_" + str(n) + " intervals: oracle " + (iv ? str(*iv) : "none") + ", formula " +
                                 str(expected));
    if (n <= 9) {
      const auto all = c.oracle_tests(p, 4, TestClass::AllSubsets, expected + 1);
      c.expect(all == iv, "P_" + str(n) + " all subsets equals intervals (" + (all ? str(*all) : "none") + ")");
    }
    agree += iv == expected;
  }
  c.r.summary = str(agree) + " of " + str(hi - 4) + " path sizes match ceil(N/2)-2";
}

void check_cycle(Ctx& c) {
  const int max_n = c.tiny() ? 2 : 3;
  for (std::int64_t s : {5, 6}) {
    for (int n = 0; n <= max_n; ++n) {
      const std::int64_t nc = cycle_capacity(n, s, 1);
      const AdaptiveStrategy st = cycle_strategy(nc, s, 1);
      const StrategyCheck chk = check_strategy(st, s);
      c.expect(chk.successful && chk.leaves_match && chk.depth <= n,
               "cycle_strategy(C_" + str(nc) + ", s=" + str(s) + ") succeeds in " + str(chk.depth) + " <= " +
                   str(n) + " tests");
      const SearchSpace over = SearchSpace::cycle(nc + 1, 1);
      const TestClass cls = (nc + 1 <= 9 && n <= 2) ? TestClass::AllSubsets : TestClass::Intervals;
      const SweepResult sw = sweep_greedy(over, cls, n);
      c.expect(sw.value >= s + 1, "greedy adversary on C_" + str(nc + 1) + " keeps |D_i| >= " + str(sw.value) +
                                      " against every " + std::string(to_string(cls)) + " sequence of " + str(n) +
                                      " tests");
    }
  }
  const std::int64_t max_oracle = c.tiny() ? 9 : 12;
  for (std::int64_t s : {5, 6}) {
    for (std::int64_t n = 1; n <= max_oracle; ++n) {
      const int formula = min_tests(Topology::Cycle, n, s, 1).tests;
      const auto got = c.oracle_tests(SearchSpace::cycle(n, 1), s, TestClass::Intervals, formula + 1);
      c.expect(got == formula, "C_" + str(n) + " s=" + str(s) + ": oracle " + (got ? str(*got) : "none") +
                                   ", capacity formula " + str(formula));
    }
  }
  c.r.summary = "halving succeeds at capacity, greedy refutes capacity+1, oracle agrees on C_1..C_" + str(max_oracle);
}

void check_path(Ctx& c) {
  struct Case {
    int k;
    std::int64_t s;
    int max_n;
  };
  std::vector<Case> cases{{1, 4, 3}, {1, 5, 3}, {2, 8, 2}};
  if (c.tiny()) cases = {{1, 4, 2}, {2, 8, 1}};
  for (const Case& cs : cases) {
    for (int n = 0; n <= cs.max_n; ++n) {
      const std::int64_t np = path_capacity(n, cs.s, cs.k);
      const AdaptiveStrategy st = path_strategy(np, cs.s, cs.k);
      const StrategyCheck chk = check_strategy(st, cs.s);
      const std::string tag = "k=" + str(cs.k) + " s=" + str(cs.s) + " n=" + str(n);
      c.expect(chk.successful && chk.leaves_match && chk.depth <= n,
               tag + ": path_strategy(P_" + str(np) + ") succeeds in " + str(chk.depth) + " tests");
      const SearchSpace over = SearchSpace::path(np + 1, cs.k);
      const SweepResult sw = sweep_margin(over, TestClass::Intervals, n, cs.s);
      c.expect(sw.value >= cs.s + 1, tag + ": margin adversary on P_" + str(np + 1) + " keeps |D_i| >= " +
                                         str(sw.value) + " against every interval sequence");
      if (!sw.invariants_held) c.finding(tag + ": margin invariants broke on some interval sequence");
    }
  }
  c.r.summary = "segment construction succeeds at capacity, margin adversary refutes capacity+1";
}

void check_thresholds(Ctx& c) {
  for (int k = 1; k <= 2; ++k) {
    const std::int64_t small = c.tiny() ? 7 : 9;
    for (std::int64_t n = 1; n <= small; ++n) {
      const std::int64_t got = exact_min_accuracy(SearchSpace::path(n, k), std::nullopt, TestClass::AllSubsets);
      c.expect(got == path_min_accuracy(n, k), "P_" + str(n) + " k=" + str(k) + " adaptive s* " + str(got) +
                                                   " vs " + str(path_min_accuracy(n, k)));
      const std::int64_t cyc = exact_min_accuracy(SearchSpace::cycle(n, k), std::nullopt, TestClass::AllSubsets);
      c.expect(cyc == cycle_min_accuracy(n, k), "C_" + str(n) + " k=" + str(k) + " adaptive s* " + str(cyc) +
                                                    " vs " + str(cycle_min_accuracy(n, k)));
    }
    if (!c.tiny()) {
      for (std::int64_t n = 10; n <= 13; ++n) {
        const std::int64_t got = exact_min_accuracy(SearchSpace::path(n, k), std::nullopt, TestClass::Intervals);
        c.expect(got == path_min_accuracy(n, k), "P_" + str(n) + " k=" + str(k) + " adaptive s* (intervals) " +
                                                     str(got) + " vs " + str(path_min_accuracy(n, k)));
      }
    }
  }

  // Non-adaptive thresholds by exhaustive matrix search.
  const std::int64_t max_n = c.tiny() ? 6 : 8;
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t n = 1; n <= max_n; ++n) {
      const SearchSpace p = SearchSpace::path(n, k);
      const std::int64_t want = nonadaptive_min_accuracy(n, k);
      const int rows = static_cast<int>(std::min<std::int64_t>(4, 32 / n));
      std::optional<int> found;
      for (int r = 0; r <= rows && !found; ++r) {
        if (exact_best_matrix(p, want, r).exists) found = r;
      }
      bool below = false;
      if (want > 1) below = exact_best_matrix(p, want - 1, rows).exists;
      c.expect(found && !below, "P_" + str(n) + " k=" + str(k) + " non-adaptive s*=" + str(want) + ": matrix with " +
                                    (found ? str(*found) : "none") + " rows, none for s=" + str(want - 1) +
                                    " with " + str(rows) + " rows");
    }
  }

  // Counter-strategy certificates against candidate matrices with s < 4k.
  std::mt19937_64 rng(20240611);
  std::vector<std::pair<int, std::int64_t>> sizes{{1, 7}, {1, 8}, {1, 10}, {1, 13}, {2, 13}, {2, 16}};
  if (c.tiny()) sizes = {{1, 7}, {2, 13}};
  int refuted = 0;
  int total = 0;
  for (const auto& [k, n] : sizes) {
    const SearchSpace p = SearchSpace::path(n, k);
    std::vector<TestMatrix> candidates;
    const TestMatrix good = general_k_matrix(n, k);
    candidates.push_back(good);
    if (good.rows() >= 2) candidates.push_back(good.without_last_row());
    candidates.emplace_back(3, n);
    for (int i = 0; i < (c.tiny() ? 3 : 8); ++i) {
      const int rows = 2 + static_cast<int>(rng() % 4);
      TestMatrix m(rows, n);
      for (int row = 1; row <= rows; ++row) {
        for (std::int64_t col = 1; col <= n; ++col) m.set(row, col, static_cast<int>(rng() & 1));
      }
      candidates.push_back(m);
    }
    for (const TestMatrix& m : candidates) {
      const CounterCertificate cert = nonadaptive_counter(p, m);
      const MatrixEvaluation ev = evaluate_matrix(p, m, 4 * k - 1);
      ++total;
      const bool ok = cert.certified && cert.forced_accuracy >= 4 * k && !ev.success;
      refuted += ok;
      c.expect(ok, "P_" + str(n) + " k=" + str(k) + " " + str(m.rows()) + "-row matrix: certificate " +
                       (cert.certified ? "valid" : "INVALID") + ", forced |D_t| = " + str(cert.forced_accuracy) +
                       ", exhaustive accuracy " + str(ev.achieved_accuracy));
    }
  }
  c.r.summary = "adaptive path/cycle s* match, non-adaptive s* match, " + str(refuted) + "/" + str(total) +
                " candidate matrices refuted for s < 4k";
}

void check_nonadaptive(Ctx& c) {
  const std::int64_t hi = c.tiny() ? 12 : 24;
  for (std::int64_t n = 5; n <= hi; ++n) {
    const TestMatrix m = expanding_accuracy_matrix(n);
    const MatrixEvaluation ev = evaluate_matrix(SearchSpace::path(n, 1), m, 4);
    const int adaptive = min_tests(Topology::Path, n, 4, 1).tests;
    c.expect(ev.success && m.rows() == ceil_half(n) - 2 && m.rows() == adaptive,
             "P_" + str(n) + ": " + str(m.rows()) + "-row matrix reaches accuracy " + str(ev.achieved_accuracy) +
                 ", adaptive optimum " + str(adaptive) + " tests");
  }
  const std::int64_t proof_hi = c.tiny() ? 8 : 10;
  for (std::int64_t n = 5; n <= proof_hi; ++n) {
    const int fewer = static_cast<int>(ceil_half(n) - 3);
    const MatrixSearchResult res = exact_best_matrix(SearchSpace::path(n, 1), 4, fewer);
    c.expect(!res.exists, "P_" + str(n) + ": no " + str(fewer) + "-row matrix reaches s=4 (" + str(res.nodes) +
                              " rows tried)");
  }
  c.r.summary = "expanding matrix optimal for N=5.." + str(hi) + ", shorter matrices excluded up to N=" + str(proof_hi);
}

void check_restricted(Ctx& c) {
  const int max_n = c.tiny() ? 1 : 3;
  const std::int64_t cap = c.tiny() ? 16 : 40;
  int path_checked = 0;
  int path_match = 0;
  int cycle_checked = 0;
  int cycle_match = 0;
  c.finding("accuracy bookkeeping: target frozen after the last test; success when the pre-move set has <= s vertices");
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t s : {4 * k, 4 * k + 1}) {
      for (int n = 0; n <= max_n; ++n) {
        const std::int64_t p2 = std::int64_t{1} << n;
        const std::int64_t ncap = (s - 2 * k) * p2 + 2 * k;
        const std::int64_t pcap = (s - 2 * k) * p2 + k * (2 * n + 2);
        for (const bool cyc : {false, true}) {
          const std::int64_t formula = cyc ? ncap : pcap;
          if (formula + 1 > cap) continue;
          const auto make = [&](std::int64_t size) {
            return (cyc ? SearchSpace::cycle(size, k) : SearchSpace::path(size, k)).frozen_at_end();
          };
          const auto at = c.oracle_tests(make(formula), s, TestClass::Intervals, n);
          const auto above = c.oracle_tests(make(formula + 1), s, TestClass::Intervals, n);
          const bool match = at.has_value() && !above.has_value();
          std::string largest;
          if (!match && above) {
            std::int64_t size = formula + 1;
            while (size + 1 <= cap && c.oracle_tests(make(size + 1), s, TestClass::Intervals, n)) ++size;
            largest = " (oracle reaches N=" + str(size) + (size == cap ? "+" : "") + ")";
          }
          const std::string line = std::string(cyc ? "cycle" : "path") + " k=" + str(k) + " s=" + str(s) +
                                   " n=" + str(n) + ": formula " + str(formula) + ", oracle solves N=" +
                                   str(formula) + (at ? " yes" : " no") + ", N=" + str(formula + 1) +
                                   (above ? " yes" : " no") + largest;
          if (cyc) {
            ++cycle_checked;
            cycle_match += match;
            c.r.details.push_back(line);
            if (!match) c.finding("cycle formula mismatch: " + line);
          } else {
            ++path_checked;
            path_match += match;
            c.expect(match, line);
          }
        }
      }
    }
  }
  c.r.summary = "restricted model: path formula " + str(path_match) + "/" + str(path_checked) +
                ", cycle formula " + str(cycle_match) + "/" + str(cycle_checked) + " (cycle mismatches reported)";
}

// Every walk of `length` positions.
void for_each_walk(const SearchSpace& space, std::size_t length, const std::function<void(const Walk&)>& fn) {
  Walk w;
  std::function<void()> rec = [&]() {
    if (w.positions.size() == length) {
      fn(w);
      return;
    }
    const PositionSet next = w.positions.empty() ? space.initial()
                                                 : neighborhood(space, PositionSet::of({w.positions.back()}));
    for (Vertex v : next.members()) {
      w.positions.push_back(v);
      rec();
      w.positions.pop_back();
    }
  };
  rec();
}

PositionSet random_subset(std::mt19937_64& rng, std::int64_t n) {
  const std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
  return PositionSet::from_mask(mask);
}

void check_soundness(Ctx& c) {
  std::mt19937_64 rng(7);
  const std::int64_t max_vertices = c.tiny() ? 6 : 8;
  const int max_tests = c.tiny() ? 3 : 4;
  const int samples = c.tiny() ? 1 : 3;
  std::int64_t chains = 0;
  std::int64_t bad_chains = 0;
  std::int64_t transcripts = 0;
  std::int64_t bad_transcripts = 0;

  for (const bool cyc : {false, true}) {
    for (int k = 1; k <= 2; ++k) {
      for (std::int64_t n = 1; n <= max_vertices; ++n) {
        const SearchSpace space = cyc ? SearchSpace::cycle(n, k) : SearchSpace::path(n, k);
        for (int len = 0; len <= max_tests; ++len) {
          for (int sample = 0; sample < samples; ++sample) {
            std::vector<PositionSet> tests;
            for (int i = 0; i < len; ++i) tests.push_back(random_subset(rng, n));
            // Endpoints of every walk, grouped by the answers it induces.
            std::map<std::vector<int>, PositionSet> ends;
            for_each_walk(space, static_cast<std::size_t>(len) + 1, [&](const Walk& w) {
              auto& e = ends[induced_answers(tests, w)];
              e = e.unite(PositionSet::of({w.positions.back()}));
            });
            for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
              std::vector<int> answers;
              for (int i = 0; i < len; ++i) answers.push_back(static_cast<int>(bits >> i & 1));
              const Replay chain = replay(space, tests, answers);
              const auto it = ends.find(answers);
              const PositionSet expected = it == ends.end() ? PositionSet{} : it->second;
              const PositionSet got = chain.consistent ? chain.candidates.back() : PositionSet{};
              const auto walk = consistent_walk(space, tests, answers);
              bool ok = got == expected && walk.has_value() == !expected.empty();
              if (walk) ok = ok && is_valid_walk(space, *walk) && induced_answers(tests, *walk) == answers;
              ++chains;
              if (!ok) {
                ++bad_chains;
                if (bad_chains <= 5) {
                  c.r.failures.push_back(std::string(to_string(space.topology)) + " N=" + str(n) + " k=" + str(k) +
                                         ": update chain " + got.to_string() + " vs walk endpoints " +
                                         expected.to_string());
                }
              }
            }
            // Adversary transcripts against these tests must be realizable.
            const Transcript t = greedy_adversary(space, searcher_for(tests), len);
            ++transcripts;
            if (!is_realizable(space, t)) ++bad_transcripts;
            if (!cyc && n >= 4 * k + 1) {
              const WindowPlay wp = window_adversary(space, searcher_for(tests), len);
              ++transcripts;
              if (!is_realizable(space, wp.transcript)) ++bad_transcripts;
            }
          }
        }
      }
    }
  }
  c.expect(bad_chains == 0, "update chain equals walk endpoints on " + str(chains) + " answer sequences");

  // Margin adversary at its critical sizes that fit.
  for (int k = 1; k <= 2; ++k) {
    for (int n = 0; n <= 2; ++n) {
      const std::int64_t s = 4 * k;
      const std::int64_t size = margin_critical_size(n, s, k);
      if (size > max_vertices) continue;
      const SearchSpace space = SearchSpace::path(size, k);
      for (int sample = 0; sample < 4 * samples; ++sample) {
        std::vector<PositionSet> tests;
        for (int i = 0; i < n; ++i) tests.push_back(random_subset(rng, size));
        const MarginPlay mp = margin_adversary(space, searcher_for(tests), n, s);
        ++transcripts;
        if (!is_realizable(space, mp.transcript)) ++bad_transcripts;
      }
    }
  }
  c.expect(bad_transcripts == 0, "adversary transcripts realizable: " + str(transcripts - bad_transcripts) + "/" +
                                     str(transcripts));

  // Codec containment over every walk.
  struct Item {
    SearchSpace space;
    CodecStrategy strategy;
    std::int64_t s;
  };
  std::vector<Item> items;
  for (std::int64_t n = 5; n <= max_vertices; ++n) {
    items.push_back({SearchSpace::cycle(n, 1), cycle_strategy(n, 5, 1), 5});
    items.push_back({SearchSpace::path(n, 1), path_strategy(n, 4, 1), 4});
    items.push_back({SearchSpace::path(n, 1), expanding_accuracy_matrix(n), 4});
    items.push_back({SearchSpace::path(n, 1), path_shifting_strategy(n, 1), 4});
  }
  if (max_vertices >= 8) items.push_back({SearchSpace::path(8, 2), path_sliding_window_strategy(8, 2, 1), 7});
  std::int64_t sessions = 0;
  std::int64_t bad_sessions = 0;
  for (const Item& item : items) {
    const int ticks = std::holds_alternative<TestMatrix>(item.strategy)
                          ? std::get<TestMatrix>(item.strategy).rows()
                          : std::get<AdaptiveStrategy>(item.strategy).depth();
    for_each_walk(item.space, static_cast<std::size_t>(ticks) + 1, [&](const Walk& w) {
      const SessionResult res = simulate_session(item.space, item.strategy, item.s, FixedWalkSource{w});
      ++sessions;
      if (!res.success()) ++bad_sessions;
    });
  }
  c.expect(bad_sessions == 0, "codec sessions contain the source and meet s: " + str(sessions - bad_sessions) + "/" +
                                  str(sessions));

  // Interval lists against a plain bitmask.
  std::int64_t ops = 0;
  std::int64_t bad_ops = 0;
  const SearchSpace line = SearchSpace::path(60, 1);
  const std::uint64_t full = (std::uint64_t{1} << 60) - 1;
  for (int i = 0; i < (c.tiny() ? 200 : 2000); ++i) {
    // Runs of equal bits make the interval form nontrivial.
    auto draw = [&]() {
      std::uint64_t m = rng() & full;
      return i % 2 ? (m & (m >> 1) & (m >> 2)) : m;
    };
    const std::uint64_t a = draw();
    const std::uint64_t b = draw();
    const PositionSet sa = PositionSet::from_mask(a);
    const PositionSet sb = PositionSet::from_mask(b);
    const std::uint64_t grown = (a | (a << 1) | (a >> 1)) & full;
    const Vertex probe = static_cast<Vertex>(rng() % 60) + 1;
    const bool ok = sa.unite(sb).to_mask() == (a | b) && sa.intersect(sb).to_mask() == (a & b) &&
                    sa.subtract(sb).to_mask() == (a & ~b) && sa.size() == std::popcount(a) &&
                    sa.contains(probe) == static_cast<bool>(a >> (probe - 1) & 1) &&
                    neighborhood(line, sa).to_mask() == grown && sa.is_subset_of(sb) == ((a & ~b) == 0) &&
                    PositionSet::from_members(sa.members()) == sa;
    ++ops;
    if (!ok) ++bad_ops;
  }
  c.expect(bad_ops == 0, "interval sets agree with bitmask reference on " + str(ops) + " random pairs");
  c.r.summary = str(chains) + " chains, " + str(transcripts) + " transcripts, " + str(sessions) + " codec walks, " +
                str(ops) + " set pairs";
}

void check_sliding(Ctx& c) {
  struct Case {
    int k, l, n;
  };
  for (const Case& cs : std::vector<Case>{{2, 1, 3}, {2, 2, 2}, {1, 1, 4}}) {
    const std::int64_t n_vertices = 2 * cs.n * cs.l + 4 * cs.k;
    const std::int64_t s = 3 * cs.k + cs.l;
    const AdaptiveStrategy st = path_sliding_window_strategy(n_vertices, cs.k, cs.l, cs.n);
    const StrategyCheck chk = check_strategy(st, s);
    c.expect(chk.successful && chk.leaves_match && chk.depth <= cs.n,
             "k=" + str(cs.k) + " l=" + str(cs.l) + " n=" + str(cs.n) + ": P_" + str(n_vertices) + " worst leaf " +
                 str(chk.worst_size) + " <= s=" + str(s) + " in " + str(chk.depth) + " tests");
  }
  c.r.summary = "sliding window reaches 3k+l at N=2nl+4k on all three instances";
}

const std::map<std::string, std::pair<int, void (*)(Ctx&)>>& registry() {
  static const std::map<std::string, std::pair<int, void (*)(Ctx&)>> table{
      {"golden", {1, check_golden}},     {"pathtests", {2, check_pathtests}},
      {"cycle", {3, check_cycle}},           {"path", {4, check_path}},
      {"thresholds", {5, check_thresholds}}, {"nonadaptive", {6, check_nonadaptive}},
      {"restricted", {7, check_restricted}}, {"soundness", {8, check_soundness}},
      {"sliding", {9, check_sliding}},
  };
  return table;
}

}  // namespace

CheckResult run_check(std::string_view name, Scale scale) {
  std::string key(name);
  if (!key.empty() && std::isdigit(static_cast<unsigned char>(key[0]))) {
    const int id = std::stoi(key);
    if (id < 1 || id > static_cast<int>(check_names().size())) throw DomainError("no check numbered " + key);
    key = check_names()[static_cast<std::size_t>(id - 1)];
  }
  const auto it = registry().find(key);
  if (it == registry().end()) throw DomainError("unknown check '" + key + "'");
  CheckResult r;
  r.id = it->second.first;
  r.name = key;
  Ctx ctx{r, scale};
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second.second(ctx);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = r.failures.empty();
  return r;
}

std::vector<CheckResult> run_checks(Scale scale, const std::vector<std::string>& names) {
  std::vector<CheckResult> out;
  for (const std::string& n : names.empty() ? check_names() : names) out.push_back(run_check(n, scale));
  return out;
}

}  // namespace twosided
