#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twosided/nonadaptive.hpp"
#include "twosided/strategy.hpp"
#include "twosided/transcript.hpp"

namespace twosided {

// Answers every test so that the next candidate set is as large as
// possible; ties go to answer 0.  Plays at most `max_rounds` rounds or until
// the searcher stops.
Transcript greedy_adversary(const SearchSpace& space, const Searcher& searcher, int max_rounds);

// Path adversary that keeps a window {j, ..., j+3k} of 3k+1 consecutive
// vertices inside every candidate set (N >= 4k+1).  The answer is 1 when
// the test covers enough of the window with room towards the boundaries:
//   1. |T∩W| >= k+1 and l, r >= k
//   2. |T∩W| + l >= 2k+1 and l < k
//   3. |T∩W| + r >= 2k+1 and r < k
//   4. |T∩W| > 2k
// and 0 otherwise (case 5), where l = min(T∩W) - 1 and r = N - max(T∩W).
struct WindowPlay {
  Transcript transcript;
  std::vector<Vertex> window_starts;  // j_0 .. j_n, 0 once the window is lost
  std::vector<int> cases;             // rule that fired each round (1..5), 0 for greedy fallback
  bool invariant_held = true;         // window ⊆ D_i every round
  std::vector<std::string> findings;
};
WindowPlay window_adversary(const SearchSpace& space, const Searcher& searcher, int max_rounds);

// Path adversary for the critical size N = (s-4k) 2^n + 2kn + 4k + 1.  It
// tracks A_0 = {nk+1, ..., nk + 2^n (s-4k) + 4k + 1} and answers 0 exactly
// when |Γ(T∩A)| < |Γ(A\T)|, keeping A_i ⊆ D_i with k(n-i) spare vertices on
// both sides and |A_i| >= 2^(n-i) (s-4k) + 4k + 1.
struct MarginPlay {
  Transcript transcript;
  std::vector<PositionSet> tracked;  // A_0 .. A_n
  bool critical_size = true;         // N equals the critical value
  bool invariants_held = true;
  std::vector<std::string> findings;
};
MarginPlay margin_adversary(const SearchSpace& space, const Searcher& searcher, int n, std::int64_t s);

// Counter-strategy against a non-adaptive matrix on P_N with N > 6k, built
// from the last row t.  If the middle columns ceil(N/2)-k .. ceil(N/2)+k of
// row t are constant the target sits at the centre; otherwise x* is the
// leftmost middle column whose right neighbour differs in row t, answers
// follow x*+k before row t and x*+2k at row t, and the second target ends
// at x* or x*+1.  When x* lies right of the centre the mirror image is used
// (x*+1-k, x*+1-2k, ending at x*+1 or x*) so both walks stay on the path.
struct CounterCertificate {
  bool constant_middle = false;
  Vertex pivot = 0;                  // x* (or the centre when constant)
  std::vector<int> answers;
  Walk first;
  Walk second;
  PositionSet final_set;             // D_t along the answers
  std::int64_t forced_accuracy = 0;  // |D_t|
  std::int64_t branch_min_size = 0;  // min |D_i| over i = 0..t
  bool certified = false;            // both walks valid, consistent, and in D_t
};
CounterCertificate nonadaptive_counter(const SearchSpace& space, const TestMatrix& matrix);

// Exhaustive play of a deterministic adversary against every sequence of
// at most n tests from a class.  The value is the smallest candidate set
// the searcher can ever see; a strategy class is refuted for accuracy s
// when the value exceeds s.
struct SweepResult {
  std::int64_t value = 0;
  std::vector<PositionSet> best_tests;  // a test sequence attaining `value`
  std::size_t states = 0;
  bool invariants_held = true;
};
SweepResult sweep_greedy(const SearchSpace& space, TestClass cls, int n);
SweepResult sweep_window(const SearchSpace& space, TestClass cls, int n);
SweepResult sweep_margin(const SearchSpace& space, TestClass cls, int n, std::int64_t s);

// Critical path size the margin adversary is designed for.
std::int64_t margin_critical_size(int n, std::int64_t s, int k);

}  // namespace twosided
