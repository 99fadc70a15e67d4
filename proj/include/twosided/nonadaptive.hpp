#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twosided/search_space.hpp"
#include "twosided/strategy.hpp"

namespace twosided {

// n x N binary matrix; row i is the i-th test {j : a_ij = 1}.
class TestMatrix {
 public:
  TestMatrix(int rows, std::int64_t cols);
  static TestMatrix from_rows(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  // 1-based, matching vertex labels.
  int at(int row, std::int64_t col) const;
  void set(int row, std::int64_t col, int bit);

  PositionSet row_set(int row) const;
  std::vector<PositionSet> tests() const;
  TestMatrix without_last_row() const;

  // One line per row of '0'/'1' characters, first line first test.
  std::string to_text() const;
  static TestMatrix parse(std::string_view text);

  friend bool operator==(const TestMatrix&, const TestMatrix&) = default;

 private:
  int rows_;
  std::int64_t cols_;
  std::vector<std::uint8_t> bits_;
};

// Expanding-accuracy construction for k = 1 on P_N (N >= 5), with
// ceil(N/2) - 2 rows.  Row i is zero up to column ceil(N/2)-i+1, constant
// (1 for odd i, 0 for even i) from column ceil(N/2)+i, and follows the
// period-4 pattern 1,1,0,0,... in between.
TestMatrix expanding_accuracy_matrix(std::int64_t n_vertices);

// The k=1 construction on blocks of k consecutive vertices; end blocks
// absorb the residue of N mod k and may be shorter than k.  Requires N > 6k.
TestMatrix general_k_matrix(std::int64_t n_vertices, int k);

// Minimum accuracy of a non-adaptive strategy on P_N.
std::int64_t nonadaptive_min_accuracy(std::int64_t n_vertices, int k);

struct MatrixEvaluation {
  bool success = false;
  // Largest over consistent answer sequences of the smallest announced set
  // seen along the sequence: the accuracy this matrix actually guarantees.
  std::int64_t achieved_accuracy = 0;
  std::vector<int> worst_answers;
  PositionSet worst_final;       // announced set after the last row on the worst branch
  int worst_stop_row = -1;       // first row where the worst branch reached <= s, -1 if never
  std::int64_t consistent_branches = 0;
};

// Exhaustive evaluation over all answer sequences; sequences whose
// candidate set empties are skipped (no target produces them).
MatrixEvaluation evaluate_matrix(const SearchSpace& space, const TestMatrix& matrix, std::int64_t s);

}  // namespace twosided
