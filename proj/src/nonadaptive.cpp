#include "twosided/nonadaptive.hpp"

#include <algorithm>
#include <sstream>

#include "twosided/errors.hpp"

namespace twosided {

TestMatrix::TestMatrix(int rows, std::int64_t cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw DomainError("test matrix needs positive dimensions");
  bits_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

TestMatrix TestMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw DomainError("test matrix needs at least one row");
  TestMatrix m(static_cast<int>(rows.size()), static_cast<std::int64_t>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<std::int64_t>(rows[i].size()) != m.cols_) throw DomainError("ragged test matrix rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') throw DomainError(std::string("test matrix entry must be 0 or 1, got '") + c + "'");
      m.set(static_cast<int>(i) + 1, static_cast<std::int64_t>(j) + 1, c - '0');
    }
  }
  return m;
}

int TestMatrix::at(int row, std::int64_t col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_) throw DomainError("test matrix index out of range");
  return bits_[static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(col - 1)];
}

void TestMatrix::set(int row, std::int64_t col, int bit) {
  if (row < 1 || row > rows_ || col < 1 || col > cols_) throw DomainError("test matrix index out of range");
  if (bit != 0 && bit != 1) throw DomainError("test matrix entries are 0 or 1");
  bits_[static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(col - 1)] =
      static_cast<std::uint8_t>(bit);
}

PositionSet TestMatrix::row_set(int row) const {
  std::vector<Interval> ivs;
  for (std::int64_t j = 1; j <= cols_; ++j) {
    if (at(row, j)) ivs.push_back({j, j});
  }
  return PositionSet::from_intervals(std::move(ivs));
}

std::vector<PositionSet> TestMatrix::tests() const {
  std::vector<PositionSet> out;
  for (int i = 1; i <= rows_; ++i) out.push_back(row_set(i));
  return out;
}

TestMatrix TestMatrix::without_last_row() const {
  if (rows_ < 2) throw DomainError("cannot drop the only row of a test matrix");
  TestMatrix m(rows_ - 1, cols_);
  std::copy(bits_.begin(), bits_.end() - cols_, m.bits_.begin());
  return m;
}

std::string TestMatrix::to_text() const {
  std::string out;
  for (int i = 1; i <= rows_; ++i) {
    for (std::int64_t j = 1; j <= cols_; ++j) out += static_cast<char>('0' + at(i, j));
    out += '\n';
  }
  return out;
}

TestMatrix TestMatrix::parse(std::string_view text) {
  std::vector<std::string> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) rows.push_back(line);
  }
  return from_rows(rows);
}

// ---------------------------------------------------------------------------

TestMatrix expanding_accuracy_matrix(std::int64_t n_vertices) {
  if (n_vertices < 5) throw DomainError("expanding accuracy matrix needs N >= 5");
  const std::int64_t c = (n_vertices + 1) / 2;
  const int rows = static_cast<int>(c - 2);
  TestMatrix m(rows, n_vertices);
  for (int i = 1; i <= rows; ++i) {
    for (std::int64_t j = 1; j <= n_vertices; ++j) {
      int bit = 0;
      if (j <= c - i + 1) {
        bit = 0;
      } else if (j >= c + i) {
        bit = i % 2;
      } else {
        const std::int64_t p = j - c + i - 1;
        bit = (p % 4 == 1 || p % 4 == 2) ? 1 : 0;
      }
      m.set(i, j, bit);
    }
  }
  return m;
}

TestMatrix general_k_matrix(std::int64_t n_vertices, int k) {
  if (k < 1) throw DomainError("speed k must be >= 1");
  if (n_vertices <= 6 * static_cast<std::int64_t>(k)) throw DomainError("general_k_matrix needs N > 6k");
  // Blocks: interior blocks of exactly k columns, the two end blocks share
  // the residue so that every block has at most k columns.
  const std::int64_t q = n_vertices / k;
  const std::int64_t r = n_vertices % k;
  std::vector<std::int64_t> block_sizes;
  if (r == 0) {
    block_sizes.assign(static_cast<std::size_t>(q), k);
  } else {
    const std::int64_t left = (r + k + 1) / 2;
    const std::int64_t right = (r + k) / 2;
    block_sizes.push_back(left);
    for (std::int64_t b = 0; b < q - 1; ++b) block_sizes.push_back(k);
    block_sizes.push_back(right);
  }
  const TestMatrix base = expanding_accuracy_matrix(static_cast<std::int64_t>(block_sizes.size()));
  TestMatrix m(base.rows(), n_vertices);
  std::int64_t col = 1;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    for (std::int64_t w = 0; w < block_sizes[b]; ++w, ++col) {
      for (int i = 1; i <= base.rows(); ++i) m.set(i, col, base.at(i, static_cast<std::int64_t>(b) + 1));
    }
  }
  return m;
}

std::int64_t nonadaptive_min_accuracy(std::int64_t n_vertices, int k) {
  if (n_vertices < 1 || k < 1) throw DomainError("nonadaptive_min_accuracy needs N >= 1 and k >= 1");
  if (n_vertices <= 2 * static_cast<std::int64_t>(k)) return n_vertices;
  if (n_vertices <= 6 * static_cast<std::int64_t>(k)) return (n_vertices + 1) / 2 + k;
  return 4 * static_cast<std::int64_t>(k);
}

// ---------------------------------------------------------------------------

namespace {

struct MatrixWalker {
  const SearchSpace& space;
  const std::vector<PositionSet>& rows;
  std::int64_t s;
  MatrixEvaluation& result;
  std::vector<int> answers;

  // best: smallest announced size so far; stop: first row reaching <= s.
  void visit(const PositionSet& candidates, std::size_t row, std::int64_t best, int stop,
             const PositionSet& announced) {
    if (row == rows.size()) {
      ++result.consistent_branches;
      if (result.consistent_branches == 1 || best > result.achieved_accuracy) {
        result.achieved_accuracy = best;
        result.worst_answers = answers;
        result.worst_final = announced;
        result.worst_stop_row = stop;
      }
      return;
    }
    for (int y = 0; y < 2; ++y) {
      const PositionSet kept = restrict_to_answer(candidates, rows[row], y);
      if (kept.empty()) continue;
      const PositionSet next_announced = final_expand(space, kept);
      const std::int64_t size = next_announced.size();
      const int next_stop = (stop < 0 && size <= s) ? static_cast<int>(row) + 1 : stop;
      answers.push_back(y);
      visit(neighborhood(space, kept), row + 1, std::min(best, size), next_stop, next_announced);
      answers.pop_back();
    }
  }
};

}  // namespace

MatrixEvaluation evaluate_matrix(const SearchSpace& space, const TestMatrix& matrix, std::int64_t s) {
  space.validate();
  if (!space.is_bounded()) throw DomainError("evaluate_matrix needs a path or cycle");
  if (matrix.cols() != space.num_vertices) {
    throw DomainError("matrix has " + std::to_string(matrix.cols()) + " columns but the space has " +
                      std::to_string(space.num_vertices) + " vertices");
  }
  MatrixEvaluation result;
  const std::vector<PositionSet> rows = matrix.tests();
  const PositionSet d0 = space.initial();
  MatrixWalker walker{space, rows, s, result, {}};
  walker.visit(d0, 0, d0.size(), d0.size() <= s ? 0 : -1, d0);
  result.success = result.achieved_accuracy <= s;
  return result;
}

}  // namespace twosided
