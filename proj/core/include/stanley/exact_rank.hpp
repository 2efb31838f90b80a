#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace stanley {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t &operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in checked
/// 64-bit arithmetic and restarts in arbitrary precision on overflow.
std::size_t rank_bareiss(const IntMatrix &m);

/// Rank over Q by textbook Gaussian elimination on exact rationals.
/// Slower; kept as an independent route for cross-checks.
std::size_t rank_rational(const IntMatrix &m);

} // namespace stanley
