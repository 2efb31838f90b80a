#include "doctest.h"

#include <random>

#include "stanley/exact_rank.hpp"

using namespace stanley;

TEST_CASE("small ranks") {
  IntMatrix zero(3, 4);
  CHECK(rank_bareiss(zero) == 0);
  CHECK(rank_rational(zero) == 0);

  IntMatrix m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 0) = 1; m(2, 1) = 0; m(2, 2) = 1;
  CHECK(rank_bareiss(m) == 2);
  CHECK(rank_rational(m) == 2);

  IntMatrix empty(0, 5);
  CHECK(rank_bareiss(empty) == 0);
}

TEST_CASE("overflow falls back to exact arithmetic") {
  // Entries near 2^40 push fraction-free pivots past 64 bits.
  const std::int64_t big = std::int64_t{1} << 40;
  IntMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      m(i, j) = (i == j) ? big + static_cast<std::int64_t>(i) : static_cast<std::int64_t>(i + j + 1);
  CHECK(rank_bareiss(m) == 4);
  CHECK(rank_rational(m) == 4);
}

TEST_CASE("both routes agree on random matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    IntMatrix m(rows, cols);
    // Low-rank products make dependent rows common.
    const std::size_t inner = 1 + rng() % 4;
    std::vector<std::int64_t> a(rows * inner), b(inner * cols);
    for (auto &x : a) x = static_cast<std::int64_t>(rng() % 5) - 2;
    for (auto &x : b) x = static_cast<std::int64_t>(rng() % 5) - 2;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t t = 0; t < inner; ++t)
          m(i, j) += a[i * inner + t] * b[t * cols + j];
    CHECK(rank_bareiss(m) == rank_rational(m));
    CHECK(rank_bareiss(m) <= inner);
  }
}
