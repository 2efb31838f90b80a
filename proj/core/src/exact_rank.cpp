#include "stanley/exact_rank.hpp"

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace stanley {

namespace {

struct Overflow {};

struct Checked {
  std::int64_t v;

  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r))
      throw Overflow{};
    return {r};
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r))
      throw Overflow{};
    return {r};
  }
  friend Checked operator/(Checked a, Checked b) { return {a.v / b.v}; }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  bool is_zero() const { return v == 0; }
};

using BigInt = boost::multiprecision::cpp_int;

bool is_zero(const Checked &x) { return x.is_zero(); }
bool is_zero(const BigInt &x) { return x.is_zero(); }

template <class T> T from_int(std::int64_t v) {
  if constexpr (std::is_same_v<T, Checked>)
    return Checked{v};
  else
    return T(v);
}

// Bareiss elimination; every division below is exact.
template <class T> std::size_t bareiss(const IntMatrix &m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<T>> a(rows, std::vector<T>(cols, from_int<T>(0)));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      a[r][c] = from_int<T>(m(r, c));

  T prev = from_int<T>(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero(a[pivot][col]))
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = from_int<T>(0);
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

} // namespace

std::size_t rank_bareiss(const IntMatrix &m) {
  if (m.rows() == 0 || m.cols() == 0)
    return 0;
  try {
    return bareiss<Checked>(m);
  } catch (const Overflow &) {
    return bareiss<BigInt>(m);
  }
}

std::size_t rank_rational(const IntMatrix &m) {
  using Q = boost::multiprecision::cpp_rational;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Q>> a(rows, std::vector<Q>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      a[r][c] = Q(m(r, c));

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0)
        continue;
      Q factor = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < cols; ++c)
        a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

} // namespace stanley
