#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace stanley {

using Exponent = std::uint32_t;

/// Subset of the variables x_1..x_n, stored as a bitmask (bit j is x_{j+1}).
/// Ambient rings are limited to 64 variables.
class VariableSet {
public:
  static constexpr std::size_t kMaxVariables = 64;

  constexpr VariableSet() = default;
  constexpr explicit VariableSet(std::uint64_t bits) : bits_(bits) {}
  VariableSet(std::initializer_list<std::size_t> indices);

  static VariableSet all(std::size_t n);

  constexpr std::uint64_t bits() const { return bits_; }
  bool contains(std::size_t j) const { return (bits_ >> j) & 1U; }
  void insert(std::size_t j) { bits_ |= std::uint64_t{1} << j; }
  void erase(std::size_t j) { bits_ &= ~(std::uint64_t{1} << j); }
  std::size_t size() const;
  bool empty() const { return bits_ == 0; }
  bool is_subset_of(VariableSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  /// 0-based indices in increasing order.
  std::vector<std::size_t> indices() const;

  friend constexpr bool operator==(VariableSet, VariableSet) = default;
  friend constexpr auto operator<=>(VariableSet, VariableSet) = default;

private:
  std::uint64_t bits_ = 0;
};

/// A monomial x^a of S = K[x_1..x_n], stored as its exponent vector.
///
/// Variable indices are 0-based throughout the library; text and JSON
/// formats use the conventional 1-based names x1..xn. Ordering is
/// lexicographic on the exponent vector.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  static Monomial unit(std::size_t n);
  /// x_j^e in ambient n.
  static Monomial variable(std::size_t n, std::size_t j, Exponent e = 1);

  std::size_t ambient() const { return exps_.size(); }
  Exponent operator[](std::size_t j) const { return exps_[j]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t degree() const;
  VariableSet support() const;
  bool is_unit() const;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial &other) const;

  Monomial operator*(const Monomial &other) const;
  /// Exact quotient; throws ContractViolation if `divisor` does not divide.
  Monomial operator/(const Monomial &divisor) const;

  friend Monomial lcm(const Monomial &a, const Monomial &b);
  friend Monomial gcd(const Monomial &a, const Monomial &b);

  /// Copy with exponent j replaced by e.
  Monomial with_exponent(std::size_t j, Exponent e) const;
  /// Copy with variable j deleted (ambient n-1).
  Monomial without_variable(std::size_t j) const;
  /// Copy with a new variable inserted at position j carrying exponent e.
  Monomial with_inserted_variable(std::size_t j, Exponent e = 0) const;

  friend bool operator==(const Monomial &, const Monomial &) = default;
  friend std::strong_ordering operator<=>(const Monomial &a,
                                          const Monomial &b) {
    return a.exps_ <=> b.exps_;
  }

private:
  std::vector<Exponent> exps_;
};

void check_same_ambient(const Monomial &a, const Monomial &b);

} // namespace stanley
