#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stanley/monomial.hpp"

namespace stanley {

/// A monomial ideal of K[x_1..x_n], held by its minimal generators G(I)
/// in lexicographic order.
///
/// The zero ideal has no generators. The unit ideal has the single
/// generator 1. Instances are immutable once built.
class MonomialIdeal {
public:
  /// Builds the ideal generated by `monomials`, discarding non-minimal ones.
  /// Throws DimensionMismatch if any monomial has ambient != n.
  MonomialIdeal(std::size_t n, std::span<const Monomial> monomials);
  MonomialIdeal(std::size_t n, std::initializer_list<Monomial> monomials);

  static MonomialIdeal zero(std::size_t n);
  static MonomialIdeal unit(std::size_t n);

  std::size_t ambient() const { return n_; }
  const std::vector<Monomial> &generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_principal() const { return gens_.size() == 1; }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

  /// u ∈ I iff some generator divides u.
  bool contains(const Monomial &u) const;

  friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) = default;

private:
  MonomialIdeal() = default;

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset of `monomials`, as an ideal of ambient n.
MonomialIdeal minimalize(std::size_t n, std::span<const Monomial> monomials);

/// (I : v), generated by v_i / gcd(v_i, v).
MonomialIdeal colon(const MonomialIdeal &ideal, const Monomial &v);

/// (I : x_j^∞): every generator with exponent j set to 0.
MonomialIdeal saturate(const MonomialIdeal &ideal, std::size_t j);

/// I ∩ K[x_1..x̂_j..x_n], re-indexed to a dense ambient of n-1 variables.
struct Restriction {
  MonomialIdeal ideal;
  std::size_t removed;
  /// index_map[new index] = old index.
  std::vector<std::size_t> index_map;

  /// Lifts a monomial of the smaller ring back into ambient n.
  Monomial lift(const Monomial &u) const;
  VariableSet lift(VariableSet z) const;
};

Restriction restrict(const MonomialIdeal &ideal, std::size_t j);

struct IdealStatistics {
  std::size_t g = 0;           // number of minimal generators
  std::uint64_t epsilon = 0;   // sum of generator degrees
  std::uint64_t support_sum = 0; // sum of generator support sizes
  std::vector<std::size_t> t;  // t[j] = #generators divisible by x_j
  Monomial lcm;                // lcm of all generators

  std::size_t max_t() const;
  /// Smallest j attaining max_t.
  std::size_t argmax_t() const;
};

/// Throws UndefinedInput on the zero ideal.
IdealStatistics statistics(const MonomialIdeal &ideal);

/// Applies the variable permutation perm (new index perm[j] gets old
/// exponent j).
MonomialIdeal permute(const MonomialIdeal &ideal,
                      std::span<const std::size_t> perm);

/// Embeds I into K[x_1..x_n, x_{n+1}] with the new variable unused.
MonomialIdeal add_variable(const MonomialIdeal &ideal);

} // namespace stanley
