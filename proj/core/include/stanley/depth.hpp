#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/monomial.hpp"

namespace stanley {

/// Multigraded Betti numbers β_{i,a}(I) over a field of characteristic 0.
/// Only nonzero entries are stored.
class BettiTable {
public:
  using Key = std::pair<std::size_t, Monomial>;

  void set(std::size_t i, const Monomial &a, std::size_t rank);
  std::size_t rank(std::size_t i, const Monomial &a) const;
  /// Σ_a β_{i,a}.
  std::size_t total(std::size_t i) const;
  /// Largest i with a nonzero entry; the table of a nonzero ideal is
  /// never empty.
  std::size_t projective_dimension() const;

  const std::map<Key, std::size_t> &entries() const { return entries_; }

  friend bool operator==(const BettiTable &, const BettiTable &) = default;

private:
  std::map<Key, std::size_t> entries_;
};

struct DepthCertificate {
  int depth_I = 0;
  int depth_S_mod_I = 0;
  int pd_I = 0;
  /// n - depth(I).
  int k = 0;
};

/// Every lcm of a nonempty subset of G(I), sorted.
std::vector<Monomial> lcm_lattice(const MonomialIdeal &ideal);

/// β_{i,a}(I) = dim H̃_{i-1}(K^a(I)) where K^a(I) is the upper Koszul
/// simplicial complex { squarefree b ≤ a : x^{a-b} ∈ I }.
/// Throws UndefinedInput on the zero or unit ideal.
BettiTable betti(const MonomialIdeal &ideal);

/// Same table by a second route: the strand of the Taylor complex in each
/// multidegree a, i.e. subsets σ ⊆ G(I) with lcm(σ) = a, ranked with
/// rational Gaussian elimination.
BettiTable betti_oracle_lcm(const MonomialIdeal &ideal);

/// depth(I) = n - pd(I) by Auslander–Buchsbaum.
DepthCertificate depth(const MonomialIdeal &ideal);
DepthCertificate depth_from_betti(const BettiTable &table, std::size_t n);

} // namespace stanley
