#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/monomial.hpp"

namespace stanley {

/// One summand x^c · K[Z] of a Stanley decomposition.
struct Piece {
  Monomial generator;
  VariableSet z;

  /// u = generator · w with supp(w) ⊆ Z.
  bool contains(const Monomial &u) const;

  friend bool operator==(const Piece &, const Piece &) = default;
  friend auto operator<=>(const Piece &, const Piece &) = default;
};

class StanleyDecomposition {
public:
  StanleyDecomposition() = default;
  explicit StanleyDecomposition(std::vector<Piece> pieces)
      : pieces_(std::move(pieces)) {}

  const std::vector<Piece> &pieces() const { return pieces_; }
  std::vector<Piece> &pieces() { return pieces_; }
  std::size_t size() const { return pieces_.size(); }

  /// min |Z| over pieces. Throws UndefinedInput when empty.
  int sdepth() const;

  /// Multiplies every piece generator by u.
  StanleyDecomposition shifted(const Monomial &u) const;

  friend bool operator==(const StanleyDecomposition &,
                         const StanleyDecomposition &) = default;

private:
  std::vector<Piece> pieces_;
};

/// The box [0, g] of exponent vectors, with the up-set of points x^a ∈ I
/// marked. Points are indexed in lexicographic order, which is a linear
/// extension of the componentwise order.
class CharacteristicPoset {
public:
  CharacteristicPoset(const MonomialIdeal &ideal, const Monomial &bound,
                      std::size_t cap);

  std::size_t ambient() const { return bound_.ambient(); }
  const Monomial &bound() const { return bound_; }
  std::size_t box_size() const { return box_size_; }
  std::size_t size() const { return members_; }

  bool contains(std::size_t index) const { return in_ideal_[index]; }
  std::size_t index_of(std::span<const Exponent> point) const;
  Monomial point(std::size_t index) const;
  std::size_t stride(std::size_t j) const { return strides_[j]; }

  /// Every point of the poset, in index order.
  std::vector<Monomial> points() const;

private:
  Monomial bound_;
  std::vector<std::size_t> strides_;
  std::size_t box_size_ = 0;
  std::size_t members_ = 0;
  std::vector<bool> in_ideal_;
};

/// Interval [c, d] of the characteristic poset. Z(d) = { j : d_j = g_j }.
struct Interval {
  Monomial bottom;
  Monomial top;

  VariableSet z(const Monomial &bound) const;
  int rho(const Monomial &bound) const { return static_cast<int>(z(bound).size()); }
};

/// How normal-form decisions are searched. Auto picks dancing links unless
/// the option table would be too large, then falls back to the
/// least-point backtracker.
enum class SearchStrategy { Auto, DancingLinks, LeastPoint };

struct SdepthOptions {
  /// Largest box ∏(g_j + 1) the search will build.
  std::size_t cap = 200'000;
  /// Search nodes per decision before giving up; 0 means unlimited.
  std::uint64_t node_limit = 0;
  /// Replaces the lcm vector as the box corner; must dominate it.
  std::optional<Monomial> bound;
  SearchStrategy strategy = SearchStrategy::Auto;
};

struct SdepthResult {
  int sdepth = 0;
  StanleyDecomposition witness;
  std::vector<Interval> intervals;
  std::uint64_t nodes = 0;
};

/// Builds the characteristic poset at the lcm vector (or options.bound).
/// Throws ResourceLimit above the cap and UndefinedInput on the zero ideal.
CharacteristicPoset characteristic_poset(const MonomialIdeal &ideal,
                                         const SdepthOptions &options = {});

/// Exact Stanley depth of I with a witness decomposition.
///
/// Decides "some interval partition has every ρ(d) ≥ k" for k = 1, 2, ...
/// and stops at the first infeasible level. Intervals are kept in the
/// normal form d_j ∈ {c_j, g_j} with exactly max(0, k - |{j : c_j = g_j}|)
/// free directions opened: any larger interval splits into such pieces
/// without lowering min ρ. Each decision is an exact cover of P by these
/// intervals.
SdepthResult sdepth_exact(const MonomialIdeal &ideal,
                          const SdepthOptions &options = {});

/// Single decision instance. Returns the intervals of a partition with all
/// ρ(d) ≥ k, or nullopt when none exists.
std::optional<std::vector<Interval>>
find_partition(const CharacteristicPoset &poset, int k,
               std::uint64_t node_limit = 0, std::uint64_t *nodes = nullptr,
               SearchStrategy strategy = SearchStrategy::Auto);

/// Reference search over all intervals [c, d] ⊆ P, with no normal-form
/// restriction. Exponential; meant for posets of a few dozen points.
int sdepth_general_intervals(const MonomialIdeal &ideal,
                             const SdepthOptions &options = {});

/// Converts normal-form intervals to pieces (x^c, Z(d)).
StanleyDecomposition to_decomposition(const std::vector<Interval> &intervals,
                                      const Monomial &bound);

/// Certifies that D is a direct-sum decomposition of I by checking every
/// monomial of the box [0, g + 1]. Throws MalformedDecomposition if a piece
/// generator is outside I or does not divide x^g.
bool verify_decomposition(const MonomialIdeal &ideal,
                          const StanleyDecomposition &decomposition);

/// Same check against a box corner `bound` that dominates the lcm vector,
/// for decompositions built over a larger characteristic poset.
bool verify_decomposition(const MonomialIdeal &ideal,
                          const StanleyDecomposition &decomposition,
                          const Monomial &bound);

/// max{1, n - floor(g(I)/2)}.
int sdepth_lower_bound_okazaki(const MonomialIdeal &ideal);

} // namespace stanley
