#pragma once

#include <cstddef>
#include <vector>

#include "stanley/depth.hpp"
#include "stanley/ideal.hpp"
#include "stanley/sdepth.hpp"

namespace stanley {

/// I = (I ∩ S') ⊕ x_j (I : x_j), where S' drops x_j.
struct SplitResult {
  std::size_t j = 0;
  /// Generators divisible by x_j, i.e. t_j(I).
  std::size_t r = 0;
  Restriction restricted;
  MonomialIdeal quotient;
};

SplitResult split(const MonomialIdeal &ideal, std::size_t j);

/// Returns j with t_j(I) ≥ g(I) - 2k + 1, given depth(I) ≥ n - k.
///
/// Requires I non-principal with 2 ≤ g(I) < 2n; throws ContractViolation
/// otherwise or when depth(I) < n - k. Among qualifying variables the one
/// with the largest t_j wins, ties to the smallest index. If none
/// qualifies the ideal is reduced along a variable outside √I, which can
/// only happen if the existence argument is wrong; that path ends in
/// InvariantViolation when it also fails.
std::size_t select_variable(const MonomialIdeal &ideal, int k);

/// Same contract, but always takes one reduction step first when a
/// variable outside √I exists: saturate at that variable, drop it, solve
/// the smaller instance with the same k and map the answer back.
std::size_t select_variable_via_reduction(const MonomialIdeal &ideal, int k);

/// Numbers behind one restricted/quotient split of the recursion.
struct SplitRecord {
  std::size_t level = 0;
  std::size_t ambient = 0;
  std::size_t generators = 0;
  std::size_t j = 0;
  std::size_t r = 0;
  int depth_I = 0;
  /// n - 1 - floor((m - r)/2): what the restricted part is guaranteed.
  int restricted_bound = 0;
  int restricted_sdepth = 0;
  /// restricted_bound - depth_I; negative means the chain broke.
  int chain_slack = 0;
};

struct DecomposeOptions {
  SdepthOptions sdepth;
};

struct DecomposeReport {
  StanleyDecomposition decomposition;
  int depth_I = 0;
  int sdepth_of_D = 0;
  /// g(I) ≤ 2n - 1, the range where sdepth(D) ≥ depth(I) is promised.
  bool guarantee_applies = false;
  std::vector<SplitRecord> splits;
  /// Pieces contributed by recursion leaves; equals decomposition.size().
  std::size_t leaf_pieces = 0;
};

/// Stanley decomposition of I built by peeling off one variable at a time:
/// principal ideals are a single piece, an x_j dividing every generator is
/// factored out, otherwise I splits at the selected x_j into its
/// x_j-free part (decomposed by exact search in n-1 variables) and
/// x_j·(I : x_j) (decomposed recursively). Ideals generated by variables
/// go straight to exact search.
///
/// Throws UndefinedInput for the zero ideal.
DecomposeReport decompose(const MonomialIdeal &ideal,
                          const DecomposeOptions &options = {});

} // namespace stanley
