#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/sdepth.hpp"

namespace stanley {

/// Claim identifiers. Each check below documents the property it tests.
namespace claim {
inline constexpr std::string_view kSupportBound = "support-bound";
inline constexpr std::string_view kDepthSupportBound = "depth-support-bound";
inline constexpr std::string_view kGeneratorSupportBound =
    "generator-support-bound";
inline constexpr std::string_view kSdepthAtLeastDepth = "sdepth-at-least-depth";
inline constexpr std::string_view kColonDepth = "colon-depth";
inline constexpr std::string_view kOkazakiBound = "okazaki-bound";
inline constexpr std::string_view kSharpnessFamily = "sharpness-family";
inline constexpr std::string_view kBettiOracle = "betti-oracle";
inline constexpr std::string_view kNormalForm = "normal-form";

/// Canonical id for a name or one of its short aliases (`lemma1.3`,
/// `thm1.4`, `prop1.6`, `thm1.5`, `prop1.2`, `thm1.1`, `example1.7`).
/// Returns nullopt for unknown names.
std::optional<std::string_view> canonical(std::string_view name);
std::vector<std::string_view> all();
} // namespace claim

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s);

struct Witness {
  std::optional<std::size_t> j; // 0-based
  std::vector<std::size_t> t;
  std::optional<int> depth;
  std::optional<int> sdepth;
  /// The threshold the claim compares against, where there is one.
  std::optional<long long> bound;
};

struct VerificationReport {
  std::string claim;
  MonomialIdeal instance = MonomialIdeal::zero(1);
  /// Second argument of the colon-depth claim.
  std::optional<Monomial> colon_by;
  Status status = Status::Skipped;
  Witness witness;
  std::string detail;
  std::uint64_t seed = 0;
  std::size_t index = 0;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return status == Status::Pass; }
};

/// 64-bit FNV-1a of the canonical JSON rendering, as 16 hex digits.
std::string instance_hash(const MonomialIdeal &ideal);

// --- single-instance checks -------------------------------------------------

/// For non-principal I, n ≥ 2, 2 ≤ g(I) < 2n: max_j t_j ≥ g(I) - 2n + 3.
VerificationReport check_support_bound(const MonomialIdeal &ideal);

/// Same range: with k = n - depth(I), max_j t_j ≥ g(I) - 2k + 1, and the
/// variable returned by select_variable meets that bound.
VerificationReport check_depth_support_bound(const MonomialIdeal &ideal);

/// For 2 ≤ g(I) ≤ 2n + 1: max_j t_j ≥ g(I) - 2n + 3. With
/// `extended` the range check is skipped (used to probe n = 3, g(I) = 8).
VerificationReport check_generator_support_bound(const MonomialIdeal &ideal,
                                                 bool extended = false);

/// Runs depth, exact sdepth and the recursive decomposition. Passes iff the
/// decomposition certifies and sdepth_exact ≥ sdepth(D) ≥ depth(I). Outside
/// g(I) ≤ 2n - 1 only sdepth_exact ≥ depth(I) is required.
VerificationReport check_sdepth_at_least_depth(const MonomialIdeal &ideal,
                                               const SdepthOptions &options = {});

/// For v ∉ I: depth(I : v) ≥ depth(I).
VerificationReport check_colon_depth(const MonomialIdeal &ideal,
                                     const Monomial &v);

/// sdepth_exact(I) ≥ max{1, n - floor(g(I)/2)}.
VerificationReport check_okazaki_bound(const MonomialIdeal &ideal,
                                       const SdepthOptions &options = {});

/// Both Betti routes agree entrywise.
VerificationReport check_betti_oracle(const MonomialIdeal &ideal);

/// Normal-form interval search and unrestricted interval search agree.
VerificationReport check_normal_form(const MonomialIdeal &ideal,
                                     const SdepthOptions &options = {});

/// g(I) = 2n + 2, max_j t_j ≤ 4 and g(I) - 2n + 3 > max_j t_j.
VerificationReport check_sharpness_family(const MonomialIdeal &ideal);

// --- example families -------------------------------------------------------

/// Even n ≥ 4: x_i^4, x_{2i-1}^3 x_{2i}, x_{2i-1} x_{2i}^3, x1^2x2^2, x3^2x4^2.
std::vector<Monomial> family_even_generators(std::size_t n);
/// Odd n ≥ 5: x_i^4, x_i^3 x_{i+1} (indices mod n), x1^2x2^2, x3^2x4^2.
std::vector<Monomial> family_odd_generators(std::size_t n);
/// x1^3, x2^3, x3^3 and the six x_i^2 x_j with i != j.
std::vector<Monomial> example_n3_generators();

/// The families as ideals. Each asserts that the listed generators are
/// already minimal and that g(I) and the t-vector have the expected shape;
/// a mismatch throws InvariantViolation. Bad n throws ContractViolation.
MonomialIdeal gen_family_even(std::size_t n);
MonomialIdeal gen_family_odd(std::size_t n);
MonomialIdeal gen_example_n3();

/// (x1, ..., xm) in n variables.
MonomialIdeal variables_ideal(std::size_t n, std::size_t m);

// --- instance generation ----------------------------------------------------

/// Deterministic uniform integer in [lo, hi]; independent of the standard
/// library's distribution implementations.
std::uint64_t uniform_int(std::mt19937_64 &rng, std::uint64_t lo,
                          std::uint64_t hi);

/// Ideal with exactly m minimal generators whose exponents are uniform in
/// [0, max_degree], by rejection. nullopt after `attempts` failures.
std::optional<MonomialIdeal> random_ideal(std::mt19937_64 &rng, std::size_t n,
                                          std::size_t m, Exponent max_degree,
                                          std::size_t attempts = 2000);

/// Every proper nonzero ideal with min_m ≤ g(I) ≤ max_m and exponents in
/// [0, max_degree], in a fixed order.
std::vector<MonomialIdeal> enumerate_ideals(std::size_t n, std::size_t min_m,
                                            std::size_t max_m,
                                            Exponent max_degree);

/// Monomial of the box [0, g + 1] not in I, drawn uniformly by rejection.
Monomial random_non_member(std::mt19937_64 &rng, const MonomialIdeal &ideal);

// --- batches ----------------------------------------------------------------

struct BatchConfig {
  std::string claim{claim::kSdepthAtLeastDepth};
  std::size_t n = 3;
  std::size_t min_m = 1;
  std::size_t max_m = 5;
  Exponent max_degree = 3;
  std::size_t sample_size = 200;
  std::uint64_t seed = 1;
  /// Force enumeration; otherwise it is used when the instance space is
  /// below 10^5 ideals.
  bool exhaustive = false;
  std::size_t threads = 1;
  SdepthOptions sdepth;
};

/// Instances the batch would run, in report order.
std::vector<MonomialIdeal> batch_instances(const BatchConfig &config);

/// Runs config.claim over the batch. Reports come back in instance order
/// regardless of thread count; instances the engines cannot finish within
/// the cap are reported as skipped with the reason.
std::vector<VerificationReport> verify_batch(const BatchConfig &config);

/// One JSON object per line, no timing data (byte-stable under a seed).
std::string render_report_json(const VerificationReport &report);
/// `claim,instance_hash,pass,witness_j,depth,sdepth,ms` plus header.
std::string render_report_csv(const std::vector<VerificationReport> &reports);

} // namespace stanley
