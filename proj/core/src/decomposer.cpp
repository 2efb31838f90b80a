#include "stanley/decomposer.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "stanley/error.hpp"

namespace stanley {

namespace {

// t_j over a generator list that may be non-minimal.
std::vector<std::size_t> support_counts(const std::vector<Monomial> &gens,
                                        std::size_t n) {
  std::vector<std::size_t> t(n, 0);
  for (const Monomial &u : gens)
    for (std::size_t j = 0; j < n; ++j)
      if (u[j] > 0)
        ++t[j];
  return t;
}

std::optional<std::size_t> best_meeting(const std::vector<std::size_t> &t,
                                        long long bound) {
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < t.size(); ++j)
    if (static_cast<long long>(t[j]) >= bound && (!best || t[j] > t[*best]))
      best = j;
  return best;
}

// x_p ∉ √I iff no generator is a pure power of x_p. Largest such p.
std::optional<std::size_t> variable_outside_radical(
    const std::vector<Monomial> &gens, std::size_t n) {
  std::vector<bool> in_radical(n, false);
  for (const Monomial &u : gens) {
    VariableSet s = u.support();
    if (s.size() == 1)
      in_radical[s.indices().front()] = true;
  }
  for (std::size_t p = n; p-- > 0;)
    if (!in_radical[p])
      return p;
  return std::nullopt;
}

std::size_t select_on_list(const std::vector<Monomial> &gens, std::size_t n,
                           int k, bool skip_direct) {
  const long long m = static_cast<long long>(gens.size());
  const long long bound = m - 2LL * k + 1;
  if (!skip_direct) {
    if (auto j = best_meeting(support_counts(gens, n), bound))
      return *j;
  }
  const auto p = variable_outside_radical(gens, n);
  if (n <= 2 || static_cast<int>(n) - k <= 1 || !p) {
    if (skip_direct)
      return select_on_list(gens, n, k, false);
    throw InvariantViolation("no variable meets t_j >= g(I) - 2k + 1 and the "
                             "instance cannot be reduced further");
  }

  // Saturate at x_p and drop it; t_j is unchanged for every j != p.
  std::vector<Monomial> reduced;
  reduced.reserve(gens.size());
  for (const Monomial &u : gens)
    reduced.push_back(u.without_variable(*p));
  auto lift = [&](std::size_t j) { return j < *p ? j : j + 1; };

  MonomialIdeal reduced_ideal(n - 1, reduced);
  if (reduced_ideal.is_principal()) {
    // The single generator divides every reduced v_i, so any variable in
    // its support divides all of G(I).
    VariableSet s = reduced_ideal.generators().front().support();
    if (s.empty())
      throw InvariantViolation("saturation produced the unit ideal at a "
                               "variable outside the radical");
    return lift(s.indices().front());
  }
  return lift(select_on_list(reduced, n - 1, k, false));
}

void check_selection_preconditions(const MonomialIdeal &ideal, int k) {
  const std::size_t n = ideal.ambient();
  const std::size_t m = ideal.num_generators();
  if (ideal.is_zero() || ideal.is_principal())
    throw ContractViolation("variable selection needs a non-principal ideal");
  if (n < 2 || m < 2 || m >= 2 * n)
    throw ContractViolation("variable selection needs 2 <= g(I) < 2n");
  if (k < 0 || k >= static_cast<int>(n))
    throw ContractViolation("k must lie in 0..n-1");
  if (depth(ideal).depth_I < static_cast<int>(n) - k)
    throw ContractViolation("depth(I) < n - k");
}

std::size_t checked_result(const MonomialIdeal &ideal, int k, std::size_t j) {
  const auto stats = statistics(ideal);
  const long long bound = static_cast<long long>(stats.g) - 2LL * k + 1;
  if (static_cast<long long>(stats.t.at(j)) < bound)
    throw InvariantViolation("selected x" + std::to_string(j + 1) +
                             " has t_j below g(I) - 2k + 1");
  return j;
}

class Builder {
public:
  explicit Builder(const DecomposeOptions &options) : options_(options) {}

  StanleyDecomposition build(const MonomialIdeal &ideal, std::size_t level) {
    const std::size_t n = ideal.ambient();
    if (ideal.is_zero())
      return {};
    if (ideal.is_principal()) {
      ++leaf_pieces_;
      return StanleyDecomposition(
          {Piece{ideal.generators().front(), VariableSet::all(n)}});
    }

    const auto stats = statistics(ideal);
    if (stats.epsilon == stats.g)
      return exact(ideal);

    const DepthCertificate dc = depth(ideal);
    const std::size_t m = stats.g;
    const bool guaranteed = m >= 2 && m < 2 * n;
    const std::size_t j =
        guaranteed ? select_variable(ideal, dc.k) : stats.argmax_t();
    const Monomial xj = Monomial::variable(n, j);

    if (stats.t[j] == m)
      return build(colon(ideal, xj), level + 1).shifted(xj);

    SplitResult parts = split(ideal, j);
    SdepthResult restricted = sdepth_exact(parts.restricted.ideal,
                                           options_.sdepth);
    leaf_pieces_ += restricted.witness.size();

    SplitRecord rec;
    rec.level = level;
    rec.ambient = n;
    rec.generators = m;
    rec.j = j;
    rec.r = parts.r;
    rec.depth_I = dc.depth_I;
    rec.restricted_bound =
        static_cast<int>(n) - 1 - static_cast<int>((m - parts.r) / 2);
    rec.restricted_sdepth = restricted.sdepth;
    rec.chain_slack = rec.restricted_bound - dc.depth_I;
    splits_.push_back(rec);
    if (restricted.sdepth < sdepth_lower_bound_okazaki(parts.restricted.ideal))
      throw InvariantViolation("exact sdepth of the restricted part is below "
                               "max{1, n - floor(m/2)}");

    std::vector<Piece> pieces;
    for (const Piece &p : restricted.witness.pieces())
      pieces.push_back({parts.restricted.lift(p.generator),
                        parts.restricted.lift(p.z)});
    StanleyDecomposition lifted = build(parts.quotient, level + 1).shifted(xj);
    for (Piece &p : lifted.pieces())
      pieces.push_back(std::move(p));
    return StanleyDecomposition(std::move(pieces));
  }

  std::vector<SplitRecord> take_splits() { return std::move(splits_); }
  std::size_t leaf_pieces() const { return leaf_pieces_; }

private:
  StanleyDecomposition exact(const MonomialIdeal &ideal) {
    SdepthResult r = sdepth_exact(ideal, options_.sdepth);
    leaf_pieces_ += r.witness.size();
    return r.witness;
  }

  const DecomposeOptions &options_;
  std::vector<SplitRecord> splits_;
  std::size_t leaf_pieces_ = 0;
};

} // namespace

SplitResult split(const MonomialIdeal &ideal, std::size_t j) {
  const std::size_t n = ideal.ambient();
  if (j >= n)
    throw ContractViolation("variable index out of range");
  SplitResult out{j, 0, restrict(ideal, j),
                  colon(ideal, Monomial::variable(n, j))};
  for (const Monomial &u : ideal.generators())
    if (u[j] > 0)
      ++out.r;
  return out;
}

std::size_t select_variable(const MonomialIdeal &ideal, int k) {
  check_selection_preconditions(ideal, k);
  return checked_result(
      ideal, k,
      select_on_list(ideal.generators(), ideal.ambient(), k, false));
}

std::size_t select_variable_via_reduction(const MonomialIdeal &ideal, int k) {
  check_selection_preconditions(ideal, k);
  return checked_result(
      ideal, k, select_on_list(ideal.generators(), ideal.ambient(), k, true));
}

DecomposeReport decompose(const MonomialIdeal &ideal,
                          const DecomposeOptions &options) {
  if (ideal.is_zero())
    throw UndefinedInput("the zero ideal has no Stanley decomposition");
  Builder builder(options);
  DecomposeReport report;
  try {
    report.decomposition = builder.build(ideal, 0);
  } catch (const ResourceLimit &e) {
    throw ResourceLimit(std::string(e.what()) + " (after " +
                            std::to_string(builder.take_splits().size()) +
                            " splits, " +
                            std::to_string(builder.leaf_pieces()) +
                            " pieces built)",
                        e.best_lower_bound());
  }
  const std::size_t n = ideal.ambient();
  report.depth_I = ideal.is_unit() ? static_cast<int>(n) : depth(ideal).depth_I;
  report.sdepth_of_D = report.decomposition.sdepth();
  report.guarantee_applies = ideal.num_generators() <= 2 * n - 1;
  report.splits = builder.take_splits();
  report.leaf_pieces = builder.leaf_pieces();
  return report;
}

} // namespace stanley
