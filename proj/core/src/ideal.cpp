#include "stanley/ideal.hpp"

#include <algorithm>
#include <string>

#include "stanley/error.hpp"

namespace stanley {

namespace {

std::vector<Monomial> minimal_subset(std::size_t n,
                                     std::span<const Monomial> monomials) {
  for (const Monomial &u : monomials)
    if (u.ambient() != n)
      throw DimensionMismatch("monomial of ambient " +
                              std::to_string(u.ambient()) +
                              " in an ideal of ambient " + std::to_string(n));

  std::vector<Monomial> sorted(monomials.begin(), monomials.end());
  // Degree order puts every divisor ahead of its multiples.
  std::sort(sorted.begin(), sorted.end(),
            [](const Monomial &a, const Monomial &b) {
              auto da = a.degree(), db = b.degree();
              return da != db ? da < db : a < b;
            });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<Monomial> kept;
  for (const Monomial &u : sorted) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial &v) { return v.divides(u); });
    if (!redundant)
      kept.push_back(u);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::span<const Monomial> monomials)
    : n_(n), gens_(minimal_subset(n, monomials)) {
  if (n > VariableSet::kMaxVariables)
    throw ContractViolation("at most 64 variables are supported");
}

MonomialIdeal::MonomialIdeal(std::size_t n,
                             std::initializer_list<Monomial> monomials)
    : MonomialIdeal(n, std::span<const Monomial>(monomials.begin(),
                                                 monomials.size())) {}

MonomialIdeal MonomialIdeal::zero(std::size_t n) {
  MonomialIdeal I;
  I.n_ = n;
  return I;
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  MonomialIdeal I;
  I.n_ = n;
  I.gens_.push_back(Monomial::unit(n));
  return I;
}

bool MonomialIdeal::contains(const Monomial &u) const {
  if (u.ambient() != n_)
    throw DimensionMismatch("membership test across ambients");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial &v) { return v.divides(u); });
}

MonomialIdeal minimalize(std::size_t n, std::span<const Monomial> monomials) {
  return MonomialIdeal(n, monomials);
}

MonomialIdeal colon(const MonomialIdeal &ideal, const Monomial &v) {
  if (v.ambient() != ideal.ambient())
    throw DimensionMismatch("colon across ambients");
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.num_generators());
  for (const Monomial &u : ideal.generators())
    quotients.push_back(u / gcd(u, v));
  return MonomialIdeal(ideal.ambient(), quotients);
}

MonomialIdeal saturate(const MonomialIdeal &ideal, std::size_t j) {
  if (j >= ideal.ambient())
    throw ContractViolation("variable index out of range");
  std::vector<Monomial> stripped;
  stripped.reserve(ideal.num_generators());
  for (const Monomial &u : ideal.generators())
    stripped.push_back(u.with_exponent(j, 0));
  return MonomialIdeal(ideal.ambient(), stripped);
}

Monomial Restriction::lift(const Monomial &u) const {
  return u.with_inserted_variable(removed, 0);
}

VariableSet Restriction::lift(VariableSet z) const {
  VariableSet out;
  for (std::size_t j : z.indices())
    out.insert(index_map.at(j));
  return out;
}

Restriction restrict(const MonomialIdeal &ideal, std::size_t j) {
  const std::size_t n = ideal.ambient();
  if (j >= n)
    throw ContractViolation("variable index out of range");
  std::vector<Monomial> kept;
  for (const Monomial &u : ideal.generators())
    if (u[j] == 0)
      kept.push_back(u.without_variable(j));
  std::vector<std::size_t> index_map;
  for (std::size_t i = 0; i < n; ++i)
    if (i != j)
      index_map.push_back(i);
  // Generators free of x_j stay minimal, so no further reduction happens.
  return Restriction{MonomialIdeal(n - 1, kept), j, std::move(index_map)};
}

std::size_t IdealStatistics::max_t() const {
  return t.empty() ? 0 : *std::max_element(t.begin(), t.end());
}

std::size_t IdealStatistics::argmax_t() const {
  return static_cast<std::size_t>(std::max_element(t.begin(), t.end()) -
                                  t.begin());
}

IdealStatistics statistics(const MonomialIdeal &ideal) {
  if (ideal.is_zero())
    throw UndefinedInput("statistics of the zero ideal are undefined");
  const std::size_t n = ideal.ambient();
  IdealStatistics s;
  s.g = ideal.num_generators();
  s.t.assign(n, 0);
  s.lcm = Monomial::unit(n);
  for (const Monomial &u : ideal.generators()) {
    s.epsilon += u.degree();
    s.support_sum += u.support().size();
    for (std::size_t j = 0; j < n; ++j)
      if (u[j] > 0)
        ++s.t[j];
    s.lcm = lcm(s.lcm, u);
  }
  return s;
}

MonomialIdeal permute(const MonomialIdeal &ideal,
                      std::span<const std::size_t> perm) {
  const std::size_t n = ideal.ambient();
  if (perm.size() != n)
    throw DimensionMismatch("permutation length differs from ambient");
  std::vector<Monomial> out;
  for (const Monomial &u : ideal.generators()) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      e[perm[j]] = u[j];
    out.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, out);
}

MonomialIdeal add_variable(const MonomialIdeal &ideal) {
  if (ideal.is_zero())
    return MonomialIdeal::zero(ideal.ambient() + 1);
  std::vector<Monomial> out;
  for (const Monomial &u : ideal.generators())
    out.push_back(u.with_inserted_variable(ideal.ambient(), 0));
  return MonomialIdeal(ideal.ambient() + 1, out);
}

} // namespace stanley
