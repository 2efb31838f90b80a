#include "stanley/depth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "stanley/error.hpp"
#include "stanley/exact_rank.hpp"

namespace stanley {

namespace {

void require_proper_nonzero(const MonomialIdeal &ideal) {
  if (ideal.is_zero())
    throw UndefinedInput("Betti numbers of the zero ideal are undefined");
  if (ideal.is_unit())
    throw UndefinedInput("Betti numbers of the unit ideal are undefined");
}

// Faces grouped by cardinality; boundary drops one element with sign
// (-1)^position. `keep` decides which faces of the next lower size exist.
std::vector<std::size_t>
boundary_ranks(const std::vector<std::vector<std::uint64_t>> &by_size,
               std::size_t (*rank_fn)(const IntMatrix &)) {
  std::vector<std::size_t> ranks(by_size.size() + 1, 0);
  for (std::size_t p = 1; p < by_size.size(); ++p) {
    const auto &cols = by_size[p];
    const auto &rows = by_size[p - 1];
    if (cols.empty() || rows.empty())
      continue;
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int sign = 1;
      for (std::uint64_t b = cols[c]; b != 0; b &= b - 1) {
        std::uint64_t face = cols[c] & ~(b & -b);
        auto it = std::lower_bound(rows.begin(), rows.end(), face);
        if (it != rows.end() && *it == face)
          m(static_cast<std::size_t>(it - rows.begin()), c) = sign;
        sign = -sign;
      }
    }
    ranks[p] = rank_fn(m);
  }
  return ranks;
}

} // namespace

void BettiTable::set(std::size_t i, const Monomial &a, std::size_t rank) {
  if (rank == 0)
    entries_.erase({i, a});
  else
    entries_[{i, a}] = rank;
}

std::size_t BettiTable::rank(std::size_t i, const Monomial &a) const {
  auto it = entries_.find({i, a});
  return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::total(std::size_t i) const {
  std::size_t sum = 0;
  for (const auto &[key, r] : entries_)
    if (key.first == i)
      sum += r;
  return sum;
}

std::size_t BettiTable::projective_dimension() const {
  std::size_t pd = 0;
  for (const auto &[key, r] : entries_)
    pd = std::max(pd, key.first);
  return pd;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal &ideal) {
  std::set<Monomial> lattice(ideal.generators().begin(),
                             ideal.generators().end());
  std::vector<Monomial> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial &x : frontier)
      for (const Monomial &v : ideal.generators()) {
        Monomial joined = lcm(x, v);
        if (lattice.insert(joined).second)
          next.push_back(std::move(joined));
      }
    frontier = std::move(next);
  }
  return {lattice.begin(), lattice.end()};
}

BettiTable betti(const MonomialIdeal &ideal) {
  require_proper_nonzero(ideal);
  const std::size_t n = ideal.ambient();
  BettiTable table;
  for (const Monomial &a : lcm_lattice(ideal)) {
    const std::uint64_t box = a.support().bits();
    std::vector<std::vector<std::uint64_t>> by_size(n + 1);
    // Enumerate every subset of supp(a), including the empty face.
    for (std::uint64_t b = box;; b = (b - 1) & box) {
      std::vector<Exponent> e(a.exponents().begin(), a.exponents().end());
      for (std::uint64_t bits = b; bits != 0; bits &= bits - 1)
        --e[static_cast<std::size_t>(std::countr_zero(bits))];
      if (ideal.contains(Monomial(std::move(e))))
        by_size[static_cast<std::size_t>(std::popcount(b))].push_back(b);
      if (b == 0)
        break;
    }
    for (auto &faces : by_size)
      std::sort(faces.begin(), faces.end());
    auto ranks = boundary_ranks(by_size, &rank_bareiss);
    for (std::size_t i = 0; i <= n; ++i) {
      std::size_t homology = by_size[i].size() - ranks[i] - ranks[i + 1];
      table.set(i, a, homology);
    }
  }
  return table;
}

BettiTable betti_oracle_lcm(const MonomialIdeal &ideal) {
  require_proper_nonzero(ideal);
  const auto &gens = ideal.generators();
  const std::size_t m = gens.size();
  if (m > 20)
    throw ResourceLimit("Taylor-complex oracle limited to 20 generators", 0);

  // Bucket every nonempty subset of G(I) by its lcm.
  std::vector<Monomial> lcms(std::size_t{1} << m);
  lcms[0] = Monomial::unit(ideal.ambient());
  std::map<Monomial, std::vector<std::vector<std::uint64_t>>> strands;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t low = mask & -mask;
    lcms[mask] = lcm(lcms[mask & ~low],
                     gens[static_cast<std::size_t>(std::countr_zero(low))]);
    auto &strand = strands[lcms[mask]];
    strand.resize(m + 2);
    strand[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  }

  BettiTable table;
  for (auto &[a, by_size] : strands) {
    for (auto &cells : by_size)
      std::sort(cells.begin(), cells.end());
    // In degree a the differential only keeps faces whose lcm is still a;
    // the others carry a nonunit coefficient and vanish after ⊗ K. Size-0
    // cells never live in a nonzero degree, so the first map is zero.
    auto ranks = boundary_ranks(by_size, &rank_rational);
    ranks[1] = 0;
    for (std::size_t s = 1; s + 1 < by_size.size(); ++s) {
      std::size_t homology = by_size[s].size() - ranks[s] - ranks[s + 1];
      table.set(s - 1, a, homology);
    }
  }
  return table;
}

DepthCertificate depth_from_betti(const BettiTable &table, std::size_t n) {
  DepthCertificate cert;
  cert.pd_I = static_cast<int>(table.projective_dimension());
  cert.depth_I = static_cast<int>(n) - cert.pd_I;
  cert.depth_S_mod_I = cert.depth_I - 1;
  cert.k = static_cast<int>(n) - cert.depth_I;
  if (cert.depth_I < 1)
    throw InvariantViolation("depth(I) < 1 for a nonzero ideal");
  return cert;
}

DepthCertificate depth(const MonomialIdeal &ideal) {
  return depth_from_betti(betti(ideal), ideal.ambient());
}

} // namespace stanley
