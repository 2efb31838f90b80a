#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "stanley/error.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/verifier.hpp"

using namespace stanley;

namespace {

std::size_t poset_points(const MonomialIdeal &I) {
  return characteristic_poset(I).size();
}

int brute(const MonomialIdeal &I) {
  return oracle::sdepth_brute(oracle::exps(I.generators()),
                              oracle::exps(statistics(I).lcm));
}

std::vector<MonomialIdeal> small_ideals(std::uint64_t seed, std::size_t count,
                                        std::size_t max_points) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  while (out.size() < count) {
    const std::size_t n = 1 + uniform_int(rng, 0, 2);
    auto I = random_ideal(rng, n, 1 + uniform_int(rng, 0, 3), 2);
    if (I && I->is_proper_nonzero() && poset_points(*I) <= max_points)
      out.push_back(*I);
  }
  return out;
}

} // namespace

TEST_CASE("characteristic poset") {
  const auto P = characteristic_poset(MonomialIdeal(2, {{1, 0}, {0, 1}}));
  CHECK(P.points() == std::vector<Monomial>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(P.box_size() == 4);
  CHECK(characteristic_poset(MonomialIdeal(1, {{2}})).points() ==
        std::vector<Monomial>{{2}});
  CHECK_THROWS_AS(characteristic_poset(MonomialIdeal::zero(2)), UndefinedInput);
  SdepthOptions tiny;
  tiny.cap = 10;
  CHECK_THROWS_AS(characteristic_poset(MonomialIdeal(2, {{4, 0}, {0, 4}}), tiny),
                  ResourceLimit);
  SdepthOptions low;
  low.bound = Monomial{0, 1};
  CHECK_THROWS_AS(characteristic_poset(MonomialIdeal(2, {{1, 0}}), low),
                  ContractViolation);
}

TEST_CASE("poset indices follow lexicographic order") {
  const auto P = characteristic_poset(MonomialIdeal(3, {{2, 0, 0}, {0, 1, 2}}));
  const auto pts = P.points();
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  for (const Monomial &u : pts)
    CHECK(P.point(P.index_of(u.exponents())) == u);
}

TEST_CASE("sdepth of small ideals") {
  CHECK(sdepth_exact(variables_ideal(2, 2)).sdepth == 1);
  CHECK(sdepth_exact(variables_ideal(3, 3)).sdepth == 2);
  CHECK(sdepth_exact(MonomialIdeal(3, {{1, 2, 0}})).sdepth == 3);
  CHECK(sdepth_exact(MonomialIdeal::unit(2)).sdepth == 2);
  CHECK_THROWS_AS(sdepth_exact(MonomialIdeal::zero(2)), UndefinedInput);
}

TEST_CASE("ideals of variables match the brute-force oracle") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= n; ++m) {
      const MonomialIdeal I = variables_ideal(n, m);
      const int expected = brute(I);
      CHECK(expected == static_cast<int>(n - m / 2));
      CHECK(sdepth_exact(I).sdepth == expected);
    }
}

TEST_CASE("exact search matches the brute-force oracle") {
  for (const MonomialIdeal &I : small_ideals(41, 80, 14)) {
    const SdepthResult r = sdepth_exact(I);
    CHECK(r.sdepth == brute(I));
    CHECK(verify_decomposition(I, r.witness));
    CHECK(r.witness.sdepth() == r.sdepth);
    CHECK(r.witness.size() == r.intervals.size());
  }
}

TEST_CASE("both search strategies agree") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + uniform_int(rng, 0, 2);
    auto I = random_ideal(rng, n, 1 + uniform_int(rng, 0, 6), n == 4 ? 2 : 3);
    if (!I)
      continue;
    SdepthOptions a, b;
    a.strategy = SearchStrategy::DancingLinks;
    b.strategy = SearchStrategy::LeastPoint;
    const SdepthResult ra = sdepth_exact(*I, a), rb = sdepth_exact(*I, b);
    CHECK(ra.sdepth == rb.sdepth);
    CHECK(verify_decomposition(*I, ra.witness));
    CHECK(verify_decomposition(*I, rb.witness));
  }
}

TEST_CASE("normal form equals general intervals") {
  for (const MonomialIdeal &I : enumerate_ideals(2, 1, 9, 2))
    CHECK(sdepth_exact(I).sdepth == sdepth_general_intervals(I));
  for (const MonomialIdeal &I : small_ideals(43, 40, 30))
    CHECK(sdepth_exact(I).sdepth == sdepth_general_intervals(I));
}

TEST_CASE("invariance under permutations, new variables and larger boxes") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + uniform_int(rng, 0, 1);
    auto I = random_ideal(rng, n, 1 + uniform_int(rng, 0, 4), 2);
    if (!I)
      continue;
    const int s = sdepth_exact(*I).sdepth;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(sdepth_exact(permute(*I, perm)).sdepth == s);

    CHECK(sdepth_exact(add_variable(*I)).sdepth == s + 1);

    const std::size_t j = uniform_int(rng, 0, n - 1);
    Monomial g = statistics(*I).lcm;
    SdepthOptions wide;
    wide.bound = g.with_exponent(j, g[j] + 1);
    const SdepthResult r = sdepth_exact(*I, wide);
    CHECK(r.sdepth == s);
    CHECK(verify_decomposition(*I, r.witness, *wide.bound));
  }
}

TEST_CASE("limits report the best level reached") {
  SdepthOptions o;
  o.node_limit = 1;
  try {
    sdepth_exact(variables_ideal(4, 4), o);
    FAIL("expected a resource limit");
  } catch (const ResourceLimit &e) {
    CHECK(e.best_lower_bound() >= 0);
    CHECK(e.best_lower_bound() <= 2);
  }
  SdepthOptions small;
  small.cap = 8;
  CHECK_THROWS_AS(sdepth_exact(MonomialIdeal(2, {{3, 0}, {0, 3}}), small),
                  ResourceLimit);
}

TEST_CASE("certification") {
  const MonomialIdeal I = variables_ideal(2, 2);
  CHECK(verify_decomposition(I, sdepth_exact(I).witness));
  const StanleyDecomposition missing({{Monomial{1, 0}, VariableSet{0, 1}}});
  CHECK_FALSE(verify_decomposition(I, missing));
  const StanleyDecomposition twice({{Monomial{1, 0}, VariableSet{0, 1}},
                                    {Monomial{1, 1}, VariableSet{0, 1}},
                                    {Monomial{0, 1}, VariableSet{1}}});
  CHECK_FALSE(verify_decomposition(I, twice));
  const StanleyDecomposition exact({{Monomial{1, 0}, VariableSet{0, 1}},
                                    {Monomial{0, 1}, VariableSet{1}}});
  CHECK(verify_decomposition(I, exact));
  const StanleyDecomposition outside({{Monomial{0, 0}, VariableSet{0, 1}}});
  CHECK_THROWS_AS(verify_decomposition(I, outside), MalformedDecomposition);
  const StanleyDecomposition too_high({{Monomial{2, 0}, VariableSet{0, 1}}});
  CHECK_THROWS_AS(verify_decomposition(I, too_high), MalformedDecomposition);
  CHECK(verify_decomposition(MonomialIdeal::zero(2), StanleyDecomposition{}));
  CHECK_THROWS_AS(StanleyDecomposition{}.sdepth(), UndefinedInput);
}

TEST_CASE("piece membership") {
  const Piece p{Monomial{1, 0, 1}, VariableSet{0, 1}};
  CHECK(p.contains(Monomial{3, 2, 1}));
  CHECK_FALSE(p.contains(Monomial{1, 0, 2}));
  CHECK_FALSE(p.contains(Monomial{0, 1, 1}));
}

TEST_CASE("lower bound formula") {
  CHECK(sdepth_lower_bound_okazaki(gen_example_n3()) == 1);
  CHECK(sdepth_lower_bound_okazaki(MonomialIdeal(5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}})) == 4);
  CHECK(sdepth_lower_bound_okazaki(MonomialIdeal(2, {{1, 1}})) == 2);
  CHECK_THROWS_AS(sdepth_lower_bound_okazaki(MonomialIdeal::zero(2)), UndefinedInput);
}
