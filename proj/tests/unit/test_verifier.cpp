#include "doctest.h"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "oracles.hpp"
#include "stanley/error.hpp"
#include "stanley/ideal_io.hpp"
#include "stanley/verifier.hpp"

using namespace stanley;

TEST_CASE("claim names and aliases") {
  CHECK(claim::canonical("thm1.5") == claim::kSdepthAtLeastDepth);
  CHECK(claim::canonical("lemma1.3") == claim::kSupportBound);
  CHECK(claim::canonical("thm1.4") == claim::kDepthSupportBound);
  CHECK(claim::canonical("prop1.6") == claim::kGeneratorSupportBound);
  CHECK(claim::canonical("prop1.2") == claim::kColonDepth);
  CHECK(claim::canonical("thm1.1") == claim::kOkazakiBound);
  CHECK(claim::canonical("example1.7") == claim::kSharpnessFamily);
  CHECK(claim::canonical("normal-form") == claim::kNormalForm);
  CHECK_FALSE(claim::canonical("thm9.9"));
  CHECK(claim::all().size() == 9);
}

TEST_CASE("support bound") {
  CHECK(check_support_bound(variables_ideal(2, 2)).passed());
  const MonomialIdeal I(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {2, 0, 0}});
  const auto r = check_support_bound(I);
  CHECK(r.passed());
  CHECK(r.witness.bound == 1);
  CHECK(check_support_bound(MonomialIdeal(2, {{1, 1}})).status == Status::Skipped);
  CHECK(check_support_bound(gen_family_even(4)).status == Status::Skipped);
}

TEST_CASE("depth support bound") {
  const MonomialIdeal tri(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  const auto r = check_depth_support_bound(tri);
  CHECK(r.passed());
  CHECK(r.witness.depth == 2);
  CHECK(r.witness.bound == 2);
  CHECK(r.witness.j == 0u);
  CHECK(check_depth_support_bound(variables_ideal(2, 2)).passed());
}

TEST_CASE("generator support bound") {
  CHECK(check_generator_support_bound(gen_example_n3()).status == Status::Skipped);
  // Outside the checked range the bound genuinely fails here.
  const auto ext = check_generator_support_bound(gen_example_n3(), true);
  CHECK(ext.status == Status::Fail);
  CHECK(ext.witness.bound == 6);
}

TEST_CASE("two variables: every t_j is at least m - 1") {
  for (const MonomialIdeal &I : enumerate_ideals(2, 2, 6, 5)) {
    const auto t = statistics(I).t;
    const std::size_t m = I.num_generators();
    CHECK(t[0] + 1 >= m);
    CHECK(t[1] + 1 >= m);
    if (m <= 5)
      CHECK(check_generator_support_bound(I).passed());
  }
}

TEST_CASE("three variables with eight generators meet the bound") {
  // Greedy random antichains in [0,4]^3; rejection sampling rarely reaches
  // eight minimal generators.
  std::vector<oracle::Exps> box;
  oracle::for_box({4, 4, 4}, [&](const oracle::Exps &u) {
    if (u != oracle::Exps{0, 0, 0})
      box.push_back(u);
  });
  std::mt19937_64 rng(61);
  int seen = 0;
  while (seen < 150) {
    std::shuffle(box.begin(), box.end(), rng);
    std::vector<Monomial> chosen;
    for (const auto &u : box) {
      bool free = true;
      for (const Monomial &w : chosen)
        if (oracle::divides(oracle::exps(w), u) || oracle::divides(u, oracle::exps(w)))
          free = false;
      if (free)
        chosen.emplace_back(u);
      if (chosen.size() == 8)
        break;
    }
    if (chosen.size() < 8)
      continue;
    const MonomialIdeal I(3, chosen);
    REQUIRE(I.num_generators() == 8);
    ++seen;
    const auto r = check_generator_support_bound(I, true);
    CHECK(r.passed());
    CHECK(r.witness.bound == 5);
  }
}

TEST_CASE("sdepth at least depth") {
  const auto r = check_sdepth_at_least_depth(variables_ideal(2, 2));
  CHECK(r.passed());
  CHECK(r.witness.depth == 1);
  const auto e = check_sdepth_at_least_depth(gen_example_n3());
  CHECK(e.passed());
  CHECK(e.detail.find("exploratory") != std::string::npos);
  CHECK(check_sdepth_at_least_depth(MonomialIdeal::unit(2)).status == Status::Skipped);
  SdepthOptions tiny;
  tiny.cap = 4;
  CHECK(check_sdepth_at_least_depth(gen_example_n3(), tiny).status == Status::Skipped);
}

TEST_CASE("colon depth, Okazaki bound, Betti oracle, normal form") {
  const MonomialIdeal path(3, {{1, 1, 0}, {0, 1, 1}});
  CHECK(check_colon_depth(path, Monomial{0, 1, 0}).passed());
  CHECK(check_colon_depth(path, Monomial{1, 1, 0}).status == Status::Skipped);
  const auto ok = check_okazaki_bound(gen_example_n3());
  CHECK(ok.passed());
  CHECK(ok.witness.bound == 1);
  CHECK(check_betti_oracle(path).passed());
  CHECK(check_normal_form(variables_ideal(3, 3)).passed());
}

TEST_CASE("example families") {
  const MonomialIdeal ex = gen_example_n3();
  CHECK(ex.num_generators() == 9);
  CHECK(statistics(ex).t == std::vector<std::size_t>{5, 5, 5});
  CHECK(check_sharpness_family(ex).passed());
  CHECK(check_sharpness_family(ex).witness.bound == 6);

  for (std::size_t n = 4; n <= 8; ++n) {
    const MonomialIdeal I = n % 2 == 0 ? gen_family_even(n) : gen_family_odd(n);
    const auto gens = n % 2 == 0 ? family_even_generators(n) : family_odd_generators(n);
    CHECK(MonomialIdeal(n, gens).num_generators() == gens.size());
    const auto s = statistics(I);
    CHECK(s.g == 2 * n + 2);
    CHECK(s.max_t() == 4);
    const auto r = check_sharpness_family(I);
    CHECK(r.passed());
    CHECK(r.witness.bound == 5);
  }
  CHECK_THROWS_AS(gen_family_even(5), ContractViolation);
  CHECK_THROWS_AS(gen_family_even(2), ContractViolation);
  CHECK_THROWS_AS(gen_family_odd(4), ContractViolation);
  CHECK_THROWS_AS(gen_family_odd(3), ContractViolation);
  CHECK(variables_ideal(4, 2) == MonomialIdeal(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
}

TEST_CASE("enumeration matches an antichain count") {
  // Subsets of the box [0,2]^2 without the origin, kept when pairwise
  // incomparable.
  std::vector<oracle::Exps> pts;
  oracle::for_box({2, 2}, [&](const oracle::Exps &u) {
    if (u != oracle::Exps{0, 0})
      pts.push_back(u);
  });
  std::vector<std::size_t> by_size(pts.size() + 1, 0);
  for (std::uint32_t mask = 1; mask < (1u << pts.size()); ++mask) {
    bool antichain = true;
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = 0; b < pts.size(); ++b)
        if (a != b && (mask >> a & 1) && (mask >> b & 1) &&
            oracle::divides(pts[a], pts[b]))
          antichain = false;
    if (antichain)
      ++by_size[static_cast<std::size_t>(std::popcount(mask))];
  }
  for (std::size_t lo = 1; lo <= 3; ++lo)
    for (std::size_t hi = lo; hi <= 4; ++hi) {
      std::size_t expected = 0;
      for (std::size_t m = lo; m <= hi; ++m)
        expected += by_size[m];
      const auto got = enumerate_ideals(2, lo, hi, 2);
      CHECK(got.size() == expected);
      std::set<std::string> distinct;
      for (const auto &I : got)
        distinct.insert(render_ideal_json(I));
      CHECK(distinct.size() == got.size());
    }
}

TEST_CASE("random generation") {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 1000; ++i) {
    const auto x = uniform_int(rng, 3, 9);
    CHECK(x >= 3);
    CHECK(x <= 9);
  }
  for (int i = 0; i < 100; ++i) {
    auto I = random_ideal(rng, 3, 4, 3);
    REQUIRE(I);
    CHECK(I->num_generators() == 4);
    CHECK(I->is_proper_nonzero());
    CHECK_FALSE(I->contains(random_non_member(rng, *I)));
  }
  // Three generators cannot be an antichain in the box [0,1]^1.
  CHECK_FALSE(random_ideal(rng, 1, 3, 1, 50));
}

TEST_CASE("batches are deterministic across runs and thread counts") {
  BatchConfig c;
  c.claim = "thm1.5";
  c.n = 3;
  c.max_m = 5;
  c.sample_size = 40;
  c.seed = 7;
  const auto a = verify_batch(c);
  c.threads = 4;
  const auto b = verify_batch(c);
  REQUIRE(a.size() == 40);
  REQUIRE(b.size() == 40);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(render_report_json(a[i]) == render_report_json(b[i]));
    CHECK(a[i].passed());
    CHECK(a[i].seed == 7);
  }
  const std::string csv = render_report_csv(a);
  CHECK(csv.rfind("claim,instance_hash,pass,witness_j,depth,sdepth,ms\n", 0) == 0);
}

TEST_CASE("exhaustive batches and the family batch") {
  BatchConfig c;
  c.claim = "thm1.5";
  c.n = 2;
  c.max_m = 3;
  c.max_degree = 2;
  c.exhaustive = true;
  const auto reports = verify_batch(c);
  CHECK(reports.size() == enumerate_ideals(2, 1, 3, 2).size());
  for (const auto &r : reports)
    CHECK(r.passed());

  BatchConfig f;
  f.claim = "example1.7";
  f.n = 6;
  const auto fam = verify_batch(f);
  REQUIRE(fam.size() == 1);
  CHECK(fam[0].passed());
}

TEST_CASE("report rendering") {
  const auto r = check_support_bound(variables_ideal(2, 2));
  const std::string line = render_report_json(r);
  CHECK(line.find("\"claim\":\"support-bound\"") != std::string::npos);
  CHECK(line.find(instance_hash(variables_ideal(2, 2))) != std::string::npos);
  CHECK(line.find("elapsed") == std::string::npos);
  CHECK(instance_hash(variables_ideal(2, 2)).size() == 16);
  CHECK(instance_hash(variables_ideal(2, 2)) != instance_hash(variables_ideal(2, 1)));
}
