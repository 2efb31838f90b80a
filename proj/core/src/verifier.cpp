#include "stanley/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "stanley/decomposer.hpp"
#include "stanley/depth.hpp"
#include "stanley/error.hpp"
#include "stanley/ideal_io.hpp"

namespace stanley {

// --- claim names ------------------------------------------------------------

namespace claim {

std::optional<std::string_view> canonical(std::string_view name) {
  static const std::map<std::string_view, std::string_view> aliases = {
      {"lemma1.3", kSupportBound},
      {"thm1.4", kDepthSupportBound},
      {"prop1.6", kGeneratorSupportBound},
      {"thm1.5", kSdepthAtLeastDepth},
      {"prop1.2", kColonDepth},
      {"thm1.1", kOkazakiBound},
      {"example1.7", kSharpnessFamily},
  };
  for (std::string_view id : all())
    if (id == name)
      return id;
  if (auto it = aliases.find(name); it != aliases.end())
    return it->second;
  return std::nullopt;
}

std::vector<std::string_view> all() {
  return {kSupportBound,     kDepthSupportBound, kGeneratorSupportBound,
          kSdepthAtLeastDepth, kColonDepth,      kOkazakiBound,
          kSharpnessFamily,  kBettiOracle,       kNormalForm};
}

} // namespace claim

std::string_view to_string(Status s) {
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Skipped:
    return "skipped";
  }
  return "skipped";
}

std::string instance_hash(const MonomialIdeal &ideal) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : render_ideal_json(ideal)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// --- checks -----------------------------------------------------------------

namespace {

VerificationReport start(std::string_view id, const MonomialIdeal &ideal) {
  VerificationReport r;
  r.claim = std::string(id);
  r.instance = ideal;
  return r;
}

VerificationReport skip(VerificationReport r, std::string why) {
  r.status = Status::Skipped;
  r.detail = std::move(why);
  return r;
}

Status verdict(bool ok) { return ok ? Status::Pass : Status::Fail; }

// Non-principal, n ≥ 2, 2 ≤ g(I) < 2n.
std::optional<std::string> outside_small_range(const MonomialIdeal &ideal) {
  const std::size_t n = ideal.ambient(), m = ideal.num_generators();
  if (!ideal.is_proper_nonzero())
    return "ideal is zero or the unit ideal";
  if (ideal.is_principal())
    return "ideal is principal";
  if (n < 2)
    return "needs n >= 2";
  if (m >= 2 * n)
    return "needs g(I) < 2n";
  return std::nullopt;
}

std::string describe_table_difference(const BettiTable &a,
                                      const BettiTable &b) {
  std::map<BettiTable::Key, std::pair<std::size_t, std::size_t>> diff;
  for (const auto &[key, r] : a.entries())
    diff[key].first = r;
  for (const auto &[key, r] : b.entries())
    diff[key].second = r;
  for (const auto &[key, ranks] : diff)
    if (ranks.first != ranks.second)
      return "beta_" + std::to_string(key.first) + "," +
             render_monomial(key.second) + ": " +
             std::to_string(ranks.first) + " vs " +
             std::to_string(ranks.second);
  return {};
}

} // namespace

VerificationReport check_support_bound(const MonomialIdeal &ideal) {
  auto r = start(claim::kSupportBound, ideal);
  if (auto why = outside_small_range(ideal))
    return skip(std::move(r), *why);
  const auto s = statistics(ideal);
  const long long bound = static_cast<long long>(s.g) -
                          2LL * static_cast<long long>(ideal.ambient()) + 3;
  r.witness.t = s.t;
  r.witness.j = s.argmax_t();
  r.witness.bound = bound;
  r.status = verdict(static_cast<long long>(s.max_t()) >= bound);
  return r;
}

VerificationReport check_depth_support_bound(const MonomialIdeal &ideal) {
  auto r = start(claim::kDepthSupportBound, ideal);
  if (auto why = outside_small_range(ideal))
    return skip(std::move(r), *why);
  const auto s = statistics(ideal);
  const DepthCertificate dc = depth(ideal);
  const long long bound = static_cast<long long>(s.g) - 2LL * dc.k + 1;
  r.witness.t = s.t;
  r.witness.depth = dc.depth_I;
  r.witness.bound = bound;
  if (static_cast<long long>(s.max_t()) < bound) {
    r.status = Status::Fail;
    r.detail = "no variable meets the bound";
    return r;
  }
  try {
    const std::size_t j = select_variable(ideal, dc.k);
    r.witness.j = j;
    r.status = verdict(static_cast<long long>(s.t[j]) >= bound);
  } catch (const InvariantViolation &e) {
    r.status = Status::Fail;
    r.detail = e.what();
  }
  return r;
}

VerificationReport check_generator_support_bound(const MonomialIdeal &ideal,
                                                 bool extended) {
  auto r = start(claim::kGeneratorSupportBound, ideal);
  const std::size_t n = ideal.ambient(), m = ideal.num_generators();
  if (!ideal.is_proper_nonzero())
    return skip(std::move(r), "ideal is zero or the unit ideal");
  if (m < 2 || (!extended && m > 2 * n + 1))
    return skip(std::move(r), "needs 2 <= g(I) <= 2n + 1");
  const auto s = statistics(ideal);
  const long long bound =
      static_cast<long long>(m) - 2LL * static_cast<long long>(n) + 3;
  r.witness.t = s.t;
  r.witness.j = s.argmax_t();
  r.witness.bound = bound;
  r.status = verdict(static_cast<long long>(s.max_t()) >= bound);
  return r;
}

VerificationReport check_sdepth_at_least_depth(const MonomialIdeal &ideal,
                                               const SdepthOptions &options) {
  auto r = start(claim::kSdepthAtLeastDepth, ideal);
  if (!ideal.is_proper_nonzero())
    return skip(std::move(r), "ideal is zero or the unit ideal");
  try {
    const DepthCertificate dc = depth(ideal);
    const SdepthResult exact = sdepth_exact(ideal, options);
    DecomposeOptions dopts;
    dopts.sdepth = options;
    const DecomposeReport built = decompose(ideal, dopts);
    const bool certified = verify_decomposition(ideal, built.decomposition) &&
                           verify_decomposition(ideal, exact.witness);
    const bool bookkeeping = built.leaf_pieces == built.decomposition.size();
    const int sd = built.sdepth_of_D;

    r.witness.depth = dc.depth_I;
    r.witness.sdepth = sd;
    r.witness.bound = dc.depth_I;
    r.witness.t = statistics(ideal).t;
    if (!built.splits.empty())
      r.witness.j = built.splits.front().j;

    bool ok = certified && bookkeeping && exact.sdepth >= sd;
    if (built.guarantee_applies)
      ok = ok && sd >= dc.depth_I;
    else
      ok = ok && exact.sdepth >= dc.depth_I;
    r.status = verdict(ok);
    std::ostringstream d;
    d << "sdepth_exact=" << exact.sdepth << " sdepth_D=" << sd
      << " depth=" << dc.depth_I << " pieces=" << built.decomposition.size();
    if (!built.guarantee_applies)
      d << " exploratory";
    if (!certified)
      d << " uncertified";
    if (!bookkeeping)
      d << " piece-count-mismatch";
    r.detail = d.str();
  } catch (const ResourceLimit &e) {
    return skip(std::move(r), std::string("resource limit: ") + e.what());
  }
  return r;
}

VerificationReport check_colon_depth(const MonomialIdeal &ideal,
                                     const Monomial &v) {
  auto r = start(claim::kColonDepth, ideal);
  r.colon_by = v;
  if (!ideal.is_proper_nonzero())
    return skip(std::move(r), "ideal is zero or the unit ideal");
  if (ideal.contains(v))
    return skip(std::move(r), "v lies in I");
  const int before = depth(ideal).depth_I;
  const int after = depth(colon(ideal, v)).depth_I;
  r.witness.depth = before;
  r.witness.bound = before;
  r.detail = "depth(I:v)=" + std::to_string(after);
  r.status = verdict(after >= before);
  return r;
}

VerificationReport check_okazaki_bound(const MonomialIdeal &ideal,
                                       const SdepthOptions &options) {
  auto r = start(claim::kOkazakiBound, ideal);
  if (ideal.is_zero())
    return skip(std::move(r), "zero ideal");
  try {
    const int bound = sdepth_lower_bound_okazaki(ideal);
    const SdepthResult exact = sdepth_exact(ideal, options);
    r.witness.sdepth = exact.sdepth;
    r.witness.bound = bound;
    r.status = verdict(exact.sdepth >= bound &&
                       verify_decomposition(ideal, exact.witness));
  } catch (const ResourceLimit &e) {
    return skip(std::move(r), std::string("resource limit: ") + e.what());
  }
  return r;
}

VerificationReport check_betti_oracle(const MonomialIdeal &ideal) {
  auto r = start(claim::kBettiOracle, ideal);
  if (!ideal.is_proper_nonzero())
    return skip(std::move(r), "ideal is zero or the unit ideal");
  try {
    const BettiTable koszul = betti(ideal);
    const BettiTable taylor = betti_oracle_lcm(ideal);
    r.witness.depth = depth_from_betti(koszul, ideal.ambient()).depth_I;
    r.status = verdict(koszul == taylor);
    if (!(koszul == taylor))
      r.detail = describe_table_difference(koszul, taylor);
  } catch (const ResourceLimit &e) {
    return skip(std::move(r), std::string("resource limit: ") + e.what());
  }
  return r;
}

VerificationReport check_normal_form(const MonomialIdeal &ideal,
                                     const SdepthOptions &options) {
  auto r = start(claim::kNormalForm, ideal);
  if (ideal.is_zero())
    return skip(std::move(r), "zero ideal");
  try {
    const int restricted = sdepth_exact(ideal, options).sdepth;
    const int general = sdepth_general_intervals(ideal, options);
    r.witness.sdepth = restricted;
    r.witness.bound = general;
    r.detail = "general=" + std::to_string(general);
    r.status = verdict(restricted == general);
  } catch (const ResourceLimit &e) {
    return skip(std::move(r), std::string("resource limit: ") + e.what());
  }
  return r;
}

VerificationReport check_sharpness_family(const MonomialIdeal &ideal) {
  auto r = start(claim::kSharpnessFamily, ideal);
  if (!ideal.is_proper_nonzero())
    return skip(std::move(r), "ideal is zero or the unit ideal");
  const std::size_t n = ideal.ambient();
  const auto s = statistics(ideal);
  const long long bound =
      static_cast<long long>(s.g) - 2LL * static_cast<long long>(n) + 3;
  r.witness.t = s.t;
  r.witness.j = s.argmax_t();
  r.witness.bound = bound;
  bool shape = false;
  if (n == 3)
    shape = s.g == 9 && s.max_t() == 5;
  else if (n >= 4)
    shape = s.g == 2 * n + 2 && s.max_t() <= 4;
  r.status = verdict(shape && static_cast<long long>(s.max_t()) < bound);
  return r;
}

// --- families ---------------------------------------------------------------

namespace {

Monomial mono(std::size_t n,
              std::initializer_list<std::pair<std::size_t, Exponent>> factors) {
  std::vector<Exponent> e(n, 0);
  for (auto [i, p] : factors)
    e.at(i - 1) += p;
  return Monomial(std::move(e));
}

MonomialIdeal assert_minimal(std::size_t n, const std::vector<Monomial> &gens) {
  MonomialIdeal ideal(n, gens);
  if (ideal.num_generators() != gens.size())
    throw InvariantViolation("family generators are not minimal");
  return ideal;
}

void assert_shape(const MonomialIdeal &ideal, std::size_t g,
                  std::size_t max_t) {
  const auto s = statistics(ideal);
  if (s.g != g || s.max_t() > max_t)
    throw InvariantViolation("family does not have the expected g(I) and t");
}

} // namespace

std::vector<Monomial> family_even_generators(std::size_t n) {
  if (n < 4 || n % 2 != 0)
    throw ContractViolation("even family needs even n >= 4");
  std::vector<Monomial> gens;
  for (std::size_t i = 1; i <= n; ++i)
    gens.push_back(mono(n, {{i, 4}}));
  for (std::size_t i = 1; i < n; i += 2) {
    gens.push_back(mono(n, {{i, 3}, {i + 1, 1}}));
    gens.push_back(mono(n, {{i, 1}, {i + 1, 3}}));
  }
  gens.push_back(mono(n, {{1, 2}, {2, 2}}));
  gens.push_back(mono(n, {{3, 2}, {4, 2}}));
  return gens;
}

std::vector<Monomial> family_odd_generators(std::size_t n) {
  if (n < 5 || n % 2 == 0)
    throw ContractViolation("odd family needs odd n >= 5");
  std::vector<Monomial> gens;
  for (std::size_t i = 1; i <= n; ++i)
    gens.push_back(mono(n, {{i, 4}}));
  for (std::size_t i = 1; i <= n; ++i)
    gens.push_back(mono(n, {{i, 3}, {i % n + 1, 1}}));
  gens.push_back(mono(n, {{1, 2}, {2, 2}}));
  gens.push_back(mono(n, {{3, 2}, {4, 2}}));
  return gens;
}

std::vector<Monomial> example_n3_generators() {
  return {mono(3, {{1, 3}}),         mono(3, {{2, 3}}),
          mono(3, {{3, 3}}),         mono(3, {{1, 2}, {2, 1}}),
          mono(3, {{1, 1}, {2, 2}}), mono(3, {{1, 2}, {3, 1}}),
          mono(3, {{1, 1}, {3, 2}}), mono(3, {{2, 2}, {3, 1}}),
          mono(3, {{2, 1}, {3, 2}})};
}

MonomialIdeal gen_family_even(std::size_t n) {
  MonomialIdeal ideal = assert_minimal(n, family_even_generators(n));
  assert_shape(ideal, 2 * n + 2, 4);
  return ideal;
}

MonomialIdeal gen_family_odd(std::size_t n) {
  MonomialIdeal ideal = assert_minimal(n, family_odd_generators(n));
  assert_shape(ideal, 2 * n + 2, 4);
  return ideal;
}

MonomialIdeal gen_example_n3() {
  MonomialIdeal ideal = assert_minimal(3, example_n3_generators());
  const auto s = statistics(ideal);
  if (s.g != 9 || s.t != std::vector<std::size_t>{5, 5, 5})
    throw InvariantViolation("example ideal does not have t = (5,5,5)");
  return ideal;
}

MonomialIdeal variables_ideal(std::size_t n, std::size_t m) {
  if (m < 1 || m > n)
    throw ContractViolation("need 1 <= m <= n");
  std::vector<Monomial> gens;
  for (std::size_t j = 0; j < m; ++j)
    gens.push_back(Monomial::variable(n, j));
  return MonomialIdeal(n, gens);
}

// --- instance generation ----------------------------------------------------

std::uint64_t uniform_int(std::mt19937_64 &rng, std::uint64_t lo,
                          std::uint64_t hi) {
  if (hi < lo)
    throw ContractViolation("empty range");
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0})
    return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % range;
}

std::optional<MonomialIdeal> random_ideal(std::mt19937_64 &rng, std::size_t n,
                                          std::size_t m, Exponent max_degree,
                                          std::size_t attempts) {
  if (m == 0 || max_degree == 0)
    return std::nullopt;
  for (std::size_t a = 0; a < attempts; ++a) {
    std::vector<Monomial> gens;
    while (gens.size() < m) {
      std::vector<Exponent> e(n);
      for (auto &x : e)
        x = static_cast<Exponent>(uniform_int(rng, 0, max_degree));
      Monomial u(std::move(e));
      if (!u.is_unit())
        gens.push_back(std::move(u));
    }
    MonomialIdeal ideal(n, gens);
    if (ideal.num_generators() == m)
      return ideal;
  }
  return std::nullopt;
}

std::vector<MonomialIdeal> enumerate_ideals(std::size_t n, std::size_t min_m,
                                            std::size_t max_m,
                                            Exponent max_degree) {
  // Nonzero exponent vectors of the box, lexicographic.
  std::vector<Monomial> box;
  std::vector<Exponent> e(n, 0);
  while (true) {
    std::size_t j = n;
    while (j > 0 && e[j - 1] == max_degree)
      e[--j] = 0;
    if (j == 0)
      break;
    ++e[j - 1];
    box.emplace_back(e);
  }
  std::sort(box.begin(), box.end());

  std::vector<MonomialIdeal> out;
  std::vector<Monomial> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (chosen.size() >= min_m)
      out.emplace_back(n, chosen);
    if (chosen.size() == max_m)
      return;
    for (std::size_t i = from; i < box.size(); ++i) {
      const Monomial &u = box[i];
      bool comparable = std::any_of(
          chosen.begin(), chosen.end(),
          [&](const Monomial &v) { return v.divides(u) || u.divides(v); });
      if (comparable)
        continue;
      chosen.push_back(u);
      extend(i + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  return out;
}

Monomial random_non_member(std::mt19937_64 &rng, const MonomialIdeal &ideal) {
  const std::size_t n = ideal.ambient();
  const Monomial g = statistics(ideal).lcm;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Exponent> e(n);
    for (std::size_t j = 0; j < n; ++j)
      e[j] = static_cast<Exponent>(uniform_int(rng, 0, g[j] + 1));
    Monomial v(std::move(e));
    if (!ideal.contains(v))
      return v;
  }
  return Monomial::unit(n);
}

// --- batches ----------------------------------------------------------------

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::size_t index,
                             std::uint64_t stream) {
  return std::mt19937_64(splitmix(splitmix(seed) ^ (index * 0x2545f4914f6cdd1dULL) ^ stream));
}

// Upper bound on the number of ideals: sets of at most max_m box points.
// Saturates once the count is known to reach the threshold.
bool small_space(const BatchConfig &c) {
  constexpr std::uint64_t kThreshold = 100'000;
  constexpr std::uint64_t kHuge = std::uint64_t{1} << 40;
  std::uint64_t points = 1;
  for (std::size_t j = 0; j < c.n && points < kHuge; ++j)
    points *= static_cast<std::uint64_t>(c.max_degree) + 1;
  points = std::min(points, kHuge) - 1;
  std::uint64_t total = 0, binom = 1;
  for (std::uint64_t m = 1; m <= c.max_m && m <= points; ++m) {
    binom = binom * (points - m + 1) / m;
    if (m >= c.min_m)
      total += binom;
    if (total >= kThreshold || binom >= kThreshold)
      return false;
  }
  return total < kThreshold;
}

MonomialIdeal family_for(std::size_t n) {
  if (n == 3)
    return gen_example_n3();
  return n % 2 == 0 ? gen_family_even(n) : gen_family_odd(n);
}

} // namespace

std::vector<MonomialIdeal> batch_instances(const BatchConfig &config) {
  const auto id = claim::canonical(config.claim);
  if (!id)
    throw ContractViolation("unknown claim '" + config.claim + "'");
  if (*id == claim::kSharpnessFamily)
    return {family_for(config.n)};
  if (config.min_m > config.max_m || config.max_m == 0)
    throw ContractViolation("need 1 <= min_m <= max_m");
  if (config.exhaustive || small_space(config))
    return enumerate_ideals(config.n, std::max<std::size_t>(config.min_m, 1),
                            config.max_m, config.max_degree);

  std::vector<MonomialIdeal> out;
  out.reserve(config.sample_size);
  for (std::size_t i = 0; i < config.sample_size; ++i) {
    auto rng = instance_rng(config.seed, i, 0);
    std::optional<MonomialIdeal> ideal;
    for (int tries = 0; tries < 64 && !ideal; ++tries) {
      const std::size_t m = uniform_int(rng, std::max<std::size_t>(config.min_m, 1),
                                        config.max_m);
      ideal = random_ideal(rng, config.n, m, config.max_degree);
    }
    if (!ideal)
      throw ContractViolation("cannot sample ideals with these parameters");
    out.push_back(std::move(*ideal));
  }
  return out;
}

std::vector<VerificationReport> verify_batch(const BatchConfig &config) {
  const auto instances = batch_instances(config);
  const std::string_view id = *claim::canonical(config.claim);
  std::vector<VerificationReport> reports(instances.size());

  auto run_one = [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    const MonomialIdeal &ideal = instances[i];
    VerificationReport r;
    if (id == claim::kSupportBound)
      r = check_support_bound(ideal);
    else if (id == claim::kDepthSupportBound)
      r = check_depth_support_bound(ideal);
    else if (id == claim::kGeneratorSupportBound)
      r = check_generator_support_bound(ideal);
    else if (id == claim::kSdepthAtLeastDepth)
      r = check_sdepth_at_least_depth(ideal, config.sdepth);
    else if (id == claim::kColonDepth) {
      auto rng = instance_rng(config.seed, i, 1);
      r = check_colon_depth(ideal, random_non_member(rng, ideal));
    } else if (id == claim::kOkazakiBound)
      r = check_okazaki_bound(ideal, config.sdepth);
    else if (id == claim::kSharpnessFamily)
      r = check_sharpness_family(ideal);
    else if (id == claim::kBettiOracle)
      r = check_betti_oracle(ideal);
    else
      r = check_normal_form(ideal, config.sdepth);
    r.seed = config.seed;
    r.index = i;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    reports[i] = std::move(r);
  };

  const std::size_t threads =
      std::clamp<std::size_t>(config.threads, 1, std::max<std::size_t>(instances.size(), 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < instances.size(); ++i)
      run_one(i);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < instances.size(); i = next++)
          run_one(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto &t : pool)
    t.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return reports;
}

// --- rendering --------------------------------------------------------------

std::string render_report_json(const VerificationReport &report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["claim"] = report.claim;
  doc["status"] = std::string(to_string(report.status));
  doc["instance"] = ordered_json::parse(render_ideal_json(report.instance));
  doc["instance_hash"] = instance_hash(report.instance);
  if (report.colon_by)
    doc["v"] = std::vector<Exponent>(report.colon_by->exponents().begin(),
                                     report.colon_by->exponents().end());
  doc["seed"] = report.seed;
  doc["index"] = report.index;
  ordered_json w = ordered_json::object();
  if (report.witness.j)
    w["j"] = *report.witness.j + 1;
  if (!report.witness.t.empty())
    w["t"] = report.witness.t;
  if (report.witness.depth)
    w["depth"] = *report.witness.depth;
  if (report.witness.sdepth)
    w["sdepth"] = *report.witness.sdepth;
  if (report.witness.bound)
    w["bound"] = *report.witness.bound;
  doc["witness"] = std::move(w);
  doc["detail"] = report.detail;
  return doc.dump();
}

std::string render_report_csv(const std::vector<VerificationReport> &reports) {
  std::ostringstream out;
  out << "claim,instance_hash,pass,witness_j,depth,sdepth,ms\n";
  for (const auto &r : reports) {
    out << r.claim << ',' << instance_hash(r.instance) << ','
        << (r.status == Status::Pass  ? "true"
            : r.status == Status::Fail ? "false"
                                       : "skipped")
        << ',';
    if (r.witness.j)
      out << *r.witness.j + 1;
    out << ',';
    if (r.witness.depth)
      out << *r.witness.depth;
    out << ',';
    if (r.witness.sdepth)
      out << *r.witness.sdepth;
    out << ',' << r.elapsed_ms << '\n';
  }
  return out.str();
}

} // namespace stanley
