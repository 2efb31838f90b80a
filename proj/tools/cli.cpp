#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stanley/decomposer.hpp"
#include "stanley/depth.hpp"
#include "stanley/error.hpp"
#include "stanley/ideal.hpp"
#include "stanley/ideal_io.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/verifier.hpp"

namespace stanley::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public Error {
public:
  using Error::Error;
};

struct LoadedIdeal {
  MonomialIdeal ideal;
  std::size_t listed;
};

LoadedIdeal load_ideal(const RunConfig &cfg) {
  if (cfg.input_path && cfg.inline_ideal)
    throw UsageError("give either an input file or --ideal, not both");
  std::size_t listed = 0;
  if (cfg.inline_ideal) {
    if (!cfg.n)
      throw UsageError("--ideal needs --n");
    auto ideal = parse_ideal_inline(*cfg.inline_ideal, *cfg.n, &listed);
    return {std::move(ideal), listed};
  }
  if (!cfg.input_path)
    throw UsageError("no input: pass a file path or --ideal");
  std::ostringstream buf;
  if (*cfg.input_path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(*cfg.input_path);
    if (!in)
      throw UsageError("cannot open " + *cfg.input_path);
    buf << in.rdbuf();
  }
  auto ideal = parse_ideal(buf.str(), &listed);
  return {std::move(ideal), listed};
}

std::vector<std::size_t> one_based(const VariableSet &z) {
  std::vector<std::size_t> out;
  for (std::size_t j : z.indices())
    out.push_back(j + 1);
  return out;
}

std::vector<Exponent> exps(const Monomial &u) {
  return {u.exponents().begin(), u.exponents().end()};
}

ordered_json decomposition_json(const StanleyDecomposition &d) {
  ordered_json doc;
  doc["sdepth"] = d.sdepth();
  doc["pieces"] = ordered_json::array();
  for (const Piece &p : d.pieces())
    doc["pieces"].push_back({{"gen", exps(p.generator)}, {"Z", one_based(p.z)}});
  return doc;
}

std::string decomposition_text(const StanleyDecomposition &d) {
  std::ostringstream out;
  for (const Piece &p : d.pieces()) {
    out << render_monomial(p.generator) << " * K[";
    bool first = true;
    for (std::size_t j : p.z.indices()) {
      out << (first ? "" : ", ") << 'x' << j + 1;
      first = false;
    }
    out << "]\n";
  }
  return out.str();
}

template <class T> std::string tuple(const std::vector<T> &v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? ", " : "") << v[i];
  out << ')';
  return out.str();
}

SdepthOptions sdepth_options(const RunConfig &cfg) {
  SdepthOptions o;
  o.cap = cfg.cap;
  o.node_limit = cfg.node_limit;
  return o;
}

int cmd_analyze(const RunConfig &cfg, std::ostream &out) {
  const auto [ideal, listed] = load_ideal(cfg);
  if (ideal.is_zero())
    throw UsageError("empty generator list");
  const auto s = statistics(ideal);
  std::vector<Exponent> lcm = exps(s.lcm);
  if (cfg.json) {
    ordered_json doc;
    doc["n"] = ideal.ambient();
    doc["g"] = s.g;
    doc["epsilon"] = s.epsilon;
    doc["s"] = s.support_sum;
    doc["t"] = s.t;
    doc["lcm"] = lcm;
    doc["principal"] = ideal.is_principal();
    doc["unit"] = ideal.is_unit();
    doc["listed"] = listed;
    doc["normalized"] = listed != s.g;
    doc["generators"] = ordered_json::parse(render_ideal_json(ideal))["generators"];
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "n = " << ideal.ambient() << '\n'
      << "g = " << s.g << '\n'
      << "epsilon = " << s.epsilon << '\n'
      << "s = " << s.support_sum << '\n'
      << "t = " << tuple(s.t) << '\n'
      << "lcm = " << tuple(lcm) << '\n'
      << "principal = " << (ideal.is_principal() ? "true" : "false") << '\n';
  if (listed != s.g)
    out << "normalized: dropped " << listed - s.g
        << " non-minimal monomial(s)\n";
  out << "generators:\n";
  for (const Monomial &u : ideal.generators())
    out << "  " << render_monomial(u) << '\n';
  return kOk;
}

int cmd_depth(const RunConfig &cfg, std::ostream &out) {
  const MonomialIdeal ideal = load_ideal(cfg).ideal;
  const BettiTable table = betti(ideal);
  const DepthCertificate dc = depth_from_betti(table, ideal.ambient());
  if (cfg.json) {
    ordered_json doc;
    doc["depth_I"] = dc.depth_I;
    doc["depth_S_mod_I"] = dc.depth_S_mod_I;
    doc["pd_I"] = dc.pd_I;
    if (cfg.betti) {
      doc["betti"] = ordered_json::array();
      for (const auto &[key, rank] : table.entries())
        doc["betti"].push_back(
            {{"i", key.first}, {"a", exps(key.second)}, {"rank", rank}});
    }
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "depth(I) = " << dc.depth_I << '\n'
      << "depth(S/I) = " << dc.depth_S_mod_I << '\n'
      << "pd(I) = " << dc.pd_I << '\n';
  if (cfg.betti)
    for (const auto &[key, rank] : table.entries())
      out << "beta_" << key.first << ',' << render_monomial(key.second)
          << " = " << rank << '\n';
  return kOk;
}

int cmd_sdepth(const RunConfig &cfg, std::ostream &out) {
  const MonomialIdeal ideal = load_ideal(cfg).ideal;
  const SdepthResult r = sdepth_exact(ideal, sdepth_options(cfg));
  if (cfg.json) {
    ordered_json doc = decomposition_json(r.witness);
    doc["sdepth"] = r.sdepth;
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "sdepth(I) = " << r.sdepth << '\n' << decomposition_text(r.witness);
  return kOk;
}

int cmd_decompose(const RunConfig &cfg, std::ostream &out) {
  const MonomialIdeal ideal = load_ideal(cfg).ideal;
  DecomposeOptions opts;
  opts.sdepth = sdepth_options(cfg);
  const DecomposeReport r = decompose(ideal, opts);
  const bool certified = verify_decomposition(ideal, r.decomposition);
  if (cfg.json) {
    ordered_json doc = decomposition_json(r.decomposition);
    doc["depth"] = r.depth_I;
    doc["sdepth_of_D"] = r.sdepth_of_D;
    doc["guarantee_applies"] = r.guarantee_applies;
    doc["certified"] = certified;
    doc["splits"] = ordered_json::array();
    for (const SplitRecord &s : r.splits)
      doc["splits"].push_back({{"level", s.level},
                               {"n", s.ambient},
                               {"m", s.generators},
                               {"j", s.j + 1},
                               {"r", s.r},
                               {"depth", s.depth_I},
                               {"restricted_bound", s.restricted_bound},
                               {"restricted_sdepth", s.restricted_sdepth},
                               {"chain_slack", s.chain_slack}});
    out << doc.dump() << '\n';
  } else {
    out << "depth(I) = " << r.depth_I << '\n'
        << "sdepth(D) = " << r.sdepth_of_D << '\n'
        << "guarantee applies = " << (r.guarantee_applies ? "true" : "false")
        << '\n'
        << "certified = " << (certified ? "true" : "false") << '\n'
        << decomposition_text(r.decomposition);
  }
  if (!certified || (r.guarantee_applies && r.sdepth_of_D < r.depth_I))
    return kVerificationFailed;
  return kOk;
}

int emit_reports(const RunConfig &cfg,
                 const std::vector<VerificationReport> &reports,
                 std::ostream &out) {
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto &r : reports) {
    if (cfg.json)
      out << render_report_json(r) << '\n';
    switch (r.status) {
    case Status::Pass:
      ++pass;
      break;
    case Status::Fail:
      ++fail;
      if (!cfg.json)
        out << "FAIL " << r.claim << " #" << r.index << ' '
            << render_report_json(r) << '\n';
      break;
    case Status::Skipped:
      ++skipped;
      break;
    }
  }
  if (!cfg.json)
    out << "pass " << pass << ", fail " << fail << ", skipped " << skipped
        << '\n';
  if (cfg.csv_path) {
    std::ofstream csv(*cfg.csv_path);
    if (!csv)
      throw UsageError("cannot write " + *cfg.csv_path);
    csv << render_report_csv(reports);
  }
  return fail == 0 ? kOk : kVerificationFailed;
}

VerificationReport check_one(std::string_view id, const MonomialIdeal &ideal,
                             std::mt19937_64 &rng, const SdepthOptions &so) {
  if (id == claim::kSupportBound)
    return check_support_bound(ideal);
  if (id == claim::kDepthSupportBound)
    return check_depth_support_bound(ideal);
  if (id == claim::kGeneratorSupportBound)
    return check_generator_support_bound(ideal);
  if (id == claim::kSdepthAtLeastDepth)
    return check_sdepth_at_least_depth(ideal, so);
  if (id == claim::kOkazakiBound)
    return check_okazaki_bound(ideal, so);
  if (id == claim::kBettiOracle)
    return check_betti_oracle(ideal);
  if (id == claim::kNormalForm)
    return check_normal_form(ideal, so);
  if (id == claim::kSharpnessFamily)
    return check_sharpness_family(ideal);
  const Monomial v = ideal.is_proper_nonzero()
                         ? random_non_member(rng, ideal)
                         : Monomial::unit(ideal.ambient());
  return check_colon_depth(ideal, v);
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
  const std::string name = cfg.claim.empty() ? "thm1.5" : cfg.claim;
  const auto id = claim::canonical(name);
  if (!id)
    throw UsageError("unknown claim '" + name + "'");
  const SdepthOptions so = sdepth_options(cfg);

  if (cfg.input_path || cfg.inline_ideal) {
    const MonomialIdeal ideal = load_ideal(cfg).ideal;
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::string_view> ids{*id};
    if (cfg.claim.empty())
      ids = {claim::kSupportBound,          claim::kDepthSupportBound,
             claim::kGeneratorSupportBound, claim::kSdepthAtLeastDepth,
             claim::kOkazakiBound,          claim::kBettiOracle,
             claim::kColonDepth};
    std::vector<VerificationReport> reports;
    for (std::string_view c : ids)
      reports.push_back(check_one(c, ideal, rng, so));
    for (std::size_t i = 0; i < reports.size(); ++i) {
      reports[i].seed = cfg.seed;
      reports[i].index = i;
    }
    return emit_reports(cfg, reports, out);
  }

  if (!cfg.n)
    throw UsageError("batch verification needs --n");
  BatchConfig batch;
  batch.claim = std::string(*id);
  batch.n = *cfg.n;
  batch.min_m = cfg.min_m;
  batch.max_m = cfg.max_m.value_or(2 * *cfg.n - 1);
  batch.max_degree = cfg.max_degree;
  batch.sample_size = cfg.samples;
  batch.seed = cfg.seed;
  batch.exhaustive = cfg.exhaustive;
  batch.threads = cfg.threads;
  batch.sdepth = so;
  return emit_reports(cfg, verify_batch(batch), out);
}

int cmd_gen(const RunConfig &cfg, std::ostream &out) {
  MonomialIdeal ideal = MonomialIdeal::zero(1);
  const std::string &f = cfg.family;
  auto need_n = [&] {
    if (!cfg.n)
      throw UsageError("--family " + f + " needs --n");
    return *cfg.n;
  };
  if (f == "example-n3") {
    ideal = gen_example_n3();
  } else if (f == "even") {
    ideal = gen_family_even(need_n());
  } else if (f == "odd") {
    ideal = gen_family_odd(need_n());
  } else if (f == "variables") {
    const std::size_t n = need_n();
    ideal = variables_ideal(n, cfg.m.value_or(n));
  } else if (f == "random") {
    const std::size_t n = need_n();
    std::mt19937_64 rng(cfg.seed);
    auto r = random_ideal(rng, n, cfg.m.value_or(n), cfg.max_degree);
    if (!r)
      throw UsageError("no ideal with that many minimal generators found");
    ideal = std::move(*r);
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  out << (cfg.json ? render_ideal_json(ideal) + "\n" : render_ideal_text(ideal));
  return kOk;
}

int dispatch(const RunConfig &cfg, std::ostream &out) {
  if (cfg.cap < 1000)
    throw UsageError("--cap must be at least 1000");
  if (cfg.command == "analyze")
    return cmd_analyze(cfg, out);
  if (cfg.command == "depth")
    return cmd_depth(cfg, out);
  if (cfg.command == "sdepth")
    return cmd_sdepth(cfg, out);
  if (cfg.command == "decompose")
    return cmd_decompose(cfg, out);
  if (cfg.command == "verify")
    return cmd_verify(cfg, out);
  return cmd_gen(cfg, out);
}

void add_common(CLI::App *sub, RunConfig &cfg, bool takes_input) {
  if (takes_input) {
    sub->add_option("input", cfg.input_path,
                    "Ideal file (text or JSON); '-' reads stdin");
    sub->add_option("--ideal", cfg.inline_ideal,
                    "Inline ideal, e.g. \"x1*x2,x2*x3\" (needs --n)");
  }
  sub->add_option("--n", cfg.n, "Number of variables");
  sub->add_flag("--json", cfg.json, "Emit JSON");
  sub->add_option("--cap", cfg.cap, "Largest characteristic poset box");
  sub->add_option("--node-limit", cfg.node_limit,
                  "Search nodes per sdepth decision (0 = unlimited)");
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--threads", cfg.threads, "Worker threads for batches");
  sub->add_option("--out", cfg.out_path, "Write output to this file");
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
  RunConfig cfg;
  CLI::App app{"Depth, Stanley depth and Stanley decompositions of monomial "
               "ideals"};
  app.require_subcommand(1);

  auto *analyze = app.add_subcommand("analyze", "Ideal statistics");
  add_common(analyze, cfg, true);
  auto *depth_cmd = app.add_subcommand("depth", "depth(I) via Betti numbers");
  add_common(depth_cmd, cfg, true);
  depth_cmd->add_flag("--betti", cfg.betti, "Include the Betti table");
  auto *sdepth_cmd = app.add_subcommand("sdepth", "Exact Stanley depth");
  add_common(sdepth_cmd, cfg, true);
  auto *decompose_cmd =
      app.add_subcommand("decompose", "Recursive Stanley decomposition");
  add_common(decompose_cmd, cfg, true);
  auto *verify = app.add_subcommand("verify", "Check claims on an ideal or a batch");
  add_common(verify, cfg, true);
  verify->add_option("--claim", cfg.claim, "Claim id or alias (e.g. thm1.5); batches default to thm1.5");
  verify->add_option("--min-m", cfg.min_m, "Smallest generator count");
  verify->add_option("--max-m", cfg.max_m, "Largest generator count (default 2n-1)");
  verify->add_option("--max-degree", cfg.max_degree, "Largest exponent");
  verify->add_option("--samples", cfg.samples, "Random instances");
  verify->add_flag("--exhaustive", cfg.exhaustive, "Enumerate all instances");
  verify->add_option("--csv", cfg.csv_path, "Write a CSV summary here");
  auto *gen = app.add_subcommand("gen", "Generate example ideals");
  add_common(gen, cfg, false);
  gen->add_option("--family", cfg.family,
                  "example-n3 | even | odd | variables | random");
  gen->add_option("--m", cfg.m, "Generator count (variables, random)");
  gen->add_option("--max-degree", cfg.max_degree, "Largest exponent (random)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.out_path) {
      std::ofstream file(*cfg.out_path);
      if (!file)
        throw UsageError("cannot write " + *cfg.out_path);
      return dispatch(cfg, file);
    }
    return dispatch(cfg, out);
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ContractViolation &e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsageError;
  } catch (const UndefinedInput &e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsageError;
  } catch (const DimensionMismatch &e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceLimit &e) {
    err << "resource limit: " << e.what()
        << " (best lower bound " << e.best_lower_bound() << ")\n";
    return kResourceLimit;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  std::vector<const char *> argv;
  argv.push_back("stanley");
  for (const auto &a : args)
    argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace stanley::cli
