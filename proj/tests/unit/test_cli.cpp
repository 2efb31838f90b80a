#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using stanley::cli::run;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kFixtures = STANLEY_FIXTURE_DIR;

} // namespace

TEST_CASE("analyze the three-variable example") {
  const Outcome o = call({"analyze", kFixtures + "/example_n3.txt", "--json"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["g"] == 9);
  CHECK(j["t"] == Json::array({5, 5, 5}));
  CHECK(j["epsilon"] == 27);
  CHECK(j["lcm"] == Json::array({3, 3, 3}));

  const Outcome text = call({"analyze", kFixtures + "/example_n3.json"});
  CHECK(text.code == 0);
  CHECK(text.out.find("t = (5, 5, 5)") != std::string::npos);
}

TEST_CASE("analyze a single variable") {
  const Outcome o = call({"analyze", "--ideal", "x1", "--n", "1", "--json"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["g"] == 1);
  CHECK(j["principal"] == true);
}

TEST_CASE("normalization is reported") {
  const Outcome o =
      call({"analyze", "--ideal", "x1*x2,x2*x3,x1*x2*x3", "--n", "3", "--json"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["listed"] == 3);
  CHECK(j["g"] == 2);
  CHECK(j["normalized"] == true);
}

TEST_CASE("usage and parse errors exit with 2") {
  const Outcome bad = call({"analyze", kFixtures + "/malformed.txt"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 3, column 2") != std::string::npos);
  CHECK(call({"analyze", "--ideal", "x0^2", "--n", "2"}).code == 2);
  CHECK(call({"analyze"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"analyze", "--ideal", "x1", "--n", "1", "--cap", "10"}).code == 2);
  CHECK(call({"analyze", "--ideal", "x1", "--n", "1", kFixtures + "/path_n3.txt"}).code == 2);
  CHECK(call({"verify", "--claim", "nope", "--n", "3"}).code == 2);
  CHECK(call({"verify", "--claim", "thm1.5"}).code == 2);
  CHECK(call({"depth", "--ideal", "", "--n", "2"}).code == 2);
  CHECK(call({"analyze", "/nonexistent/ideal.txt"}).code == 2);
  CHECK(call({"gen", "--family", "even", "--n", "5"}).code == 2);
  CHECK(call({"gen", "--family", "nope"}).code == 2);
}

TEST_CASE("depth") {
  const Outcome o = call({"depth", kFixtures + "/path_n3.txt", "--json", "--betti"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["depth_I"] == 2);
  CHECK(j["depth_S_mod_I"] == 1);
  CHECK(j["pd_I"] == 1);
  CHECK(j["betti"].size() == 3);
}

TEST_CASE("sdepth") {
  const Outcome o = call({"sdepth", "--ideal", "x1,x2,x3", "--n", "3", "--json"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["sdepth"] == 2);
  for (const auto &p : j["pieces"])
    CHECK(p["Z"].size() >= 2);
  const Outcome text = call({"sdepth", "--ideal", "x1,x2,x3", "--n", "3"});
  CHECK(text.out.rfind("sdepth(I) = 2", 0) == 0);
}

TEST_CASE("decompose a principal ideal") {
  const Outcome o = call({"decompose", "--ideal", "x1^2*x2", "--n", "3", "--json"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["pieces"].size() == 1);
  CHECK(j["pieces"][0]["Z"] == Json::array({1, 2, 3}));
  CHECK(j["sdepth_of_D"] == 3);
  CHECK(j["depth"] == 3);
  CHECK(j["certified"] == true);
}

TEST_CASE("resource limits exit with 3") {
  const Outcome o = call({"sdepth", "--ideal", "x1^200,x2^200", "--n", "2", "--cap", "1000"});
  CHECK(o.code == 3);
  const Outcome nodes = call({"sdepth", "--ideal", "x1,x2,x3,x4", "--n", "4", "--node-limit", "1"});
  CHECK(nodes.code == 3);
}

TEST_CASE("verify exit codes") {
  CHECK(call({"verify", "--claim", "thm1.5", "--n", "3", "--samples", "200", "--seed", "7"}).code == 0);
  CHECK(call({"verify", "--ideal", "x1,x2", "--n", "2"}).code == 0);
  // The sharpness pattern does not hold for an arbitrary ideal.
  CHECK(call({"verify", "--ideal", "x1,x2", "--n", "2", "--claim", "example1.7"}).code == 1);
  CHECK(call({"verify", "--claim", "example1.7", "--n", "7"}).code == 0);
}

TEST_CASE("verify output is byte-identical under a seed") {
  const std::vector<std::string> args{"verify", "--claim", "thm1.1", "--n", "3",
                                      "--samples", "30", "--seed", "5", "--json"};
  const Outcome a = call(args);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const Outcome b = call(threaded);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line))
    if (!line.empty() && line.front() == '{') {
      CHECK(Json::parse(line)["seed"] == 5);
      ++count;
    }
  CHECK(count == 30);
}

TEST_CASE("csv and out files") {
  const auto dir = std::filesystem::temp_directory_path() / "stanley_cli_test";
  std::filesystem::create_directories(dir);
  const std::string csv = (dir / "r.csv").string();
  const std::string out = (dir / "o.json").string();
  CHECK(call({"verify", "--claim", "thm1.4", "--n", "3", "--samples", "10", "--csv", csv}).code == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "claim,instance_hash,pass,witness_j,depth,sdepth,ms");
  std::size_t rows = 0;
  for (std::string row; std::getline(in, row);)
    rows += !row.empty();
  CHECK(rows == 10);

  CHECK(call({"gen", "--family", "example-n3", "--json", "--out", out}).code == 0);
  const Outcome round = call({"analyze", out, "--json"});
  CHECK(Json::parse(round.out)["g"] == 9);
  std::filesystem::remove_all(dir);
}

TEST_CASE("gen families round-trip through analyze") {
  for (const char *n : {"4", "6", "8"}) {
    const Outcome g = call({"gen", "--family", "even", "--n", n, "--json"});
    REQUIRE(g.code == 0);
    const Json j = Json::parse(g.out);
    CHECK(j["generators"].size() == 2 * std::stoul(n) + 2);
  }
  const Outcome odd = call({"gen", "--family", "odd", "--n", "5"});
  CHECK(odd.code == 0);
  const Outcome r = call({"gen", "--family", "random", "--n", "3", "--m", "4", "--seed", "2", "--json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["generators"].size() == 4);
}
