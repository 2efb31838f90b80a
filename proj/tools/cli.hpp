#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace stanley::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceLimit = 3,
};

struct RunConfig {
  std::string command;
  std::optional<std::string> input_path;
  std::optional<std::string> inline_ideal;
  bool json = false;
  std::size_t cap = 200'000;
  std::uint64_t node_limit = 0;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::optional<std::string> out_path;

  // depth
  bool betti = false;

  // verify
  /// Empty: every applicable check for a single ideal, thm1.5 for batches.
  std::string claim;
  std::optional<std::size_t> n;
  std::size_t min_m = 1;
  std::optional<std::size_t> max_m;
  unsigned max_degree = 3;
  std::size_t samples = 200;
  bool exhaustive = false;
  std::optional<std::string> csv_path;

  // gen
  std::string family = "example-n3";
  std::optional<std::size_t> m;
};

/// Parses argv and runs the selected subcommand. Returns the process exit
/// status; diagnostics go to `err`.
int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace stanley::cli
