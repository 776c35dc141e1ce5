#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qshuffle {

enum class OutputFormat { Text, Json };

/// Settings shared by all commands; a --config JSON file preloads them and
/// explicit flags override.
struct RunConfig {
  std::uint32_t q = 2;
  int weight_cap = 4;
  int precision = 30;
  OutputFormat output = OutputFormat::Text;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> samples;
  int threads = 0;
  bool timing = false;
};

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Reads a JSON object with any of the keys q, weight_cap, precision, output,
/// seed, samples, threads, timing on top of `base`; throws std::invalid_argument.
RunConfig load_run_config(const std::string& path, RunConfig base = {});

/// Runs the tool on `args` (without the program name). `in` feeds commands
/// whose operand is omitted or given as "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qshuffle
