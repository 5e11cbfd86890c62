#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hwiener::cli {

enum class OutputFormat { Plain, Json, Csv };

// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimViolated = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 20201015;

struct RunConfig {
  std::string subcommand;  // compute, construct, closed-form, enumerate, verify, lemmas, search
  std::string graph_path;
  std::string weight_spec;
  std::string family;   // construct
  std::string formula;  // closed-form
  std::string out_path;
  int n = 0;
  int r = 0;
  int n_max = 0;
  std::optional<std::string> shard;  // "i/k"
  OutputFormat format = OutputFormat::Plain;
  std::optional<int> cap;
  double tolerance = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  bool all_named = false;
  bool unlabeled = false;
  bool count_only = false;
  double q = 0.5;      // q for the named q-Wiener indices
  int relabelings = 0;  // compute: random relabelings to cross-check
  int threads = 1;      // verify: in-process shard workers
};

// Parses argv into a RunConfig. Returns an exit code when parsing ends the
// run (help, usage error), std::nullopt otherwise.
std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                                      std::ostream& err);

// Executes one subcommand; data goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv);

}  // namespace hwiener::cli
