#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

namespace turan {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // violation found or a verification claim failed
  kExitUsage = 2,
  kExitBounded = 3,  // budget ran out; result is an interval
};

// Defaults that a key=value config file may override; flags override both.
struct CliConfig {
  int enumeration_ceiling = 7;
  int extremal_enumeration_max_n = 6;
  double budget_seconds = 900;
  int workers = 1;
};

// Environment variable naming the default config file.
inline constexpr const char* kConfigEnv = "TURAN_CONFIG";

// Throws std::runtime_error on unreadable files or unknown keys.
CliConfig load_config(const std::filesystem::path& path);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace turan
