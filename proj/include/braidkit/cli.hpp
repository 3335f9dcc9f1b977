#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace braidkit::cli {

enum class Command { Verify, Build, Primitives, BraidRep, Transport, JCheck, AdjunctionCheck };

std::string command_name(Command c);

inline constexpr std::uint64_t kDefaultSeed = 0;

struct RunConfig {
  Command command = Command::Verify;
  std::optional<std::string> field;  // "q" or "fp:<p>"
  std::optional<std::size_t> degree;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> input;
  std::optional<std::string> braiding;
  std::optional<std::string> bialgebra;
  std::optional<std::string> g;
  std::optional<std::string> out;
  std::optional<std::size_t> m, n, dim;
  std::string base = "flip";
  std::optional<std::string> grading;  // comma-separated parities
};

/// Exit status of a run.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitSchemaError = 2;

/// Executes one command. The JSON report goes to config.out when set and to
/// `out` otherwise; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it. Usage errors exit with 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braidkit::cli
