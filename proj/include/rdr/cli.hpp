#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "rdr/indices.hpp"

namespace rdr {

enum class Command { kCompute, kEnumerate, kSweep, kTransform, kVerify };
enum class InputFormat { kEdgeList, kGraph6 };
enum class EmitFormat { kJson, kCsv };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // sweep/verify ran but the claim did not hold
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBadGraph = 3;

inline constexpr int kDefaultMaxN = 9;
inline constexpr int kLargeMaxN = 11;

struct RunConfig {
  Command command = Command::kCompute;
  std::optional<std::string> input_path;
  std::optional<std::string> inline_edges;
  InputFormat format = InputFormat::kEdgeList;
  std::optional<int> n;
  std::optional<int> p;
  IndexKind index = IndexKind::kRdr;
  std::optional<std::string> out_path;
  EmitFormat emit = EmitFormat::kJson;
  int jobs = 1;
  bool allow_large_n = false;
};

/// Parses argv and runs one subcommand; returns the process exit code.
/// Normal output goes to `out` (or --out), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace rdr
