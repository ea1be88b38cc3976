#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

// Command-line front end. Kept in a library so tests can drive it in process.
namespace tgglines::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kPartialBatch = 3,
};

/// args excludes the program name. Normal output goes to out, diagnostics to
/// err. Never throws.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// File name without directory and extension, with a trailing ".lines",
/// ".gt" or ".report" removed: "a/b.lines.json" -> "b".
std::string base_stem(const std::filesystem::path& p);

}  // namespace tgglines::cli
