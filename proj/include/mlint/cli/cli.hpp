#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mlint/engine/run_config.hpp"

namespace mlint::cli {

/// Bad flags, paths or configuration: exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Settings read from an `mlint.toml` file.
struct FileConfig {
  RunConfig run = RunConfig::defaults();
  std::vector<std::string> exclude;  // file or directory names skipped by discovery
};

/// Parses config text; `origin` names the source in error messages.
/// Throws UsageError that includes the offending line.
FileConfig parse_config(std::string_view text, const std::string& origin);

/// Explicit path, else $MLINT_CONFIG, else ./mlint.toml when present.
std::optional<std::filesystem::path> locate_config(const std::optional<std::filesystem::path>& explicit_path);

FileConfig load_config(const std::optional<std::filesystem::path>& path);

/// Recursively collects `.py` files, sorted and deduplicated. Hidden entries
/// and names in `exclude` are skipped inside directories; explicit file
/// arguments are always kept. Throws UsageError for missing paths.
std::vector<std::filesystem::path> discover(const std::vector<std::filesystem::path>& paths,
                                            const std::vector<std::string>& exclude = {});

/// Full command line (without argv[0]). Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlint::cli
