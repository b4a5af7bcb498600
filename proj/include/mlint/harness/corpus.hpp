#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mlint/engine/engine.hpp"
#include "mlint/frontend/source_unit.hpp"

namespace mlint::harness {

/// A diagnostic the fixture author expects at (path, line).
struct Expectation {
  std::string path;
  std::uint32_t line = 0;
  std::string rule_id;

  friend auto operator<=>(const Expectation&, const Expectation&) = default;
};

/// Malformed `# expect:` comment.
class HarnessError : public std::runtime_error {
 public:
  HarnessError(const std::string& path, std::uint32_t line, const std::string& message)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + message) {}
};

/// Expectations from `# expect: ID[,ID...]` comments of one parsed file.
std::vector<Expectation> collect_expectations(const SourceUnit& unit);

/// Expectations of every `.py` file under `fixture_dir`, sorted.
std::vector<Expectation> collect_expectations(const std::filesystem::path& fixture_dir);

/// Groups fixture files into independently analyzed projects. Inside a
/// `positive` or `negative` directory, each `.py` file is its own project and
/// each subdirectory is one multi-file project; elsewhere, `.py` files are
/// single-file projects and directories are searched recursively.
std::vector<std::vector<std::filesystem::path>> fixture_projects(const std::filesystem::path& fixture_dir);

struct VerifyReport {
  std::size_t files = 0;
  std::size_t projects = 0;
  std::size_t expected = 0;
  std::vector<Expectation> missing;     // false negatives
  std::vector<Expectation> unexpected;  // false positives
  std::vector<std::string> errors;      // unreadable or unparsable fixtures, bad expectation comments

  bool passed() const { return missing.empty() && unexpected.empty() && errors.empty(); }
  std::string summary() const;
};

VerifyReport verify(const std::filesystem::path& fixture_dir, const Engine& engine, const RunConfig& config);

/// Compares one project's diagnostics against expectations in its files.
void compare(const std::vector<Expectation>& expected, const std::vector<Diagnostic>& actual, VerifyReport& report);

/// Renames import aliases of pandas, numpy, torch and tensorflow throughout
/// `source` (e.g. `pd` -> `pd_alias`), adding an alias to bare imports so
/// every use site changes spelling. Lines and columns of unrelated code are
/// not moved except on lines that mention a renamed alias.
std::string rewrite_import_aliases(std::string_view source);

}  // namespace mlint::harness
