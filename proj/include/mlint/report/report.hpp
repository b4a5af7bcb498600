#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlint/engine/diagnostic.hpp"
#include "mlint/engine/engine.hpp"

namespace mlint::report {

inline constexpr std::string_view kToolName = "mlint";
inline constexpr std::string_view kToolVersion = "1.0.0";

struct Report {
  std::optional<std::string> timestamp;  // ISO 8601 UTC, only when requested
  std::vector<std::string> files;
  std::vector<Diagnostic> diagnostics;  // sorted
  std::vector<ParseFailureRecord> parse_failures;
  std::vector<ToolNote> notes;
  std::map<std::string, std::size_t> by_rule;
  std::map<std::string, std::size_t> by_effect;  // a diagnostic counts once per effect of its rule
};

Report build_report(const RunResult& result, std::optional<std::string> timestamp = std::nullopt);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

enum class Format { Text, Json, Sarif };
std::optional<Format> parse_format(std::string_view name);

std::string render_text(const Report& report);
std::string render_json(const Report& report);
std::string render_sarif(const Report& report);
std::string render(const Report& report, Format format);

/// Catalog entry for one rule. Throws std::invalid_argument for unknown ids.
std::string explain(std::string_view rule_id);

/// One row per registered rule.
std::string list_rules();

}  // namespace mlint::report
