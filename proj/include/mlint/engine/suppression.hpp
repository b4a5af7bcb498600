#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mlint/engine/diagnostic.hpp"
#include "mlint/frontend/source_unit.hpp"

namespace mlint {

/// Rule ids disabled on one line by `# mlint: disable=ID[,ID...]` or
/// `# mlint: disable=all`.
struct LineSuppression {
  bool all = false;
  std::set<std::string> ids;
};

struct SuppressionTable {
  std::map<std::uint32_t, LineSuppression> lines;
  std::vector<ToolNote> notes;  // malformed comments and unknown ids

  bool suppresses(std::uint32_t line, const std::string& rule_id) const;
};

SuppressionTable scan_suppressions(const SourceUnit& unit);

/// Drops diagnostics on suppressed lines. Notes about bad suppression
/// comments are appended to `notes` when given.
std::vector<Diagnostic> apply_suppressions(const SourceUnit& unit, std::vector<Diagnostic> diagnostics,
                                           std::vector<ToolNote>* notes = nullptr);

}  // namespace mlint
