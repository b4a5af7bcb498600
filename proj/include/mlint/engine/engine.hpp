#pragma once

#include <memory>
#include <vector>

#include "mlint/engine/diagnostic.hpp"
#include "mlint/engine/project_facts.hpp"
#include "mlint/engine/rule.hpp"
#include "mlint/engine/run_config.hpp"
#include "mlint/frontend/source_unit.hpp"
#include "mlint/semantic/signatures.hpp"

namespace mlint {

struct RunResult {
  std::vector<std::string> files;  // sorted
  std::vector<Diagnostic> diagnostics;  // sorted, suppressions applied
  std::vector<ParseFailureRecord> parse_failures;
  std::vector<ToolNote> notes;
  ProjectFacts facts;

  bool has_rule_errors() const;
};

/// Runs rules over parsed units in two phases: per-file checks plus fact
/// extraction, then project-level checks over the merged facts.
class Engine {
 public:
  Engine(std::vector<std::unique_ptr<Rule>> rules, const ApiSignatureTable& signatures);

  RunResult run(const std::vector<SourceUnit>& units, const RunConfig& config) const;

  const std::vector<std::unique_ptr<Rule>>& rules() const { return rules_; }

 private:
  std::vector<std::unique_ptr<Rule>> rules_;
  const ApiSignatureTable& signatures_;
};

}  // namespace mlint
