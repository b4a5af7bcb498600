#pragma once

#include <string>
#include <vector>

#include "mlint/engine/catalog.hpp"
#include "mlint/engine/diagnostic.hpp"
#include "mlint/engine/project_facts.hpp"
#include "mlint/engine/run_config.hpp"
#include "mlint/semantic/semantic_model.hpp"

namespace mlint {

/// What a per-file check sees, and where it reports.
class FileContext {
 public:
  FileContext(const SemanticModel& model, const RuleDescriptor& rule, const RuleParams& params, Mode mode,
              std::vector<Diagnostic>& sink)
      : model_(model), rule_(rule), params_(params), mode_(mode), sink_(sink) {}

  const SemanticModel& model() const { return model_; }
  const SourceUnit& unit() const { return model_.unit(); }
  const RuleParams& params() const { return params_; }
  Mode mode() const { return mode_; }

  void report(const Node* anchor, std::string message) { report(anchor->span, std::move(message), rule_.severity); }
  void report(const Node* anchor, std::string message, Severity severity) {
    report(anchor->span, std::move(message), severity);
  }
  void report(Span span, std::string message, Severity severity);

 private:
  const SemanticModel& model_;
  const RuleDescriptor& rule_;
  const RuleParams& params_;
  Mode mode_;
  std::vector<Diagnostic>& sink_;
};

/// What a project-level check sees after all files contributed facts.
class ProjectContext {
 public:
  ProjectContext(const ProjectFacts& facts, const RuleDescriptor& rule, const RuleParams& params, Mode mode,
                 std::vector<Diagnostic>& sink)
      : facts_(facts), rule_(rule), params_(params), mode_(mode), sink_(sink) {}

  const ProjectFacts& facts() const { return facts_; }
  const RuleParams& params() const { return params_; }
  Mode mode() const { return mode_; }
  void report(const SiteRef& site, std::string message);

 private:
  const ProjectFacts& facts_;
  const RuleDescriptor& rule_;
  const RuleParams& params_;
  Mode mode_;
  std::vector<Diagnostic>& sink_;
};

class Rule {
 public:
  virtual ~Rule() = default;
  virtual const RuleDescriptor& descriptor() const = 0;
  virtual void check_file(FileContext& /*ctx*/) const {}
  virtual void check_project(ProjectContext& /*ctx*/) const {}
};

}  // namespace mlint
