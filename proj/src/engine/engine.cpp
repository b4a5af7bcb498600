#include "mlint/engine/engine.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include "mlint/engine/suppression.hpp"
#include "mlint/semantic/alias_table.hpp"

namespace mlint {

void FileContext::report(Span span, std::string message, Severity severity) {
  Location loc = unit().location(span);
  sink_.push_back(Diagnostic{rule_.id, unit().path().generic_string(), span, loc.line, loc.column,
                             std::move(message), severity});
}

void ProjectContext::report(const SiteRef& site, std::string message) {
  sink_.push_back(Diagnostic{rule_.id, site.path, site.span, site.location.line, site.location.column,
                             std::move(message), rule_.severity});
}

bool RunResult::has_rule_errors() const {
  return std::any_of(notes.begin(), notes.end(),
                     [](const ToolNote& n) { return n.kind == ToolNote::Kind::RuleError; });
}

Engine::Engine(std::vector<std::unique_ptr<Rule>> rules, const ApiSignatureTable& signatures)
    : rules_(std::move(rules)), signatures_(signatures) {}

namespace {

bool gated_off(const RuleDescriptor& d, const RunConfig& config) {
  return d.mode_gate == ModeGate::DevelopmentOnly && config.mode == Mode::Production;
}

std::string describe(const std::exception_ptr& error) {
  try {
    std::rethrow_exception(error);
  } catch (const std::exception& e) {
    return e.what();
  } catch (...) {
    return "unknown exception";
  }
}

}  // namespace

RunResult Engine::run(const std::vector<SourceUnit>& units, const RunConfig& config) const {
  RunResult result;

  std::vector<const SourceUnit*> order;
  order.reserve(units.size());
  for (const SourceUnit& u : units) order.push_back(&u);
  std::stable_sort(order.begin(), order.end(), [](const SourceUnit* a, const SourceUnit* b) {
    return a->path().generic_string() < b->path().generic_string();
  });

  std::vector<const Rule*> active;
  for (const auto& rule : rules_) {
    const RuleDescriptor& d = rule->descriptor();
    if (config.enabled(d.id) && !gated_off(d, config)) active.push_back(rule.get());
  }

  std::vector<Diagnostic> raw;
  std::map<std::string, const SourceUnit*> by_path;

  // Phase 1: per-file rules and fact extraction.
  for (const SourceUnit* unit : order) {
    const std::string path = unit->path().generic_string();
    result.files.push_back(path);
    if (const auto& failure = unit->failure()) {
      result.parse_failures.push_back({path, failure->line, failure->column, failure->message});
      continue;
    }
    by_path.emplace(path, unit);

    std::optional<SemanticModel> model;
    try {
      model.emplace(infer_provenance(*unit, resolve_aliases(*unit), signatures_));
      result.facts.merge(extract_facts(*model));
    } catch (...) {
      result.notes.push_back({ToolNote::Kind::RuleError, path, 0, "", "semantic analysis failed: " +
                                                                          describe(std::current_exception())});
      continue;
    }

    for (const Rule* rule : active) {
      const RuleDescriptor& d = rule->descriptor();
      std::vector<Diagnostic> found;
      try {
        FileContext ctx(*model, d, config.params_for(d.id), config.mode, found);
        rule->check_file(ctx);
      } catch (...) {
        result.notes.push_back(
            {ToolNote::Kind::RuleError, path, 0, d.id, "rule failed: " + describe(std::current_exception())});
        continue;
      }
      raw.insert(raw.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
  }

  // Phase 2: project-level rules over merged facts.
  for (const Rule* rule : active) {
    const RuleDescriptor& d = rule->descriptor();
    if (d.scope != RuleScope::ProjectLevel) continue;
    std::vector<Diagnostic> found;
    try {
      ProjectContext ctx(result.facts, d, config.params_for(d.id), config.mode, found);
      rule->check_project(ctx);
    } catch (...) {
      result.notes.push_back(
          {ToolNote::Kind::RuleError, "", 0, d.id, "rule failed: " + describe(std::current_exception())});
      continue;
    }
    raw.insert(raw.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
  }

  // Suppressions, per file.
  std::map<std::string, std::vector<Diagnostic>> grouped;
  for (Diagnostic& d : raw) grouped[d.path].push_back(std::move(d));
  for (const auto& [path, unit] : by_path) {
    auto it = grouped.find(path);
    std::vector<Diagnostic> kept =
        apply_suppressions(*unit, it == grouped.end() ? std::vector<Diagnostic>{} : std::move(it->second),
                           &result.notes);
    result.diagnostics.insert(result.diagnostics.end(), std::make_move_iterator(kept.begin()),
                              std::make_move_iterator(kept.end()));
  }

  std::sort(result.diagnostics.begin(), result.diagnostics.end());
  result.diagnostics.erase(std::unique(result.diagnostics.begin(), result.diagnostics.end()),
                           result.diagnostics.end());
  std::sort(result.notes.begin(), result.notes.end());
  std::sort(result.parse_failures.begin(), result.parse_failures.end());
  return result;
}

}  // namespace mlint
