#include "mlint/engine/diagnostic.hpp"

#include <stdexcept>
#include <tuple>

namespace mlint {

const RuleDescriptor& Diagnostic::descriptor() const {
  const RuleDescriptor* d = find_rule(rule_id);
  if (!d) throw std::out_of_range("unknown rule id " + rule_id);
  return *d;
}

bool operator==(const Diagnostic& a, const Diagnostic& b) {
  return std::tie(a.rule_id, a.path, a.line, a.column, a.message, a.severity) ==
             std::tie(b.rule_id, b.path, b.line, b.column, b.message, b.severity) &&
         a.span == b.span;
}

bool operator<(const Diagnostic& a, const Diagnostic& b) {
  return std::tie(a.path, a.line, a.column, a.rule_id, a.message) <
         std::tie(b.path, b.line, b.column, b.rule_id, b.message);
}

bool operator==(const ToolNote& a, const ToolNote& b) {
  return std::tie(a.kind, a.path, a.line, a.rule_id, a.message) ==
         std::tie(b.kind, b.path, b.line, b.rule_id, b.message);
}

bool operator<(const ToolNote& a, const ToolNote& b) {
  return std::tie(a.path, a.line, a.kind, a.rule_id, a.message) <
         std::tie(b.path, b.line, b.kind, b.rule_id, b.message);
}

std::string_view to_string(ToolNote::Kind kind) {
  return kind == ToolNote::Kind::Suppression ? "suppression" : "rule-error";
}

bool operator<(const ParseFailureRecord& a, const ParseFailureRecord& b) {
  return std::tie(a.path, a.line, a.column, a.message) < std::tie(b.path, b.line, b.column, b.message);
}

}  // namespace mlint
