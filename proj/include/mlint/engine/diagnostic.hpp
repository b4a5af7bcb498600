#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mlint/engine/catalog.hpp"
#include "mlint/frontend/line_index.hpp"

namespace mlint {

struct Diagnostic {
  std::string rule_id;
  std::string path;  // as given on input, generic separators
  Span span;
  std::uint32_t line = 0;
  std::uint32_t column = 0;
  std::string message;
  Severity severity = Severity::Warning;

  const RuleDescriptor& descriptor() const;  // throws std::out_of_range for unknown ids
};

bool operator==(const Diagnostic& a, const Diagnostic& b);
/// Orders by (path, line, column, rule id, message).
bool operator<(const Diagnostic& a, const Diagnostic& b);

/// Messages about the run itself rather than the analyzed code: malformed
/// suppression comments and contained rule failures.
struct ToolNote {
  enum class Kind : std::uint8_t { Suppression, RuleError };
  Kind kind = Kind::Suppression;
  std::string path;
  std::uint32_t line = 0;
  std::string rule_id;  // for RuleError
  std::string message;
};

bool operator==(const ToolNote& a, const ToolNote& b);
bool operator<(const ToolNote& a, const ToolNote& b);
std::string_view to_string(ToolNote::Kind kind);

struct ParseFailureRecord {
  std::string path;
  std::uint32_t line = 0;
  std::uint32_t column = 0;
  std::string message;
};

bool operator<(const ParseFailureRecord& a, const ParseFailureRecord& b);

}  // namespace mlint
