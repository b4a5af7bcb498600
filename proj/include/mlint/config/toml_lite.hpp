#pragma once

// Reader for the TOML subset used by mlint.toml and the API signature table:
// `[table]` / `[dotted.table]` headers, bare or quoted keys, and values that
// are strings, integers, booleans or arrays of strings.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mlint::config {

using Value = std::variant<bool, std::int64_t, std::string, std::vector<std::string>>;

struct Entry {
  Value value;
  std::uint32_t line = 0;
};

struct Table {
  std::string name;
  std::uint32_t line = 0;
  std::map<std::string, Entry> entries;  // sorted, so iteration is deterministic
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::uint32_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::uint32_t line() const { return line_; }

 private:
  std::uint32_t line_;
};

class Document {
 public:
  /// Root table has the empty name.
  const Table* table(std::string_view name) const;
  const std::map<std::string, Table>& tables() const { return tables_; }

 private:
  std::map<std::string, Table> tables_;
  friend Document parse_document(std::string_view text);
};

/// Throws ConfigError with the offending line.
Document parse_document(std::string_view text);

std::string_view type_name(const Value& value);

}  // namespace mlint::config
