#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "mlint/frontend/ast.hpp"
#include "mlint/frontend/line_index.hpp"

namespace mlint {

struct ParseFailure {
  std::uint32_t line = 1;
  std::uint32_t column = 1;
  std::string message;
};

struct IoError {
  std::filesystem::path path;
  std::string message;
};

/// One parsed source file. Immutable; copies share the same underlying data.
class SourceUnit {
 public:
  const std::filesystem::path& path() const;
  std::string_view text() const;
  /// Root Module node, or nullptr when the file failed to parse.
  const Node* ast() const;
  const std::optional<ParseFailure>& failure() const;
  const LineIndex& lines() const;
  const CommentTable& comments() const;

  /// 1-based line/column of the span start. Throws std::out_of_range when
  /// the span does not lie within the text.
  Location location(Span span) const;
  std::string_view slice(Span span) const;

 private:
  struct Data;
  explicit SourceUnit(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend SourceUnit parse(std::filesystem::path path, std::string text);
};

/// Parses Python 3 source. Syntax errors become a ParseFailure on the unit;
/// this never throws for any input.
SourceUnit parse(std::filesystem::path path, std::string text);

/// Reads and parses a file.
std::variant<SourceUnit, IoError> load_source(const std::filesystem::path& path);

}  // namespace mlint
