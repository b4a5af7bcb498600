#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mlint {

/// Half-open byte range [begin, end) into a file's text.
struct Span {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  std::uint32_t size() const { return end - begin; }
  bool contains(Span other) const { return begin <= other.begin && other.end <= end; }
  friend bool operator==(const Span&, const Span&) = default;
};

/// 1-based line and column. Columns count characters (UTF-8 code points).
struct Location {
  std::uint32_t line = 1;
  std::uint32_t column = 1;

  friend bool operator==(const Location&, const Location&) = default;
  friend auto operator<=>(const Location&, const Location&) = default;
};

/// Maps byte offsets to line/column and back.
///
/// Valid offsets are the character boundaries of the text plus the offset one
/// past the end. Line terminators are "\n", "\r\n" and a lone "\r".
class LineIndex {
 public:
  LineIndex() = default;
  explicit LineIndex(std::string text);

  /// Throws std::out_of_range for offsets beyond the text or inside a
  /// multi-byte character.
  Location locate(std::uint32_t offset) const;
  /// Inverse of locate. Throws std::out_of_range when the location does not
  /// name a character position of the text.
  std::uint32_t offset_of(Location loc) const;

  std::size_t line_count() const { return line_starts_.size(); }
  std::string_view line_text(std::uint32_t line) const;  // without terminator
  bool is_boundary(std::uint32_t offset) const;

 private:
  std::string text_;
  std::vector<std::uint32_t> line_starts_{0};
};

/// Comments of one file, keyed by 1-based line. Text excludes the leading '#'.
struct Comment {
  std::uint32_t line = 0;
  std::uint32_t offset = 0;
  std::string text;
};
using CommentTable = std::map<std::uint32_t, Comment>;

}  // namespace mlint
