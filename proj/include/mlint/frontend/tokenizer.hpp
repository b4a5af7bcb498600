#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mlint/frontend/line_index.hpp"

namespace mlint {

enum class TokenKind : std::uint8_t {
  Name,
  Number,
  String,
  Op,
  Newline,
  Indent,
  Dedent,
  EndMarker,
};

struct Token {
  TokenKind kind = TokenKind::EndMarker;
  Span span;
  std::string_view text;  // view into the tokenized text; empty for synthetic tokens

  bool is_op(std::string_view op) const { return kind == TokenKind::Op && text == op; }
  bool is_name(std::string_view name) const { return kind == TokenKind::Name && text == name; }
};

/// Syntax error raised while tokenizing or parsing. `offset` is a byte offset.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::uint32_t offset, const std::string& message)
      : std::runtime_error(message), offset_(offset) {}
  std::uint32_t offset() const { return offset_; }

 private:
  std::uint32_t offset_;
};

struct TokenStream {
  std::vector<Token> tokens;
  CommentTable comments;
};

/// Tokenizes Python 3 source. The returned views point into `text`, which must
/// outlive the stream. Throws SyntaxError.
TokenStream tokenize(std::string_view text);

/// Checks that `text` is well-formed UTF-8; returns the offset of the first
/// bad byte, or text.size() when valid.
std::size_t find_invalid_utf8(std::string_view text);

bool is_python_keyword(std::string_view word);

}  // namespace mlint
