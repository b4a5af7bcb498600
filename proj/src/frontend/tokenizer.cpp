#include "mlint/frontend/tokenizer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace mlint {

namespace {

constexpr int kMaxIndentLevels = 100;
constexpr int kMaxBracketDepth = 200;

constexpr std::array<std::string_view, 35> kKeywords = {
    "False",  "None",   "True",    "and",      "as",       "assert", "async",
    "await",  "break",  "class",   "continue", "def",      "del",    "elif",
    "else",   "except", "finally", "for",      "from",     "global", "if",
    "import", "in",     "is",      "lambda",   "nonlocal", "not",    "or",
    "pass",   "raise",  "return",  "try",      "while",    "with",   "yield"};

// Longest operators first so greedy matching picks "**=" over "**" over "*".
constexpr std::array<std::string_view, 47> kOperators = {
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "==", "!=", "<=", ">=", "**",
    "//",  "<<",  ">>",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "@=",
    "+",   "-",   "*",   "/",   "%",   "@",  "&",  "|",  "^",  "~",  "<",  ">",
    "(",   ")",   "[",   "]",   "{",   "}",  ",",  ":",  ".",  ";",  "="};

bool is_name_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool is_name_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  TokenStream run() {
    indents_.push_back(0);
    if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    // peek() uses '\0' as its end sentinel, so a literal NUL must never reach the scanner.
    if (auto nul = text_.find('\0'); nul != std::string_view::npos) fail(nul, "source code cannot contain null bytes");
    while (pos_ < text_.size()) {
      if (at_line_start_ && depth_ == 0) {
        if (!read_indentation()) continue;
      }
      scan_token();
    }
    finish();
    return std::move(out_);
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw SyntaxError(static_cast<std::uint32_t>(at), msg);
  }

  void emit(TokenKind kind, std::size_t begin, std::size_t end) {
    Token t;
    t.kind = kind;
    t.span = {static_cast<std::uint32_t>(begin), static_cast<std::uint32_t>(end)};
    t.text = text_.substr(begin, end - begin);
    out_.tokens.push_back(t);
  }

  bool last_is_newline() const {
    return out_.tokens.empty() || out_.tokens.back().kind == TokenKind::Newline ||
           out_.tokens.back().kind == TokenKind::Indent || out_.tokens.back().kind == TokenKind::Dedent;
  }

  // Consumes the indentation at the start of a line. Returns false when the
  // line turned out to be blank or comment-only (already consumed).
  bool read_indentation() {
    std::size_t col = 0;
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ') {
        ++col;
      } else if (c == '\t') {
        col = (col / 8 + 1) * 8;
      } else if (c == '\f') {
        col = 0;
      } else {
        break;
      }
      ++pos_;
    }
    char c = peek();
    if (c == '#' || c == '\n' || c == '\r' || c == '\0') {
      if (c == '#') read_comment();
      consume_line_break();
      return false;
    }
    at_line_start_ = false;
    handle_indent(col, start);
    return true;
  }

  void handle_indent(std::size_t col, std::size_t line_begin) {
    if (col > indents_.back()) {
      if (static_cast<int>(indents_.size()) >= kMaxIndentLevels) fail(pos_, "too many levels of indentation");
      indents_.push_back(col);
      emit(TokenKind::Indent, line_begin, pos_);
      return;
    }
    while (col < indents_.back()) {
      indents_.pop_back();
      emit(TokenKind::Dedent, pos_, pos_);
    }
    if (col != indents_.back()) fail(pos_, "unindent does not match any outer indentation level");
  }

  void read_comment() {
    std::size_t begin = pos_;
    while (pos_ < text_.size() && text_[pos_] != '\n' && text_[pos_] != '\r') ++pos_;
    Comment comment;
    comment.offset = static_cast<std::uint32_t>(begin);
    comment.line = line_;
    comment.text = std::string(text_.substr(begin + 1, pos_ - begin - 1));
    out_.comments.emplace(line_, std::move(comment));
  }

  // Consumes one line terminator if present and advances the line counter.
  void consume_line_break() {
    if (peek() == '\r') {
      ++pos_;
      if (peek() == '\n') ++pos_;
    } else if (peek() == '\n') {
      ++pos_;
    } else {
      return;
    }
    ++line_;
    at_line_start_ = true;
  }

  void scan_token() {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\f') {
      ++pos_;
      return;
    }
    if (c == '#') {
      read_comment();
      return;
    }
    if (c == '\n' || c == '\r') {
      std::size_t begin = pos_;
      consume_line_break();
      if (depth_ == 0) {
        emit(TokenKind::Newline, begin, pos_);
      } else {
        at_line_start_ = false;
      }
      return;
    }
    if (c == '\\') {
      std::size_t begin = pos_;
      ++pos_;
      if (peek() != '\n' && peek() != '\r') fail(begin, "unexpected character after line continuation character");
      consume_line_break();
      at_line_start_ = false;
      if (pos_ >= text_.size()) fail(begin, "unexpected EOF while parsing");
      return;
    }

    auto uc = static_cast<unsigned char>(c);
    if (is_name_start(uc)) {
      std::size_t begin = pos_;
      while (pos_ < text_.size() && is_name_char(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view word = text_.substr(begin, pos_ - begin);
      if ((peek() == '"' || peek() == '\'') && is_string_prefix(word)) {
        scan_string(begin);
        return;
      }
      emit(TokenKind::Name, begin, pos_);
      return;
    }
    if (std::isdigit(uc) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      scan_number();
      return;
    }
    if (c == '"' || c == '\'') {
      scan_string(pos_);
      return;
    }
    scan_operator();
  }

  static bool is_string_prefix(std::string_view word) {
    if (word.size() > 2) return false;
    std::string lower;
    for (char ch : word) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    return lower == "r" || lower == "u" || lower == "b" || lower == "f" || lower == "br" || lower == "rb" ||
           lower == "fr" || lower == "rf";
  }

  void scan_string(std::size_t begin) {
    char quote = peek();
    bool triple = peek(1) == quote && peek(2) == quote;
    pos_ += triple ? 3 : 1;
    std::uint32_t start_line = line_;
    while (true) {
      if (pos_ >= text_.size()) {
        fail(begin, triple ? "unterminated triple-quoted string literal (detected at line " +
                                 std::to_string(start_line) + ")"
                           : "unterminated string literal");
      }
      char ch = text_[pos_];
      if (ch == '\\') {
        if (pos_ + 1 >= text_.size()) fail(begin, "unterminated string literal");
        char next = text_[pos_ + 1];
        pos_ += 2;
        if (next == '\r' && peek() == '\n') ++pos_;
        if (next == '\n' || next == '\r') ++line_;
        continue;
      }
      if (ch == '\n' || ch == '\r') {
        if (!triple) fail(begin, "unterminated string literal");
        consume_line_break();
        at_line_start_ = false;
        continue;
      }
      if (ch == quote) {
        if (!triple) {
          ++pos_;
          break;
        }
        if (peek(1) == quote && peek(2) == quote) {
          pos_ += 3;
          break;
        }
      }
      ++pos_;
    }
    emit(TokenKind::String, begin, pos_);
  }

  // Consumes digits of the given class allowing single underscores between
  // digits. Returns the number of digits consumed.
  std::size_t digits(int (*is_digit)(int)) {
    std::size_t count = 0;
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (is_digit(static_cast<unsigned char>(ch))) {
        ++count;
        ++pos_;
      } else if (ch == '_' && count > 0 && pos_ + 1 < text_.size() &&
                 is_digit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
      } else {
        break;
      }
    }
    if (peek() == '_') fail(pos_, "invalid decimal literal");
    return count;
  }

  static int is_bin(int c) { return c == '0' || c == '1'; }
  static int is_oct(int c) { return c >= '0' && c <= '7'; }
  static int is_dec(int c) { return std::isdigit(c); }
  static int is_hex(int c) { return std::isxdigit(c); }

  void scan_number() {
    std::size_t begin = pos_;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'o' || peek(1) == 'O' ||
                          peek(1) == 'b' || peek(1) == 'B')) {
      char base = static_cast<char>(std::tolower(static_cast<unsigned char>(peek(1))));
      pos_ += 2;
      if (peek() == '_') ++pos_;
      auto* pred = base == 'x' ? &is_hex : base == 'o' ? &is_oct : &is_bin;
      if (digits(pred) == 0) fail(begin, "invalid number literal");
      if (std::isalnum(static_cast<unsigned char>(peek()))) fail(pos_, "invalid digit in number literal");
      emit(TokenKind::Number, begin, pos_);
      return;
    }
    bool is_float = false;
    if (peek() != '.') digits(&is_dec);
    if (peek() == '.') {
      is_float = true;
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) digits(&is_dec);
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = save;
        fail(pos_, "invalid decimal literal");
      }
      digits(&is_dec);
      is_float = true;
    }
    if (peek() == 'j' || peek() == 'J') {
      ++pos_;
      is_float = true;
    }
    std::string_view literal = text_.substr(begin, pos_ - begin);
    if (!is_float && literal.size() > 1 && literal[0] == '0') {
      bool all_zero = std::all_of(literal.begin(), literal.end(), [](char ch) { return ch == '0' || ch == '_'; });
      if (!all_zero) {
        fail(begin, "leading zeros in decimal integer literals are not permitted");
      }
    }
    if (is_name_char(static_cast<unsigned char>(peek())) && !is_keyword_follow()) {
      fail(pos_, "invalid decimal literal");
    }
    emit(TokenKind::Number, begin, pos_);
  }

  // `1if x else y` is legal: a keyword may directly follow a number.
  bool is_keyword_follow() const {
    std::size_t end = pos_;
    while (end < text_.size() && is_name_char(static_cast<unsigned char>(text_[end]))) ++end;
    std::string_view word = text_.substr(pos_, end - pos_);
    return word == "if" || word == "else" || word == "and" || word == "or" || word == "in" || word == "is" ||
           word == "not" || word == "for";
  }

  void scan_operator() {
    for (std::string_view op : kOperators) {
      if (text_.substr(pos_, op.size()) == op) {
        std::size_t begin = pos_;
        pos_ += op.size();
        if (op == "(" || op == "[" || op == "{") {
          if (depth_ >= kMaxBracketDepth) fail(begin, "too many nested parentheses");
          brackets_.push_back(op[0]);
          bracket_offsets_.push_back(begin);
          ++depth_;
        } else if (op == ")" || op == "]" || op == "}") {
          char open = op == ")" ? '(' : op == "]" ? '[' : '{';
          if (brackets_.empty()) fail(begin, std::string("unmatched '") + op[0] + "'");
          if (brackets_.back() != open) {
            fail(begin, std::string("closing parenthesis '") + op[0] + "' does not match opening parenthesis '" +
                            brackets_.back() + "'");
          }
          brackets_.pop_back();
          bracket_offsets_.pop_back();
          --depth_;
        }
        emit(TokenKind::Op, begin, pos_);
        return;
      }
    }
    if (peek() == '!') fail(pos_, "invalid syntax");
    fail(pos_, std::string("invalid character '") + peek() + "'");
  }

  void finish() {
    // Like CPython, blame the innermost bracket still open at end of input.
    if (depth_ > 0) fail(bracket_offsets_.back(), std::string("'") + brackets_.back() + "' was never closed");
    if (!last_is_newline()) emit(TokenKind::Newline, text_.size(), text_.size());
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit(TokenKind::Dedent, text_.size(), text_.size());
    }
    emit(TokenKind::EndMarker, text_.size(), text_.size());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  bool at_line_start_ = true;
  int depth_ = 0;
  std::vector<char> brackets_;
  std::vector<std::size_t> bracket_offsets_;
  std::vector<std::size_t> indents_;
  TokenStream out_;
};

}  // namespace

bool is_python_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::size_t find_invalid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > text.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // overlong forms, surrogates, out of range
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return i;
    }
    i += len;
  }
  return text.size();
}

TokenStream tokenize(std::string_view text) { return Tokenizer(text).run(); }

}  // namespace mlint
