#include "mlint/config/toml_lite.hpp"

#include <cctype>
#include <charconv>

namespace mlint::config {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  void read(std::map<std::string, Table>& tables) {
    current_ = &tables[""];
    current_->line = 1;
    while (true) {
      skip_blank();
      if (eof()) break;
      if (peek() == '[') {
        read_header(tables);
      } else {
        read_pair();
      }
      finish_line();
    }
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ConfigError(line_, msg); }

  void skip_spaces() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  // Skips whitespace, comments and newlines.
  void skip_blank() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
      } else if (c == '#') {
        while (!eof() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void finish_line() {
    skip_spaces();
    if (peek() == '#') {
      while (!eof() && peek() != '\n') ++pos_;
    }
    if (peek() == '\r') ++pos_;
    if (eof()) return;
    if (peek() != '\n') fail("expected end of line");
  }

  std::string read_key() {
    skip_spaces();
    if (peek() == '"' || peek() == '\'') return read_string();
    std::size_t begin = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) ++pos_;
    if (begin == pos_) fail("expected a key");
    return std::string(text_.substr(begin, pos_ - begin));
  }

  void read_header(std::map<std::string, Table>& tables) {
    ++pos_;
    std::string name;
    while (true) {
      if (!name.empty()) name += '.';
      name += read_key();
      skip_spaces();
      if (peek() == '.') {
        ++pos_;
        continue;
      }
      break;
    }
    if (peek() != ']') fail("expected ']' to close table header");
    ++pos_;
    auto [it, inserted] = tables.try_emplace(name);
    if (!inserted) fail("duplicate table [" + name + "]");
    it->second.name = name;
    it->second.line = line_;
    current_ = &it->second;
  }

  void read_pair() {
    std::uint32_t line = line_;
    std::string key = read_key();
    skip_spaces();
    if (peek() != '=') fail("expected '=' after key '" + key + "'");
    ++pos_;
    skip_spaces();
    Value value = read_value();
    auto [it, inserted] = current_->entries.try_emplace(key, Entry{std::move(value), line});
    if (!inserted) fail("duplicate key '" + key + "'");
  }

  Value read_value() {
    char c = peek();
    if (c == '"' || c == '\'') return read_string();
    if (c == '[') return read_array();
    if (text_.substr(pos_, 4) == "true") {
      pos_ += 4;
      return true;
    }
    if (text_.substr(pos_, 5) == "false") {
      pos_ += 5;
      return false;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t begin = pos_;
      if (c == '+' || c == '-') ++pos_;
      while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string digits;
      for (char ch : text_.substr(begin, pos_ - begin)) {
        if (ch != '_' && ch != '+') digits.push_back(ch);
      }
      std::int64_t out = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) fail("invalid integer");
      return out;
    }
    fail("unsupported value");
  }

  std::string read_string() {
    char quote = peek();
    ++pos_;
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      char c = peek();
      ++pos_;
      if (c == quote) break;
      if (c == '\\' && quote == '"') {
        if (eof()) fail("unterminated string");
        char e = peek();
        ++pos_;
        switch (e) {
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          default: fail(std::string("unsupported escape \\") + e);
        }
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  std::vector<std::string> read_array() {
    ++pos_;
    std::vector<std::string> out;
    while (true) {
      skip_blank();
      if (peek() == ']') {
        ++pos_;
        return out;
      }
      if (peek() != '"' && peek() != '\'') fail("arrays may only contain strings");
      out.push_back(read_string());
      skip_blank();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      skip_blank();
      if (peek() != ']') fail("expected ',' or ']' in array");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  Table* current_ = nullptr;
};

}  // namespace

const Table* Document::table(std::string_view name) const {
  auto it = tables_.find(std::string(name));
  return it == tables_.end() ? nullptr : &it->second;
}

Document parse_document(std::string_view text) {
  Document doc;
  Reader(text).read(doc.tables_);
  return doc;
}

std::string_view type_name(const Value& value) {
  switch (value.index()) {
    case 0: return "boolean";
    case 1: return "integer";
    case 2: return "string";
    default: return "array";
  }
}

}  // namespace mlint::config
