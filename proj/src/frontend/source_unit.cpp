#include "mlint/frontend/source_unit.hpp"

#include <fstream>
#include <sstream>

#include "mlint/frontend/parser.hpp"
#include "mlint/frontend/tokenizer.hpp"

namespace mlint {

struct SourceUnit::Data {
  std::filesystem::path path;
  std::string text;
  LineIndex lines;
  CommentTable comments;
  Ast ast;
  const Node* root = nullptr;
  std::optional<ParseFailure> failure;
};

const std::filesystem::path& SourceUnit::path() const { return data_->path; }
std::string_view SourceUnit::text() const { return data_->text; }
const Node* SourceUnit::ast() const { return data_->root; }
const std::optional<ParseFailure>& SourceUnit::failure() const { return data_->failure; }
const LineIndex& SourceUnit::lines() const { return data_->lines; }
const CommentTable& SourceUnit::comments() const { return data_->comments; }

Location SourceUnit::location(Span span) const {
  if (span.begin > span.end || span.end > data_->text.size()) {
    throw std::out_of_range("span outside of " + data_->path.string());
  }
  return data_->lines.locate(span.begin);
}

std::string_view SourceUnit::slice(Span span) const {
  return std::string_view(data_->text).substr(span.begin, span.end - span.begin);
}

SourceUnit parse(std::filesystem::path path, std::string text) {
  auto data = std::make_shared<SourceUnit::Data>();
  data->path = std::move(path);
  data->text = std::move(text);
  data->lines = LineIndex(data->text);

  auto record_failure = [&](std::uint32_t offset, std::string message) {
    // Error offsets may land inside a multi-byte sequence of invalid input.
    offset = std::min<std::uint32_t>(offset, static_cast<std::uint32_t>(data->text.size()));
    while (offset > 0 && !data->lines.is_boundary(offset)) --offset;
    Location loc = data->lines.is_boundary(offset) ? data->lines.locate(offset) : Location{1, 1};
    data->failure = ParseFailure{loc.line, loc.column, std::move(message)};
  };

  std::size_t bad = find_invalid_utf8(data->text);
  if (bad != data->text.size()) {
    record_failure(static_cast<std::uint32_t>(bad), "invalid UTF-8 in source");
    return SourceUnit(std::move(data));
  }
  try {
    TokenStream stream = tokenize(data->text);
    data->comments = stream.comments;
    data->ast = parse_tokens(data->text, stream);
    data->root = data->ast.root();
  } catch (const SyntaxError& e) {
    data->comments.clear();
    record_failure(e.offset(), e.what());
  }
  return SourceUnit(std::move(data));
}

std::variant<SourceUnit, IoError> load_source(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return IoError{path, "cannot open file"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return IoError{path, "read error"};
  return parse(path, buffer.str());
}

}  // namespace mlint
