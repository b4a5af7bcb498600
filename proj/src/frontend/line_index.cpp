#include "mlint/frontend/line_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlint {

namespace {

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

LineIndex::LineIndex(std::string text) : text_(std::move(text)) {
  for (std::uint32_t i = 0; i < text_.size(); ++i) {
    if (text_[i] == '\n') {
      line_starts_.push_back(i + 1);
    } else if (text_[i] == '\r') {
      if (i + 1 < text_.size() && text_[i + 1] == '\n') ++i;
      line_starts_.push_back(i + 1);
    }
  }
}

bool LineIndex::is_boundary(std::uint32_t offset) const {
  if (offset > text_.size()) return false;
  if (offset == text_.size()) return true;
  return !is_continuation(static_cast<unsigned char>(text_[offset]));
}

Location LineIndex::locate(std::uint32_t offset) const {
  if (!is_boundary(offset)) {
    throw std::out_of_range("offset " + std::to_string(offset) + " is not a character position");
  }
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  auto line = static_cast<std::uint32_t>(it - line_starts_.begin());
  std::uint32_t start = line_starts_[line - 1];
  std::uint32_t column = 1;
  for (std::uint32_t i = start; i < offset; ++i) {
    if (!is_continuation(static_cast<unsigned char>(text_[i]))) ++column;
  }
  return {line, column};
}

std::uint32_t LineIndex::offset_of(Location loc) const {
  if (loc.line == 0 || loc.line > line_starts_.size() || loc.column == 0) {
    throw std::out_of_range("location outside the text");
  }
  std::uint32_t offset = line_starts_[loc.line - 1];
  const std::uint32_t limit =
      loc.line < line_starts_.size() ? line_starts_[loc.line] : static_cast<std::uint32_t>(text_.size());
  for (std::uint32_t col = 1; col < loc.column; ++col) {
    if (offset >= limit) throw std::out_of_range("column beyond end of line");
    ++offset;
    while (offset < limit && is_continuation(static_cast<unsigned char>(text_[offset]))) ++offset;
  }
  return offset;
}

std::string_view LineIndex::line_text(std::uint32_t line) const {
  if (line == 0 || line > line_starts_.size()) return {};
  std::uint32_t begin = line_starts_[line - 1];
  std::uint32_t end = line < line_starts_.size() ? line_starts_[line] : static_cast<std::uint32_t>(text_.size());
  std::string_view view(text_);
  view = view.substr(begin, end - begin);
  while (!view.empty() && (view.back() == '\n' || view.back() == '\r')) view.remove_suffix(1);
  return view;
}

}  // namespace mlint
