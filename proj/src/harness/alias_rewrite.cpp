#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "mlint/frontend/tokenizer.hpp"
#include "mlint/harness/corpus.hpp"

namespace mlint::harness {

namespace {

bool is_tracked_package(std::string_view top) {
  return top == "pandas" || top == "numpy" || top == "torch" || top == "tensorflow";
}

struct Edit {
  std::uint32_t offset;
  std::uint32_t length;
  std::string text;
};

bool starts_statement(const std::vector<Token>& tokens, std::size_t i) {
  if (i == 0) return true;
  const Token& prev = tokens[i - 1];
  return prev.kind == TokenKind::Newline || prev.kind == TokenKind::Indent || prev.kind == TokenKind::Dedent ||
         prev.is_op(";");
}

// Finds the end (exclusive token index) of the simple statement starting at i.
std::size_t statement_end(const std::vector<Token>& tokens, std::size_t i) {
  while (i < tokens.size() && tokens[i].kind != TokenKind::Newline && tokens[i].kind != TokenKind::EndMarker &&
         !tokens[i].is_op(";")) {
    ++i;
  }
  return i;
}

}  // namespace

std::string rewrite_import_aliases(std::string_view source) {
  TokenStream stream;
  try {
    stream = tokenize(source);
  } catch (const SyntaxError&) {
    return std::string(source);
  }
  const std::vector<Token>& tokens = stream.tokens;

  std::map<std::string, std::string, std::less<>> renames;
  std::vector<Edit> edits;
  std::vector<std::pair<std::size_t, std::size_t>> import_ranges;

  auto rename = [&](const Token& local) {
    std::string fresh = std::string(local.text) + "_alias";
    renames[std::string(local.text)] = fresh;
    edits.push_back({local.span.begin, local.span.size(), fresh});
  };

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!starts_statement(tokens, i)) continue;
    const bool is_import = tokens[i].is_name("import");
    const bool is_from = tokens[i].is_name("from");
    if (!is_import && !is_from) continue;
    const std::size_t end = statement_end(tokens, i);
    import_ranges.emplace_back(i, end);

    if (is_import) {
      std::size_t j = i + 1;
      while (j < end) {
        std::size_t first = j;
        bool dotted = false;
        while (j < end && ((tokens[j].kind == TokenKind::Name && !tokens[j].is_name("as")) || tokens[j].is_op("."))) {
          if (tokens[j].is_op(".")) dotted = true;
          ++j;
        }
        const bool tracked = first < end && is_tracked_package(tokens[first].text);
        if (j + 1 < end && tokens[j].is_name("as")) {
          if (tracked) rename(tokens[j + 1]);
          j += 2;
        } else if (tracked && !dotted && j > first) {
          std::string fresh = std::string(tokens[first].text) + "_alias";
          renames[std::string(tokens[first].text)] = fresh;
          edits.push_back({tokens[first].span.end, 0, " as " + fresh});
        }
        while (j < end && !tokens[j].is_op(",")) ++j;
        ++j;
      }
      continue;
    }

    // from <module> import <names>
    std::size_t j = i + 1;
    if (j >= end || tokens[j].kind != TokenKind::Name) continue;  // relative import
    const bool tracked = is_tracked_package(tokens[j].text);
    while (j < end && !tokens[j].is_name("import")) ++j;
    if (!tracked) continue;
    for (++j; j < end; ++j) {
      const Token& t = tokens[j];
      if (t.kind != TokenKind::Name) continue;
      if (j + 1 < end && tokens[j + 1].is_name("as")) {
        if (j + 2 < end) rename(tokens[j + 2]);
        j += 2;
      } else {
        std::string fresh = std::string(t.text) + "_alias";
        renames[std::string(t.text)] = fresh;
        edits.push_back({t.span.end, 0, " as " + fresh});
      }
    }
  }

  if (renames.empty()) return std::string(source);

  std::size_t range = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    while (range < import_ranges.size() && import_ranges[range].second <= i) ++range;
    if (range < import_ranges.size() && import_ranges[range].first <= i && i < import_ranges[range].second) continue;
    const Token& t = tokens[i];
    if (t.kind != TokenKind::Name) continue;
    auto it = renames.find(t.text);
    if (it == renames.end()) continue;
    if (i > 0 && tokens[i - 1].is_op(".")) continue;  // attribute of something else
    if (i + 1 < tokens.size() && tokens[i + 1].is_op("=") && i > 0 &&
        (tokens[i - 1].is_op("(") || tokens[i - 1].is_op(","))) {
      continue;  // keyword argument name
    }
    edits.push_back({t.span.begin, t.span.size(), it->second});
  }

  std::sort(edits.begin(), edits.end(), [](const Edit& a, const Edit& b) { return a.offset < b.offset; });
  std::string out;
  std::uint32_t pos = 0;
  for (const Edit& e : edits) {
    if (e.offset < pos) continue;
    out.append(source.substr(pos, e.offset - pos));
    out += e.text;
    pos = e.offset + e.length;
  }
  out.append(source.substr(pos));
  return out;
}

}  // namespace mlint::harness
