#include "mlint/engine/suppression.hpp"

#include <algorithm>
#include <cctype>
#include <string_view>

namespace mlint {

namespace {

constexpr std::string_view kMarker = "mlint:";
constexpr std::string_view kDisable = "disable=";

bool is_space(char c) { return c == ' ' || c == '\t'; }
bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool looks_like_rule_id(std::string_view token) {
  return token.size() == 4 && token.substr(0, 2) == "ML" && std::isdigit(static_cast<unsigned char>(token[2])) &&
         std::isdigit(static_cast<unsigned char>(token[3]));
}

// A marker counts only at the start of a comment segment: after the leading
// '#' of the comment or after a later '#' inside it.
bool at_segment_start(std::string_view text, std::size_t pos) {
  while (pos > 0 && is_space(text[pos - 1])) --pos;
  return pos == 0 || text[pos - 1] == '#';
}

struct Parsed {
  bool ok = false;
  std::string error;
  std::vector<std::string> tokens;
};

Parsed parse_directive(std::string_view rest) {
  Parsed out;
  std::size_t i = 0;
  while (i < rest.size() && is_space(rest[i])) ++i;
  if (rest.substr(i, kDisable.size()) != kDisable) {
    out.error = "expected 'disable=' after 'mlint:'";
    return out;
  }
  i += kDisable.size();
  while (true) {
    while (i < rest.size() && is_space(rest[i])) ++i;
    std::size_t begin = i;
    while (i < rest.size() && is_word(rest[i])) ++i;
    if (begin == i) {
      out.error = "expected a rule id or 'all'";
      return out;
    }
    out.tokens.emplace_back(rest.substr(begin, i - begin));
    std::size_t j = i;
    while (j < rest.size() && is_space(rest[j])) ++j;
    if (j < rest.size() && rest[j] == ',') {
      i = j + 1;
      continue;
    }
    if (j < rest.size() && rest[j] != '#' && j == i) {
      out.error = std::string("unexpected character '") + rest[j] + "' in rule list";
      return out;
    }
    break;
  }
  out.ok = true;
  return out;
}

}  // namespace

bool SuppressionTable::suppresses(std::uint32_t line, const std::string& rule_id) const {
  auto it = lines.find(line);
  return it != lines.end() && (it->second.all || it->second.ids.count(rule_id));
}

SuppressionTable scan_suppressions(const SourceUnit& unit) {
  SuppressionTable table;
  const std::string path = unit.path().generic_string();
  for (const auto& [line, comment] : unit.comments()) {
    std::string_view text = comment.text;
    for (std::size_t pos = text.find(kMarker); pos != std::string_view::npos;
         pos = text.find(kMarker, pos + kMarker.size())) {
      if (!at_segment_start(text, pos)) continue;
      Parsed parsed = parse_directive(text.substr(pos + kMarker.size()));
      if (!parsed.ok) {
        table.notes.push_back({ToolNote::Kind::Suppression, path, line, "",
                               "malformed suppression comment: " + parsed.error});
        continue;
      }
      LineSuppression& entry = table.lines[line];
      for (const std::string& token : parsed.tokens) {
        if (token == "all") {
          entry.all = true;
        } else if (!looks_like_rule_id(token)) {
          table.notes.push_back({ToolNote::Kind::Suppression, path, line, "",
                                 "malformed suppression comment: '" + token + "' is not a rule id"});
        } else if (!is_known_rule(token)) {
          table.notes.push_back(
              {ToolNote::Kind::Suppression, path, line, "", "suppression names unknown rule id " + token});
        } else {
          entry.ids.insert(token);
        }
      }
      if (!entry.all && entry.ids.empty()) table.lines.erase(line);
    }
  }
  return table;
}

std::vector<Diagnostic> apply_suppressions(const SourceUnit& unit, std::vector<Diagnostic> diagnostics,
                                           std::vector<ToolNote>* notes) {
  SuppressionTable table = scan_suppressions(unit);
  if (notes) notes->insert(notes->end(), table.notes.begin(), table.notes.end());
  diagnostics.erase(std::remove_if(diagnostics.begin(), diagnostics.end(),
                                   [&](const Diagnostic& d) { return table.suppresses(d.line, d.rule_id); }),
                    diagnostics.end());
  return diagnostics;
}

}  // namespace mlint
