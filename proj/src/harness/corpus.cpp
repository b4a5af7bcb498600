#include "mlint/harness/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <variant>

#include "mlint/engine/catalog.hpp"

namespace mlint::harness {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kExpect = "expect:";

bool is_space(char c) { return c == ' ' || c == '\t'; }

bool at_segment_start(std::string_view text, std::size_t pos) {
  while (pos > 0 && is_space(text[pos - 1])) --pos;
  return pos == 0 || text[pos - 1] == '#';
}

std::vector<fs::path> python_files(const fs::path& dir) {
  std::vector<fs::path> out;
  for (auto it = fs::recursive_directory_iterator(dir); it != fs::recursive_directory_iterator(); ++it) {
    if (it->is_regular_file() && it->path().extension() == ".py") out.push_back(it->path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<fs::path> sorted_entries(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

void gather_projects(const fs::path& dir, std::vector<std::vector<fs::path>>& out) {
  const std::string name = dir.filename().string();
  const bool grouped = name == "positive" || name == "negative";
  for (const fs::path& entry : sorted_entries(dir)) {
    if (fs::is_regular_file(entry) && entry.extension() == ".py") {
      out.push_back({entry});
    } else if (fs::is_directory(entry)) {
      if (grouped) {
        auto files = python_files(entry);
        if (!files.empty()) out.push_back(std::move(files));
      } else {
        gather_projects(entry, out);
      }
    }
  }
}

}  // namespace

std::vector<Expectation> collect_expectations(const SourceUnit& unit) {
  std::vector<Expectation> out;
  const std::string path = unit.path().generic_string();
  for (const auto& [line, comment] : unit.comments()) {
    std::string_view text = comment.text;
    for (std::size_t pos = text.find(kExpect); pos != std::string_view::npos;
         pos = text.find(kExpect, pos + 1)) {
      if (!at_segment_start(text, pos)) continue;
      std::string_view rest = text.substr(pos + kExpect.size());
      auto stop = rest.find('#');
      rest = rest.substr(0, stop);
      std::size_t i = 0;
      while (i <= rest.size()) {
        std::size_t comma = rest.find(',', i);
        std::string_view token = rest.substr(i, comma == std::string_view::npos ? std::string_view::npos : comma - i);
        while (!token.empty() && is_space(token.front())) token.remove_prefix(1);
        while (!token.empty() && is_space(token.back())) token.remove_suffix(1);
        if (token.empty() || !is_known_rule(token)) {
          throw HarnessError(path, line, "malformed expectation '" + std::string(token) +
                                             "': expected a comma-separated list of rule ids");
        }
        out.push_back({path, line, std::string(token)});
        if (comma == std::string_view::npos) break;
        i = comma + 1;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Expectation> collect_expectations(const fs::path& fixture_dir) {
  std::vector<Expectation> out;
  for (const fs::path& file : python_files(fixture_dir)) {
    auto loaded = load_source(file);
    if (auto* err = std::get_if<IoError>(&loaded)) throw HarnessError(file.generic_string(), 0, err->message);
    auto found = collect_expectations(std::get<SourceUnit>(loaded));
    out.insert(out.end(), found.begin(), found.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<fs::path>> fixture_projects(const fs::path& fixture_dir) {
  std::vector<std::vector<fs::path>> out;
  if (fs::is_regular_file(fixture_dir)) {
    out.push_back({fixture_dir});
    return out;
  }
  gather_projects(fixture_dir, out);
  return out;
}

void compare(const std::vector<Expectation>& expected, const std::vector<Diagnostic>& actual, VerifyReport& report) {
  std::set<Expectation> want(expected.begin(), expected.end());
  std::set<Expectation> got;
  for (const Diagnostic& d : actual) got.insert({d.path, d.line, d.rule_id});
  report.expected += want.size();
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(report.missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(report.unexpected));
}

VerifyReport verify(const fs::path& fixture_dir, const Engine& engine, const RunConfig& config) {
  VerifyReport report;
  for (const auto& project : fixture_projects(fixture_dir)) {
    ++report.projects;
    std::vector<SourceUnit> units;
    std::vector<Expectation> expected;
    for (const fs::path& file : project) {
      ++report.files;
      auto loaded = load_source(file);
      if (auto* err = std::get_if<IoError>(&loaded)) {
        report.errors.push_back(file.generic_string() + ": " + err->message);
        continue;
      }
      SourceUnit& unit = std::get<SourceUnit>(loaded);
      if (const auto& f = unit.failure()) {
        report.errors.push_back(file.generic_string() + ":" + std::to_string(f->line) + ":" +
                                std::to_string(f->column) + ": syntax error: " + f->message);
        continue;
      }
      try {
        auto found = collect_expectations(unit);
        expected.insert(expected.end(), found.begin(), found.end());
      } catch (const HarnessError& e) {
        report.errors.push_back(e.what());
      }
      units.push_back(std::move(unit));
    }
    RunResult result = engine.run(units, config);
    for (const ToolNote& n : result.notes) {
      if (n.kind == ToolNote::Kind::RuleError) report.errors.push_back(n.path + ": " + n.rule_id + ": " + n.message);
    }
    compare(expected, result.diagnostics, report);
  }
  std::sort(report.missing.begin(), report.missing.end());
  std::sort(report.unexpected.begin(), report.unexpected.end());
  return report;
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  out << (passed() ? "PASS" : "FAIL") << ": " << files << " files in " << projects << " projects, " << expected
      << " expected findings, " << missing.size() << " missing, " << unexpected.size() << " unexpected, "
      << errors.size() << " errors\n";
  for (const Expectation& e : missing) out << "  missing    " << e.path << ':' << e.line << ' ' << e.rule_id << '\n';
  for (const Expectation& e : unexpected) {
    out << "  unexpected " << e.path << ':' << e.line << ' ' << e.rule_id << '\n';
  }
  for (const std::string& e : errors) out << "  error      " << e << '\n';
  return out.str();
}

}  // namespace mlint::harness
