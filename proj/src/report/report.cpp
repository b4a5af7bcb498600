#include "mlint/report/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

namespace mlint::report {

Report build_report(const RunResult& result, std::optional<std::string> timestamp) {
  Report r;
  r.timestamp = std::move(timestamp);
  r.files = result.files;
  r.diagnostics = result.diagnostics;
  std::sort(r.diagnostics.begin(), r.diagnostics.end());
  r.parse_failures = result.parse_failures;
  r.notes = result.notes;
  for (const Diagnostic& d : r.diagnostics) {
    ++r.by_rule[d.rule_id];
    for (Effect e : d.descriptor().effects) ++r.by_effect[std::string(to_string(e))];
  }
  return r;
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "sarif") return Format::Sarif;
  return std::nullopt;
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Json:
      return render_json(report);
    case Format::Sarif:
      return render_sarif(report);
    case Format::Text:
      break;
  }
  return render_text(report);
}

}  // namespace mlint::report
