#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mlint/report/report.hpp"

namespace mlint::report {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

ordered_json effects_json(const RuleDescriptor& d) {
  ordered_json out = ordered_json::array();
  for (Effect e : d.effects) out.push_back(std::string(to_string(e)));
  return out;
}

// Percent-encodes everything outside the URI unreserved set, keeping '/'.
std::string to_uri(const std::string& path) {
  static const char* kHex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : path) {
    bool keep = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
                c == '.' || c == '_' || c == '~' || c == '/';
    if (keep) {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

std::string_view sarif_level(Severity s) { return s == Severity::Info ? "note" : "warning"; }

std::string note_text(const ToolNote& n) {
  std::string text = n.message;
  if (!n.rule_id.empty() && n.kind == ToolNote::Kind::RuleError) text = n.rule_id + ": " + text;
  return text;
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  for (const Diagnostic& d : report.diagnostics) {
    out << d.path << ':' << d.line << ':' << d.column << ": " << d.rule_id << ' ' << d.descriptor().name << ": "
        << d.message << '\n';
  }
  for (const ParseFailureRecord& f : report.parse_failures) {
    out << f.path << ':' << f.line << ':' << f.column << ": syntax error: " << f.message << '\n';
  }
  for (const ToolNote& n : report.notes) {
    out << (n.path.empty() ? std::string("mlint") : n.path);
    if (n.line > 0) out << ':' << n.line;
    out << ": note: " << note_text(n) << '\n';
  }
  out << plural(report.diagnostics.size(), "smell") << " in " << plural(report.files.size(), "file");
  if (!report.parse_failures.empty()) out << ", " << plural(report.parse_failures.size(), "parse failure");
  out << '\n';
  for (const auto& [id, count] : report.by_rule) {
    out << "  " << id << ' ' << find_rule(id)->name << ": " << count << '\n';
  }
  return out.str();
}

std::string render_json(const Report& report) {
  ordered_json doc;
  doc["tool"] = std::string(kToolName);
  doc["version"] = std::string(kToolVersion);
  if (report.timestamp) doc["timestamp"] = *report.timestamp;
  doc["files"] = report.files;

  ordered_json diags = ordered_json::array();
  for (const Diagnostic& d : report.diagnostics) {
    const RuleDescriptor& rule = d.descriptor();
    ordered_json item;
    item["rule"] = d.rule_id;
    item["name"] = rule.name;
    item["path"] = d.path;
    item["line"] = d.line;
    item["column"] = d.column;
    item["severity"] = std::string(to_string(d.severity));
    item["stage"] = rule.stage_label();
    item["effect"] = effects_json(rule);
    item["message"] = d.message;
    item["advice"] = rule.advice;
    diags.push_back(std::move(item));
  }
  doc["diagnostics"] = std::move(diags);

  ordered_json failures = ordered_json::array();
  for (const ParseFailureRecord& f : report.parse_failures) {
    failures.push_back({{"path", f.path}, {"line", f.line}, {"column", f.column}, {"message", f.message}});
  }
  doc["parse_failures"] = std::move(failures);

  ordered_json notes = ordered_json::array();
  for (const ToolNote& n : report.notes) {
    notes.push_back({{"kind", std::string(to_string(n.kind))},
                     {"path", n.path},
                     {"line", n.line},
                     {"rule", n.rule_id},
                     {"message", n.message}});
  }
  doc["notes"] = std::move(notes);

  ordered_json summary;
  summary["files"] = report.files.size();
  summary["smells"] = report.diagnostics.size();
  summary["parse_failures"] = report.parse_failures.size();
  summary["by_rule"] = ordered_json::object();
  for (const auto& [id, count] : report.by_rule) summary["by_rule"][id] = count;
  summary["by_effect"] = ordered_json::object();
  for (const auto& [effect, count] : report.by_effect) summary["by_effect"][effect] = count;
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

std::string render_sarif(const Report& report) {
  ordered_json rules = ordered_json::array();
  std::map<std::string, std::size_t> index;
  for (const RuleDescriptor& d : catalog()) {
    index[d.id] = rules.size();
    ordered_json rule;
    rule["id"] = d.id;
    rule["name"] = d.name;
    rule["shortDescription"] = {{"text", d.description}};
    rule["fullDescription"] = {{"text", d.advice}};
    rule["defaultConfiguration"] = {{"level", std::string(sarif_level(d.severity))}};
    rule["properties"] = {{"stage", d.stage_label()}, {"effect", effects_json(d)}, {"type", d.type_label()}};
    rules.push_back(std::move(rule));
  }

  ordered_json results = ordered_json::array();
  for (const Diagnostic& d : report.diagnostics) {
    ordered_json result;
    result["ruleId"] = d.rule_id;
    result["ruleIndex"] = index.at(d.rule_id);
    result["level"] = std::string(sarif_level(d.severity));
    result["message"] = {{"text", d.message}};
    ordered_json region = {{"startLine", d.line}, {"startColumn", d.column}};
    ordered_json physical = {{"artifactLocation", {{"uri", to_uri(d.path)}}}, {"region", region}};
    result["locations"] = ordered_json::array({{{"physicalLocation", physical}}});
    results.push_back(std::move(result));
  }

  ordered_json notifications = ordered_json::array();
  auto notification = [](const std::string& level, const std::string& text, const std::string& path,
                         std::uint32_t line, std::uint32_t column) {
    ordered_json n;
    n["level"] = level;
    n["message"] = {{"text", text}};
    if (!path.empty()) {
      ordered_json physical = {{"artifactLocation", {{"uri", to_uri(path)}}}};
      if (line > 0) {
        physical["region"] = {{"startLine", line}};
        if (column > 0) physical["region"]["startColumn"] = column;
      }
      n["locations"] = ordered_json::array({{{"physicalLocation", physical}}});
    }
    return n;
  };
  for (const ParseFailureRecord& f : report.parse_failures) {
    notifications.push_back(notification("error", "syntax error: " + f.message, f.path, f.line, f.column));
  }
  for (const ToolNote& n : report.notes) {
    notifications.push_back(notification(n.kind == ToolNote::Kind::RuleError ? "error" : "warning", note_text(n),
                                         n.path, n.line, 0));
  }

  ordered_json invocation;
  invocation["executionSuccessful"] = true;
  if (report.timestamp) invocation["endTimeUtc"] = *report.timestamp;
  invocation["toolExecutionNotifications"] = std::move(notifications);

  ordered_json driver;
  driver["name"] = std::string(kToolName);
  driver["version"] = std::string(kToolVersion);
  driver["rules"] = std::move(rules);

  ordered_json run;
  run["tool"] = {{"driver", std::move(driver)}};
  run["invocations"] = ordered_json::array({std::move(invocation)});
  run["results"] = std::move(results);

  ordered_json doc;
  doc["$schema"] = "https://json.schemastore.org/sarif-2.1.0.json";
  doc["version"] = "2.1.0";
  doc["runs"] = ordered_json::array({std::move(run)});
  return doc.dump(2) + "\n";
}

std::string explain(std::string_view rule_id) {
  const RuleDescriptor* d = find_rule(rule_id);
  if (!d) throw std::invalid_argument("unknown rule id '" + std::string(rule_id) + "'");
  std::ostringstream out;
  out << d->id << "  " << d->name << '\n'
      << "  Stage:    " << d->stage_label() << '\n'
      << "  Effect:   " << d->effect_label() << '\n'
      << "  Type:     " << d->type_label() << '\n'
      << "  Severity: " << to_string(d->severity) << '\n'
      << "  Scope:    " << (d->scope == RuleScope::ProjectLevel ? "project" : "file")
      << (d->mode_gate == ModeGate::DevelopmentOnly ? " (development mode only)" : "") << "\n\n"
      << d->description << "\n\n"
      << "Advice: " << d->advice << '\n';
  if (!d->parameters.empty()) {
    out << "Parameters:";
    for (const ParamSpec& p : d->parameters) {
      out << ' ' << p.name << (p.type == ParamType::Bool ? " (bool)" : " (list)");
    }
    out << '\n';
  }
  return out.str();
}

std::string list_rules() {
  std::ostringstream out;
  for (const RuleDescriptor& d : catalog()) {
    char line[512];
    std::snprintf(line, sizeof line, "%-5s %-51s %-33s %-29s %s\n", d.id.c_str(), d.name.c_str(),
                  d.stage_label().c_str(), d.effect_label().c_str(), d.type_label().c_str());
    out << line;
  }
  return out.str();
}

}  // namespace mlint::report
