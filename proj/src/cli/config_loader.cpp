#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mlint/cli/cli.hpp"
#include "mlint/config/toml_lite.hpp"

namespace mlint::cli {

namespace fs = std::filesystem;
using config::Entry;
using config::Table;

namespace {

[[noreturn]] void fail(const std::string& origin, std::uint32_t line, const std::string& message) {
  throw UsageError(origin + ":" + std::to_string(line) + ": " + message);
}

const std::vector<std::string>& expect_list(const std::string& origin, const std::string& key, const Entry& e) {
  if (const auto* list = std::get_if<std::vector<std::string>>(&e.value)) return *list;
  fail(origin, e.line, "'" + key + "' must be an array of strings, not " + std::string(config::type_name(e.value)));
}

std::vector<std::string> expect_rule_ids(const std::string& origin, const std::string& key, const Entry& e) {
  std::vector<std::string> ids = expect_list(origin, key, e);
  for (const std::string& id : ids) {
    if (!is_known_rule(id)) fail(origin, e.line, "unknown rule id '" + id + "' in '" + key + "'");
  }
  return ids;
}

void apply_rule_table(const std::string& origin, const RuleDescriptor& rule, const Table& table, RunConfig& run) {
  RuleParams& params = run.params[rule.id];
  for (const auto& [key, entry] : table.entries) {
    const ParamSpec* spec = nullptr;
    for (const ParamSpec& p : rule.parameters) {
      if (p.name == key) spec = &p;
    }
    if (!spec) fail(origin, entry.line, "unknown parameter '" + key + "' for rule " + rule.id);
    if (spec->type == ParamType::Bool) {
      const bool* value = std::get_if<bool>(&entry.value);
      if (!value) fail(origin, entry.line, "'" + key + "' must be true or false");
      params.set_bool(key, *value);
    } else {
      params.set_list(key, expect_list(origin, key, entry));
    }
  }
}

}  // namespace

FileConfig parse_config(std::string_view text, const std::string& origin) {
  config::Document doc;
  try {
    doc = config::parse_document(text);
  } catch (const config::ConfigError& e) {
    fail(origin, e.line(), e.what());
  }

  FileConfig out;
  for (const auto& [name, table] : doc.tables()) {
    if (name.empty()) {
      for (const auto& [key, entry] : table.entries) {
        if (key == "mode") {
          const auto* value = std::get_if<std::string>(&entry.value);
          if (!value || (*value != "development" && *value != "production")) {
            fail(origin, entry.line, "'mode' must be \"development\" or \"production\"");
          }
          out.run.mode = *value == "production" ? Mode::Production : Mode::Development;
        } else if (key == "exclude") {
          out.exclude = expect_list(origin, key, entry);
        } else if (key == "signatures") {
          const auto* value = std::get_if<std::string>(&entry.value);
          if (!value) fail(origin, entry.line, "'signatures' must be a path string");
          out.run.signatures_path = fs::path(*value);
        } else {
          fail(origin, entry.line, "unknown key '" + key + "'");
        }
      }
    } else if (name == "rules") {
      for (const auto& [key, entry] : table.entries) {
        if (key == "select") {
          auto ids = expect_rule_ids(origin, key, entry);
          out.run.selected = {ids.begin(), ids.end()};
        } else if (key == "ignore") {
          auto ids = expect_rule_ids(origin, key, entry);
          out.run.ignored.insert(ids.begin(), ids.end());
        } else {
          fail(origin, entry.line, "unknown key '" + key + "' in [rules]");
        }
      }
    } else if (name.rfind("rules.", 0) == 0) {
      const std::string id = name.substr(6);
      const RuleDescriptor* rule = find_rule(id);
      if (!rule) fail(origin, table.line, "unknown rule id '" + id + "'");
      apply_rule_table(origin, *rule, table, out.run);
    } else {
      fail(origin, table.line, "unknown table [" + name + "]");
    }
  }
  return out;
}

std::optional<fs::path> locate_config(const std::optional<fs::path>& explicit_path) {
  if (explicit_path) {
    if (!fs::is_regular_file(*explicit_path)) {
      throw UsageError("config file not found: " + explicit_path->generic_string());
    }
    return explicit_path;
  }
  if (const char* env = std::getenv("MLINT_CONFIG"); env && *env) {
    fs::path p(env);
    if (!fs::is_regular_file(p)) throw UsageError("MLINT_CONFIG names a missing file: " + p.generic_string());
    return p;
  }
  if (fs::is_regular_file("mlint.toml")) return fs::path("mlint.toml");
  return std::nullopt;
}

FileConfig load_config(const std::optional<fs::path>& path) {
  if (!path) return FileConfig{};
  std::ifstream in(*path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file: " + path->generic_string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path->generic_string());
}

}  // namespace mlint::cli
