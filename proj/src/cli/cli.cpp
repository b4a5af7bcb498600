#include "mlint/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "mlint/config/toml_lite.hpp"
#include "mlint/engine/engine.hpp"
#include "mlint/harness/corpus.hpp"
#include "mlint/report/report.hpp"
#include "mlint/rules/registry.hpp"

namespace mlint::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::vector<std::string> paths;
  std::string format = "text";
  std::string select;
  std::string ignore;
  std::string mode;
  std::string config_path;
  std::string signatures_path;
  std::string explain_id;
  std::string output;
  std::string verify_dir;
  bool list_rules = false;
  bool timestamps = false;
};

std::vector<std::string> split_ids(const std::string& text, const char* flag) {
  std::vector<std::string> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (!is_known_rule(item)) throw UsageError(std::string(flag) + ": unknown rule id '" + item + "'");
    ids.push_back(item);
  }
  return ids;
}

ApiSignatureTable load_signatures(const fs::path& path) {
  try {
    return ApiSignatureTable::load(path);
  } catch (const config::ConfigError& e) {
    throw UsageError(path.generic_string() + ":" + std::to_string(e.line()) + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw UsageError("cannot write output file: " + output);
  file << text;
}

int analyze(const Options& opt, std::ostream& out, std::ostream& err) {
  std::optional<fs::path> explicit_config;
  if (!opt.config_path.empty()) explicit_config = fs::path(opt.config_path);
  FileConfig file_config = load_config(locate_config(explicit_config));
  RunConfig config = file_config.run;

  if (!opt.mode.empty()) config.mode = opt.mode == "production" ? Mode::Production : Mode::Development;
  if (!opt.select.empty()) {
    auto ids = split_ids(opt.select, "--select");
    config.selected = {ids.begin(), ids.end()};
    for (const std::string& id : ids) config.ignored.erase(id);
  }
  if (!opt.ignore.empty()) {
    auto ids = split_ids(opt.ignore, "--ignore");
    config.ignored.insert(ids.begin(), ids.end());
  }
  config.normalize();
  if (!opt.signatures_path.empty()) config.signatures_path = fs::path(opt.signatures_path);

  std::optional<ApiSignatureTable> custom;
  if (config.signatures_path) custom = load_signatures(*config.signatures_path);
  const ApiSignatureTable& signatures = custom ? *custom : ApiSignatureTable::bundled();
  Engine engine(rules::make_rules(), signatures);

  if (!opt.verify_dir.empty()) {
    if (!fs::is_directory(opt.verify_dir)) throw UsageError("no such fixture directory: " + opt.verify_dir);
    harness::VerifyReport result = harness::verify(opt.verify_dir, engine, config);
    emit(result.summary(), opt.output, out);
    return result.passed() ? 0 : 1;
  }

  std::vector<fs::path> inputs(opt.paths.begin(), opt.paths.end());
  if (inputs.empty()) inputs.emplace_back(".");
  std::vector<fs::path> files = discover(inputs, file_config.exclude);

  std::vector<SourceUnit> units;
  units.reserve(files.size());
  for (const fs::path& file : files) {
    auto loaded = load_source(file);
    if (auto* error = std::get_if<IoError>(&loaded)) {
      throw UsageError("cannot read " + error->path.generic_string() + ": " + error->message);
    }
    units.push_back(std::move(std::get<SourceUnit>(loaded)));
  }

  RunResult result = engine.run(units, config);
  std::optional<std::string> stamp;
  if (opt.timestamps) stamp = report::utc_timestamp();
  report::Report rep = report::build_report(result, stamp);
  emit(report::render(rep, *report::parse_format(opt.format)), opt.output, out);
  for (const ToolNote& n : result.notes) {
    if (n.kind == ToolNote::Kind::RuleError) err << "mlint: " << n.path << ": " << n.rule_id << ": " << n.message << '\n';
  }

  bool findings = !result.diagnostics.empty() || !result.parse_failures.empty() || result.has_rule_errors();
  return findings ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Detects machine-learning code smells in Python sources.", "mlint"};
  app.set_version_flag("--version", std::string(report::kToolVersion));
  app.add_option("paths", opt.paths, "Files or directories to analyze (default: .)");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "sarif"}));
  app.add_option("--select", opt.select, "Comma-separated rule ids to run (replaces the configured set)");
  app.add_option("--ignore", opt.ignore, "Comma-separated rule ids to skip");
  app.add_option("--mode", opt.mode, "Analysis mode")->check(CLI::IsMember({"development", "production"}));
  app.add_option("--config", opt.config_path, "Config file (default: $MLINT_CONFIG or ./mlint.toml)");
  app.add_option("--signatures", opt.signatures_path, "API signature table replacing the bundled one");
  app.add_option("--output", opt.output, "Write the report to this file instead of standard output");
  app.add_flag("--timestamps", opt.timestamps, "Include the run time in JSON and SARIF output");
  auto* explain = app.add_option("--explain", opt.explain_id, "Describe one rule and exit");
  auto* list = app.add_flag("--list-rules", opt.list_rules, "List all rules and exit");
  auto* verify = app.add_option("--verify", opt.verify_dir, "Check a fixture corpus against its expect comments");
  explain->excludes(list);
  verify->excludes(list)->excludes(explain);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const bool info_mode = opt.list_rules || !opt.explain_id.empty();
    if (info_mode && !opt.paths.empty()) throw UsageError("--explain and --list-rules take no paths");
    if (!opt.verify_dir.empty() && !opt.paths.empty()) throw UsageError("--verify takes no other paths");
    if (opt.list_rules) {
      out << report::list_rules();
      return 0;
    }
    if (!opt.explain_id.empty()) {
      try {
        out << report::explain(opt.explain_id);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return 0;
    }
    return analyze(opt, out, err);
  } catch (const UsageError& e) {
    err << "mlint: error: " << e.what() << '\n';
    return 2;
  } catch (const harness::HarnessError& e) {
    err << "mlint: error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace mlint::cli
