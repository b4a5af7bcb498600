#pragma once

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mlint/engine/engine.hpp"
#include "mlint/rules/registry.hpp"

namespace mlint::testing {

inline const Engine& default_engine() {
  static const Engine engine(rules::make_rules(), ApiSignatureTable::bundled());
  return engine;
}

inline std::filesystem::path fixture_dir() { return MLINT_FIXTURE_DIR; }

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

using Files = std::vector<std::pair<std::string, std::string>>;  // (path, source)

inline RunResult analyze(const Files& files, const RunConfig& config = RunConfig::defaults()) {
  std::vector<SourceUnit> units;
  for (const auto& [path, text] : files) units.push_back(parse(path, text));
  return default_engine().run(units, config);
}

inline RunResult analyze(const std::string& source, const RunConfig& config = RunConfig::defaults()) {
  return analyze(Files{{"t.py", source}}, config);
}

/// (line, rule id) pairs of a run.
using Hits = std::set<std::pair<std::uint32_t, std::string>>;

inline Hits hits(const RunResult& result) {
  Hits out;
  for (const Diagnostic& d : result.diagnostics) out.emplace(d.line, d.rule_id);
  return out;
}

/// Runs a single rule over one in-memory file.
inline Hits only(const std::string& rule_id, const std::string& source) {
  RunConfig config = RunConfig::defaults();
  config.selected = {rule_id};
  return hits(analyze(source, config));
}

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("mlint-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& relative, const std::string& text) const {
    std::filesystem::path p = path_ / relative;
    std::filesystem::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace mlint::testing
