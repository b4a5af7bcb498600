#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mlint/engine/catalog.hpp"

namespace mlint {

/// Per-rule parameter overrides. Rules supply their own defaults.
class RuleParams {
 public:
  void set_bool(const std::string& key, bool value) { bools_[key] = value; }
  void set_list(const std::string& key, std::vector<std::string> value) { lists_[key] = std::move(value); }

  std::optional<bool> get_bool(std::string_view key) const;
  bool get_bool(std::string_view key, bool fallback) const { return get_bool(key).value_or(fallback); }
  const std::vector<std::string>* get_list(std::string_view key) const;
  std::vector<std::string> get_list(std::string_view key, std::vector<std::string> fallback) const;

  bool empty() const { return bools_.empty() && lists_.empty(); }

 private:
  std::map<std::string, bool, std::less<>> bools_;
  std::map<std::string, std::vector<std::string>, std::less<>> lists_;
};

struct RunConfig {
  std::set<std::string> selected;  // defaults to every registered rule
  std::set<std::string> ignored;
  Mode mode = Mode::Development;
  std::map<std::string, RuleParams> params;  // by rule id
  std::optional<std::filesystem::path> signatures_path;

  /// All rules selected, development mode.
  static RunConfig defaults();

  /// Removes ignored ids from the selection so the two sets are disjoint.
  void normalize();
  bool enabled(std::string_view id) const;
  const RuleParams& params_for(std::string_view id) const;
};

}  // namespace mlint
