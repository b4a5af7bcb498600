#include "mlint/engine/run_config.hpp"

namespace mlint {

std::optional<bool> RuleParams::get_bool(std::string_view key) const {
  auto it = bools_.find(key);
  if (it == bools_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>* RuleParams::get_list(std::string_view key) const {
  auto it = lists_.find(key);
  return it == lists_.end() ? nullptr : &it->second;
}

std::vector<std::string> RuleParams::get_list(std::string_view key, std::vector<std::string> fallback) const {
  if (const auto* list = get_list(key)) return *list;
  return fallback;
}

RunConfig RunConfig::defaults() {
  RunConfig config;
  for (const RuleDescriptor& d : catalog()) config.selected.insert(d.id);
  return config;
}

void RunConfig::normalize() {
  for (const std::string& id : ignored) selected.erase(id);
}

bool RunConfig::enabled(std::string_view id) const {
  std::string key(id);
  return selected.count(key) && !ignored.count(key);
}

const RuleParams& RunConfig::params_for(std::string_view id) const {
  static const RuleParams empty;
  auto it = params.find(std::string(id));
  return it == params.end() ? empty : it->second;
}

}  // namespace mlint
