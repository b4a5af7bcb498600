#include "mlint/rules/registry.hpp"

#include <algorithm>

namespace mlint::rules {

std::vector<std::unique_ptr<Rule>> make_rules() {
  std::vector<std::unique_ptr<Rule>> all;
  for (auto* group : {&data_cleaning_rules, &training_rules, &evaluation_rules}) {
    for (auto& rule : (*group)()) all.push_back(std::move(rule));
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a->descriptor().id < b->descriptor().id; });
  return all;
}

}  // namespace mlint::rules
