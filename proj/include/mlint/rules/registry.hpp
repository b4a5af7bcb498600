#pragma once

#include <memory>
#include <vector>

#include "mlint/engine/rule.hpp"

namespace mlint::rules {

std::vector<std::unique_ptr<Rule>> data_cleaning_rules();  // ML01-ML09
std::vector<std::unique_ptr<Rule>> training_rules();       // ML10-ML20
std::vector<std::unique_ptr<Rule>> evaluation_rules();     // ML21-ML22

/// Every built-in rule, ordered by id.
std::vector<std::unique_ptr<Rule>> make_rules();

}  // namespace mlint::rules
