#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mlint {

enum class Stage : std::uint8_t { DataCleaning, FeatureEngineering, ModelTraining, ModelEvaluation };
enum class Effect : std::uint8_t { ErrorProne, Efficiency, Readability, Robustness, Reproducibility, MemoryIssue };
enum class Severity : std::uint8_t { Warning, Info };
enum class RuleScope : std::uint8_t { PerFile, ProjectLevel };
enum class ModeGate : std::uint8_t { Always, DevelopmentOnly };
enum class Mode : std::uint8_t { Development, Production };

enum class ParamType : std::uint8_t { Bool, StringList };

struct ParamSpec {
  std::string name;
  ParamType type;
};

struct RuleDescriptor {
  std::string id;
  std::string name;
  std::vector<Stage> stages;
  std::vector<Effect> effects;
  bool api_specific = false;
  std::string library;  // set for API-specific rules
  RuleScope scope = RuleScope::PerFile;
  ModeGate mode_gate = ModeGate::Always;
  Severity severity = Severity::Warning;
  std::string description;
  std::string advice;
  std::vector<ParamSpec> parameters;

  /// "Generic" or "API-Specific: <library>".
  std::string type_label() const;
  /// Stages joined with " & ", e.g. "Model Training & Model Evaluation".
  std::string stage_label() const;
  std::string effect_label() const;
};

/// The 22 registered descriptors, ordered by id.
const std::vector<RuleDescriptor>& catalog();
const RuleDescriptor* find_rule(std::string_view id);
bool is_known_rule(std::string_view id);

std::string_view to_string(Stage stage);     // "Model Training"
std::string_view to_string(Effect effect);   // "Error-prone"
std::string_view to_string(Severity severity);  // "warning" / "info"
std::string_view to_string(Mode mode);       // "development" / "production"

}  // namespace mlint
