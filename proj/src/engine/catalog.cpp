#include "mlint/engine/catalog.hpp"

#include <algorithm>

namespace mlint {

namespace {

using enum Stage;
using enum Effect;

ParamSpec list(std::string name) { return {std::move(name), ParamType::StringList}; }
ParamSpec flag(std::string name) { return {std::move(name), ParamType::Bool}; }

std::vector<RuleDescriptor> build() {
  std::vector<RuleDescriptor> rules;
  auto add = [&](RuleDescriptor d) { rules.push_back(std::move(d)); };

  add({"ML01", "Unnecessary Iteration", {DataCleaning}, {Efficiency}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "A Python loop walks over dataframe rows or tensor slices one element at a time.",
       "Replace the loop with a vectorized library operation (e.g. DataFrame arithmetic, join, groupby, "
       "or tf.reduce_sum).",
       {}});
  add({"ML02", "NaN Equivalence Comparison Misused", {DataCleaning}, {ErrorProne}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "A value is compared to NaN with == or !=; such a comparison is never true.",
       "Test for missing values with isna()/notna() or np.isnan() instead of comparing with NaN.",
       {}});
  add({"ML03", "Chain Indexing", {DataCleaning}, {ErrorProne, Efficiency}, true, "Pandas",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "A dataframe is indexed twice in a row (df[a][b]); pandas evaluates two separate lookups and may "
       "return a copy.",
       "Use a single locator call such as df.loc[:, (a, b)] or df.loc[row, col].",
       {}});
  add({"ML04", "Columns and DataType Not Explicitly Set", {DataCleaning}, {Readability}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Info,
       "Data is imported without selecting columns or declaring their types.",
       "Pass usecols= and dtype= to the reader so the expected schema is visible and enforced.",
       {list("readers")}});
  add({"ML05", "Empty Column Misinitialization", {DataCleaning}, {Robustness}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "A new dataframe column is filled with 0 or an empty string as a placeholder.",
       "Initialize placeholder columns with np.nan so later missing-value handling still works.",
       {}});
  add({"ML06", "Merge API Parameter Not Explicitly Set", {DataCleaning}, {Readability, ErrorProne}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Info,
       "A dataframe merge relies on defaults for its key columns, join type or cardinality check.",
       "Pass on= (or left_on=/right_on=), how= and validate= to every merge.",
       {}});
  add({"ML07", "In-Place APIs Misused", {DataCleaning}, {ErrorProne}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "The result of a copy-returning operation is discarded, so the call has no effect.",
       "Assign the result (df = df.dropna()) or pass inplace=True where the API supports it.",
       {list("apis")}});
  add({"ML08", "Dataframe Conversion API Misused", {DataCleaning}, {ErrorProne}, true, "Pandas",
       RuleScope::PerFile, ModeGate::Always, Severity::Info,
       "A dataframe is converted to an array through the .values attribute.",
       "Use df.to_numpy(), whose return type is well defined.",
       {}});
  add({"ML09", "Matrix Multiplication API Misused", {DataCleaning}, {Readability}, true, "NumPy",
       RuleScope::PerFile, ModeGate::Always, Severity::Info,
       "np.dot is used to multiply two-dimensional matrices.",
       "Use np.matmul (or the @ operator) for matrix products.",
       {flag("unknown_rank_info")}});
  add({"ML10", "No Scaling before Scaling-Sensitive Operation", {FeatureEngineering}, {ErrorProne}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "A scale-sensitive estimator is fitted with no feature scaling step in sight.",
       "Scale features first, for example Pipeline([(\"scale\", StandardScaler()), (\"model\", ...)]).",
       {list("sensitive_estimators"), list("scalers")}});
  add({"ML11", "Hyperparameter Not Explicitly Set", {ModelTraining}, {ErrorProne, Reproducibility}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "An estimator or optimizer is built entirely from library defaults.",
       "Pass the hyperparameters that matter (learning rate, cluster count, ...) explicitly.",
       {flag("optimizer_requires_keyword")}});
  add({"ML12", "Memory Not Freed", {ModelTraining}, {MemoryIssue}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "Memory held by models or autograd graphs accumulates across loop iterations.",
       "Call clear_session() when building models in a loop; store loss.item() or loss.detach() "
       "instead of the loss tensor.",
       {list("loss_names")}});
  add({"ML13", "Deterministic Algorithm Option Not Used", {ModelTraining}, {Reproducibility}, false, "",
       RuleScope::ProjectLevel, ModeGate::DevelopmentOnly, Severity::Warning,
       "The project uses PyTorch but never enables deterministic algorithms.",
       "Call torch.use_deterministic_algorithms(True) while developing and debugging.",
       {}});
  add({"ML14", "Randomness Uncontrolled", {ModelTraining, ModelEvaluation}, {Reproducibility}, false, "",
       RuleScope::ProjectLevel, ModeGate::DevelopmentOnly, Severity::Warning,
       "Random numbers are drawn, or data is split, without a fixed seed.",
       "Seed every random library in use (random.seed, np.random.seed, torch.manual_seed, "
       "tf.random.set_seed) and pass random_state= to scikit-learn.",
       {list("random_state_apis")}});
  add({"ML15", "Missing the Mask of Invalid Value", {ModelTraining}, {ErrorProne}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "A logarithm is applied to a value that may reach zero or go negative.",
       "Clip the argument first, e.g. tf.math.log(tf.clip_by_value(x, 1e-10, 1.0)).",
       {list("log_apis"), list("clip_apis")}});
  add({"ML16", "Broadcasting Feature Not Used", {ModelTraining}, {Efficiency}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Info,
       "A tensor is tiled only to match the shape of another operand.",
       "Drop the tile call and let broadcasting expand the operand.",
       {}});
  add({"ML17", "TensorArray Not Used", {ModelTraining}, {Efficiency, ErrorProne}, true, "TensorFlow 2",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "A constant tensor is grown inside a loop by repeated concatenation.",
       "Collect loop results in a tf.TensorArray and stack it once after the loop.",
       {}});
  add({"ML18", "Training / Evaluation Mode Improper Toggling", {ModelTraining}, {ErrorProne}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "A model switched to evaluation mode is trained again without switching back.",
       "Call model.train() after evaluation and before the next backward pass or optimizer step.",
       {}});
  add({"ML19", "Pytorch Call Method Misused", {ModelTraining}, {Robustness}, true, "PyTorch",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "A module's forward() is called directly, bypassing registered hooks.",
       "Call the module itself: self.net(x) instead of self.net.forward(x).",
       {}});
  add({"ML20", "Gradients Not Cleared before Backward Propagation", {ModelTraining}, {ErrorProne}, true,
       "PyTorch", RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "A training loop calls backward() and step() without clearing old gradients first.",
       "Call optimizer.zero_grad() before loss.backward() in every iteration.",
       {}});
  add({"ML21", "Data Leakage", {ModelEvaluation}, {ErrorProne}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Warning,
       "Preprocessing is fitted on the full dataset before it is split for validation.",
       "Split first, or wrap preprocessing and model in a Pipeline so it is fitted per fold.",
       {}});
  add({"ML22", "Threshold-Dependent Validation", {ModelEvaluation}, {Robustness}, false, "",
       RuleScope::PerFile, ModeGate::Always, Severity::Info,
       "Models are only evaluated with metrics that depend on a decision threshold.",
       "Also report a threshold-independent metric such as roc_auc_score or average_precision_score.",
       {list("dependent_metrics"), list("independent_metrics")}});
  return rules;
}

template <typename T>
std::string join_labels(const std::vector<T>& items) {
  std::string out;
  for (const T& item : items) {
    if (!out.empty()) out += " & ";
    out += to_string(item);
  }
  return out;
}

}  // namespace

std::string RuleDescriptor::type_label() const {
  return api_specific ? "API-Specific: " + library : std::string("Generic");
}

std::string RuleDescriptor::stage_label() const { return join_labels(stages); }
std::string RuleDescriptor::effect_label() const { return join_labels(effects); }

const std::vector<RuleDescriptor>& catalog() {
  static const std::vector<RuleDescriptor> rules = build();
  return rules;
}

const RuleDescriptor* find_rule(std::string_view id) {
  const auto& rules = catalog();
  auto it = std::find_if(rules.begin(), rules.end(), [&](const RuleDescriptor& d) { return d.id == id; });
  return it == rules.end() ? nullptr : &*it;
}

bool is_known_rule(std::string_view id) { return find_rule(id) != nullptr; }

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::DataCleaning: return "Data Cleaning";
    case Stage::FeatureEngineering: return "Feature Engineering";
    case Stage::ModelTraining: return "Model Training";
    case Stage::ModelEvaluation: return "Model Evaluation";
  }
  return "";
}

std::string_view to_string(Effect effect) {
  switch (effect) {
    case Effect::ErrorProne: return "Error-prone";
    case Effect::Efficiency: return "Efficiency";
    case Effect::Readability: return "Readability";
    case Effect::Robustness: return "Robustness";
    case Effect::Reproducibility: return "Reproducibility";
    case Effect::MemoryIssue: return "Memory Issue";
  }
  return "";
}

std::string_view to_string(Severity severity) { return severity == Severity::Warning ? "warning" : "info"; }

std::string_view to_string(Mode mode) { return mode == Mode::Development ? "development" : "production"; }

}  // namespace mlint
