#include <algorithm>
#include <string>
#include <vector>

#include "mlint/rules/registry.hpp"
#include "mlint/rules/rule_support.hpp"

namespace mlint::rules {
namespace {

bool is_fitting_transformer(const Provenance& p) { return p.is(Tag::Scaler) || p.is(Tag::Estimator); }

// `scaler.fit_transform(X)` or `scaler.fit(X).transform(X)`.
bool is_fitted_transform(const SemanticModel& model, const Node* e) {
  if (!e || e->kind != NodeKind::Call) return false;
  const CallSite* site = model.call(e);
  if (!site || !site->receiver) return false;
  if (site->method == "fit_transform") return is_fitting_transformer(site->receiver_provenance);
  if (site->method == "transform" && site->receiver->kind == NodeKind::Call) {
    const CallSite* fit = model.call(site->receiver);
    return fit && fit->method == "fit" && fit->receiver && is_fitting_transformer(fit->receiver_provenance);
  }
  return false;
}

// ML21: preprocessing fitted on the full data set before it is split.
void check_leakage(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  for (const CallSite& site : model.calls()) {
    if (site.callee == "sklearn.model_selection.train_test_split") {
      bool leaks = false;
      for (const Node* arg : positional_args(site.call)) {
        if (is_fitted_transform(model, arg)) leaks = true;
        if (arg->kind == NodeKind::Name &&
            is_fitted_transform(model, single_assignment_value(site.where.scope, arg->text))) {
          leaks = true;
        }
      }
      if (leaks) ctx.report(site.call, "data was fitted by a transformer before train_test_split; fit on the training split only");
      continue;
    }

    if (site.callee != "sklearn.model_selection.cross_val_score" &&
        site.callee != "sklearn.model_selection.cross_validate" &&
        site.callee != "sklearn.model_selection.cross_val_predict") {
      continue;
    }
    auto args = positional_args(site.call);
    const Node* estimator = args.size() > 0 ? args[0] : keyword_arg(site.call, "estimator");
    const Node* data = args.size() > 1 ? args[1] : keyword_arg(site.call, "X");
    if (!estimator || !data || data->kind != NodeKind::Name) continue;
    Provenance est = model.provenance(estimator);
    if (!est.is(Tag::Estimator)) continue;
    if (const Node* origin = est.origin()) {
      const CallSite* made = model.call(origin);
      if (made && (made->callee == "sklearn.pipeline.Pipeline" || made->callee == "sklearn.pipeline.make_pipeline")) {
        continue;
      }
    }
    bool prescaled = std::any_of(model.calls().begin(), model.calls().end(), [&](const CallSite& c) {
      if (c.method != "fit_transform" || !c.receiver_provenance.is(Tag::Scaler)) return false;
      if (c.where.scope != site.where.scope || c.where.index >= site.where.index) return false;
      auto inputs = positional_args(c.call);
      if (!inputs.empty() && inputs[0]->kind == NodeKind::Name && inputs[0]->text == data->text) return true;
      const Node* stmt = c.call->parent;
      if (stmt && stmt->kind == NodeKind::Assign && c.call->role == Role::Value) {
        for (const Node* t : stmt->children_of(Role::Target)) {
          if (t->kind == NodeKind::Name && t->text == data->text) return true;
        }
      }
      return false;
    });
    if (prescaled) {
      ctx.report(site.call, "'" + data->text +
                                "' was scaled on all rows before cross-validation; put the scaler in a Pipeline");
    }
  }
}

// ML22: threshold-dependent metrics with no threshold-independent companion.
void check_threshold_metrics(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  const auto dependent = ctx.params().get_list(
      "dependent_metrics", {"sklearn.metrics.f1_score", "sklearn.metrics.precision_score",
                            "sklearn.metrics.recall_score", "sklearn.metrics.accuracy_score"});
  const auto independent = ctx.params().get_list(
      "independent_metrics", {"sklearn.metrics.roc_auc_score", "sklearn.metrics.average_precision_score"});
  const auto& calls = model.calls();
  if (std::any_of(calls.begin(), calls.end(), [&](const CallSite& c) { return contains(independent, c.callee); })) {
    return;
  }
  for (const CallSite& site : calls) {
    if (!contains(dependent, site.callee)) continue;
    ctx.report(site.call, std::string(last_segment(site.callee)) +
                              " depends on a decision threshold; also report roc_auc_score or average_precision_score");
  }
}

}  // namespace

std::vector<std::unique_ptr<Rule>> evaluation_rules() {
  std::vector<std::unique_ptr<Rule>> out;
  out.push_back(std::make_unique<FileRule>("ML21", check_leakage));
  out.push_back(std::make_unique<FileRule>("ML22", check_threshold_metrics));
  return out;
}

}  // namespace mlint::rules
