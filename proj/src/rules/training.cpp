#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mlint/rules/registry.hpp"
#include "mlint/rules/rule_support.hpp"

namespace mlint::rules {
namespace {

// Calls ordered by statement index within one scope; ties broken by source position.
bool before(const CallSite& a, const CallSite& b) {
  if (a.where.index != b.where.index) return a.where.index < b.where.index;
  return a.call->span.begin < b.call->span.begin;
}

bool is_pipeline(std::string_view callee) {
  return callee == "sklearn.pipeline.Pipeline" || callee == "sklearn.pipeline.make_pipeline";
}

// ---- ML10 ----------------------------------------------------------------

void check_scaling(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  const auto sensitive = ctx.params().get_list(
      "sensitive_estimators",
      {"sklearn.decomposition.PCA", "sklearn.svm.SVC", "sklearn.svm.SVR", "sklearn.linear_model.SGDClassifier",
       "sklearn.linear_model.SGDRegressor", "sklearn.neural_network.MLPClassifier"});
  const auto scalers = ctx.params().get_list(
      "scalers", {"sklearn.preprocessing.StandardScaler", "sklearn.preprocessing.MinMaxScaler",
                  "sklearn.preprocessing.RobustScaler", "sklearn.preprocessing.MaxAbsScaler",
                  "sklearn.preprocessing.Normalizer"});

  auto callee_of = [&](const Node* call) -> std::string {
    const CallSite* site = model.call(call);
    return site ? site->callee : std::string();
  };
  // Sensitive and scaler constructors appearing inside an expression.
  auto scan = [&](const Node* expr, std::string& sensitive_name, bool& has_scaler) {
    walk(expr, [&](const Node& n) {
      if (n.kind == NodeKind::Call) {
        std::string callee = callee_of(&n);
        if (contains(sensitive, callee) && sensitive_name.empty()) sensitive_name = callee;
        if (contains(scalers, callee)) has_scaler = true;
      }
      return true;
    });
  };

  for (const CallSite& site : model.calls()) {
    if (site.method != "fit" && site.method != "fit_transform") continue;
    if (!site.receiver || !site.receiver_provenance.is(Tag::Estimator)) continue;
    const Node* origin = site.receiver_provenance.origin();
    if (!origin || origin->kind != NodeKind::Call) continue;
    std::string origin_callee = callee_of(origin);

    std::string name;
    if (is_pipeline(origin_callee)) {
      bool has_scaler = false;
      for (const Node* c : origin->children) {
        if (c->role == Role::Arg || c->role == Role::Keyword) scan(c, name, has_scaler);
      }
      if (name.empty() || has_scaler) continue;
    } else {
      if (!contains(sensitive, origin_callee)) continue;
      name = origin_callee;
      // Constructed inside a pipeline that also scales.
      bool in_scaled_pipeline = false;
      for (const Node* p = origin->parent; p && !p->is_statement(); p = p->parent) {
        if (p->kind == NodeKind::Call && is_pipeline(callee_of(p))) {
          std::string ignored;
          scan(p, ignored, in_scaled_pipeline);
        }
      }
      if (in_scaled_pipeline) continue;
      bool scaled_before = std::any_of(model.calls().begin(), model.calls().end(), [&](const CallSite& other) {
        return contains(scalers, other.callee) && other.where.scope == site.where.scope && before(other, site);
      });
      if (scaled_before) continue;
    }
    ctx.report(site.call, std::string(last_segment(name)) + " is fitted on features that were never scaled");
  }
}

// ---- ML11 ----------------------------------------------------------------

void check_hyperparameters(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  const bool require_lr = ctx.params().get_bool("optimizer_requires_keyword", true);
  for (const CallSite& site : model.calls()) {
    const ConstructorSig* sig = model.signatures().constructor(site.callee);
    if (!sig || (sig->tag != Tag::Estimator && sig->tag != Tag::Optimizer)) continue;
    if (is_pipeline(site.callee)) continue;
    std::string short_name(last_segment(site.callee));
    if (!has_any_argument(site.call)) {
      ctx.report(site.call, short_name + "() relies on library defaults for every hyperparameter");
      continue;
    }
    if (require_lr && sig->tag == Tag::Optimizer && site.callee.rfind("torch.optim.", 0) == 0) {
      auto args = positional_args(site.call);
      bool keywords = std::any_of(site.call->children.begin(), site.call->children.end(),
                                  [](const Node* c) { return c->role == Role::Keyword; });
      if (args.size() == 1 && args[0]->kind != NodeKind::Starred && !keywords) {
        ctx.report(site.call, short_name + "() relies on the default learning rate; pass lr explicitly");
      }
    }
  }
}

// ---- ML12 ----------------------------------------------------------------

bool is_keras_name(std::string_view canonical) {
  return canonical.rfind("tensorflow.", 0) == 0 || canonical.rfind("keras.", 0) == 0;
}

bool is_keras_model_class(const SemanticModel& model, const Node* func) {
  if (!func || func->kind != NodeKind::Name) return false;
  const Definition* def = model.definition(func->text);
  if (!def || !def->is_model_class) return false;
  for (const Node* base : def->node->children_of(Role::Base)) {
    auto name = model.canonical(base);
    if (name && is_keras_name(*name)) return true;
  }
  return false;
}

void check_memory(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  const auto loss_names = ctx.params().get_list(
      "loss_names", {"loss", "criterion", "loss_fn", "loss_func", "cross_entropy", "mse_loss", "nll_loss",
                     "binary_cross_entropy"});

  std::vector<const Node*> clear_calls;
  for (const CallSite& site : model.calls()) {
    if (site.method == "clear_session") clear_calls.push_back(site.call);
  }

  for (const CallSite& site : model.calls()) {
    if (site.where.loop_depth < 1) continue;

    // (a) models built repeatedly without releasing the Keras session.
    const ConstructorSig* sig = model.signatures().constructor(site.callee);
    bool keras_model = (sig && sig->tag == Tag::Model && is_keras_name(site.callee)) ||
                       (site.callee.empty() && is_keras_model_class(model, site.call->child(Role::Func)));
    if (keras_model) {
      bool cleared = false;
      for (const Node* loop = site.where.loop; loop && !cleared;) {
        cleared = std::any_of(clear_calls.begin(), clear_calls.end(),
                              [&](const Node* c) { return is_ancestor(loop, c); });
        const StatementInfo* info = model.statement_info(loop);
        loop = info ? info->loop : nullptr;
      }
      if (!cleared) {
        ctx.report(site.call, "model created inside a loop without clear_session(); graph memory accumulates");
      }
      continue;
    }

    // (b) loss tensors kept alive with their autograd graph.
    if (site.method != "append" || !site.receiver) continue;
    auto args = positional_args(site.call);
    if (args.size() != 1) continue;
    const Node* e = args[0];
    if (contains_method_call(e, {"detach", "item", "cpu", "numpy", "tolist"})) continue;
    Provenance p = model.provenance(e);
    if (!p.is(Tag::Tensor)) continue;
    auto loss_like_call = [&](const Node* call) {
      if (!call || call->kind != NodeKind::Call) return false;
      const CallSite* cs = model.call(call);
      if (!cs) return false;
      if (contains(loss_names, cs->method)) return true;
      return !cs->callee.empty() && contains(loss_names, last_segment(cs->callee));
    };
    bool loss_like = (e->kind == NodeKind::Name && contains(loss_names, e->text)) || loss_like_call(e) ||
                     loss_like_call(p.origin());
    if (!loss_like) continue;
    ctx.report(site.call, "loss tensor appended inside a loop keeps its graph alive; append loss.item()");
  }
}

// ---- ML13 ----------------------------------------------------------------

class DeterministicOptionRule : public Rule {
 public:
  const RuleDescriptor& descriptor() const override { return *find_rule("ML13"); }
  void check_project(ProjectContext& ctx) const override {
    if (ctx.facts().deterministic_option) return;
    for (const SiteRef& site : ctx.facts().torch_imports) {
      ctx.report(site, "PyTorch is used but torch.use_deterministic_algorithms(True) is never enabled");
    }
  }
};

// ---- ML14 ----------------------------------------------------------------

class RandomnessRule : public Rule {
 public:
  const RuleDescriptor& descriptor() const override { return *find_rule("ML14"); }

  void check_file(FileContext& ctx) const override {
    const auto apis = ctx.params().get_list(
        "random_state_apis",
        {"sklearn.model_selection.train_test_split", "sklearn.model_selection.ShuffleSplit",
         "sklearn.model_selection.StratifiedShuffleSplit", "sklearn.model_selection.KFold",
         "sklearn.model_selection.StratifiedKFold", "sklearn.ensemble.RandomForestClassifier",
         "sklearn.ensemble.RandomForestRegressor", "sklearn.ensemble.ExtraTreesClassifier",
         "sklearn.ensemble.ExtraTreesRegressor", "sklearn.ensemble.GradientBoostingClassifier",
         "sklearn.ensemble.GradientBoostingRegressor", "sklearn.cluster.KMeans",
         "sklearn.neural_network.MLPClassifier", "sklearn.neural_network.MLPRegressor",
         "sklearn.linear_model.SGDClassifier", "sklearn.linear_model.SGDRegressor"});
    for (const CallSite& site : ctx.model().calls()) {
      if (!contains(apis, site.callee)) continue;
      if (has_keyword(site.call, "random_state") || has_kwargs_splat(site.call)) continue;
      std::string_view name = last_segment(site.callee);
      // K-fold splitters are only random when shuffling.
      if ((name == "KFold" || name == "StratifiedKFold") && !is_true_literal(keyword_arg(site.call, "shuffle"))) {
        continue;
      }
      ctx.report(site.call, std::string(name) + "() is random but no random_state is given");
    }
  }

  void check_project(ProjectContext& ctx) const override {
    for (const char* family : kRandomFamilies) {
      if (ctx.facts().seeded.count(family)) continue;
      auto it = ctx.facts().randomness_sites.find(family);
      if (it == ctx.facts().randomness_sites.end()) continue;
      std::map<std::string, const SiteRef*> first_per_file;
      for (const SiteRef& site : it->second) {
        auto& slot = first_per_file[site.path];
        if (!slot || site.location < slot->location) slot = &site;
      }
      for (const auto& [path, site] : first_per_file) {
        ctx.report(*site, site->detail + " draws random numbers but " + family + " is never seeded");
      }
    }
  }
};

// ---- ML15 ----------------------------------------------------------------

void check_log_mask(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  const auto log_apis =
      ctx.params().get_list("log_apis", {"tensorflow.log", "tensorflow.math.log", "torch.log", "numpy.log"});
  const auto clip_apis = ctx.params().get_list(
      "clip_apis", {"tensorflow.clip_by_value", "torch.clamp", "torch.clip", "numpy.clip"});
  for (const CallSite& site : model.calls()) {
    if (!contains(log_apis, site.callee)) continue;
    auto args = positional_args(site.call);
    if (args.empty() || args[0]->kind == NodeKind::Starred) continue;
    const Node* arg = args[0];
    if (auto value = numeric_value(arg); value && *value > 0) continue;
    if (arg->kind == NodeKind::Call) {
      const CallSite* inner = model.call(arg);
      if (inner && (contains(clip_apis, inner->callee) ||
                    (inner->receiver && (inner->method == "clamp" || inner->method == "clip" ||
                                         inner->method == "clamp_min")))) {
        continue;
      }
    }
    ctx.report(site.call, std::string(last_segment(site.callee)) +
                              "() input is not clipped; zero or negative values produce -inf or NaN");
  }
}

// ---- ML16 ----------------------------------------------------------------

void check_broadcasting(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  auto array_like = [&](const Node* e) {
    Provenance p = model.provenance(e);
    return p.is(Tag::Tensor) || p.is(Tag::NdArray);
  };
  auto other_operand = [](const Node* binop, const Node* side) {
    const Node* left = binop->child(Role::Left);
    return left == side ? binop->child(Role::Right) : left;
  };
  for (const CallSite& site : model.calls()) {
    bool tile = site.callee == "tensorflow.tile" || site.callee == "numpy.tile" || site.callee == "torch.tile" ||
                (site.receiver && site.receiver_provenance.is(Tag::Tensor) &&
                 (site.method == "repeat" || site.method == "tile"));
    if (!tile) continue;
    const Node* parent = site.call->parent;
    bool flagged = false;
    if (parent && parent->kind == NodeKind::BinOp && is_arithmetic_op(parent->text)) {
      flagged = array_like(other_operand(parent, site.call));
    } else if (parent && parent->kind == NodeKind::Assign && site.call->role == Role::Value) {
      auto targets = parent->children_of(Role::Target);
      if (targets.size() == 1 && targets[0]->kind == NodeKind::Name &&
          single_assignment_value(site.where.scope, targets[0]->text) == site.call) {
        const std::string& var = targets[0]->text;
        walk_scope(site.where.scope, [&](const Node& n) {
          if (flagged || n.kind != NodeKind::BinOp || !is_arithmetic_op(n.text)) return;
          for (const Node* side : {n.child(Role::Left), n.child(Role::Right)}) {
            if (side && side->kind == NodeKind::Name && side->text == var && array_like(other_operand(&n, side))) {
              flagged = true;
            }
          }
        });
      }
    }
    if (flagged) {
      ctx.report(site.call, "array is tiled only to match shapes in arithmetic; rely on broadcasting instead");
    }
  }
}

// ---- ML17 ----------------------------------------------------------------

void check_tensor_array(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  // (scope, variable) -> statement index of its tf.constant initialization
  std::map<std::pair<const Node*, std::string>, std::size_t> constants;
  for (const CallSite& site : model.calls()) {
    if (site.callee != "tensorflow.constant") continue;
    const Node* stmt = site.call->parent;
    if (!stmt || stmt->kind != NodeKind::Assign || site.call->role != Role::Value) continue;
    auto targets = stmt->children_of(Role::Target);
    if (targets.size() != 1 || targets[0]->kind != NodeKind::Name) continue;
    constants.emplace(std::make_pair(site.where.scope, targets[0]->text), site.where.index);
  }
  if (constants.empty()) return;
  for (const CallSite& site : model.calls()) {
    if (site.callee != "tensorflow.concat" && site.callee != "tensorflow.stack") continue;
    if (site.where.loop_depth < 1) continue;
    const Node* stmt = site.call->parent;
    if (!stmt || stmt->kind != NodeKind::Assign || site.call->role != Role::Value) continue;
    auto targets = stmt->children_of(Role::Target);
    if (targets.size() != 1 || targets[0]->kind != NodeKind::Name) continue;
    const std::string& var = targets[0]->text;
    auto it = constants.find({site.where.scope, var});
    if (it == constants.end() || it->second >= site.where.index) continue;
    auto args = positional_args(site.call);
    const Node* values = args.empty() ? keyword_arg(site.call, "values") : args[0];
    if (!values || (values->kind != NodeKind::List && values->kind != NodeKind::Tuple)) continue;
    bool self_reference = std::any_of(values->children.begin(), values->children.end(), [&](const Node* el) {
      return el->kind == NodeKind::Name && el->text == var;
    });
    if (!self_reference) continue;
    ctx.report(site.call, "tensor '" + var + "' grows by " + std::string(last_segment(site.callee)) +
                              " in a loop; use tf.TensorArray");
  }
}

// ---- ML18 ----------------------------------------------------------------

bool is_backward(const CallSite& c) { return c.method == "backward" && c.receiver; }
bool is_step(const CallSite& c) { return c.method == "step" && c.receiver_provenance.is(Tag::Optimizer); }

void check_mode_toggling(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  for (const FactStream& stream : statement_order_facts(model)) {
    const auto& calls = stream.calls;
    for (std::size_t i = 0; i < calls.size(); ++i) {
      const CallSite& ev = *calls[i];
      if (ev.method != "eval" || !ev.receiver_provenance.is(Tag::Model) || ev.receiver_key.empty()) continue;
      if (has_any_argument(ev.call)) continue;
      auto is_train = [&](const CallSite& c) {
        return c.method == "train" && c.receiver_key == ev.receiver_key;
      };

      bool flagged = false;
      for (std::size_t j = i + 1; j < calls.size(); ++j) {
        if (is_train(*calls[j])) break;
        if (is_backward(*calls[j]) || is_step(*calls[j])) {
          flagged = true;
          break;
        }
      }
      // Wrap-around: the next iteration of an enclosing loop trains again.
      if (!flagged) {
        for (const Node* loop = ev.where.loop; loop && !flagged;) {
          bool trains_again = false;
          bool retrains = false;
          for (const CallSite* c : calls) {
            if (!is_ancestor(loop, c->call)) continue;
            if (is_train(*c)) retrains = true;
            if (before(*c, ev) && (is_backward(*c) || is_step(*c))) trains_again = true;
          }
          flagged = trains_again && !retrains;
          const StatementInfo* info = model.statement_info(loop);
          loop = info ? info->loop : nullptr;
        }
      }
      if (flagged) {
        ctx.report(ev.call, "'" + ev.receiver_key +
                                "' is switched to eval() and training continues without calling train()");
      }
    }
  }
}

// ---- ML19 ----------------------------------------------------------------

void check_forward_call(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  if (!model.aliases().imports("torch")) return;
  for (const CallSite& site : model.calls()) {
    if (site.method != "forward" || !site.receiver) continue;
    const Node* recv = site.receiver;
    if (recv->kind == NodeKind::Call) {
      const Node* f = recv->child(Role::Func);
      const Node* fn = site.where.scope;
      if (f && f->kind == NodeKind::Name && f->text == "super" && fn && fn->kind == NodeKind::FunctionDef &&
          fn->text == "forward") {
        const Node* cls = enclosing_scope(fn);
        if (cls && cls->kind == NodeKind::ClassDef) {
          const Definition* def = model.definition(cls->text);
          if (def && def->node == cls && def->is_model_class) continue;
        }
      }
    }
    ctx.report(site.call, "forward() called directly bypasses module hooks; call the module itself");
  }
}

// ---- ML20 ----------------------------------------------------------------

void check_zero_grad(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  const auto& calls = model.calls();
  for (const CallSite& bw : calls) {
    if (!is_backward(bw) || !bw.where.loop) continue;
    const Node* loop = bw.where.loop;
    bool steps = std::any_of(calls.begin(), calls.end(),
                             [&](const CallSite& c) { return is_step(c) && is_ancestor(loop, c.call); });
    if (!steps) continue;
    bool cleared = std::any_of(calls.begin(), calls.end(), [&](const CallSite& c) {
      return c.method == "zero_grad" &&
             (c.receiver_provenance.is(Tag::Optimizer) || c.receiver_provenance.is(Tag::Model)) &&
             is_ancestor(loop, c.call) && c.where.scope == bw.where.scope && c.where.index < bw.where.index;
    });
    if (!cleared) {
      ctx.report(bw.call, "backward() runs without zero_grad() earlier in the loop; gradients accumulate");
    }
  }
}

}  // namespace

std::vector<std::unique_ptr<Rule>> training_rules() {
  std::vector<std::unique_ptr<Rule>> out;
  out.push_back(std::make_unique<FileRule>("ML10", check_scaling));
  out.push_back(std::make_unique<FileRule>("ML11", check_hyperparameters));
  out.push_back(std::make_unique<FileRule>("ML12", check_memory));
  out.push_back(std::make_unique<DeterministicOptionRule>());
  out.push_back(std::make_unique<RandomnessRule>());
  out.push_back(std::make_unique<FileRule>("ML15", check_log_mask));
  out.push_back(std::make_unique<FileRule>("ML16", check_broadcasting));
  out.push_back(std::make_unique<FileRule>("ML17", check_tensor_array));
  out.push_back(std::make_unique<FileRule>("ML18", check_mode_toggling));
  out.push_back(std::make_unique<FileRule>("ML19", check_forward_call));
  out.push_back(std::make_unique<FileRule>("ML20", check_zero_grad));
  return out;
}

}  // namespace mlint::rules
