#include "mlint/semantic/semantic_model.hpp"

#include <algorithm>
#include <set>

namespace mlint {

namespace {

constexpr int kMaxEvalDepth = 800;

bool is_numeric_literal(const Node* n) {
  if (!n) return false;
  if (n->kind == NodeKind::UnaryOp && (n->text == "-" || n->text == "+")) {
    return is_numeric_literal(n->child(Role::Operand));
  }
  return n->kind == NodeKind::Constant &&
         (n->literal == LiteralKind::Int || n->literal == LiteralKind::Float);
}

bool is_int_literal(const Node* n) { return n && n->kind == NodeKind::Constant && n->literal == LiteralKind::Int; }

std::vector<const Node*> positional_args(const Node* call) {
  std::vector<const Node*> out;
  for (const Node* c : call->children) {
    if (c->role == Role::Arg) out.push_back(c);
  }
  return out;
}

const Node* keyword_value(const Node* call, std::string_view name) {
  for (const Node* c : call->children) {
    if (c->kind == NodeKind::Keyword && c->text == name) return c->child(Role::Value);
  }
  return nullptr;
}

bool is_sequence_literal(const Node* n) {
  return n && (n->kind == NodeKind::Tuple || n->kind == NodeKind::List);
}

bool has_starred(const Node* seq) {
  return std::any_of(seq->children.begin(), seq->children.end(),
                     [](const Node* c) { return c->kind == NodeKind::Starred; });
}

std::optional<int> shape_rank(const Node* call) {
  const Node* shape = keyword_value(call, "shape");
  auto args = positional_args(call);
  if (!shape && !args.empty()) shape = args.front();
  if (!shape) return std::nullopt;
  if (is_sequence_literal(shape)) {
    if (has_starred(shape)) return std::nullopt;
    return static_cast<int>(shape->children.size());
  }
  if (is_int_literal(shape)) {
    if (shape != (args.empty() ? nullptr : args.front())) return 1;
    int n = 0;
    for (const Node* a : args) {
      if (!is_int_literal(a)) break;
      ++n;
    }
    return n;
  }
  return std::nullopt;
}

// Nesting depth of a literal list/tuple, following first elements.
std::optional<int> data_rank(const Node* data) {
  int depth = 0;
  const Node* cur = data;
  while (is_sequence_literal(cur)) {
    if (has_starred(cur)) return std::nullopt;
    ++depth;
    if (cur->children.empty()) break;
    cur = cur->children.front();
  }
  if (depth == 0 && !is_numeric_literal(cur)) return std::nullopt;
  return depth;
}

}  // namespace

class ProvenanceInference {
 public:
  explicit ProvenanceInference(SemanticModel& model)
      : m_(model), sigs_(*model.signatures_), aliases_(model.aliases_) {}

  void run() {
    const Node* root = m_.unit_.ast();
    if (!root) return;
    collect_definitions(root);
    Ctx ctx{root, 0, {}};
    Env env;
    body(root->children, env, ctx, 0, nullptr);
    collect_calls(root);
  }

 private:
  using Env = std::map<std::string, Provenance>;
  struct Ctx {
    const Node* scope;
    std::size_t next = 0;
    std::map<std::string, Provenance> self_attrs;  // collected while inside a class body
  };

  // ---- definitions -------------------------------------------------------

  void collect_definitions(const Node* root) {
    walk(root, [&](const Node& n) {
      if (n.kind == NodeKind::FunctionDef || n.kind == NodeKind::ClassDef) {
        Definition def{&n, n.text, n.kind == NodeKind::ClassDef, false};
        if (def.is_class) {
          for (const Node* base : n.children_of(Role::Base)) {
            if (auto canon = aliases_.resolve(base); canon && sigs_.is_model_base(*canon)) {
              def.is_model_class = true;
            } else if (base->kind == NodeKind::Name) {
              if (const Definition* d = find_definition(base->text); d && d->is_model_class) def.is_model_class = true;
            }
          }
        }
        m_.definitions_.push_back(std::move(def));
      }
      return true;
    });
  }

  const Definition* find_definition(std::string_view name) const {
    for (auto it = m_.definitions_.rbegin(); it != m_.definitions_.rend(); ++it) {
      if (it->name == name) return &*it;
    }
    return nullptr;
  }

  // ---- variables ----------------------------------------------------------

  void set_var(Env& env, Ctx& ctx, const std::string& key, const Provenance& value, std::size_t index) {
    // Rebinding `x` invalidates everything known about `x.attr`.
    std::string prefix = key + ".";
    for (auto it = env.lower_bound(prefix); it != env.end() && it->first.compare(0, prefix.size(), prefix) == 0;) {
      log(ctx, it->first, Provenance::unknown(), index);
      it = env.erase(it);
    }
    env[key] = value;
    log(ctx, key, value, index);
  }

  void log(Ctx& ctx, const std::string& key, const Provenance& value, std::size_t index) {
    auto& events = m_.var_events_[{ctx.scope, key}];
    if (!events.empty() && events.back().index == index) {
      events.back().value = value;
    } else {
      events.push_back({index, value});
    }
  }

  // Joins the environments reaching the end of a compound statement.
  void merge(Env& env, const std::vector<Env>& paths, Ctx& ctx) {
    std::set<std::string> keys;
    for (const Env& p : paths) {
      for (const auto& kv : p) keys.insert(kv.first);
    }
    Env out;
    for (const std::string& key : keys) {
      std::optional<Provenance> acc;
      for (const Env& p : paths) {
        auto it = p.find(key);
        Provenance v = it == p.end() ? Provenance::unknown() : it->second;
        acc = acc ? join(*acc, v) : v;
      }
      out[key] = *acc;
    }
    std::size_t last = ctx.next == 0 ? 0 : ctx.next - 1;
    for (const auto& [key, value] : out) {
      auto before = env.find(key);
      if (before == env.end() || !before->second.same_fact(value) || before->second.origin() != value.origin()) {
        log(ctx, key, value, last);
      }
    }
    for (const auto& [key, value] : env) {
      if (!out.count(key)) log(ctx, key, Provenance::unknown(), last);
    }
    env = std::move(out);
  }

  // ---- statements ---------------------------------------------------------

  void body(const std::vector<const Node*>& stmts, Env& env, Ctx& ctx, int depth, const Node* loop) {
    for (const Node* s : stmts) {
      if (s->is_statement()) statement(s, env, ctx, depth, loop);
    }
  }

  void body_of(const Node* s, Role role, Env& env, Ctx& ctx, int depth, const Node* loop) {
    body(s->children_of(role), env, ctx, depth, loop);
  }

  void statement(const Node* s, Env& env, Ctx& ctx, int depth, const Node* loop) {
    std::size_t index = ctx.next++;
    m_.statements_[s] = StatementInfo{ctx.scope, index, depth, loop};

    switch (s->kind) {
      case NodeKind::Assign: {
        Provenance value = eval(s->child(Role::Value), env, ctx, 0);
        for (const Node* target : s->children_of(Role::Target)) {
          bind(target, value, s->child(Role::Value), env, ctx, index);
        }
        break;
      }
      case NodeKind::AnnAssign: {
        const Node* target = s->child(Role::Target);
        const Node* value = s->child(Role::Value);
        Provenance annotated = annotation_provenance(s->child(Role::Annotation), env, ctx);
        if (value) {
          Provenance v = eval(value, env, ctx, 0);
          bind(target, v.known() ? v : annotated, value, env, ctx, index);
        } else if (target->kind == NodeKind::Name) {
          set_var(env, ctx, target->text, annotated, index);
        }
        break;
      }
      case NodeKind::AugAssign: {
        const Node* target = s->child(Role::Target);
        Provenance old = eval(target, env, ctx, 0);
        const Node* value = s->child(Role::Value);
        Provenance rhs = eval(value, env, ctx, 0);
        Provenance result = combine(old, rhs, target, value, s);
        std::string key = dotted_name(target);
        if (!key.empty()) set_var(env, ctx, key, result, index);
        break;
      }
      case NodeKind::For: {
        eval(s->child(Role::Iter), env, ctx, 0);
        Env inner = env;
        bind(s->child(Role::Target), Provenance::unknown(), nullptr, inner, ctx, index);
        body_of(s, Role::Body, inner, ctx, depth + 1, s);
        body_of(s, Role::OrElse, inner, ctx, depth, loop);
        merge(env, {env, inner}, ctx);
        break;
      }
      case NodeKind::While: {
        eval(s->child(Role::Test), env, ctx, 0);
        Env inner = env;
        body_of(s, Role::Body, inner, ctx, depth + 1, s);
        body_of(s, Role::OrElse, inner, ctx, depth, loop);
        merge(env, {env, inner}, ctx);
        break;
      }
      case NodeKind::If: {
        eval(s->child(Role::Test), env, ctx, 0);
        Env then_env = env;
        Env else_env = env;
        body_of(s, Role::Body, then_env, ctx, depth, loop);
        body_of(s, Role::OrElse, else_env, ctx, depth, loop);
        merge(env, {then_env, else_env}, ctx);
        break;
      }
      case NodeKind::With: {
        for (const Node* item : s->children_of(Role::Item)) {
          eval(item->child(Role::ContextExpr), env, ctx, 0);
          if (const Node* vars = item->child(Role::OptionalVars)) {
            bind(vars, Provenance::unknown(), nullptr, env, ctx, index);
          }
        }
        body_of(s, Role::Body, env, ctx, depth, loop);
        break;
      }
      case NodeKind::Try: {
        body_of(s, Role::Body, env, ctx, depth, loop);
        std::vector<Env> paths;
        for (const Node* handler : s->children_of(Role::Handler)) {
          Env h = env;
          std::size_t hindex = ctx.next++;
          m_.statements_[handler] = StatementInfo{ctx.scope, hindex, depth, loop};
          eval(handler->child(Role::Type), h, ctx, 0);
          if (const Node* name = handler->child(Role::Target)) {
            bind(name, Provenance::unknown(), nullptr, h, ctx, hindex);
          }
          body_of(handler, Role::Body, h, ctx, depth, loop);
          paths.push_back(std::move(h));
        }
        body_of(s, Role::OrElse, env, ctx, depth, loop);
        if (!paths.empty()) {
          paths.insert(paths.begin(), env);
          merge(env, paths, ctx);
        }
        body_of(s, Role::FinalBody, env, ctx, depth, loop);
        break;
      }
      case NodeKind::FunctionDef:
        function_def(s, env, ctx, index);
        break;
      case NodeKind::ClassDef:
        class_def(s, env, ctx, index);
        break;
      case NodeKind::Import:
      case NodeKind::ImportFrom:
        for (const Node* alias : s->children) {
          if (alias->kind != NodeKind::Alias || alias->text == "*") continue;
          std::string local = !alias->detail.empty() ? alias->detail
                              : s->kind == NodeKind::Import ? alias->text.substr(0, alias->text.find('.'))
                                                            : alias->text;
          if (env.count(local)) set_var(env, ctx, local, Provenance::unknown(), index);
        }
        break;
      case NodeKind::Delete:
        for (const Node* t : s->children) {
          std::string key = dotted_name(t);
          if (!key.empty()) {
            set_var(env, ctx, key, Provenance::unknown(), index);
          } else {
            eval_children(t, env, ctx, 0);
          }
        }
        break;
      default:
        // Simple statements: evaluate every expression child for its facts.
        for (const Node* c : s->children) {
          if (c->is_statement()) {
            statement(c, env, ctx, depth, loop);
          } else {
            eval(c, env, ctx, 0);
          }
        }
        break;
    }
  }

  Provenance annotation_provenance(const Node* annotation, Env& env, Ctx& ctx) {
    if (!annotation) return {};
    eval(annotation, env, ctx, 0);
    if (auto canon = aliases_.resolve(annotation)) {
      if (const ConstructorSig* sig = sigs_.constructor(*canon)) return Provenance(sig->tag, annotation);
    }
    return {};
  }

  void function_def(const Node* s, Env& env, Ctx& ctx, std::size_t index) {
    for (const Node* d : s->children_of(Role::Decorator)) eval(d, env, ctx, 0);
    const Node* params = s->child(Role::Params);
    if (params) {
      for (const Node* p : params->children) {
        for (const Node* c : p->children) eval(c, env, ctx, 0);
      }
    }
    eval(s->child(Role::Returns), env, ctx, 0);

    Env inner = env;
    for (const auto& [key, value] : ctx.self_attrs) inner[key] = value;
    Ctx fctx{s, 0, {}};
    for (const auto& [key, value] : ctx.self_attrs) m_.scope_entry_[{s, key}] = value;
    if (params) {
      for (const Node* p : params->children) {
        Provenance prov;
        if (const Node* ann = p->child(Role::Annotation); ann && p->detail.empty()) {
          if (auto canon = aliases_.resolve(ann)) {
            if (const ConstructorSig* sig = sigs_.constructor(*canon)) prov = Provenance(sig->tag, ann);
          }
        }
        std::string prefix = p->text + ".";
        for (auto it = inner.lower_bound(prefix);
             it != inner.end() && it->first.compare(0, prefix.size(), prefix) == 0;) {
          // `self.*` facts gathered from sibling methods are kept for the receiver.
          if (ctx.scope->kind == NodeKind::ClassDef && p == params->children.front()) {
            ++it;
          } else {
            it = inner.erase(it);
          }
        }
        inner[p->text] = prov;
        m_.scope_entry_[{s, p->text}] = prov;
      }
    }
    body_of(s, Role::Body, inner, fctx, 0, nullptr);

    if (ctx.scope->kind == NodeKind::ClassDef) {
      for (const auto& [key, value] : inner) {
        if (key.rfind("self.", 0) != 0 || !value.known()) continue;
        auto [it, inserted] = ctx.self_attrs.try_emplace(key, value);
        if (!inserted) it->second = join(it->second, value);
      }
    }
    set_var(env, ctx, s->text, Provenance::unknown(), index);
  }

  void class_def(const Node* s, Env& env, Ctx& ctx, std::size_t index) {
    for (const Node* c : s->children) {
      if (c->role == Role::Decorator || c->role == Role::Base) eval(c, env, ctx, 0);
      if (c->kind == NodeKind::Keyword) eval_children(c, env, ctx, 0);
    }
    Env inner = env;
    Ctx cctx{s, 0, {}};
    body_of(s, Role::Body, inner, cctx, 0, nullptr);
    set_var(env, ctx, s->text, Provenance::unknown(), index);
  }

  // Binds an assignment target. `value_node` is the right-hand side when
  // known, used for element-wise tuple assignment.
  void bind(const Node* target, const Provenance& value, const Node* value_node, Env& env, Ctx& ctx,
            std::size_t index) {
    if (!target) return;
    switch (target->kind) {
      case NodeKind::Name:
        set_var(env, ctx, target->text, value, index);
        record(target, value);
        break;
      case NodeKind::Attribute: {
        eval(target->child(Role::Value), env, ctx, 0);
        std::string key = dotted_name(target);
        if (!key.empty()) set_var(env, ctx, key, value, index);
        record(target, value);
        break;
      }
      case NodeKind::Tuple:
      case NodeKind::List: {
        bool elementwise = value_node && is_sequence_literal(value_node) && !has_starred(target) &&
                           !has_starred(value_node) && value_node->children.size() == target->children.size();
        for (std::size_t i = 0; i < target->children.size(); ++i) {
          const Node* el = target->children[i];
          if (elementwise) {
            bind(el, provenance(value_node->children[i]), value_node->children[i], env, ctx, index);
          } else {
            bind(el, Provenance::unknown(), nullptr, env, ctx, index);
          }
        }
        break;
      }
      case NodeKind::Starred:
        bind(target->children.empty() ? nullptr : target->children.front(), Provenance::unknown(), nullptr, env,
             ctx, index);
        break;
      default:
        eval_children(target, env, ctx, 0);
        break;
    }
  }

  // ---- expressions --------------------------------------------------------

  Provenance provenance(const Node* n) const {
    auto it = m_.expr_provenance_.find(n);
    return it == m_.expr_provenance_.end() ? Provenance::unknown() : it->second;
  }

  void record(const Node* n, const Provenance& p) {
    if (p.known()) m_.expr_provenance_[n] = p;
  }

  void eval_children(const Node* n, Env& env, Ctx& ctx, int depth) {
    for (const Node* c : n->children) eval(c, env, ctx, depth + 1);
  }

  Provenance eval(const Node* e, Env& env, Ctx& ctx, int depth) {
    if (!e || depth > kMaxEvalDepth) return {};
    Provenance p = eval_node(e, env, ctx, depth);
    record(e, p);
    return p;
  }

  Provenance eval_node(const Node* e, Env& env, Ctx& ctx, int depth) {
    switch (e->kind) {
      case NodeKind::Name: {
        auto it = env.find(e->text);
        return it == env.end() ? Provenance::unknown() : it->second;
      }
      case NodeKind::Attribute: {
        Provenance receiver = eval(e->child(Role::Value), env, ctx, depth + 1);
        std::string key = dotted_name(e);
        if (!key.empty()) {
          if (auto it = env.find(key); it != env.end()) return it->second;
        }
        if (auto tag = sigs_.attribute(receiver.tag(), e->text)) return Provenance(*tag, e);
        return {};
      }
      case NodeKind::Call:
        return eval_call(e, env, ctx, depth);
      case NodeKind::Subscript: {
        Provenance value = eval(e->child(Role::Value), env, ctx, depth + 1);
        const Node* slice = e->child(Role::Slice);
        Provenance index = eval(slice, env, ctx, depth + 1);
        switch (value.tag()) {
          case Tag::DataFrame:
            if (slice && slice->kind == NodeKind::Constant && slice->literal == LiteralKind::String) {
              return Provenance(Tag::Series, e);
            }
            if (slice && (slice->kind == NodeKind::List || slice->kind == NodeKind::Compare ||
                          slice->kind == NodeKind::BoolOp || slice->kind == NodeKind::UnaryOp ||
                          slice->kind == NodeKind::BinOp || index.is(Tag::Series))) {
              return Provenance(Tag::DataFrame, e);
            }
            return {};
          case Tag::Tensor:
            return Provenance(Tag::Tensor, e);
          case Tag::NdArray:
            return Provenance(Tag::NdArray, e);
          default:
            return {};
        }
      }
      case NodeKind::BinOp: {
        const Node* l = e->child(Role::Left);
        const Node* r = e->child(Role::Right);
        Provenance lp = eval(l, env, ctx, depth + 1);
        Provenance rp = eval(r, env, ctx, depth + 1);
        return combine(lp, rp, l, r, e);
      }
      case NodeKind::UnaryOp: {
        Provenance operand = eval(e->child(Role::Operand), env, ctx, depth + 1);
        if (e->text == "-" || e->text == "+" || e->text == "~") return operand.without_rank().with_origin(e);
        return {};
      }
      case NodeKind::IfExp: {
        eval(e->child(Role::Test), env, ctx, depth + 1);
        Provenance a = eval(e->child(Role::Body), env, ctx, depth + 1);
        Provenance b = eval(e->child(Role::OrElse), env, ctx, depth + 1);
        return join(a, b);
      }
      case NodeKind::NamedExpr: {
        Provenance v = eval(e->child(Role::Value), env, ctx, depth + 1);
        const Node* target = e->child(Role::Target);
        if (target && target->kind == NodeKind::Name) {
          std::size_t index = ctx.next == 0 ? 0 : ctx.next - 1;
          set_var(env, ctx, target->text, v, index);
          record(target, v);
        }
        return v;
      }
      case NodeKind::Lambda: {
        Env inner = env;
        if (const Node* params = e->child(Role::Params)) {
          for (const Node* p : params->children) {
            eval_children(p, env, ctx, depth);
            inner.erase(p->text);
          }
        }
        eval(e->child(Role::Body), inner, ctx, depth + 1);
        return {};
      }
      case NodeKind::ListComp:
      case NodeKind::SetComp:
      case NodeKind::DictComp:
      case NodeKind::GeneratorExp: {
        Env inner = env;
        for (const Node* c : e->children) {
          if (c->kind != NodeKind::Comprehension) continue;
          eval(c->child(Role::Iter), inner, ctx, depth + 1);
          if (const Node* t = c->child(Role::Target)) {
            walk(t, [&](const Node& n) {
              if (n.kind == NodeKind::Name) inner.erase(n.text);
              return true;
            });
          }
          for (const Node* cond : c->children_of(Role::Condition)) eval(cond, inner, ctx, depth + 1);
        }
        for (const Node* c : e->children) {
          if (c->kind != NodeKind::Comprehension) eval(c, inner, ctx, depth + 1);
        }
        return {};
      }
      default:
        eval_children(e, env, ctx, depth);
        return {};
    }
  }

  Provenance combine(const Provenance& l, const Provenance& r, const Node* ln, const Node* rn, const Node* at) {
    if (l.known() && l.tag() == r.tag()) return Provenance(l.tag(), at);
    if (l.known() && !r.known() && is_numeric_literal(rn)) return Provenance(l.tag(), at);
    if (r.known() && !l.known() && is_numeric_literal(ln)) return Provenance(r.tag(), at);
    return {};
  }

  Provenance eval_call(const Node* e, Env& env, Ctx& ctx, int depth) {
    const Node* func = e->child(Role::Func);
    Provenance fprov = eval(func, env, ctx, depth + 1);
    for (const Node* c : e->children) {
      if (c != func) eval(c, env, ctx, depth + 1);
    }
    if (!func) return {};

    if (auto canon = aliases_.resolve(func)) {
      if (const ConstructorSig* sig = sigs_.constructor(*canon)) {
        return Provenance(sig->tag, e, rank_of(*sig, e));
      }
    }
    if (func->kind == NodeKind::Name && !fprov.known()) {
      if (const Definition* def = find_definition(func->text); def && def->is_model_class) {
        return Provenance(Tag::Model, e);
      }
    }
    if (func->kind == NodeKind::Attribute) {
      Provenance receiver = provenance(func->child(Role::Value));
      if (const MethodSig* sig = sigs_.method(receiver.tag(), func->text)) {
        if (sig->same_as_receiver) return receiver;
        return Provenance(sig->result, e);
      }
    }
    if (fprov.is(Tag::Model)) return Provenance(Tag::Tensor, e);
    return {};
  }

  std::optional<int> rank_of(const ConstructorSig& sig, const Node* call) const {
    switch (sig.rank_rule) {
      case RankRule::Shape:
        return shape_rank(call);
      case RankRule::Data: {
        auto args = positional_args(call);
        const Node* data = keyword_value(call, "object");
        if (!data && !args.empty()) data = args.front();
        if (!data) return std::nullopt;
        Provenance p = provenance(data);
        if (p.is(Tag::NdArray)) return p.rank();
        return data_rank(data);
      }
      case RankRule::Fixed:
        return sig.fixed_rank;
      case RankRule::None:
        break;
    }
    return std::nullopt;
  }

  // ---- call index ---------------------------------------------------------

  void collect_calls(const Node* root) {
    walk(root, [&](const Node& n) {
      if (n.kind != NodeKind::Call) return true;
      CallSite site;
      site.call = &n;
      const Node* func = n.child(Role::Func);
      if (func) {
        if (auto canon = aliases_.resolve(func)) site.callee = *canon;
        if (func->kind == NodeKind::Attribute) {
          site.method = func->text;
          site.receiver = func->child(Role::Value);
          site.receiver_key = dotted_name(site.receiver);
          site.receiver_provenance = provenance(site.receiver);
        } else if (func->kind == NodeKind::Name) {
          site.method = func->text;
        }
      }
      site.result = provenance(&n);
      site.statement = enclosing_statement(&n);
      if (auto it = m_.statements_.find(site.statement); it != m_.statements_.end()) {
        site.where = it->second;
      } else {
        site.where.scope = enclosing_scope(&n);
      }
      m_.call_lookup_[&n] = m_.calls_.size();
      m_.calls_.push_back(std::move(site));
      return true;
    });
  }

  SemanticModel& m_;
  const ApiSignatureTable& sigs_;
  const AliasTable& aliases_;
};

Provenance SemanticModel::provenance(const Node* expr) const {
  auto it = expr_provenance_.find(expr);
  return it == expr_provenance_.end() ? Provenance::unknown() : it->second;
}

Provenance SemanticModel::variable_after(const Node* scope, std::string_view name, std::size_t index) const {
  VarKey key{scope, std::string(name)};
  if (auto it = var_events_.find(key); it != var_events_.end()) {
    const auto& events = it->second;
    auto pos = std::upper_bound(events.begin(), events.end(), index,
                                [](std::size_t i, const VarEvent& e) { return i < e.index; });
    if (pos != events.begin()) return std::prev(pos)->value;
  }
  if (auto it = scope_entry_.find(key); it != scope_entry_.end()) return it->second;
  if (!scope || scope->kind == NodeKind::Module) return Provenance::unknown();
  const StatementInfo* def = statement_info(scope);
  if (!def) return Provenance::unknown();
  return variable_after(def->scope, name, def->index);
}

const CallSite* SemanticModel::call(const Node* call_node) const {
  auto it = call_lookup_.find(call_node);
  return it == call_lookup_.end() ? nullptr : &calls_[it->second];
}

const Definition* SemanticModel::definition(std::string_view name) const {
  for (auto it = definitions_.rbegin(); it != definitions_.rend(); ++it) {
    if (it->name == name) return &*it;
  }
  return nullptr;
}

const StatementInfo* SemanticModel::statement_info(const Node* stmt) const {
  auto it = statements_.find(stmt);
  return it == statements_.end() ? nullptr : &it->second;
}

const StatementInfo* SemanticModel::where(const Node* node) const {
  for (const Node* cur = node; cur; cur = cur->parent) {
    if (const StatementInfo* info = statement_info(cur)) return info;
  }
  return nullptr;
}

SemanticModel infer_provenance(const SourceUnit& unit, const AliasTable& aliases, const ApiSignatureTable& signatures) {
  SemanticModel model(unit, aliases, &signatures);
  ProvenanceInference(model).run();
  return model;
}

std::vector<FactStream> statement_order_facts(const SemanticModel& model) {
  std::vector<FactStream> streams;
  std::map<const Node*, std::size_t> slot;
  for (const CallSite& site : model.calls()) {
    auto [it, inserted] = slot.try_emplace(site.where.scope, streams.size());
    if (inserted) streams.push_back(FactStream{site.where.scope, {}});
    streams[it->second].calls.push_back(&site);
  }
  for (FactStream& s : streams) {
    std::stable_sort(s.calls.begin(), s.calls.end(), [](const CallSite* a, const CallSite* b) {
      return a->where.index < b->where.index;
    });
  }
  std::stable_sort(streams.begin(), streams.end(), [](const FactStream& a, const FactStream& b) {
    bool am = a.scope && a.scope->kind == NodeKind::Module;
    bool bm = b.scope && b.scope->kind == NodeKind::Module;
    if (am != bm) return am;
    return (a.scope ? a.scope->span.begin : 0) < (b.scope ? b.scope->span.begin : 0);
  });
  return streams;
}

}  // namespace mlint
