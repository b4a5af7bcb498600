#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "mlint/rules/registry.hpp"
#include "mlint/rules/rule_support.hpp"

namespace mlint::rules {
namespace {

bool imports_array_library(const SemanticModel& model) {
  const AliasTable& a = model.aliases();
  return a.imports("pandas") || a.imports("numpy") || a.imports("tensorflow") || a.imports("torch");
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += (i + 1 == words.size()) ? " and " : ", ";
    out += words[i];
  }
  return out;
}

// ML01: row-wise iteration over DataFrames, or element-wise accumulation
// over a Tensor inside a loop.
void check_iteration(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  if (!imports_array_library(model)) return;
  walk(model.unit().ast(), [&](const Node& n) {
    if (n.kind != NodeKind::For) return true;
    const Node* iter = n.child(Role::Iter);
    if (iter && iter->kind == NodeKind::Call) {
      const Node* func = iter->child(Role::Func);
      static const std::vector<std::string> kRowIterators = {"iterrows", "itertuples", "items", "iteritems"};
      if (func && func->kind == NodeKind::Attribute && contains(kRowIterators, func->text) &&
          model.provenance(func->child(Role::Value)).is(Tag::DataFrame)) {
        ctx.report(header_span(&n),
                   "loop walks a DataFrame row by row with ." + func->text + "(); use a vectorized operation",
                   Severity::Warning);
        return true;
      }
    }

    auto indexes_tensor = [&](const Node* expr) {
      bool found = false;
      walk(expr, [&](const Node& e) {
        if (e.kind == NodeKind::Subscript && model.provenance(e.child(Role::Value)).is(Tag::Tensor)) found = true;
        return !found;
      });
      return found;
    };
    bool accumulates = false;
    walk(&n, [&](const Node& s) {
      if (accumulates) return false;
      if (&s != &n && s.is_scope()) return false;
      if (!s.is_statement() || &s == &n) return true;
      const StatementInfo* info = model.statement_info(&s);
      if (!info || info->loop != &n) return true;
      if (s.kind == NodeKind::AugAssign && indexes_tensor(s.child(Role::Value))) accumulates = true;
      walk(&s, [&](const Node& e) {
        if (accumulates || (e.is_statement() && &e != &s)) return false;
        if (e.kind == NodeKind::Call) {
          const Node* func = e.child(Role::Func);
          if (func && func->kind == NodeKind::Attribute && func->text == "append") {
            for (const Node* arg : positional_args(&e)) {
              if (indexes_tensor(arg)) accumulates = true;
            }
          }
        }
        return true;
      });
      return true;
    });
    if (accumulates) {
      ctx.report(header_span(&n), "loop accumulates Tensor elements one at a time; use a vectorized reduction",
                 Severity::Warning);
    }
    return true;
  });
}

bool is_nan_expression(const SemanticModel& model, const Node* e) {
  if (e->kind == NodeKind::Name || e->kind == NodeKind::Attribute) {
    auto name = model.canonical(e);
    if (!name) return false;
    static const std::vector<std::string> kNans = {"numpy.nan", "numpy.NaN", "numpy.NAN", "math.nan"};
    return contains(kNans, *name);
  }
  if (e->kind == NodeKind::Call) {
    const Node* func = e->child(Role::Func);
    auto args = positional_args(e);
    if (!func || func->kind != NodeKind::Name || func->text != "float" || args.size() != 1) return false;
    if (model.aliases().lookup("float")) return false;
    if (!is_string_literal(args[0])) return false;
    std::string text = args[0]->text;
    std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::tolower(c); });
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
               text.end());
    return text == "nan" || text == "+nan" || text == "-nan";
  }
  return false;
}

// ML02: equality against NaN is constant.
void check_nan_comparison(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  const AliasTable& a = model.aliases();
  if (!a.imports("pandas") && !a.imports("numpy") && !a.imports("tensorflow")) return;
  walk(model.unit().ast(), [&](const Node& n) {
    if (n.kind != NodeKind::Compare) return true;
    std::vector<const Node*> operands;
    operands.push_back(n.child(Role::Left));
    for (const Node* c : n.children_of(Role::Comparator)) operands.push_back(c);
    for (std::size_t i = 0; i < n.ops.size() && i + 1 < operands.size(); ++i) {
      const std::string& op = n.ops[i];
      if (op != "==" && op != "!=") continue;
      if (is_nan_expression(model, operands[i]) || is_nan_expression(model, operands[i + 1])) {
        ctx.report(&n, op == "==" ? "comparison with NaN using '==' is always False; use isna() or isnan()"
                                  : "comparison with NaN using '!=' is always True; use notna() or isnan()");
        break;
      }
    }
    return true;
  });
}

// ML03: df[a][b] indexes a temporary; df.loc[a, b] is a single lookup.
void check_chain_indexing(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  walk(model.unit().ast(), [&](const Node& n) {
    if (n.kind != NodeKind::Subscript) return true;
    const Node* inner = n.child(Role::Value);
    if (!inner || inner->kind != NodeKind::Subscript) return true;
    if (!model.provenance(inner->child(Role::Value)).is(Tag::DataFrame)) return true;
    std::string message = "chained indexing on a DataFrame; use .loc[row, col] or .iloc";
    if (n.role == Role::Target) message += "; assigning through a chained index may silently have no effect";
    ctx.report(&n, message);
    return true;
  });
}

// ML04: reading tabular data without declaring columns and types.
void check_reader_columns(FileContext& ctx) {
  const auto readers = ctx.params().get_list(
      "readers", {"pandas.read_csv", "pandas.read_table", "pandas.read_excel", "pandas.read_json"});
  for (const CallSite& site : ctx.model().calls()) {
    if (!contains(readers, site.callee) || has_kwargs_splat(site.call)) continue;
    std::vector<std::string> missing;
    if (!has_keyword(site.call, "dtype")) missing.push_back("dtype");
    // read_json has no column-selection argument.
    if (last_segment(site.callee) != "read_json" && !has_keyword(site.call, "usecols")) {
      missing.push_back("usecols");
    }
    if (missing.empty()) continue;
    ctx.report(site.call, std::string(last_segment(site.callee)) + "() without " + join_words(missing) +
                              "; declare the expected columns and types");
  }
}

bool is_empty_placeholder(const Node* v) {
  if (!v || v->kind != NodeKind::Constant) return false;
  if (v->literal == LiteralKind::String) return v->text.empty();
  if (v->literal == LiteralKind::Int || v->literal == LiteralKind::Float) {
    auto value = numeric_value(v);
    return value && *value == 0.0;
  }
  return false;
}

// ML05: a new column filled with 0 or "" instead of NaN.
void check_empty_column(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  walk(model.unit().ast(), [&](const Node& n) {
    if (n.kind != NodeKind::Assign) return true;
    const Node* value = n.child(Role::Value);
    if (!is_empty_placeholder(value)) return true;
    for (const Node* t : n.children_of(Role::Target)) {
      if (t->kind != NodeKind::Subscript) continue;
      if (!is_string_literal(t->child(Role::Slice))) continue;
      if (!model.provenance(t->child(Role::Value)).is(Tag::DataFrame)) continue;
      ctx.report(t, "new column initialized with " + excerpt(model.unit(), value) +
                        "; use numpy.nan so missing values stay distinguishable");
    }
    return true;
  });
}

// ML06: merge without explicit keys, join type and validation.
void check_merge_parameters(FileContext& ctx) {
  for (const CallSite& site : ctx.model().calls()) {
    bool is_merge = site.callee == "pandas.merge" ||
                    (site.method == "merge" && site.receiver && site.receiver_provenance.is(Tag::DataFrame));
    if (!is_merge || has_kwargs_splat(site.call)) continue;
    const Node* c = site.call;
    bool keys = has_keyword(c, "on") || ((has_keyword(c, "left_on") || has_keyword(c, "left_index")) &&
                                         (has_keyword(c, "right_on") || has_keyword(c, "right_index")));
    std::vector<std::string> missing;
    if (!keys) missing.push_back("on");
    if (!has_keyword(c, "how")) missing.push_back("how");
    if (!has_keyword(c, "validate")) missing.push_back("validate");
    if (missing.empty()) continue;
    ctx.report(c, "merge() without " + join_words(missing) + "; state the join explicitly");
  }
}

bool matches_api(const CallSite& site, const std::string& entry) {
  auto dot = entry.find('.');
  if (dot != std::string::npos) {
    if (auto tag = parse_tag(entry.substr(0, dot))) {
      return site.receiver && site.receiver_provenance.is(*tag) && site.method == entry.substr(dot + 1);
    }
  }
  return site.callee == entry;
}

// ML07: the result of a copy-returning API is thrown away.
void check_discarded_result(FileContext& ctx) {
  const auto apis = ctx.params().get_list(
      "apis", {"DataFrame.dropna", "DataFrame.fillna", "DataFrame.sort_values", "DataFrame.drop",
               "DataFrame.reset_index", "DataFrame.replace", "Series.dropna", "Series.fillna", "Series.sort_values",
               "Series.drop", "Series.reset_index", "Series.replace", "NdArray.clip", "numpy.clip"});
  for (const CallSite& site : ctx.model().calls()) {
    const Node* stmt = site.call->parent;
    if (!stmt || stmt->kind != NodeKind::ExprStmt) continue;
    if (!std::any_of(apis.begin(), apis.end(), [&](const std::string& e) { return matches_api(site, e); })) continue;
    if (has_keyword(site.call, "out") || has_kwargs_splat(site.call)) continue;
    if (const Node* inplace = keyword_arg(site.call, "inplace"); inplace && !is_false_literal(inplace)) continue;
    ctx.report(site.call, site.method + "() returns a new object and its result is discarded; assign it");
  }
}

// ML08: DataFrame.values has an ambiguous return type.
void check_values_attribute(FileContext& ctx) {
  const SemanticModel& model = ctx.model();
  walk(model.unit().ast(), [&](const Node& n) {
    if (n.kind == NodeKind::Attribute && n.text == "values" &&
        model.provenance(n.child(Role::Value)).is(Tag::DataFrame)) {
      ctx.report(&n, "DataFrame.values is ambiguous; use .to_numpy()");
    }
    return true;
  });
}

// ML09: numpy.dot on matrices reads better as matmul / @.
void check_dot_product(FileContext& ctx) {
  const bool unknown_tier = ctx.params().get_bool("unknown_rank_info", ctx.mode() == Mode::Development);
  const SemanticModel& model = ctx.model();
  for (const CallSite& site : model.calls()) {
    if (site.callee != "numpy.dot") continue;
    auto args = positional_args(site.call);
    if (args.size() < 2 || args[0]->kind == NodeKind::Starred || args[1]->kind == NodeKind::Starred) continue;
    Provenance a = model.provenance(args[0]);
    Provenance b = model.provenance(args[1]);
    if (!a.is(Tag::NdArray) || !b.is(Tag::NdArray)) continue;
    if (a.rank() && b.rank()) {
      if (*a.rank() == 2 && *b.rank() == 2) {
        ctx.report(site.call, "numpy.dot on two 2-D arrays; use numpy.matmul or the @ operator");
      }
    } else if (unknown_tier) {
      ctx.report(site.call, "numpy.dot on arrays of unverified rank; prefer numpy.matmul or @ for matrices",
                 Severity::Info);
    }
  }
}

}  // namespace

std::vector<std::unique_ptr<Rule>> data_cleaning_rules() {
  std::vector<std::unique_ptr<Rule>> out;
  out.push_back(std::make_unique<FileRule>("ML01", check_iteration));
  out.push_back(std::make_unique<FileRule>("ML02", check_nan_comparison));
  out.push_back(std::make_unique<FileRule>("ML03", check_chain_indexing));
  out.push_back(std::make_unique<FileRule>("ML04", check_reader_columns));
  out.push_back(std::make_unique<FileRule>("ML05", check_empty_column));
  out.push_back(std::make_unique<FileRule>("ML06", check_merge_parameters));
  out.push_back(std::make_unique<FileRule>("ML07", check_discarded_result));
  out.push_back(std::make_unique<FileRule>("ML08", check_values_attribute));
  out.push_back(std::make_unique<FileRule>("ML09", check_dot_product));
  return out;
}

}  // namespace mlint::rules
