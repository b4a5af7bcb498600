#pragma once

// Small syntax and model queries shared by the rule implementations.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlint/engine/rule.hpp"
#include "mlint/frontend/ast.hpp"
#include "mlint/semantic/semantic_model.hpp"

namespace mlint::rules {

std::vector<const Node*> positional_args(const Node* call);
/// Value of keyword argument `name`, or nullptr.
const Node* keyword_arg(const Node* call, std::string_view name);
bool has_keyword(const Node* call, std::string_view name);
/// True when the call forwards `**kwargs`, so any keyword may be present.
bool has_kwargs_splat(const Node* call);
bool has_any_argument(const Node* call);

bool is_true_literal(const Node* n);
bool is_false_literal(const Node* n);
bool is_string_literal(const Node* n);
/// Value of an int/float literal, with unary +/- applied.
std::optional<double> numeric_value(const Node* n);

bool is_ancestor(const Node* ancestor, const Node* node);

/// Pre-order walk that does not enter nested functions, classes or lambdas.
void walk_scope(const Node* scope, const std::function<void(const Node&)>& visit);

/// Span of a loop header: the `for` keyword through the end of the iterable,
/// or `while` through the end of the condition.
Span header_span(const Node* loop);

/// Right-hand side of the only binding of `name` in `scope`, when that
/// binding is a plain `name = value` assignment.
const Node* single_assignment_value(const Node* scope, std::string_view name);

/// Last dotted segment, e.g. "sklearn.decomposition.PCA" -> "PCA".
std::string_view last_segment(std::string_view dotted);

bool contains(const std::vector<std::string>& items, std::string_view value);

/// True when some call inside `expr` (inclusive) uses one of `methods`.
bool contains_method_call(const Node* expr, const std::vector<std::string_view>& methods);

bool is_arithmetic_op(std::string_view op);

/// Source text of a node on one line, shortened for messages.
std::string excerpt(const SourceUnit& unit, const Node* node, std::size_t max_length = 48);

/// A rule defined by a descriptor and a per-file check function.
class FileRule : public Rule {
 public:
  using Check = std::function<void(FileContext&)>;
  FileRule(std::string_view id, Check check);
  const RuleDescriptor& descriptor() const override { return *descriptor_; }
  void check_file(FileContext& ctx) const override { check_(ctx); }

 private:
  const RuleDescriptor* descriptor_;
  Check check_;
};

}  // namespace mlint::rules
