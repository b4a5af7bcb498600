#pragma once

// Python syntax tree.
//
// Every node is a `Node` owned by an `Ast` arena. A node knows its kind, the
// role it plays in its parent (the callee of a call, the body of a loop, ...)
// and its byte span in the source text. Children are kept in source order, so
// a generic walk visits the program left to right, and role-filtered lookups
// give typed access without one struct per node kind.

#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mlint/frontend/line_index.hpp"

namespace mlint {

enum class NodeKind : std::uint8_t {
  // statements
  Module,
  Import,
  ImportFrom,
  Alias,
  Assign,
  AugAssign,
  AnnAssign,
  ExprStmt,
  For,
  While,
  If,
  FunctionDef,
  ClassDef,
  Return,
  Pass,
  Break,
  Continue,
  Raise,
  Global,
  Nonlocal,
  Delete,
  Assert,
  With,
  WithItem,
  Try,
  ExceptHandler,
  // expressions
  Call,
  Keyword,
  Attribute,
  Subscript,
  Slice,
  Compare,
  BinOp,
  UnaryOp,
  BoolOp,
  Name,
  Constant,
  List,
  Tuple,
  Set,
  Dict,
  DictEntry,
  Starred,
  Lambda,
  IfExp,
  NamedExpr,
  Yield,
  YieldFrom,
  Await,
  ListComp,
  SetComp,
  DictComp,
  GeneratorExp,
  Comprehension,
  Arguments,
  Arg,
  // anything the analyzer does not model; rules treat it as "no information"
  Opaque,
};

/// Position of a node inside its parent.
enum class Role : std::uint8_t {
  None,
  Body,
  OrElse,
  FinalBody,
  Handler,
  Target,
  Value,
  Iter,
  Test,
  Func,
  Arg,
  Keyword,
  Left,
  Right,
  Operand,
  Comparator,
  Slice,
  Lower,
  Upper,
  Step,
  Element,
  Key,
  Decorator,
  Base,
  Params,
  Param,
  Default,
  Annotation,
  Returns,
  Item,
  ContextExpr,
  OptionalVars,
  Type,
  Cause,
  Message,
  Generator,
  Condition,
  Subject,
};

enum class LiteralKind : std::uint8_t {
  None,  // not a literal
  Int,
  Float,
  Complex,
  String,
  Bytes,
  FString,
  True,
  False,
  NoneValue,
  Ellipsis,
};

/// A syntax tree node.
///
/// `text` holds the kind-specific payload:
///   Name: identifier; Attribute: member name; Keyword: argument name (empty
///   for `**kw`); FunctionDef/ClassDef: defined name; Alias: dotted module or
///   symbol name; ImportFrom: module without leading dots; Arg: parameter
///   name; BinOp/UnaryOp/BoolOp/AugAssign: operator spelling; Constant:
///   numeric source text, or the raw contents between the quotes for strings
///   (implicitly concatenated parts are joined, escapes are not processed).
/// `detail` holds the secondary payload: Alias `as` name, Arg star prefix
/// ("*" or "**").
struct Node {
  NodeKind kind = NodeKind::Opaque;
  Role role = Role::None;
  Span span;
  const Node* parent = nullptr;
  std::string text;
  std::string detail;
  std::vector<std::string> ops;  // Compare operators, one per comparator
  LiteralKind literal = LiteralKind::None;
  bool is_async = false;
  int level = 0;  // ImportFrom relative level
  std::vector<const Node*> children;

  const Node* child(Role r) const;
  std::vector<const Node*> children_of(Role r) const;
  bool is_statement() const;
  bool is_expression() const;
  bool is_loop() const { return kind == NodeKind::For || kind == NodeKind::While; }
  bool is_scope() const {
    return kind == NodeKind::Module || kind == NodeKind::FunctionDef ||
           kind == NodeKind::ClassDef || kind == NodeKind::Lambda;
  }
};

std::string_view to_string(NodeKind kind);

/// Owns every node of one parsed file. Node addresses are stable.
class Ast {
 public:
  Ast() = default;
  Ast(const Ast&) = delete;
  Ast& operator=(const Ast&) = delete;
  Ast(Ast&&) = default;
  Ast& operator=(Ast&&) = default;

  Node& make(NodeKind kind, Span span);
  const Node* root() const { return root_; }
  void set_root(const Node* root);
  std::size_t size() const { return nodes_.size(); }

 private:
  std::deque<Node> nodes_;
  const Node* root_ = nullptr;
};

/// Pre-order walk. Return false from `visit` to skip a node's children.
void walk(const Node* node, const std::function<bool(const Node&)>& visit);

/// Nearest ancestor (or self) that is a statement.
const Node* enclosing_statement(const Node* node);

/// Innermost function/class/lambda/module containing the node (never self).
const Node* enclosing_scope(const Node* node);

/// Dotted spelling of a Name/Attribute chain, e.g. "self.model"; empty when
/// the expression is anything else.
std::string dotted_name(const Node* expr);

}  // namespace mlint
