#include "mlint/frontend/ast.hpp"

#include <vector>

namespace mlint {

const Node* Node::child(Role r) const {
  for (const Node* c : children) {
    if (c->role == r) return c;
  }
  return nullptr;
}

std::vector<const Node*> Node::children_of(Role r) const {
  std::vector<const Node*> out;
  for (const Node* c : children) {
    if (c->role == r) out.push_back(c);
  }
  return out;
}

bool Node::is_statement() const {
  switch (kind) {
    case NodeKind::Import:
    case NodeKind::ImportFrom:
    case NodeKind::Assign:
    case NodeKind::AugAssign:
    case NodeKind::AnnAssign:
    case NodeKind::ExprStmt:
    case NodeKind::For:
    case NodeKind::While:
    case NodeKind::If:
    case NodeKind::FunctionDef:
    case NodeKind::ClassDef:
    case NodeKind::Return:
    case NodeKind::Pass:
    case NodeKind::Break:
    case NodeKind::Continue:
    case NodeKind::Raise:
    case NodeKind::Global:
    case NodeKind::Nonlocal:
    case NodeKind::Delete:
    case NodeKind::Assert:
    case NodeKind::With:
    case NodeKind::Try:
      return true;
    case NodeKind::Opaque:
      return parent != nullptr && (parent->kind == NodeKind::Module || role == Role::Body ||
                                   role == Role::OrElse || role == Role::FinalBody);
    default:
      return false;
  }
}

bool Node::is_expression() const {
  switch (kind) {
    case NodeKind::Call:
    case NodeKind::Attribute:
    case NodeKind::Subscript:
    case NodeKind::Slice:
    case NodeKind::Compare:
    case NodeKind::BinOp:
    case NodeKind::UnaryOp:
    case NodeKind::BoolOp:
    case NodeKind::Name:
    case NodeKind::Constant:
    case NodeKind::List:
    case NodeKind::Tuple:
    case NodeKind::Set:
    case NodeKind::Dict:
    case NodeKind::Starred:
    case NodeKind::Lambda:
    case NodeKind::IfExp:
    case NodeKind::NamedExpr:
    case NodeKind::Yield:
    case NodeKind::YieldFrom:
    case NodeKind::Await:
    case NodeKind::ListComp:
    case NodeKind::SetComp:
    case NodeKind::DictComp:
    case NodeKind::GeneratorExp:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Module: return "Module";
    case NodeKind::Import: return "Import";
    case NodeKind::ImportFrom: return "ImportFrom";
    case NodeKind::Alias: return "Alias";
    case NodeKind::Assign: return "Assign";
    case NodeKind::AugAssign: return "AugAssign";
    case NodeKind::AnnAssign: return "AnnAssign";
    case NodeKind::ExprStmt: return "Expr";
    case NodeKind::For: return "For";
    case NodeKind::While: return "While";
    case NodeKind::If: return "If";
    case NodeKind::FunctionDef: return "FunctionDef";
    case NodeKind::ClassDef: return "ClassDef";
    case NodeKind::Return: return "Return";
    case NodeKind::Pass: return "Pass";
    case NodeKind::Break: return "Break";
    case NodeKind::Continue: return "Continue";
    case NodeKind::Raise: return "Raise";
    case NodeKind::Global: return "Global";
    case NodeKind::Nonlocal: return "Nonlocal";
    case NodeKind::Delete: return "Delete";
    case NodeKind::Assert: return "Assert";
    case NodeKind::With: return "With";
    case NodeKind::WithItem: return "WithItem";
    case NodeKind::Try: return "Try";
    case NodeKind::ExceptHandler: return "ExceptHandler";
    case NodeKind::Call: return "Call";
    case NodeKind::Keyword: return "Keyword";
    case NodeKind::Attribute: return "Attribute";
    case NodeKind::Subscript: return "Subscript";
    case NodeKind::Slice: return "Slice";
    case NodeKind::Compare: return "Compare";
    case NodeKind::BinOp: return "BinOp";
    case NodeKind::UnaryOp: return "UnaryOp";
    case NodeKind::BoolOp: return "BoolOp";
    case NodeKind::Name: return "Name";
    case NodeKind::Constant: return "Constant";
    case NodeKind::List: return "List";
    case NodeKind::Tuple: return "Tuple";
    case NodeKind::Set: return "Set";
    case NodeKind::Dict: return "Dict";
    case NodeKind::DictEntry: return "DictEntry";
    case NodeKind::Starred: return "Starred";
    case NodeKind::Lambda: return "Lambda";
    case NodeKind::IfExp: return "IfExp";
    case NodeKind::NamedExpr: return "NamedExpr";
    case NodeKind::Yield: return "Yield";
    case NodeKind::YieldFrom: return "YieldFrom";
    case NodeKind::Await: return "Await";
    case NodeKind::ListComp: return "ListComp";
    case NodeKind::SetComp: return "SetComp";
    case NodeKind::DictComp: return "DictComp";
    case NodeKind::GeneratorExp: return "GeneratorExp";
    case NodeKind::Comprehension: return "Comprehension";
    case NodeKind::Arguments: return "Arguments";
    case NodeKind::Arg: return "Arg";
    case NodeKind::Opaque: return "Opaque";
  }
  return "Opaque";
}

Node& Ast::make(NodeKind kind, Span span) {
  Node& node = nodes_.emplace_back();
  node.kind = kind;
  node.span = span;
  return node;
}

void Ast::set_root(const Node* root) { root_ = root; }

void walk(const Node* node, const std::function<bool(const Node&)>& visit) {
  if (node == nullptr) return;
  // Explicit stack: trees from deeply nested input must not exhaust the call stack.
  std::vector<const Node*> stack{node};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!visit(*n)) continue;
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) stack.push_back(*it);
  }
}

const Node* enclosing_statement(const Node* node) {
  while (node != nullptr && !node->is_statement()) node = node->parent;
  return node;
}

const Node* enclosing_scope(const Node* node) {
  if (node == nullptr) return nullptr;
  for (const Node* p = node->parent; p != nullptr; p = p->parent) {
    if (p->is_scope()) return p;
  }
  return nullptr;
}

std::string dotted_name(const Node* expr) {
  std::vector<const std::string*> parts;
  while (expr != nullptr && expr->kind == NodeKind::Attribute) {
    parts.push_back(&expr->text);
    expr = expr->child(Role::Value);
  }
  if (expr == nullptr || expr->kind != NodeKind::Name) return {};
  std::string out = expr->text;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    out += '.';
    out += **it;
  }
  return out;
}

}  // namespace mlint
