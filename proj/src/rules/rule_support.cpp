#include "mlint/rules/rule_support.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace mlint::rules {

std::vector<const Node*> positional_args(const Node* call) {
  std::vector<const Node*> out;
  for (const Node* c : call->children) {
    if (c->role == Role::Arg) out.push_back(c);
  }
  return out;
}

const Node* keyword_arg(const Node* call, std::string_view name) {
  for (const Node* c : call->children) {
    if (c->kind == NodeKind::Keyword && c->text == name) return c->child(Role::Value);
  }
  return nullptr;
}

bool has_keyword(const Node* call, std::string_view name) { return keyword_arg(call, name) != nullptr; }

bool has_kwargs_splat(const Node* call) {
  return std::any_of(call->children.begin(), call->children.end(),
                     [](const Node* c) { return c->kind == NodeKind::Keyword && c->text.empty(); });
}

bool has_any_argument(const Node* call) {
  return std::any_of(call->children.begin(), call->children.end(),
                     [](const Node* c) { return c->role == Role::Arg || c->role == Role::Keyword; });
}

bool is_true_literal(const Node* n) { return n && n->kind == NodeKind::Constant && n->literal == LiteralKind::True; }

bool is_false_literal(const Node* n) {
  return n && n->kind == NodeKind::Constant && n->literal == LiteralKind::False;
}

bool is_string_literal(const Node* n) {
  return n && n->kind == NodeKind::Constant && n->literal == LiteralKind::String;
}

std::optional<double> numeric_value(const Node* n) {
  if (!n) return std::nullopt;
  if (n->kind == NodeKind::UnaryOp && (n->text == "-" || n->text == "+")) {
    auto inner = numeric_value(n->child(Role::Operand));
    if (!inner) return std::nullopt;
    return n->text == "-" ? -*inner : *inner;
  }
  if (n->kind != NodeKind::Constant) return std::nullopt;
  if (n->literal != LiteralKind::Int && n->literal != LiteralKind::Float) return std::nullopt;
  std::string digits;
  for (char c : n->text) {
    if (c != '_') digits.push_back(c);
  }
  if (n->literal == LiteralKind::Int && digits.size() > 2 && digits[0] == '0' &&
      (digits[1] == 'x' || digits[1] == 'X' || digits[1] == 'o' || digits[1] == 'O' || digits[1] == 'b' ||
       digits[1] == 'B')) {
    int base = (digits[1] == 'x' || digits[1] == 'X') ? 16 : (digits[1] == 'o' || digits[1] == 'O') ? 8 : 2;
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(digits.data() + 2, digits.data() + digits.size(), v, base);
    if (ec != std::errc()) return std::nullopt;
    return static_cast<double>(v);
  }
  try {
    return std::stod(digits);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool is_ancestor(const Node* ancestor, const Node* node) {
  for (const Node* cur = node; cur; cur = cur->parent) {
    if (cur == ancestor) return true;
  }
  return false;
}

void walk_scope(const Node* scope, const std::function<void(const Node&)>& visit) {
  walk(scope, [&](const Node& n) {
    if (&n != scope && n.is_scope()) return false;
    visit(n);
    return true;
  });
}

Span header_span(const Node* loop) {
  const Node* last = loop->kind == NodeKind::For ? loop->child(Role::Iter) : loop->child(Role::Test);
  if (!last) return loop->span;
  return Span{loop->span.begin, last->span.end};
}

namespace {

void count_bindings(const Node* target, std::string_view name, int& count) {
  walk(target, [&](const Node& n) {
    if (n.kind == NodeKind::Name && n.text == name &&
        (n.role == Role::Target || n.role == Role::Element || n.role == Role::Value || n.role == Role::OptionalVars)) {
      ++count;
    }
    return n.kind != NodeKind::Subscript && n.kind != NodeKind::Attribute;
  });
}

}  // namespace

const Node* single_assignment_value(const Node* scope, std::string_view name) {
  int count = 0;
  const Node* value = nullptr;
  walk(scope, [&](const Node& n) {
    if (&n != scope && n.is_scope()) {
      if (n.kind != NodeKind::Lambda && n.text == name) ++count;
      return false;
    }
    switch (n.kind) {
      case NodeKind::Assign:
        for (const Node* t : n.children_of(Role::Target)) {
          if (t->kind == NodeKind::Name && t->text == name) {
            ++count;
            value = n.child(Role::Value);
          } else if (t->kind != NodeKind::Name) {
            count_bindings(t, name, count);
          }
        }
        break;
      case NodeKind::AugAssign:
      case NodeKind::AnnAssign:
      case NodeKind::For:
      case NodeKind::Comprehension: {
        const Node* t = n.child(Role::Target);
        if (t && t->kind == NodeKind::Name && t->text == name) ++count;
        else if (t) count_bindings(t, name, count);
        break;
      }
      case NodeKind::WithItem:
        if (const Node* t = n.child(Role::OptionalVars)) {
          if (t->kind == NodeKind::Name && t->text == name) ++count;
          else count_bindings(t, name, count);
        }
        break;
      case NodeKind::NamedExpr:
      case NodeKind::ExceptHandler: {
        const Node* t = n.child(Role::Target);
        if (t && t->kind == NodeKind::Name && t->text == name) ++count;
        break;
      }
      case NodeKind::Alias: {
        std::string_view local = !n.detail.empty() ? std::string_view(n.detail) : std::string_view(n.text);
        if (n.parent && n.parent->kind == NodeKind::Import && n.detail.empty()) {
          local = local.substr(0, local.find('.'));
        }
        if (local == name) ++count;
        break;
      }
      case NodeKind::Delete:
        for (const Node* t : n.children) {
          if (t->kind == NodeKind::Name && t->text == name) ++count;
        }
        break;
      default:
        break;
    }
    return true;
  });
  return count == 1 ? value : nullptr;
}

std::string_view last_segment(std::string_view dotted) {
  auto dot = dotted.rfind('.');
  return dot == std::string_view::npos ? dotted : dotted.substr(dot + 1);
}

bool contains(const std::vector<std::string>& items, std::string_view value) {
  return std::find(items.begin(), items.end(), value) != items.end();
}

bool contains_method_call(const Node* expr, const std::vector<std::string_view>& methods) {
  bool found = false;
  walk(expr, [&](const Node& n) {
    if (found) return false;
    if (n.kind == NodeKind::Call) {
      const Node* func = n.child(Role::Func);
      if (func && func->kind == NodeKind::Attribute &&
          std::find(methods.begin(), methods.end(), func->text) != methods.end()) {
        found = true;
      }
    }
    return true;
  });
  return found;
}

bool is_arithmetic_op(std::string_view op) {
  return op == "+" || op == "-" || op == "*" || op == "/" || op == "//" || op == "%" || op == "**";
}

std::string excerpt(const SourceUnit& unit, const Node* node, std::size_t max_length) {
  std::string_view text = unit.slice(node->span);
  std::string out;
  bool space = false;
  for (char c : text) {
    if (c == '\n' || c == '\r' || c == '\t' || c == ' ') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out.push_back(' ');
    space = false;
    out.push_back(c);
  }
  if (out.size() > max_length) {
    out.resize(max_length);
    // Do not cut inside a UTF-8 sequence.
    while (!out.empty() && (static_cast<unsigned char>(out.back()) & 0xC0) == 0x80) out.pop_back();
    if (!out.empty() && (static_cast<unsigned char>(out.back()) & 0x80)) out.pop_back();
    out += "...";
  }
  return out;
}

FileRule::FileRule(std::string_view id, Check check) : descriptor_(find_rule(id)), check_(std::move(check)) {
  if (!descriptor_) throw std::logic_error("no descriptor for rule " + std::string(id));
}

}  // namespace mlint::rules
