#include "mlint/frontend/parser.hpp"

#include <cctype>
#include <set>
#include <string>

namespace mlint {

namespace {

bool is_augassign(std::string_view op) {
  return op == "+=" || op == "-=" || op == "*=" || op == "/=" || op == "//=" || op == "%=" || op == "@=" ||
         op == "&=" || op == "|=" || op == "^=" || op == ">>=" || op == "<<=" || op == "**=";
}

std::string_view describe(const Node& node) {
  switch (node.kind) {
    case NodeKind::Call:
      return "function call";
    case NodeKind::Constant:
      return "literal";
    case NodeKind::Compare:
      return "comparison";
    case NodeKind::BinOp:
    case NodeKind::UnaryOp:
    case NodeKind::BoolOp:
      return "expression";
    case NodeKind::Lambda:
      return "lambda";
    case NodeKind::IfExp:
      return "conditional expression";
    case NodeKind::NamedExpr:
      return "named expression";
    case NodeKind::Dict:
      return "dict literal";
    case NodeKind::Set:
      return "set display";
    case NodeKind::ListComp:
    case NodeKind::SetComp:
    case NodeKind::DictComp:
      return "comprehension";
    case NodeKind::GeneratorExp:
      return "generator expression";
    case NodeKind::Yield:
    case NodeKind::YieldFrom:
      return "yield expression";
    case NodeKind::Await:
      return "await expression";
    default:
      return "expression";
  }
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<Token>& tokens, Ast& ast)
      : text_(text), toks_(tokens), ast_(ast) {}

  const Node* parse_module() {
    Node& module = ast_.make(NodeKind::Module, {0, static_cast<std::uint32_t>(text_.size())});
    while (cur().kind != TokenKind::EndMarker) {
      if (cur().kind == TokenKind::Newline) {
        advance();
        continue;
      }
      if (cur().kind == TokenKind::Indent) fail("unexpected indent");
      if (cur().kind == TokenKind::Dedent) fail("unindent does not match any outer indentation level");
      std::vector<Node*> stmts;
      parse_statement(stmts);
      for (Node* s : stmts) add(module, s, Role::Body);
    }
    return &module;
  }

 private:
  // ---- token helpers -------------------------------------------------------

  const Token& cur() const { return toks_[pos_]; }
  const Token& ahead(std::size_t n) const {
    std::size_t i = pos_ + n;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at_op(std::string_view op) const { return cur().is_op(op); }
  bool at_kw(std::string_view kw) const { return cur().is_name(kw); }

  void advance() {
    if (cur().kind != TokenKind::Newline && cur().kind != TokenKind::Indent &&
        cur().kind != TokenKind::Dedent) {
      last_end_ = cur().span.end;
    }
    if (cur().kind != TokenKind::EndMarker) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(cur().span.begin, msg); }
  [[noreturn]] void fail_at(std::uint32_t offset, const std::string& msg) const {
    throw SyntaxError(offset, msg);
  }

  void expect_op(std::string_view op) {
    if (!at_op(op)) {
      if (cur().kind == TokenKind::Newline || cur().kind == TokenKind::EndMarker) {
        fail("expected '" + std::string(op) + "'");
      }
      fail("invalid syntax");
    }
    advance();
  }
  void expect_kw(std::string_view kw) {
    if (!at_kw(kw)) fail("expected '" + std::string(kw) + "'");
    advance();
  }

  std::string expect_identifier() {
    if (cur().kind != TokenKind::Name || is_python_keyword(cur().text)) fail("invalid syntax");
    std::string name(cur().text);
    advance();
    return name;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) parser.fail("too many nested expressions or blocks");
    }
    ~DepthGuard() { --parser.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;
    Parser& parser;
  };

  // ---- node helpers --------------------------------------------------------

  Node& make(NodeKind kind, std::uint32_t begin) { return ast_.make(kind, {begin, begin}); }
  Node& finish(Node& node) {
    node.span.end = std::max(node.span.begin, last_end_);
    return node;
  }
  static void add(Node& parent, Node* child, Role role) {
    if (child == nullptr) return;
    child->role = role;
    child->parent = &parent;
    parent.children.push_back(child);
  }

  // ---- statements ----------------------------------------------------------

  void parse_statement(std::vector<Node*>& out) {
    DepthGuard guard(*this);
    const Token& t = cur();
    if (t.kind == TokenKind::Name) {
      if (t.text == "if") return out.push_back(parse_if());
      if (t.text == "while") return out.push_back(parse_while());
      if (t.text == "for") return out.push_back(parse_for(t.span.begin, false));
      if (t.text == "try") return out.push_back(parse_try());
      if (t.text == "with") return out.push_back(parse_with(t.span.begin, false));
      if (t.text == "def") return out.push_back(parse_def(t.span.begin, {}, false));
      if (t.text == "class") return out.push_back(parse_class(t.span.begin, {}));
      if (t.text == "async") return out.push_back(parse_async(t.span.begin, {}));
      if (t.text == "match" && looks_like_match()) return out.push_back(parse_match());
    }
    if (t.is_op("@")) return out.push_back(parse_decorated());
    parse_simple_statements(out);
  }

  void parse_block(Node& owner, Role role) {
    expect_op(":");
    if (cur().kind == TokenKind::Newline) {
      advance();
      if (cur().kind != TokenKind::Indent) fail("expected an indented block");
      advance();
      while (cur().kind != TokenKind::Dedent && cur().kind != TokenKind::EndMarker) {
        if (cur().kind == TokenKind::Newline) {
          advance();
          continue;
        }
        if (cur().kind == TokenKind::Indent) fail("unexpected indent");
        std::vector<Node*> stmts;
        parse_statement(stmts);
        for (Node* s : stmts) add(owner, s, role);
      }
      if (cur().kind == TokenKind::Dedent) advance();
      return;
    }
    std::vector<Node*> stmts;
    parse_simple_statements(stmts);
    for (Node* s : stmts) add(owner, s, role);
  }

  void parse_simple_statements(std::vector<Node*>& out) {
    while (true) {
      out.push_back(parse_simple_statement());
      if (at_op(";")) {
        advance();
        if (cur().kind == TokenKind::Newline || cur().kind == TokenKind::EndMarker) break;
        continue;
      }
      break;
    }
    if (cur().kind == TokenKind::Newline) {
      advance();
      return;
    }
    if (cur().kind == TokenKind::EndMarker) return;
    fail("invalid syntax");
  }

  Node* parse_simple_statement() {
    const Token& t = cur();
    std::uint32_t begin = t.span.begin;
    if (t.kind == TokenKind::Name) {
      if (t.text == "pass") return simple_keyword(NodeKind::Pass);
      if (t.text == "break") return simple_keyword(NodeKind::Break);
      if (t.text == "continue") return simple_keyword(NodeKind::Continue);
      if (t.text == "return") {
        advance();
        Node& node = make(NodeKind::Return, begin);
        if (starts_expression()) add(node, parse_star_expressions(), Role::Value);
        return &finish(node);
      }
      if (t.text == "raise") {
        advance();
        Node& node = make(NodeKind::Raise, begin);
        if (starts_expression()) {
          add(node, parse_expression(), Role::Value);
          if (at_kw("from")) {
            advance();
            add(node, parse_expression(), Role::Cause);
          }
        }
        return &finish(node);
      }
      if (t.text == "global" || t.text == "nonlocal") {
        Node& node = make(t.text == "global" ? NodeKind::Global : NodeKind::Nonlocal, begin);
        advance();
        do {
          if (at_op(",")) advance();
          Node& name = make(NodeKind::Name, cur().span.begin);
          name.text = expect_identifier();
          add(node, &finish(name), Role::Target);
        } while (at_op(","));
        return &finish(node);
      }
      if (t.text == "del") {
        advance();
        Node& node = make(NodeKind::Delete, begin);
        Node* targets = parse_target_list();
        check_target(*targets, /*allow_star=*/false, "delete");
        add(node, targets, Role::Target);
        return &finish(node);
      }
      if (t.text == "assert") {
        advance();
        Node& node = make(NodeKind::Assert, begin);
        add(node, parse_expression(), Role::Test);
        if (at_op(",")) {
          advance();
          add(node, parse_expression(), Role::Message);
        }
        return &finish(node);
      }
      if (t.text == "import") return parse_import();
      if (t.text == "from") return parse_from_import();
    }
    return parse_expression_statement();
  }

  Node* simple_keyword(NodeKind kind) {
    Node& node = make(kind, cur().span.begin);
    advance();
    return &finish(node);
  }

  Node* parse_expression_statement() {
    std::uint32_t begin = cur().span.begin;
    Node* first = at_kw("yield") ? parse_yield() : parse_star_expressions();
    if (at_op(":")) {
      if (first->kind == NodeKind::Tuple) fail_at(first->span.begin, "only single target (not tuple) can be annotated");
      if (first->kind == NodeKind::List) fail_at(first->span.begin, "only single target (not list) can be annotated");
      if (first->kind != NodeKind::Name && first->kind != NodeKind::Attribute &&
          first->kind != NodeKind::Subscript) {
        fail_at(first->span.begin, "illegal target for annotation");
      }
      advance();
      Node& node = make(NodeKind::AnnAssign, begin);
      add(node, first, Role::Target);
      add(node, parse_expression(), Role::Annotation);
      if (at_op("=")) {
        advance();
        add(node, at_kw("yield") ? parse_yield() : parse_star_expressions(), Role::Value);
      }
      return &finish(node);
    }
    if (at_op("=")) {
      Node& node = make(NodeKind::Assign, begin);
      std::vector<Node*> targets{first};
      Node* value = nullptr;
      while (at_op("=")) {
        advance();
        value = at_kw("yield") ? parse_yield() : parse_star_expressions();
        if (at_op("=")) targets.push_back(value);
      }
      for (Node* target : targets) {
        check_target(*target, /*allow_star=*/false, "assign to");
        add(node, target, Role::Target);
      }
      add(node, value, Role::Value);
      return &finish(node);
    }
    if (cur().kind == TokenKind::Op && is_augassign(cur().text)) {
      if (first->kind != NodeKind::Name && first->kind != NodeKind::Attribute &&
          first->kind != NodeKind::Subscript) {
        fail_at(first->span.begin, "'" + std::string(describe(*first)) + "' is an illegal expression for augmented assignment");
      }
      Node& node = make(NodeKind::AugAssign, begin);
      node.text = std::string(cur().text.substr(0, cur().text.size() - 1));
      advance();
      add(node, first, Role::Target);
      add(node, at_kw("yield") ? parse_yield() : parse_star_expressions(), Role::Value);
      return &finish(node);
    }
    if (first->kind == NodeKind::Starred) fail_at(first->span.begin, "can't use starred expression here");
    Node& node = make(NodeKind::ExprStmt, begin);
    add(node, first, Role::Value);
    return &finish(node);
  }

  // Validates an assignment / deletion / loop target.
  void check_target(const Node& target, bool allow_star, std::string_view verb) const {
    switch (target.kind) {
      case NodeKind::Name:
      case NodeKind::Attribute:
      case NodeKind::Subscript:
        return;
      case NodeKind::Starred:
        if (!allow_star) fail_at(target.span.begin, "starred assignment target must be in a list or tuple");
        check_target(*target.child(Role::Value), false, verb);
        return;
      case NodeKind::Tuple:
      case NodeKind::List:
        for (const Node* element : target.children) {
          check_target(*element, verb != "delete", verb);
        }
        return;
      default:
        fail_at(target.span.begin, "cannot " + std::string(verb) + " " + std::string(describe(target)));
    }
  }

  Node* parse_import() {
    Node& node = make(NodeKind::Import, cur().span.begin);
    advance();
    do {
      if (at_op(",")) advance();
      Node& alias = make(NodeKind::Alias, cur().span.begin);
      alias.text = parse_dotted_name();
      if (at_kw("as")) {
        advance();
        alias.detail = expect_identifier();
      }
      add(node, &finish(alias), Role::Item);
    } while (at_op(","));
    return &finish(node);
  }

  std::string parse_dotted_name() {
    std::string name = expect_identifier();
    while (at_op(".")) {
      advance();
      name += ".";
      name += expect_identifier();
    }
    return name;
  }

  Node* parse_from_import() {
    Node& node = make(NodeKind::ImportFrom, cur().span.begin);
    advance();
    while (at_op(".") || at_op("...")) {
      node.level += at_op(".") ? 1 : 3;
      advance();
    }
    if (!at_kw("import")) node.text = parse_dotted_name();
    if (node.level == 0 && node.text.empty()) fail("invalid syntax");
    expect_kw("import");
    if (at_op("*")) {
      Node& alias = make(NodeKind::Alias, cur().span.begin);
      alias.text = "*";
      advance();
      add(node, &finish(alias), Role::Item);
      return &finish(node);
    }
    bool parenthesized = at_op("(");
    if (parenthesized) advance();
    while (true) {
      Node& alias = make(NodeKind::Alias, cur().span.begin);
      alias.text = expect_identifier();
      if (at_kw("as")) {
        advance();
        alias.detail = expect_identifier();
      }
      add(node, &finish(alias), Role::Item);
      if (!at_op(",")) break;
      advance();
      if (parenthesized && at_op(")")) break;
      if (!parenthesized && (cur().kind == TokenKind::Newline || at_op(";"))) {
        fail("trailing comma not allowed without surrounding parentheses");
      }
    }
    if (parenthesized) expect_op(")");
    return &finish(node);
  }

  Node* parse_if() {
    Node& node = make(NodeKind::If, cur().span.begin);
    advance();
    add(node, parse_named_expression(), Role::Test);
    parse_block(node, Role::Body);
    if (at_kw("elif")) {
      add(node, parse_if(), Role::OrElse);
    } else if (at_kw("else")) {
      advance();
      parse_block(node, Role::OrElse);
    }
    return &finish(node);
  }

  Node* parse_while() {
    Node& node = make(NodeKind::While, cur().span.begin);
    advance();
    add(node, parse_named_expression(), Role::Test);
    parse_block(node, Role::Body);
    parse_else(node);
    return &finish(node);
  }

  void parse_else(Node& node) {
    if (at_kw("else")) {
      advance();
      parse_block(node, Role::OrElse);
    }
  }

  Node* parse_for(std::uint32_t begin, bool is_async) {
    Node& node = make(NodeKind::For, begin);
    node.is_async = is_async;
    expect_kw("for");
    Node* target = parse_target_list();
    check_target(*target, false, "assign to");
    add(node, target, Role::Target);
    expect_kw("in");
    add(node, parse_star_expressions(), Role::Iter);
    parse_block(node, Role::Body);
    parse_else(node);
    return &finish(node);
  }

  // star_targets: comma separated bitwise-or level expressions, so that the
  // `in` of a for loop is not swallowed by a comparison.
  Node* parse_target_list() {
    std::uint32_t begin = cur().span.begin;
    Node* first = parse_target_element();
    if (!at_op(",")) return first;
    Node& tuple = make(NodeKind::Tuple, begin);
    add(tuple, first, Role::Element);
    while (at_op(",")) {
      advance();
      if (!starts_expression()) break;
      add(tuple, parse_target_element(), Role::Element);
    }
    return &finish(tuple);
  }

  Node* parse_target_element() {
    if (at_op("*")) {
      Node& star = make(NodeKind::Starred, cur().span.begin);
      advance();
      add(star, parse_bitor(), Role::Value);
      return &finish(star);
    }
    return parse_bitor();
  }

  Node* parse_try() {
    Node& node = make(NodeKind::Try, cur().span.begin);
    advance();
    parse_block(node, Role::Body);
    bool saw_handler = false;
    bool saw_bare = false;
    while (at_kw("except")) {
      if (saw_bare) fail("default 'except:' must be last");
      Node& handler = make(NodeKind::ExceptHandler, cur().span.begin);
      advance();
      if (at_op("*")) advance();
      if (!at_op(":")) {
        add(handler, parse_expression(), Role::Type);
        if (at_kw("as")) {
          advance();
          Node& name = make(NodeKind::Name, cur().span.begin);
          name.text = expect_identifier();
          add(handler, &finish(name), Role::Target);
        }
      } else {
        saw_bare = true;
      }
      parse_block(handler, Role::Body);
      add(node, &finish(handler), Role::Handler);
      saw_handler = true;
    }
    if (at_kw("else")) {
      if (!saw_handler) fail("invalid syntax");
      advance();
      parse_block(node, Role::OrElse);
    }
    bool saw_finally = false;
    if (at_kw("finally")) {
      advance();
      parse_block(node, Role::FinalBody);
      saw_finally = true;
    }
    if (!saw_handler && !saw_finally) fail("expected 'except' or 'finally' block");
    return &finish(node);
  }

  Node* parse_with(std::uint32_t begin, bool is_async) {
    Node& node = make(NodeKind::With, begin);
    node.is_async = is_async;
    expect_kw("with");
    if (at_op("(")) {
      std::size_t save = pos_;
      std::uint32_t save_end = last_end_;
      std::size_t save_children = node.children.size();
      try {
        advance();
        while (true) {
          add(node, parse_with_item(), Role::Item);
          if (!at_op(",")) break;
          advance();
          if (at_op(")")) break;
        }
        expect_op(")");
        if (!at_op(":")) throw SyntaxError(cur().span.begin, "not a parenthesized with");
      } catch (const SyntaxError&) {
        pos_ = save;
        last_end_ = save_end;
        node.children.resize(save_children);
        parse_with_items(node);
      }
    } else {
      parse_with_items(node);
    }
    parse_block(node, Role::Body);
    return &finish(node);
  }

  void parse_with_items(Node& node) {
    while (true) {
      add(node, parse_with_item(), Role::Item);
      if (!at_op(",")) break;
      advance();
    }
  }

  Node* parse_with_item() {
    Node& item = make(NodeKind::WithItem, cur().span.begin);
    add(item, parse_expression(), Role::ContextExpr);
    if (at_kw("as")) {
      advance();
      Node* target = parse_target_element();
      check_target(*target, false, "assign to");
      add(item, target, Role::OptionalVars);
    }
    return &finish(item);
  }

  Node* parse_decorated() {
    std::uint32_t begin = cur().span.begin;
    std::vector<Node*> decorators;
    while (at_op("@")) {
      advance();
      decorators.push_back(parse_named_expression());
      if (cur().kind != TokenKind::Newline) fail("invalid syntax");
      advance();
    }
    if (at_kw("def")) return parse_def(begin, decorators, false);
    if (at_kw("class")) return parse_class(begin, decorators);
    if (at_kw("async")) return parse_async(begin, decorators);
    fail("invalid syntax");
  }

  Node* parse_async(std::uint32_t begin, const std::vector<Node*>& decorators) {
    expect_kw("async");
    if (at_kw("def")) return parse_def(begin, decorators, true);
    if (!decorators.empty()) fail("invalid syntax");
    if (at_kw("for")) return parse_for(begin, true);
    if (at_kw("with")) return parse_with(begin, true);
    fail("invalid syntax");
  }

  Node* parse_def(std::uint32_t begin, const std::vector<Node*>& decorators, bool is_async) {
    Node& node = make(NodeKind::FunctionDef, begin);
    node.is_async = is_async;
    for (Node* d : decorators) add(node, d, Role::Decorator);
    expect_kw("def");
    node.text = expect_identifier();
    expect_op("(");
    add(node, parse_parameters(")", /*annotations=*/true), Role::Params);
    expect_op(")");
    if (at_op("->")) {
      advance();
      add(node, parse_expression(), Role::Returns);
    }
    parse_block(node, Role::Body);
    return &finish(node);
  }

  Node* parse_parameters(std::string_view closer, bool annotations) {
    Node& args = make(NodeKind::Arguments, cur().span.begin);
    std::set<std::string> seen;
    bool saw_default = false;
    bool saw_star = false;
    bool saw_kwargs = false;
    bool saw_slash = false;
    bool bare_star_pending = false;
    std::size_t count = 0;
    while (!at_op(closer)) {
      if (saw_kwargs) fail("arguments cannot follow var-keyword argument");
      if (at_op("/")) {
        if (count == 0 || saw_slash || saw_star) fail("invalid syntax");
        saw_slash = true;
        advance();
      } else if (at_op("*") || at_op("**")) {
        bool double_star = at_op("**");
        if (!double_star && saw_star) fail("* argument may appear only once");
        advance();
        if (!double_star && (at_op(",") || at_op(closer))) {
          saw_star = true;
          bare_star_pending = true;
        } else {
          Node& arg = parse_parameter(annotations, seen);
          arg.detail = double_star ? "**" : "*";
          if (at_op("=")) fail("var-positional argument cannot have default value");
          add(args, &finish(arg), Role::Param);
          if (double_star) {
            saw_kwargs = true;
          } else {
            saw_star = true;
          }
        }
      } else {
        Node& arg = parse_parameter(annotations, seen);
        if (at_op("=")) {
          advance();
          add(arg, parse_expression(), Role::Default);
          saw_default = true;
        } else if (saw_default && !saw_star) {
          fail_at(arg.span.begin, "non-default argument follows default argument");
        }
        add(args, &finish(arg), Role::Param);
        bare_star_pending = false;
      }
      ++count;
      if (!at_op(",")) break;
      advance();
    }
    if (bare_star_pending) fail("named arguments must follow bare *");
    return &finish(args);
  }

  Node& parse_parameter(bool annotations, std::set<std::string>& seen) {
    Node& arg = make(NodeKind::Arg, cur().span.begin);
    arg.text = expect_identifier();
    if (!seen.insert(arg.text).second) fail_at(arg.span.begin, "duplicate argument '" + arg.text + "' in function definition");
    if (annotations && at_op(":")) {
      advance();
      add(arg, parse_expression(), Role::Annotation);
    }
    finish(arg);
    return arg;
  }

  Node* parse_class(std::uint32_t begin, const std::vector<Node*>& decorators) {
    Node& node = make(NodeKind::ClassDef, begin);
    for (Node* d : decorators) add(node, d, Role::Decorator);
    expect_kw("class");
    node.text = expect_identifier();
    if (at_op("(")) {
      advance();
      parse_call_arguments(node, Role::Base);
      expect_op(")");
    }
    parse_block(node, Role::Body);
    return &finish(node);
  }

  // `match` is a soft keyword: the line must end in ':' and open a block.
  bool looks_like_match() const {
    const Token& next = ahead(1);
    if (next.kind == TokenKind::Newline || next.kind == TokenKind::EndMarker) return false;
    if (next.kind == TokenKind::Op && next.text != "(" && next.text != "[" && next.text != "{" &&
        next.text != "-" && next.text != "*") {
      return false;
    }
    std::size_t i = pos_ + 1;
    while (i < toks_.size() && toks_[i].kind != TokenKind::Newline && toks_[i].kind != TokenKind::EndMarker) ++i;
    if (i >= toks_.size() || toks_[i].kind != TokenKind::Newline) return false;
    return toks_[i - 1].is_op(":") && i + 1 < toks_.size() && toks_[i + 1].kind == TokenKind::Indent;
  }

  // The subject is parsed; the case block is kept as an opaque region.
  Node* parse_match() {
    Node& node = make(NodeKind::Opaque, cur().span.begin);
    node.text = "match";
    advance();
    add(node, parse_star_named_expressions(), Role::Subject);
    expect_op(":");
    if (cur().kind != TokenKind::Newline) fail("invalid syntax");
    advance();
    if (cur().kind != TokenKind::Indent) fail("expected an indented block");
    advance();
    int depth = 1;
    while (depth > 0 && cur().kind != TokenKind::EndMarker) {
      if (cur().kind == TokenKind::Indent) ++depth;
      if (cur().kind == TokenKind::Dedent) --depth;
      advance();
    }
    return &finish(node);
  }

  // ---- expressions ---------------------------------------------------------

  bool starts_expression() const {
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::Number:
      case TokenKind::String:
        return true;
      case TokenKind::Name:
        return !is_python_keyword(t.text) || t.text == "not" || t.text == "lambda" || t.text == "await" ||
               t.text == "None" || t.text == "True" || t.text == "False";
      case TokenKind::Op:
        return t.text == "(" || t.text == "[" || t.text == "{" || t.text == "-" || t.text == "+" ||
               t.text == "~" || t.text == "*" || t.text == "..." || t.text == "**";
      default:
        return false;
    }
  }

  Node* parse_star_expressions() {
    std::uint32_t begin = cur().span.begin;
    Node* first = parse_star_expression();
    if (!at_op(",")) return first;
    Node& tuple = make(NodeKind::Tuple, begin);
    add(tuple, first, Role::Element);
    while (at_op(",")) {
      advance();
      if (!starts_expression() || at_op("**")) break;
      add(tuple, parse_star_expression(), Role::Element);
    }
    return &finish(tuple);
  }

  Node* parse_star_named_expressions() {
    std::uint32_t begin = cur().span.begin;
    Node* first = parse_star_named_expression();
    if (!at_op(",")) return first;
    Node& tuple = make(NodeKind::Tuple, begin);
    add(tuple, first, Role::Element);
    while (at_op(",")) {
      advance();
      if (!starts_expression() || at_op("**")) break;
      add(tuple, parse_star_named_expression(), Role::Element);
    }
    return &finish(tuple);
  }

  Node* parse_star_expression() {
    if (at_op("*")) {
      Node& star = make(NodeKind::Starred, cur().span.begin);
      advance();
      add(star, parse_bitor(), Role::Value);
      return &finish(star);
    }
    return parse_expression();
  }

  Node* parse_star_named_expression() {
    if (at_op("*")) {
      Node& star = make(NodeKind::Starred, cur().span.begin);
      advance();
      add(star, parse_bitor(), Role::Value);
      return &finish(star);
    }
    return parse_named_expression();
  }

  Node* parse_named_expression() {
    if (cur().kind == TokenKind::Name && !is_python_keyword(cur().text) && ahead(1).is_op(":=")) {
      Node& node = make(NodeKind::NamedExpr, cur().span.begin);
      Node& target = make(NodeKind::Name, cur().span.begin);
      target.text = std::string(cur().text);
      advance();
      add(node, &finish(target), Role::Target);
      advance();
      add(node, parse_expression(), Role::Value);
      return &finish(node);
    }
    Node* expr = parse_expression();
    if (at_op(":=")) fail_at(expr->span.begin, "cannot use assignment expressions with " + std::string(describe(*expr)));
    return expr;
  }

  Node* parse_expression() {
    DepthGuard guard(*this);
    if (at_kw("lambda")) return parse_lambda();
    std::uint32_t begin = cur().span.begin;
    Node* body = parse_disjunction();
    if (at_kw("if")) {
      advance();
      Node& node = make(NodeKind::IfExp, begin);
      add(node, body, Role::Body);
      add(node, parse_disjunction(), Role::Test);
      expect_kw("else");
      add(node, parse_expression(), Role::OrElse);
      return &finish(node);
    }
    return body;
  }

  Node* parse_lambda() {
    Node& node = make(NodeKind::Lambda, cur().span.begin);
    advance();
    add(node, parse_parameters(":", /*annotations=*/false), Role::Params);
    expect_op(":");
    add(node, parse_expression(), Role::Body);
    return &finish(node);
  }

  Node* parse_bool(std::string_view op, Node* (Parser::*operand)()) {
    std::uint32_t begin = cur().span.begin;
    Node* first = (this->*operand)();
    if (!at_kw(op)) return first;
    Node& node = make(NodeKind::BoolOp, begin);
    node.text = std::string(op);
    add(node, first, Role::Operand);
    while (at_kw(op)) {
      advance();
      add(node, (this->*operand)(), Role::Operand);
    }
    return &finish(node);
  }

  Node* parse_disjunction() { return parse_bool("or", &Parser::parse_conjunction); }
  Node* parse_conjunction() { return parse_bool("and", &Parser::parse_inversion); }

  Node* parse_inversion() {
    if (at_kw("not")) {
      DepthGuard guard(*this);
      Node& node = make(NodeKind::UnaryOp, cur().span.begin);
      node.text = "not";
      advance();
      add(node, parse_inversion(), Role::Operand);
      return &finish(node);
    }
    return parse_comparison();
  }

  // Returns the comparison operator at the cursor (consuming it) or empty.
  std::string take_comparison_operator() {
    const Token& t = cur();
    if (t.kind == TokenKind::Op &&
        (t.text == "==" || t.text == "!=" || t.text == "<" || t.text == ">" || t.text == "<=" || t.text == ">=")) {
      std::string op(t.text);
      advance();
      return op;
    }
    if (t.is_name("in")) {
      advance();
      return "in";
    }
    if (t.is_name("not") && ahead(1).is_name("in")) {
      advance();
      advance();
      return "not in";
    }
    if (t.is_name("is")) {
      advance();
      if (at_kw("not")) {
        advance();
        return "is not";
      }
      return "is";
    }
    return {};
  }

  Node* parse_comparison() {
    std::uint32_t begin = cur().span.begin;
    Node* left = parse_bitor();
    std::string op = take_comparison_operator();
    if (op.empty()) return left;
    Node& node = make(NodeKind::Compare, begin);
    add(node, left, Role::Left);
    while (!op.empty()) {
      node.ops.push_back(op);
      add(node, parse_bitor(), Role::Comparator);
      op = take_comparison_operator();
    }
    return &finish(node);
  }

  Node* parse_binary(std::initializer_list<std::string_view> ops, Node* (Parser::*operand)()) {
    std::uint32_t begin = cur().span.begin;
    Node* left = (this->*operand)();
    while (true) {
      bool matched = false;
      for (std::string_view op : ops) {
        if (at_op(op)) {
          matched = true;
          break;
        }
      }
      if (!matched) return left;
      Node& node = make(NodeKind::BinOp, begin);
      node.text = std::string(cur().text);
      advance();
      add(node, left, Role::Left);
      add(node, (this->*operand)(), Role::Right);
      left = &finish(node);
    }
  }

  Node* parse_bitor() { return parse_binary({"|"}, &Parser::parse_xor); }
  Node* parse_xor() { return parse_binary({"^"}, &Parser::parse_bitand); }
  Node* parse_bitand() { return parse_binary({"&"}, &Parser::parse_shift); }
  Node* parse_shift() { return parse_binary({"<<", ">>"}, &Parser::parse_sum); }
  Node* parse_sum() { return parse_binary({"+", "-"}, &Parser::parse_term); }
  Node* parse_term() { return parse_binary({"*", "/", "//", "%", "@"}, &Parser::parse_factor); }

  Node* parse_factor() {
    if (at_op("+") || at_op("-") || at_op("~")) {
      DepthGuard guard(*this);
      Node& node = make(NodeKind::UnaryOp, cur().span.begin);
      node.text = std::string(cur().text);
      advance();
      add(node, parse_factor(), Role::Operand);
      return &finish(node);
    }
    return parse_power();
  }

  Node* parse_power() {
    std::uint32_t begin = cur().span.begin;
    Node* base = parse_await_primary();
    if (!at_op("**")) return base;
    DepthGuard guard(*this);
    Node& node = make(NodeKind::BinOp, begin);
    node.text = "**";
    advance();
    add(node, base, Role::Left);
    add(node, parse_factor(), Role::Right);
    return &finish(node);
  }

  Node* parse_await_primary() {
    if (at_kw("await")) {
      DepthGuard guard(*this);
      Node& node = make(NodeKind::Await, cur().span.begin);
      advance();
      add(node, parse_await_primary(), Role::Value);
      return &finish(node);
    }
    return parse_primary();
  }

  Node* parse_primary() {
    std::uint32_t begin = cur().span.begin;
    Node* expr = parse_atom();
    while (true) {
      if (at_op(".")) {
        advance();
        Node& node = make(NodeKind::Attribute, begin);
        add(node, expr, Role::Value);
        node.text = expect_identifier();
        expr = &finish(node);
      } else if (at_op("(")) {
        DepthGuard guard(*this);
        advance();
        Node& node = make(NodeKind::Call, begin);
        add(node, expr, Role::Func);
        parse_call_arguments(node, Role::Arg);
        expect_op(")");
        expr = &finish(node);
      } else if (at_op("[")) {
        DepthGuard guard(*this);
        advance();
        Node& node = make(NodeKind::Subscript, begin);
        add(node, expr, Role::Value);
        add(node, parse_slices(), Role::Slice);
        expect_op("]");
        expr = &finish(node);
      } else {
        return expr;
      }
    }
  }

  // Arguments of a call or the base list of a class. Positional arguments get
  // `positional_role`; keywords are Keyword nodes.
  void parse_call_arguments(Node& owner, Role positional_role) {
    bool saw_keyword = false;
    bool saw_double_star = false;
    std::size_t count = 0;
    while (!at_op(")")) {
      if (at_op("*")) {
        if (saw_double_star) fail("iterable argument unpacking follows keyword argument unpacking");
        Node& star = make(NodeKind::Starred, cur().span.begin);
        advance();
        add(star, parse_expression(), Role::Value);
        add(owner, &finish(star), positional_role);
      } else if (at_op("**")) {
        Node& kw = make(NodeKind::Keyword, cur().span.begin);
        advance();
        add(kw, parse_expression(), Role::Value);
        add(owner, &finish(kw), Role::Keyword);
        saw_double_star = true;
      } else if (cur().kind == TokenKind::Name && ahead(1).is_op("=")) {
        Node& kw = make(NodeKind::Keyword, cur().span.begin);
        if (is_python_keyword(cur().text)) fail("expression cannot contain assignment, perhaps you meant \"==\"?");
        kw.text = std::string(cur().text);
        advance();
        advance();
        add(kw, parse_expression(), Role::Value);
        add(owner, &finish(kw), Role::Keyword);
        saw_keyword = true;
      } else {
        std::uint32_t begin = cur().span.begin;
        Node* value = parse_named_expression();
        if (at_kw("for") || (at_kw("async") && ahead(1).is_name("for"))) {
          Node& gen = make(NodeKind::GeneratorExp, begin);
          add(gen, value, Role::Element);
          parse_comprehension_clauses(gen);
          value = &finish(gen);
          if (count > 0 || !at_op(")")) fail_at(begin, "Generator expression must be parenthesized");
        }
        if (at_op("=")) fail_at(begin, "expression cannot contain assignment, perhaps you meant \"==\"?");
        if (saw_double_star) fail_at(begin, "positional argument follows keyword argument unpacking");
        if (saw_keyword) fail_at(begin, "positional argument follows keyword argument");
        add(owner, value, positional_role);
      }
      ++count;
      if (!at_op(",")) break;
      advance();
    }
  }

  Node* parse_slices() {
    std::uint32_t begin = cur().span.begin;
    Node* first = parse_slice();
    if (!at_op(",")) return first;
    Node& tuple = make(NodeKind::Tuple, begin);
    add(tuple, first, Role::Element);
    while (at_op(",")) {
      advance();
      if (at_op("]")) break;
      add(tuple, parse_slice(), Role::Element);
    }
    return &finish(tuple);
  }

  Node* parse_slice() {
    std::uint32_t begin = cur().span.begin;
    Node* lower = nullptr;
    if (!at_op(":")) {
      if (at_op("*")) return parse_star_named_expression();
      lower = parse_named_expression();
      if (!at_op(":")) return lower;
    }
    Node& slice = make(NodeKind::Slice, begin);
    add(slice, lower, Role::Lower);
    advance();  // ':'
    if (!at_op(":") && !at_op("]") && !at_op(",")) add(slice, parse_expression(), Role::Upper);
    if (at_op(":")) {
      advance();
      if (!at_op("]") && !at_op(",")) add(slice, parse_expression(), Role::Step);
    }
    return &finish(slice);
  }

  void parse_comprehension_clauses(Node& owner) {
    while (at_kw("for") || (at_kw("async") && ahead(1).is_name("for"))) {
      Node& comp = make(NodeKind::Comprehension, cur().span.begin);
      if (at_kw("async")) {
        comp.is_async = true;
        advance();
      }
      advance();  // for
      Node* target = parse_target_list();
      check_target(*target, false, "assign to");
      add(comp, target, Role::Target);
      expect_kw("in");
      add(comp, parse_disjunction(), Role::Iter);
      while (at_kw("if")) {
        advance();
        add(comp, parse_disjunction(), Role::Condition);
      }
      add(owner, &finish(comp), Role::Generator);
    }
  }

  Node* parse_yield() {
    DepthGuard guard(*this);
    std::uint32_t begin = cur().span.begin;
    expect_kw("yield");
    if (at_kw("from")) {
      advance();
      Node& node = make(NodeKind::YieldFrom, begin);
      add(node, parse_expression(), Role::Value);
      return &finish(node);
    }
    Node& node = make(NodeKind::Yield, begin);
    if (starts_expression()) add(node, parse_star_expressions(), Role::Value);
    return &finish(node);
  }

  Node* parse_atom() {
    DepthGuard guard(*this);
    const Token& t = cur();
    std::uint32_t begin = t.span.begin;
    switch (t.kind) {
      case TokenKind::Name: {
        if (t.text == "True" || t.text == "False" || t.text == "None") {
          Node& node = make(NodeKind::Constant, begin);
          node.literal = t.text == "True" ? LiteralKind::True
                         : t.text == "False" ? LiteralKind::False
                                             : LiteralKind::NoneValue;
          node.text = std::string(t.text);
          advance();
          return &finish(node);
        }
        if (is_python_keyword(t.text)) fail("invalid syntax");
        Node& node = make(NodeKind::Name, begin);
        node.text = std::string(t.text);
        advance();
        return &finish(node);
      }
      case TokenKind::Number: {
        Node& node = make(NodeKind::Constant, begin);
        node.text = std::string(t.text);
        bool hex = t.text.size() > 1 && (t.text[1] == 'x' || t.text[1] == 'X');
        if (t.text.back() == 'j' || t.text.back() == 'J') {
          node.literal = LiteralKind::Complex;
        } else if (!hex && (t.text.find_first_of(".eE") != std::string_view::npos)) {
          node.literal = LiteralKind::Float;
        } else {
          node.literal = LiteralKind::Int;
        }
        advance();
        return &finish(node);
      }
      case TokenKind::String:
        return parse_strings();
      case TokenKind::Op:
        if (t.text == "(") return parse_paren();
        if (t.text == "[") return parse_list();
        if (t.text == "{") return parse_brace();
        if (t.text == "...") {
          Node& node = make(NodeKind::Constant, begin);
          node.literal = LiteralKind::Ellipsis;
          node.text = "...";
          advance();
          return &finish(node);
        }
        break;
      default:
        break;
    }
    if (t.kind == TokenKind::Indent) fail("unexpected indent");
    if (t.kind == TokenKind::Newline || t.kind == TokenKind::EndMarker) fail("invalid syntax");
    fail("invalid syntax");
  }

  Node* parse_strings() {
    Node& node = make(NodeKind::Constant, cur().span.begin);
    bool any_bytes = false;
    bool any_text = false;
    bool any_f = false;
    while (cur().kind == TokenKind::String) {
      std::string_view tok = cur().text;
      std::size_t quote = tok.find_first_of("'\"");
      std::string_view prefix = tok.substr(0, quote);
      bool is_bytes = prefix.find_first_of("bB") != std::string_view::npos;
      if (prefix.find_first_of("fF") != std::string_view::npos) any_f = true;
      (is_bytes ? any_bytes : any_text) = true;
      if (any_bytes && any_text) fail("cannot mix bytes and nonbytes literals");
      std::string_view body = tok.substr(quote);
      std::size_t qlen = body.size() >= 6 && body[0] == body[1] && body[1] == body[2] ? 3 : 1;
      node.text += std::string(body.substr(qlen, body.size() - 2 * qlen));
      advance();
    }
    node.literal = any_bytes ? LiteralKind::Bytes : any_f ? LiteralKind::FString : LiteralKind::String;
    return &finish(node);
  }

  Node* parse_paren() {
    std::uint32_t begin = cur().span.begin;
    advance();
    if (at_op(")")) {
      Node& tuple = make(NodeKind::Tuple, begin);
      advance();
      return &finish(tuple);
    }
    if (at_kw("yield")) {
      Node* y = parse_yield();
      expect_op(")");
      return y;
    }
    Node* first = parse_star_named_expression();
    if (at_kw("for") || (at_kw("async") && ahead(1).is_name("for"))) {
      Node& gen = make(NodeKind::GeneratorExp, begin);
      add(gen, first, Role::Element);
      parse_comprehension_clauses(gen);
      expect_op(")");
      return &finish(gen);
    }
    if (at_op(",")) {
      Node& tuple = make(NodeKind::Tuple, begin);
      add(tuple, first, Role::Element);
      while (at_op(",")) {
        advance();
        if (at_op(")")) break;
        add(tuple, parse_star_named_expression(), Role::Element);
      }
      expect_op(")");
      return &finish(tuple);
    }
    expect_op(")");
    if (first->kind == NodeKind::Starred) fail_at(first->span.begin, "cannot use starred expression here");
    return first;
  }

  Node* parse_list() {
    Node& list = make(NodeKind::List, cur().span.begin);
    advance();
    if (at_op("]")) {
      advance();
      return &finish(list);
    }
    Node* first = parse_star_named_expression();
    if (at_kw("for") || (at_kw("async") && ahead(1).is_name("for"))) {
      list.kind = NodeKind::ListComp;
      add(list, first, Role::Element);
      parse_comprehension_clauses(list);
      expect_op("]");
      return &finish(list);
    }
    add(list, first, Role::Element);
    while (at_op(",")) {
      advance();
      if (at_op("]")) break;
      add(list, parse_star_named_expression(), Role::Element);
    }
    expect_op("]");
    return &finish(list);
  }

  Node* parse_dict_entry() {
    Node& entry = make(NodeKind::DictEntry, cur().span.begin);
    if (at_op("**")) {
      advance();
      entry.detail = "**";
      add(entry, parse_bitor(), Role::Value);
      return &finish(entry);
    }
    add(entry, parse_expression(), Role::Key);
    expect_op(":");
    add(entry, parse_expression(), Role::Value);
    return &finish(entry);
  }

  Node* parse_brace() {
    Node& node = make(NodeKind::Dict, cur().span.begin);
    advance();
    if (at_op("}")) {
      advance();
      return &finish(node);
    }
    bool is_dict = at_op("**");
    Node* first = nullptr;
    if (!is_dict) {
      std::uint32_t begin = cur().span.begin;
      first = parse_star_named_expression();
      if (at_op(":")) {
        is_dict = true;
        if (first->kind == NodeKind::Starred) fail("invalid syntax");
        Node& entry = make(NodeKind::DictEntry, begin);
        add(entry, first, Role::Key);
        advance();
        add(entry, parse_expression(), Role::Value);
        first = &finish(entry);
      }
    } else {
      first = parse_dict_entry();
    }
    if (at_kw("for") || (at_kw("async") && ahead(1).is_name("for"))) {
      if (first->kind == NodeKind::DictEntry && first->detail == "**") fail("dict unpacking cannot be used in dict comprehension");
      node.kind = is_dict ? NodeKind::DictComp : NodeKind::SetComp;
      add(node, first, Role::Element);
      parse_comprehension_clauses(node);
      expect_op("}");
      return &finish(node);
    }
    node.kind = is_dict ? NodeKind::Dict : NodeKind::Set;
    add(node, first, Role::Element);
    while (at_op(",")) {
      advance();
      if (at_op("}")) break;
      add(node, is_dict ? parse_dict_entry() : parse_star_named_expression(), Role::Element);
    }
    expect_op("}");
    return &finish(node);
  }

  std::string_view text_;
  const std::vector<Token>& toks_;
  Ast& ast_;
  std::size_t pos_ = 0;
  std::uint32_t last_end_ = 0;
  int depth_ = 0;
};

}  // namespace

Ast parse_tokens(std::string_view text, const TokenStream& tokens) {
  Ast ast;
  Parser parser(text, tokens.tokens, ast);
  ast.set_root(parser.parse_module());
  return ast;
}

}  // namespace mlint
