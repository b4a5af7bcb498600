#include "mlint/semantic/alias_table.hpp"

#include <vector>

namespace mlint {

namespace {

std::string_view top_package(std::string_view dotted) { return dotted.substr(0, dotted.find('.')); }

}  // namespace

void AliasTable::bind_module(const std::string& local, const std::string& canonical) {
  symbols_.erase(local);
  modules_[local] = canonical;
}

void AliasTable::bind_symbol(const std::string& local, const std::string& canonical) {
  modules_.erase(local);
  symbols_[local] = canonical;
}

std::optional<std::string> AliasTable::lookup(std::string_view local) const {
  std::string key(local);
  if (auto it = modules_.find(key); it != modules_.end()) return it->second;
  if (auto it = symbols_.find(key); it != symbols_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::string> AliasTable::resolve(const Node* expr) const {
  std::vector<std::string_view> members;
  const Node* cur = expr;
  while (cur && cur->kind == NodeKind::Attribute) {
    members.push_back(cur->text);
    cur = cur->child(Role::Value);
  }
  if (!cur || cur->kind != NodeKind::Name) return std::nullopt;
  auto base = lookup(cur->text);
  if (!base) return std::nullopt;
  std::string out = *base;
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    out += '.';
    out += *it;
  }
  return out;
}

bool AliasTable::imports(std::string_view package) const { return packages_.find(package) != packages_.end(); }

const Node* AliasTable::first_import(std::string_view package) const {
  auto it = packages_.find(package);
  return it == packages_.end() ? nullptr : it->second;
}

AliasTable resolve_aliases(const SourceUnit& unit) {
  AliasTable table;
  if (!unit.ast()) return table;
  auto note_package = [&](std::string_view dotted, const Node* stmt) {
    table.packages_.try_emplace(std::string(top_package(dotted)), stmt);
  };
  walk(unit.ast(), [&](const Node& node) {
    if (node.kind == NodeKind::Import) {
      for (const Node* alias : node.children) {
        if (alias->kind != NodeKind::Alias) continue;
        const std::string& module = alias->text;
        note_package(module, &node);
        if (!alias->detail.empty()) {
          table.bind_module(alias->detail, module);
        } else {
          std::string top(top_package(module));
          table.bind_module(top, top);
        }
      }
      return false;
    }
    if (node.kind == NodeKind::ImportFrom) {
      if (node.level > 0 || node.text.empty()) return false;
      note_package(node.text, &node);
      for (const Node* alias : node.children) {
        if (alias->kind != NodeKind::Alias || alias->text == "*") continue;
        const std::string& local = alias->detail.empty() ? alias->text : alias->detail;
        table.bind_symbol(local, node.text + "." + alias->text);
      }
      return false;
    }
    return true;
  });
  return table;
}

}  // namespace mlint
