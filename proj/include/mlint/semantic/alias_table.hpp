#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mlint/frontend/ast.hpp"
#include "mlint/frontend/source_unit.hpp"

namespace mlint {

/// Local import names mapped to canonical module paths and symbols.
///
/// A local name is bound to at most one canonical path at a time; binding it
/// again (in either map) replaces the earlier binding.
class AliasTable {
 public:
  void bind_module(const std::string& local, const std::string& canonical);
  void bind_symbol(const std::string& local, const std::string& canonical);

  const std::map<std::string, std::string>& module_aliases() const { return modules_; }
  const std::map<std::string, std::string>& symbol_aliases() const { return symbols_; }

  /// Canonical path of a bare local name, if imported.
  std::optional<std::string> lookup(std::string_view local) const;

  /// Canonical qualified name of a Name/Attribute chain rooted at an
  /// imported name, e.g. `pd.DataFrame` -> "pandas.DataFrame".
  std::optional<std::string> resolve(const Node* expr) const;

  /// Top-level package imported anywhere in the file ("torch", "numpy", ...).
  bool imports(std::string_view package) const;
  /// First import statement (in source order) that brings in `package`.
  const Node* first_import(std::string_view package) const;

 private:
  std::map<std::string, std::string> modules_;
  std::map<std::string, std::string> symbols_;
  std::map<std::string, const Node*, std::less<>> packages_;

  friend AliasTable resolve_aliases(const SourceUnit& unit);
};

/// Folds every absolute import of the file, at any nesting level, into a
/// table. Star and relative imports contribute nothing.
AliasTable resolve_aliases(const SourceUnit& unit);

}  // namespace mlint
