#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mlint/frontend/ast.hpp"
#include "mlint/frontend/source_unit.hpp"
#include "mlint/semantic/alias_table.hpp"
#include "mlint/semantic/provenance.hpp"
#include "mlint/semantic/signatures.hpp"

namespace mlint {

/// Position of a statement within its scope's linear order.
struct StatementInfo {
  const Node* scope = nullptr;
  std::size_t index = 0;     // pre-order over nested bodies, 0-based per scope
  int loop_depth = 0;        // loops enclosing the statement within its scope
  const Node* loop = nullptr;  // innermost such loop
};

struct CallSite {
  const Node* call = nullptr;
  std::string callee;          // canonical qualified name, empty if unresolved
  std::string method;          // attribute name for `x.m(...)`, else the called name
  const Node* receiver = nullptr;  // `x` in `x.m(...)`
  std::string receiver_key;    // dotted spelling of the receiver, e.g. "self.model"
  Provenance receiver_provenance;
  Provenance result;
  StatementInfo where;
  const Node* statement = nullptr;
};

struct Definition {
  const Node* node = nullptr;
  std::string name;
  bool is_class = false;
  bool is_model_class = false;  // subclasses a configured model base
};

/// Call facts of one scope in statement order.
struct FactStream {
  const Node* scope = nullptr;
  std::vector<const CallSite*> calls;
};

class SemanticModel {
 public:
  const SourceUnit& unit() const { return unit_; }
  const AliasTable& aliases() const { return aliases_; }
  const ApiSignatureTable& signatures() const { return *signatures_; }

  /// Provenance of an expression node; Unknown for nodes never evaluated.
  Provenance provenance(const Node* expr) const;

  /// Provenance of variable `name` (dotted keys allowed) in `scope` after the
  /// statement with the given index has run.
  Provenance variable_after(const Node* scope, std::string_view name, std::size_t index) const;

  /// All call sites in source order; every Call node appears exactly once.
  const std::vector<CallSite>& calls() const { return calls_; }
  const CallSite* call(const Node* call_node) const;

  const std::vector<Definition>& definitions() const { return definitions_; }
  const Definition* definition(std::string_view name) const;

  const StatementInfo* statement_info(const Node* stmt) const;
  /// Statement info of the statement enclosing `node`.
  const StatementInfo* where(const Node* node) const;

  std::optional<std::string> canonical(const Node* expr) const { return aliases_.resolve(expr); }

 private:
  SemanticModel(SourceUnit unit, AliasTable aliases, const ApiSignatureTable* signatures)
      : unit_(std::move(unit)), aliases_(std::move(aliases)), signatures_(signatures) {}

  using VarKey = std::pair<const Node*, std::string>;
  struct VarEvent {
    std::size_t index;
    Provenance value;
  };

  SourceUnit unit_;
  AliasTable aliases_;
  const ApiSignatureTable* signatures_;
  std::unordered_map<const Node*, Provenance> expr_provenance_;
  std::map<VarKey, std::vector<VarEvent>> var_events_;
  std::map<VarKey, Provenance> scope_entry_;  // parameters and inherited self.* attributes
  std::vector<CallSite> calls_;
  std::unordered_map<const Node*, std::size_t> call_lookup_;
  std::vector<Definition> definitions_;
  std::unordered_map<const Node*, StatementInfo> statements_;

  friend class ProvenanceInference;
  friend SemanticModel infer_provenance(const SourceUnit&, const AliasTable&, const ApiSignatureTable&);
};

/// Builds the model for a parsed unit. The signature table must outlive it.
SemanticModel infer_provenance(const SourceUnit& unit, const AliasTable& aliases,
                               const ApiSignatureTable& signatures);

/// Per-scope call facts, module first, then scopes in source order.
std::vector<FactStream> statement_order_facts(const SemanticModel& model);

}  // namespace mlint
