#pragma once

#include <map>
#include <set>
#include <string>

#include "mlint/frontend/line_index.hpp"
#include "mlint/semantic/semantic_model.hpp"

namespace mlint {

/// A source location recorded for phase 2, independent of any live AST.
struct SiteRef {
  std::string path;
  Span span;
  Location location;
  std::string detail;  // canonical callee or imported module

  friend bool operator<(const SiteRef& a, const SiteRef& b);
  friend bool operator==(const SiteRef& a, const SiteRef& b);
};

/// Library families whose random state is tracked.
inline constexpr const char* kRandomFamilies[] = {"random", "numpy", "torch", "tensorflow"};

/// Cross-file facts. `merge` is a set union / logical or, so it is
/// commutative, associative and idempotent.
struct ProjectFacts {
  std::set<std::string> seeded;            // families with a seed call anywhere
  bool deterministic_option = false;       // torch.use_deterministic_algorithms(True)
  std::map<std::string, std::set<SiteRef>> randomness_sites;  // family -> use sites
  std::set<SiteRef> torch_imports;         // first torch import of each file
  bool torch_imported = false;
  bool tf_imported = false;

  void merge(const ProjectFacts& other);
  friend bool operator==(const ProjectFacts& a, const ProjectFacts& b);
};

/// Facts contributed by one file.
ProjectFacts extract_facts(const SemanticModel& model);

}  // namespace mlint
