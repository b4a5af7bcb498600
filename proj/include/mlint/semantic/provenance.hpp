#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "mlint/frontend/ast.hpp"

namespace mlint {

/// Library-object category of a value.
enum class Tag : std::uint8_t {
  Unknown,
  DataFrame,
  Series,
  NdArray,
  Tensor,
  Estimator,
  Scaler,
  Model,
  Optimizer,
  DataLoader,
  MetricFn,
};

std::string_view to_string(Tag tag);
std::optional<Tag> parse_tag(std::string_view name);

/// What the analyzer knows about a value: its category, the expression that
/// established it, and (for arrays built from literal shapes) its rank.
class Provenance {
 public:
  Provenance() = default;
  Provenance(Tag tag, const Node* origin, std::optional<int> rank = std::nullopt);

  static Provenance unknown() { return {}; }

  Tag tag() const { return tag_; }
  const Node* origin() const { return origin_; }
  std::optional<int> rank() const { return rank_; }
  bool known() const { return tag_ != Tag::Unknown; }
  bool is(Tag tag) const { return tag_ == tag; }

  Provenance without_rank() const { return {tag_, origin_, std::nullopt}; }
  Provenance with_origin(const Node* origin) const { return {tag_, origin, rank_}; }

  /// Same tag and rank; origins are not compared.
  bool same_fact(const Provenance& other) const { return tag_ == other.tag_ && rank_ == other.rank_; }

 private:
  Tag tag_ = Tag::Unknown;
  const Node* origin_ = nullptr;
  std::optional<int> rank_;
};

/// Merge point of two control-flow paths. Differing tags give Unknown; ranks
/// survive only when equal.
Provenance join(const Provenance& a, const Provenance& b);

}  // namespace mlint
