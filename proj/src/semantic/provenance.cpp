#include "mlint/semantic/provenance.hpp"

#include <array>
#include <utility>

namespace mlint {

namespace {

constexpr std::array<std::pair<Tag, std::string_view>, 11> kTagNames = {{
    {Tag::Unknown, "Unknown"},
    {Tag::DataFrame, "DataFrame"},
    {Tag::Series, "Series"},
    {Tag::NdArray, "NdArray"},
    {Tag::Tensor, "Tensor"},
    {Tag::Estimator, "Estimator"},
    {Tag::Scaler, "Scaler"},
    {Tag::Model, "Model"},
    {Tag::Optimizer, "Optimizer"},
    {Tag::DataLoader, "DataLoader"},
    {Tag::MetricFn, "MetricFn"},
}};

}  // namespace

std::string_view to_string(Tag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "Unknown";
}

std::optional<Tag> parse_tag(std::string_view name) {
  for (const auto& [t, n] : kTagNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

Provenance::Provenance(Tag tag, const Node* origin, std::optional<int> rank)
    : tag_(tag), origin_(tag == Tag::Unknown ? nullptr : origin), rank_(tag == Tag::Unknown ? std::nullopt : rank) {
  if (rank_ && *rank_ < 0) rank_.reset();
}

Provenance join(const Provenance& a, const Provenance& b) {
  if (a.tag() != b.tag() || !a.known()) return Provenance::unknown();
  std::optional<int> rank = a.rank() == b.rank() ? a.rank() : std::nullopt;
  return Provenance(a.tag(), a.origin(), rank);
}

}  // namespace mlint
