#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlint/semantic/provenance.hpp"

namespace mlint {

enum class RankRule : std::uint8_t { None, Shape, Data, Fixed };

struct ConstructorSig {
  Tag tag = Tag::Unknown;
  RankRule rank_rule = RankRule::None;
  int fixed_rank = 0;
};

struct MethodSig {
  Tag result = Tag::Unknown;
  bool same_as_receiver = false;
};

/// Canonical API names mapped to provenance effects. Loaded from a data file;
/// the bundled copy is compiled into the binary.
class ApiSignatureTable {
 public:
  /// Throws config::ConfigError (with line) on malformed content.
  static ApiSignatureTable parse(std::string_view text);
  /// Throws config::ConfigError, or std::runtime_error when unreadable.
  static ApiSignatureTable load(const std::filesystem::path& path);
  static const ApiSignatureTable& bundled();

  int version() const { return version_; }

  const ConstructorSig* constructor(std::string_view canonical) const;
  const MethodSig* method(Tag receiver, std::string_view name) const;
  std::optional<Tag> attribute(Tag receiver, std::string_view name) const;
  bool is_model_base(std::string_view canonical) const;

  const std::map<std::string, ConstructorSig, std::less<>>& constructors() const { return constructors_; }

 private:
  int version_ = 0;
  std::map<std::string, ConstructorSig, std::less<>> constructors_;
  std::map<std::string, MethodSig, std::less<>> methods_;      // "Tag.name"
  std::map<std::string, Tag, std::less<>> attributes_;         // "Tag.name"
  std::vector<std::string> model_bases_;
};

}  // namespace mlint
