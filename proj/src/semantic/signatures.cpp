#include "mlint/semantic/signatures.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mlint/config/toml_lite.hpp"

namespace mlint {

namespace detail {
extern const std::string_view kBundledSignatures;
}

namespace {

using config::ConfigError;

const std::string& as_string(const config::Entry& entry, std::string_view key) {
  const auto* s = std::get_if<std::string>(&entry.value);
  if (!s) {
    throw ConfigError(entry.line, "'" + std::string(key) + "' must be a string, got " +
                                      std::string(config::type_name(entry.value)));
  }
  return *s;
}

Tag tag_value(const config::Entry& entry, std::string_view key) {
  const std::string& name = as_string(entry, key);
  auto tag = parse_tag(name);
  if (!tag || *tag == Tag::Unknown) throw ConfigError(entry.line, "unknown provenance tag '" + name + "'");
  return *tag;
}

// "Tag.member" keys of the methods/attributes tables.
void check_receiver_key(const std::string& key, std::uint32_t line) {
  auto dot = key.find('.');
  if (dot == std::string::npos || dot + 1 == key.size()) {
    throw ConfigError(line, "expected 'Tag.member' key, got '" + key + "'");
  }
  auto tag = parse_tag(std::string_view(key).substr(0, dot));
  if (!tag || *tag == Tag::Unknown) throw ConfigError(line, "unknown receiver tag in '" + key + "'");
}

std::string receiver_key(Tag tag, std::string_view name) {
  std::string key(to_string(tag));
  key += '.';
  key += name;
  return key;
}

}  // namespace

ApiSignatureTable ApiSignatureTable::parse(std::string_view text) {
  config::Document doc = config::parse_document(text);
  ApiSignatureTable table;

  const config::Table* root = doc.table("");
  const config::Entry* schema = nullptr;
  const config::Entry* version = nullptr;
  if (root) {
    for (const auto& [key, entry] : root->entries) {
      if (key == "schema") {
        schema = &entry;
      } else if (key == "version") {
        version = &entry;
      } else {
        throw ConfigError(entry.line, "unknown header key '" + key + "'");
      }
    }
  }
  if (!schema || as_string(*schema, "schema") != "mlint-api-signatures") {
    throw ConfigError(schema ? schema->line : 1, "missing or wrong schema (expected \"mlint-api-signatures\")");
  }
  if (!version) throw ConfigError(1, "missing version");
  const auto* v = std::get_if<std::int64_t>(&version->value);
  if (!v || *v != 1) throw ConfigError(version->line, "unsupported signature table version");
  table.version_ = static_cast<int>(*v);

  for (const auto& [name, tbl] : doc.tables()) {
    if (name.empty()) continue;
    if (name == "constructors") {
      for (const auto& [key, entry] : tbl.entries) {
        table.constructors_[key].tag = tag_value(entry, key);
      }
    } else if (name == "ranks") {
      // Applied after all tables are read; see below.
    } else if (name == "methods") {
      for (const auto& [key, entry] : tbl.entries) {
        check_receiver_key(key, entry.line);
        MethodSig sig;
        if (as_string(entry, key) == "same") {
          sig.same_as_receiver = true;
          sig.result = *parse_tag(std::string_view(key).substr(0, key.find('.')));
        } else {
          sig.result = tag_value(entry, key);
        }
        table.methods_[key] = sig;
      }
    } else if (name == "attributes") {
      for (const auto& [key, entry] : tbl.entries) {
        check_receiver_key(key, entry.line);
        table.attributes_[key] = tag_value(entry, key);
      }
    } else if (name == "bases") {
      for (const auto& [key, entry] : tbl.entries) {
        if (key != "model") throw ConfigError(entry.line, "unknown key '" + key + "' in [bases]");
        const auto* list = std::get_if<std::vector<std::string>>(&entry.value);
        if (!list) throw ConfigError(entry.line, "[bases] model must be an array of strings");
        table.model_bases_ = *list;
      }
    } else {
      throw ConfigError(tbl.line, "unknown table [" + name + "]");
    }
  }

  if (const config::Table* ranks = doc.table("ranks")) {
    for (const auto& [key, entry] : ranks->entries) {
      auto it = table.constructors_.find(key);
      if (it == table.constructors_.end()) {
        throw ConfigError(entry.line, "rank given for '" + key + "' which is not a constructor");
      }
      const std::string& rule = as_string(entry, key);
      if (rule == "shape") {
        it->second.rank_rule = RankRule::Shape;
      } else if (rule == "data") {
        it->second.rank_rule = RankRule::Data;
      } else {
        int rank = -1;
        auto [ptr, ec] = std::from_chars(rule.data(), rule.data() + rule.size(), rank);
        if (ec != std::errc() || ptr != rule.data() + rule.size() || rank < 0) {
          throw ConfigError(entry.line, "rank must be \"shape\", \"data\" or a non-negative integer");
        }
        it->second.rank_rule = RankRule::Fixed;
        it->second.fixed_rank = rank;
      }
    }
  }
  return table;
}

ApiSignatureTable ApiSignatureTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read signature table " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const ApiSignatureTable& ApiSignatureTable::bundled() {
  static const ApiSignatureTable table = parse(detail::kBundledSignatures);
  return table;
}

const ConstructorSig* ApiSignatureTable::constructor(std::string_view canonical) const {
  auto it = constructors_.find(canonical);
  return it == constructors_.end() ? nullptr : &it->second;
}

const MethodSig* ApiSignatureTable::method(Tag receiver, std::string_view name) const {
  if (receiver == Tag::Unknown) return nullptr;
  auto it = methods_.find(receiver_key(receiver, name));
  return it == methods_.end() ? nullptr : &it->second;
}

std::optional<Tag> ApiSignatureTable::attribute(Tag receiver, std::string_view name) const {
  if (receiver == Tag::Unknown) return std::nullopt;
  auto it = attributes_.find(receiver_key(receiver, name));
  if (it == attributes_.end()) return std::nullopt;
  return it->second;
}

bool ApiSignatureTable::is_model_base(std::string_view canonical) const {
  return std::find(model_bases_.begin(), model_bases_.end(), canonical) != model_bases_.end();
}

}  // namespace mlint
