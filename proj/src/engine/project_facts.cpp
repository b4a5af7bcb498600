#include "mlint/engine/project_facts.hpp"

#include <algorithm>
#include <array>
#include <string_view>
#include <tuple>

namespace mlint {

namespace {

constexpr std::array<std::string_view, 14> kStdlibRandom = {
    "random", "randint", "randrange", "choice", "choices", "shuffle", "sample",
    "uniform", "gauss", "normalvariate", "betavariate", "expovariate", "triangular", "getrandbits"};

constexpr std::array<std::string_view, 5> kNumpyNonRandom = {"seed", "get_state", "set_state", "SeedSequence",
                                                             "MT19937"};

constexpr std::array<std::string_view, 13> kTorchRandom = {
    "torch.rand",      "torch.randn",      "torch.randint",    "torch.randperm",
    "torch.rand_like", "torch.randn_like", "torch.randint_like", "torch.normal",
    "torch.bernoulli", "torch.multinomial", "torch.poisson",   "torch.utils.data.random_split",
    "torch.nn.init.normal_"};

constexpr std::array<std::string_view, 3> kTfLegacyRandom = {"tensorflow.random_normal", "tensorflow.random_uniform",
                                                              "tensorflow.random_shuffle"};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& items, std::string_view value) {
  return std::find(items.begin(), items.end(), value) != items.end();
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

bool has_arguments(const Node* call) {
  return std::any_of(call->children.begin(), call->children.end(),
                     [](const Node* c) { return c->role == Role::Arg || c->role == Role::Keyword; });
}

bool is_true(const Node* n) { return n && n->kind == NodeKind::Constant && n->literal == LiteralKind::True; }

bool enables_determinism(const Node* call) {
  for (const Node* c : call->children) {
    if (c->role == Role::Arg) return is_true(c);
    if (c->kind == NodeKind::Keyword && c->text == "mode") return is_true(c->child(Role::Value));
  }
  return false;
}

// Families seeded by a call, empty when the call is not a seed call.
std::vector<std::string> seeded_by(const std::string& callee, const Node* call) {
  if (callee == "random.seed") return {"random"};
  if (callee == "numpy.random.seed") return {"numpy"};
  if ((callee == "numpy.random.default_rng" || callee == "numpy.random.RandomState") && has_arguments(call)) {
    return {"numpy"};
  }
  if (callee == "torch.manual_seed" || callee == "torch.random.manual_seed" || callee == "torch.cuda.manual_seed" ||
      callee == "torch.cuda.manual_seed_all") {
    return {"torch"};
  }
  if (callee == "tensorflow.random.set_seed" || callee == "tensorflow.set_random_seed" ||
      callee == "tensorflow.compat.v1.set_random_seed") {
    return {"tensorflow"};
  }
  if (callee == "tensorflow.keras.utils.set_random_seed" || callee == "keras.utils.set_random_seed") {
    return {"random", "numpy", "tensorflow"};
  }
  if (callee == "pytorch_lightning.seed_everything" || callee == "lightning.seed_everything" ||
      callee == "lightning.pytorch.seed_everything") {
    return {"random", "numpy", "torch"};
  }
  return {};
}

// Family of a call that draws random numbers, empty otherwise.
std::string_view random_family(const std::string& callee, const Node* call) {
  if (starts_with(callee, "random.")) {
    return contains(kStdlibRandom, std::string_view(callee).substr(7)) ? "random" : "";
  }
  if (starts_with(callee, "numpy.random.")) {
    std::string_view member = std::string_view(callee).substr(13);
    if (member.find('.') != std::string_view::npos || contains(kNumpyNonRandom, member)) return "";
    if ((member == "default_rng" || member == "RandomState") && has_arguments(call)) return "";
    return "numpy";
  }
  if (contains(kTorchRandom, callee)) return "torch";
  if (starts_with(callee, "tensorflow.random.")) {
    return callee == "tensorflow.random.set_seed" ? "" : "tensorflow";
  }
  if (contains(kTfLegacyRandom, callee)) return "tensorflow";
  return "";
}

}  // namespace

bool operator<(const SiteRef& a, const SiteRef& b) {
  return std::tie(a.path, a.location, a.span.begin, a.span.end, a.detail) <
         std::tie(b.path, b.location, b.span.begin, b.span.end, b.detail);
}

bool operator==(const SiteRef& a, const SiteRef& b) {
  return a.path == b.path && a.span == b.span && a.location == b.location && a.detail == b.detail;
}

void ProjectFacts::merge(const ProjectFacts& other) {
  seeded.insert(other.seeded.begin(), other.seeded.end());
  deterministic_option = deterministic_option || other.deterministic_option;
  for (const auto& [family, sites] : other.randomness_sites) {
    randomness_sites[family].insert(sites.begin(), sites.end());
  }
  torch_imports.insert(other.torch_imports.begin(), other.torch_imports.end());
  torch_imported = torch_imported || other.torch_imported;
  tf_imported = tf_imported || other.tf_imported;
}

bool operator==(const ProjectFacts& a, const ProjectFacts& b) {
  return a.seeded == b.seeded && a.deterministic_option == b.deterministic_option &&
         a.randomness_sites == b.randomness_sites && a.torch_imports == b.torch_imports &&
         a.torch_imported == b.torch_imported && a.tf_imported == b.tf_imported;
}

ProjectFacts extract_facts(const SemanticModel& model) {
  ProjectFacts facts;
  const SourceUnit& unit = model.unit();
  if (!unit.ast()) return facts;
  const std::string path = unit.path().generic_string();
  auto site = [&](const Node* node, std::string detail) {
    return SiteRef{path, node->span, unit.location(node->span), std::move(detail)};
  };

  facts.torch_imported = model.aliases().imports("torch");
  facts.tf_imported = model.aliases().imports("tensorflow");
  if (const Node* import = model.aliases().first_import("torch")) facts.torch_imports.insert(site(import, "torch"));

  for (const CallSite& call : model.calls()) {
    if (call.callee.empty()) continue;
    if (call.callee == "torch.use_deterministic_algorithms" && enables_determinism(call.call)) {
      facts.deterministic_option = true;
    }
    for (const std::string& family : seeded_by(call.callee, call.call)) facts.seeded.insert(family);
    std::string_view family = random_family(call.callee, call.call);
    if (!family.empty()) facts.randomness_sites[std::string(family)].insert(site(call.call, call.callee));
  }
  return facts;
}

}  // namespace mlint
