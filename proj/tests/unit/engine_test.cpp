#include <gtest/gtest.h>

#include <algorithm>

#include "mlint/engine/suppression.hpp"
#include "test_support.hpp"

namespace mlint {
namespace {

using testing::analyze;
using testing::Files;
using testing::hits;
using testing::Hits;

const char* kChain = "import pandas as pd\ndf = pd.read_csv('a.csv', usecols=['a'], dtype=str)\nx = df['a']['b']\n";

TEST(Engine, NoFilesNoDiagnostics) {
  RunResult r = testing::default_engine().run({}, RunConfig::defaults());
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_TRUE(r.files.empty());
}

TEST(Engine, IgnoredRuleProducesNothing) {
  EXPECT_EQ(hits(analyze(kChain)), (Hits{{3, "ML03"}}));
  RunConfig c = RunConfig::defaults();
  c.ignored = {"ML03"};
  c.normalize();
  EXPECT_TRUE(analyze(kChain, c).diagnostics.empty());
}

TEST(Engine, ParseFailuresAreRecordedNotAnalyzed) {
  RunResult r = analyze(Files{{"bad.py", "def f(:\n"}, {"good.py", kChain}});
  ASSERT_EQ(r.parse_failures.size(), 1u);
  EXPECT_EQ(r.parse_failures[0].path, "bad.py");
  EXPECT_EQ(r.parse_failures[0].line, 1u);
  EXPECT_EQ(r.files, (std::vector<std::string>{"bad.py", "good.py"}));
  EXPECT_EQ(r.diagnostics.size(), 1u);
}

const char* kUnseededA = "import numpy as np\nx = np.random.rand(3)\ny = np.random.rand(4)\n";
const char* kUnseededB = "import numpy as np\n\ndef f():\n    return np.random.normal()\n";

TEST(Engine, ProjectLevelAnchorsAreOrderIndependent) {
  RunConfig c = RunConfig::defaults();
  c.selected = {"ML14"};
  RunResult forward = analyze(Files{{"a.py", kUnseededA}, {"b.py", kUnseededB}}, c);
  RunResult reversed = analyze(Files{{"b.py", kUnseededB}, {"a.py", kUnseededA}}, c);
  ASSERT_EQ(forward.diagnostics.size(), 2u);
  EXPECT_EQ(forward.diagnostics, reversed.diagnostics);
  EXPECT_EQ(forward.diagnostics[0].path, "a.py");
  EXPECT_EQ(forward.diagnostics[0].line, 2u);
  EXPECT_EQ(forward.diagnostics[1].path, "b.py");
  EXPECT_EQ(forward.diagnostics[1].line, 4u);
}

TEST(Engine, SeedAnywhereSilencesFamily) {
  RunConfig c = RunConfig::defaults();
  c.selected = {"ML14"};
  RunResult r = analyze(Files{{"a.py", kUnseededA}, {"seed.py", "import numpy as np\nnp.random.seed(1)\n"}}, c);
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Engine, ProductionModeGatesDevelopmentOnlyRules) {
  const std::string torch_file = "import torch\nimport numpy as np\nx = np.random.rand(3)\n";
  RunResult dev = analyze(torch_file);
  RunConfig prod = RunConfig::defaults();
  prod.mode = Mode::Production;
  RunResult production = analyze(torch_file, prod);
  Hits dev_hits = hits(dev);
  EXPECT_TRUE(dev_hits.contains({1, "ML13"}));
  EXPECT_TRUE(dev_hits.contains({3, "ML14"}));
  Hits expected;
  for (const auto& h : dev_hits) {
    if (h.second != "ML13" && h.second != "ML14") expected.insert(h);
  }
  EXPECT_EQ(hits(production), expected);
}

TEST(Engine, DisablingOneRuleOnlyRemovesThatRule) {
  const std::string text = testing::read_file(testing::fixture_dir() / "ML01/positive/canonical_row_loop.py") +
                           "\nz = df['a']['b']\nw = df.values\n";
  Hits all = hits(analyze(text));
  for (const RuleDescriptor& d : catalog()) {
    RunConfig c = RunConfig::defaults();
    c.ignored = {d.id};
    c.normalize();
    Hits expected;
    for (const auto& h : all) {
      if (h.second != d.id) expected.insert(h);
    }
    EXPECT_EQ(hits(analyze(text, c)), expected) << d.id;
  }
}

class ThrowingRule : public Rule {
 public:
  const RuleDescriptor& descriptor() const override { return *find_rule("ML01"); }
  void check_file(FileContext&) const override { throw std::runtime_error("boom"); }
};

TEST(Engine, RuleCrashIsContained) {
  std::vector<std::unique_ptr<Rule>> rules;
  rules.push_back(std::make_unique<ThrowingRule>());
  for (auto& r : rules::make_rules()) {
    if (r->descriptor().id == "ML03") rules.push_back(std::move(r));
  }
  Engine engine(std::move(rules), ApiSignatureTable::bundled());
  RunResult r = engine.run({parse("t.py", kChain)}, RunConfig::defaults());
  EXPECT_TRUE(r.has_rule_errors());
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_EQ(r.notes[0].rule_id, "ML01");
  EXPECT_NE(r.notes[0].message.find("boom"), std::string::npos);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].rule_id, "ML03");
}

TEST(Engine, DiagnosticsSortedByPathLineColumnId) {
  RunResult r = analyze(Files{{"b.py", kChain}, {"a.py", kChain}, {"c.py", kUnseededA}});
  EXPECT_TRUE(std::is_sorted(r.diagnostics.begin(), r.diagnostics.end()));
  EXPECT_EQ(r.diagnostics.front().path, "a.py");
}

TEST(Suppression, SpecificIdKeepsOtherRules) {
  const std::string text =
      "import pandas as pd\ndf = pd.read_csv('a.csv', usecols=['a'], dtype=str)\n"
      "y = df['a']['b']; z = df.values  # mlint: disable=ML03\n";
  EXPECT_EQ(hits(analyze(text)), (Hits{{3, "ML08"}}));
}

TEST(Suppression, AllRemovesEverythingOnLine) {
  const std::string text =
      "import pandas as pd\ndf = pd.read_csv('a.csv', usecols=['a'], dtype=str)\n"
      "y = df['a']['b']; z = df.values  # mlint: disable=all\n";
  RunResult r = analyze(text);
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_TRUE(r.notes.empty());
}

TEST(Suppression, UnknownIdIsReportedAndRemovesNothing) {
  const std::string text = std::string(kChain).replace(std::string(kChain).size() - 1, 1, "  # mlint: disable=ML99\n");
  RunResult r = analyze(text);
  EXPECT_EQ(hits(r), (Hits{{3, "ML03"}}));
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_EQ(r.notes[0].kind, ToolNote::Kind::Suppression);
  EXPECT_EQ(r.notes[0].line, 3u);
  EXPECT_NE(r.notes[0].message.find("ML99"), std::string::npos);
}

TEST(Suppression, ListsAndMalformedComments) {
  SourceUnit unit = parse("s.py",
                          "a = 1  # mlint: disable=ML01, ML02\n"
                          "b = 2  # mlint: disable=\n"
                          "c = 3  # mlint: disable ML01\n"
                          "d = 4  # unrelated comment\n");
  SuppressionTable t = scan_suppressions(unit);
  EXPECT_TRUE(t.suppresses(1, "ML01"));
  EXPECT_TRUE(t.suppresses(1, "ML02"));
  EXPECT_FALSE(t.suppresses(1, "ML03"));
  EXPECT_FALSE(t.suppresses(2, "ML01"));
  EXPECT_FALSE(t.suppresses(3, "ML01"));
  EXPECT_EQ(t.notes.size(), 2u);
}

TEST(Suppression, NeverAddsDiagnostics) {
  std::string text = testing::read_file(testing::fixture_dir() / "ML07/positive/discarded_dropna.py");
  Hits before = hits(analyze(text));
  std::string annotated;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(start, end - start);
    if (line.find("# expect:") != std::string::npos) line += "  # mlint: disable=ML07";
    annotated += line + "\n";
    if (end == std::string::npos) break;
    start = end + 1;
  }
  Hits after = hits(analyze(annotated));
  EXPECT_TRUE(std::includes(before.begin(), before.end(), after.begin(), after.end()));
  EXPECT_LT(after.size(), before.size());
}

TEST(Facts, MergeIsCommutativeAssociativeIdempotent) {
  auto facts_of = [](const std::string& text) {
    SourceUnit unit = parse("f.py", text);
    AliasTable aliases = resolve_aliases(unit);
    SemanticModel model = infer_provenance(unit, aliases, ApiSignatureTable::bundled());
    return extract_facts(model);
  };
  ProjectFacts a = facts_of(kUnseededA);
  ProjectFacts b = facts_of("import torch\ntorch.manual_seed(0)\ntorch.use_deterministic_algorithms(True)\n");
  ProjectFacts c = facts_of("import random\nrandom.shuffle(x)\n");

  ProjectFacts ab = a, ba = b;
  ab.merge(b);
  ba.merge(a);
  EXPECT_EQ(ab, ba);

  ProjectFacts ab_c = ab, a_bc = a, bc = b;
  ab_c.merge(c);
  bc.merge(c);
  a_bc.merge(bc);
  EXPECT_EQ(ab_c, a_bc);

  ProjectFacts aa = a;
  aa.merge(a);
  EXPECT_EQ(aa, a);

  EXPECT_TRUE(ab.deterministic_option);
  EXPECT_TRUE(ab.seeded.contains("torch"));
  EXPECT_TRUE(ab.torch_imported);
}

}  // namespace
}  // namespace mlint
