#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "mlint/cli/cli.hpp"
#include "test_support.hpp"

namespace mlint::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kSmelly = "import pandas as pd\ndf = pd.read_csv('a.csv', usecols=['a'], dtype=str)\nx = df['a']['b']\n";
const char* kClean = "def add(a, b):\n    return a + b\n";

TEST(Discover, CollectsPythonFilesSorted) {
  testing::TempDir dir;
  dir.write("b/z.py", "");
  dir.write("a.py", "");
  dir.write("b.txt", "");
  dir.write("b/a/y.py", "");
  dir.write(".hidden/h.py", "");
  dir.write("build/skip.py", "");
  auto files = discover({dir.path()}, {"build"});
  std::vector<std::string> rel;
  for (const auto& f : files) rel.push_back(std::filesystem::relative(f, dir.path()).generic_string());
  EXPECT_EQ(rel, (std::vector<std::string>{"a.py", "b/a/y.py", "b/z.py"}));
}

TEST(Discover, MissingPathIsUsageError) {
  EXPECT_THROW((void)discover({"/definitely/not/here"}), UsageError);
}

TEST(Main, ExitCodes) {
  testing::TempDir dir;
  auto clean = dir.write("clean/c.py", kClean);
  auto smelly = dir.write("smelly/s.py", kSmelly);
  auto broken = dir.write("broken/b.py", "def f(:\n");
  EXPECT_EQ(run({clean.string()}).code, 0);
  EXPECT_EQ(run({smelly.string()}).code, 1);
  EXPECT_EQ(run({broken.string()}).code, 1);
  EXPECT_EQ(run({"--no-such-flag"}).code, 2);
  EXPECT_EQ(run({(dir.path() / "nope").string()}).code, 2);
  EXPECT_EQ(run({"--format", "xml", clean.string()}).code, 2);
  EXPECT_EQ(run({"--select", "ML99", clean.string()}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Main, ExitCodeIndependentOfFormat) {
  testing::TempDir dir;
  auto smelly = dir.write("s.py", kSmelly);
  for (const char* f : {"text", "json", "sarif"}) {
    EXPECT_EQ(run({"--format", f, smelly.string()}).code, 1) << f;
  }
}

TEST(Main, ListRulesAndExplain) {
  Outcome list = run({"--list-rules"});
  EXPECT_EQ(list.code, 0);
  EXPECT_EQ(std::count(list.out.begin(), list.out.end(), '\n'), 22);
  for (int i = 1; i <= 22; ++i) {
    char id[8];
    std::snprintf(id, sizeof id, "ML%02d ", i);
    EXPECT_NE(list.out.find(id), std::string::npos) << id;
  }
  EXPECT_EQ(run({"--explain", "ML14"}).code, 0);
  EXPECT_EQ(run({"--explain", "ML99"}).code, 2);
  EXPECT_EQ(run({"--list-rules", "x.py"}).code, 2);
  EXPECT_EQ(run({"--list-rules", "--explain", "ML01"}).code, 2);
}

TEST(Main, ConfigPrecedence) {
  testing::TempDir dir;
  auto file = dir.write("m.py", "from sklearn.metrics import f1_score\ns = f1_score(y, p)\n");
  auto config = dir.write("mlint.toml", "[rules]\nignore = [\"ML22\"]\n");
  EXPECT_EQ(run({"--config", config.string(), file.string()}).code, 0);
  Outcome flagged = run({"--config", config.string(), "--select", "ML22", file.string()});
  EXPECT_EQ(flagged.code, 1);
  EXPECT_NE(flagged.out.find("ML22"), std::string::npos);
  EXPECT_EQ(run({"--select", "ML22", "--ignore", "ML22", file.string()}).code, 0);
}

TEST(Main, BadConfigIsUsageError) {
  testing::TempDir dir;
  auto file = dir.write("m.py", kClean);
  auto config = dir.write("bad.toml", "[rules]\nignore = [\"ML99\"]\n");
  Outcome o = run({"--config", config.string(), file.string()});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("bad.toml:2:"), std::string::npos) << o.err;
  EXPECT_EQ(run({"--config", (dir.path() / "missing.toml").string(), file.string()}).code, 2);
}

TEST(Main, ModeFlagGatesProjectRules) {
  testing::TempDir dir;
  auto file = dir.write("t.py", "import torch\n");
  Outcome dev = run({file.string()});
  EXPECT_EQ(dev.code, 1);
  EXPECT_NE(dev.out.find("ML13"), std::string::npos);
  EXPECT_EQ(run({"--mode", "production", file.string()}).code, 0);
}

TEST(Main, OutputFlagWritesFile) {
  testing::TempDir dir;
  auto file = dir.write("s.py", kSmelly);
  auto target = dir.path() / "report.json";
  Outcome o = run({"--format", "json", "--output", target.string(), file.string()});
  EXPECT_EQ(o.code, 1);
  EXPECT_TRUE(o.out.empty());
  auto doc = nlohmann::json::parse(testing::read_file(target));
  EXPECT_EQ(doc["diagnostics"].size(), 1u);
}

TEST(Main, SignaturesOverride) {
  testing::TempDir dir;
  auto file = dir.write("s.py", "import mylib\ndf = mylib.load()\nx = df['a']['b']\n");
  auto sigs = dir.write("sigs.toml", "schema = \"mlint-api-signatures\"\nversion = 1\n[constructors]\n\"mylib.load\" = \"DataFrame\"\n");
  EXPECT_EQ(run({file.string()}).code, 0);
  EXPECT_EQ(run({"--signatures", sigs.string(), file.string()}).code, 1);
  auto bad = dir.write("bad.toml", "schema = \"mlint-api-signatures\"\nversion = 1\n[constructors]\n\"x\" = \"Nope\"\n");
  EXPECT_EQ(run({"--signatures", bad.string(), file.string()}).code, 2);
}

TEST(Main, VerifyFixtureCorpus) {
  Outcome o = run({"--verify", testing::fixture_dir().string()});
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(o.out.rfind("PASS", 0), 0u);
}

}  // namespace
}  // namespace mlint::cli
