#include <gtest/gtest.h>

#include <cstdlib>

#include "mlint/cli/cli.hpp"
#include "mlint/config/toml_lite.hpp"
#include "test_support.hpp"

namespace mlint {
namespace {

using cli::parse_config;
using cli::UsageError;

TEST(Toml, ParsesSupportedValues) {
  config::Document doc = config::parse_document(
      "# comment\nname = \"x\"  # trailing\ncount = 3\nflag = true\n"
      "[rules.ML04]\nreaders = [\"a.b\", 'c.d',\n  \"e\"]\n");
  const config::Table* root = doc.table("");
  ASSERT_NE(root, nullptr);
  EXPECT_EQ(std::get<std::string>(root->entries.at("name").value), "x");
  EXPECT_EQ(std::get<std::int64_t>(root->entries.at("count").value), 3);
  EXPECT_TRUE(std::get<bool>(root->entries.at("flag").value));
  const config::Table* rule = doc.table("rules.ML04");
  ASSERT_NE(rule, nullptr);
  EXPECT_EQ(rule->line, 5u);
  EXPECT_EQ(std::get<std::vector<std::string>>(rule->entries.at("readers").value),
            (std::vector<std::string>{"a.b", "c.d", "e"}));
}

TEST(Toml, ErrorsCarryLine) {
  const char* bad[] = {"a = 1\nb = \n", "a = 1\n[unterminated\n", "a = 1\na = 2\n", "x = \"open\n"};
  const std::uint32_t lines[] = {2, 2, 2, 1};
  for (std::size_t i = 0; i < std::size(bad); ++i) {
    try {
      (void)config::parse_document(bad[i]);
      ADD_FAILURE() << "accepted: " << bad[i];
    } catch (const config::ConfigError& e) {
      EXPECT_EQ(e.line(), lines[i]) << bad[i];
    }
  }
}

TEST(Config, DefaultsEnableEverything) {
  cli::FileConfig fc = parse_config("", "mlint.toml");
  EXPECT_EQ(fc.run.selected.size(), 22u);
  EXPECT_TRUE(fc.run.ignored.empty());
  EXPECT_EQ(fc.run.mode, Mode::Development);
}

TEST(Config, FileValuesOverrideDefaults) {
  cli::FileConfig fc = parse_config(
      "mode = \"production\"\nexclude = [\"build\"]\n"
      "[rules]\nignore = [\"ML22\"]\n"
      "[rules.ML11]\noptimizer_requires_keyword = false\n",
      "mlint.toml");
  fc.run.normalize();
  EXPECT_EQ(fc.run.mode, Mode::Production);
  EXPECT_EQ(fc.exclude, (std::vector<std::string>{"build"}));
  EXPECT_FALSE(fc.run.enabled("ML22"));
  EXPECT_TRUE(fc.run.enabled("ML21"));
  EXPECT_EQ(fc.run.params_for("ML11").get_bool("optimizer_requires_keyword"), false);
}

TEST(Config, SelectReplacesDefaultSet) {
  cli::FileConfig fc = parse_config("[rules]\nselect = [\"ML03\", \"ML08\"]\n", "m.toml");
  EXPECT_EQ(fc.run.selected, (std::set<std::string>{"ML03", "ML08"}));
}

void expect_usage_error(const std::string& text, const std::string& fragment) {
  try {
    (void)parse_config(text, "m.toml");
    ADD_FAILURE() << "accepted: " << text;
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(Config, RejectsBadContentWithLineInfo) {
  expect_usage_error("[rules]\nignore = [\"ML99\"]\n", "m.toml:2: unknown rule id 'ML99'");
  expect_usage_error("mode = \"staging\"\n", "m.toml:1:");
  expect_usage_error("\ncolour = 1\n", "m.toml:2: unknown key 'colour'");
  expect_usage_error("[rulez]\n", "m.toml:1: unknown table");
  expect_usage_error("[rules.ML77]\n", "unknown rule id 'ML77'");
  expect_usage_error("[rules.ML11]\nnope = true\n", "m.toml:2: unknown parameter 'nope'");
  expect_usage_error("[rules.ML11]\noptimizer_requires_keyword = \"yes\"\n", "must be true or false");
  expect_usage_error("[rules]\nselect = \"ML01\"\n", "must be an array of strings");
  expect_usage_error("a = = 1\n", "m.toml:1:");
}

TEST(RunConfig, NormalizeMakesSetsDisjoint) {
  RunConfig c = RunConfig::defaults();
  c.ignored = {"ML01", "ML02"};
  c.normalize();
  EXPECT_FALSE(c.selected.contains("ML01"));
  EXPECT_FALSE(c.enabled("ML02"));
  EXPECT_TRUE(c.enabled("ML03"));
}

TEST(LocateConfig, PrecedenceExplicitThenEnvThenCwd) {
  testing::TempDir dir;
  auto explicit_file = dir.write("explicit.toml", "");
  auto env_file = dir.write("env.toml", "");
  ::setenv("MLINT_CONFIG", env_file.c_str(), 1);
  EXPECT_EQ(cli::locate_config(explicit_file), explicit_file);
  EXPECT_EQ(cli::locate_config(std::nullopt), env_file);
  ::setenv("MLINT_CONFIG", (dir.path() / "missing.toml").c_str(), 1);
  EXPECT_THROW((void)cli::locate_config(std::nullopt), UsageError);
  ::unsetenv("MLINT_CONFIG");
  EXPECT_THROW((void)cli::locate_config(dir.path() / "nope.toml"), UsageError);
}

}  // namespace
}  // namespace mlint
