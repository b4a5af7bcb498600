#include <gtest/gtest.h>

#include <regex>

#include "json.hpp"
#include "mlint/report/report.hpp"
#include "test_support.hpp"

namespace mlint::report {
namespace {

using nlohmann::json;

const char* kChain =
    "import pandas as pd\ndf = pd.read_csv('a.csv', usecols=['a'], dtype=str)\n"
    "\n    \nx = df['a']['b']\n";

Report report_of(const testing::Files& files) { return build_report(testing::analyze(files)); }

TEST(Text, EmptyReportIsSummaryOnly) {
  Report r = build_report(RunResult{});
  EXPECT_EQ(render_text(r), "0 smells in 0 files\n");
}

TEST(Text, DiagnosticLineFormat) {
  std::string text = render_text(report_of({{"a.py", kChain}}));
  EXPECT_EQ(text.rfind("a.py:5:5: ML03 Chain Indexing: ", 0), 0u) << text;
  EXPECT_NE(text.find("1 smell in 1 file\n"), std::string::npos);
  EXPECT_NE(text.find("  ML03 Chain Indexing: 1\n"), std::string::npos);
}

TEST(Text, SortedByPathThenLine) {
  const std::string two = std::string(kChain) + "y = df['a']['c']\n";
  std::string text = render_text(report_of({{"b.py", kChain}, {"a.py", two}}));
  std::size_t a5 = text.find("a.py:5:"), a6 = text.find("a.py:6:"), b5 = text.find("b.py:5:");
  ASSERT_NE(a5, std::string::npos);
  ASSERT_NE(a6, std::string::npos);
  ASSERT_NE(b5, std::string::npos);
  EXPECT_LT(a5, a6);
  EXPECT_LT(a6, b5);
}

TEST(Text, ParseFailureAndNotesAppear) {
  std::string text = render_text(report_of({{"bad.py", "def f(:\n"}, {"n.py", "x = 1  # mlint: disable=ML99\n"}}));
  EXPECT_NE(text.find("bad.py:1:"), std::string::npos);
  EXPECT_NE(text.find("syntax error"), std::string::npos);
  EXPECT_NE(text.find("n.py:1: note:"), std::string::npos);
  EXPECT_NE(text.find("0 smells in 2 files, 1 parse failure"), std::string::npos);
}

TEST(Json, EmptyHasEmptyDiagnostics) {
  json doc = json::parse(render_json(build_report(RunResult{})));
  EXPECT_TRUE(doc["diagnostics"].is_array());
  EXPECT_TRUE(doc["diagnostics"].empty());
  EXPECT_EQ(doc["tool"], "mlint");
  EXPECT_FALSE(doc.contains("timestamp"));
}

TEST(Json, SingleFindingRoundTrips) {
  Report r = report_of({{"a.py", kChain}});
  json doc = json::parse(render_json(r));
  ASSERT_EQ(doc["diagnostics"].size(), 1u);
  const json& d = doc["diagnostics"][0];
  const Diagnostic& src = r.diagnostics[0];
  EXPECT_EQ(d["rule"], src.rule_id);
  EXPECT_EQ(d["name"], "Chain Indexing");
  EXPECT_EQ(d["path"], src.path);
  EXPECT_EQ(d["line"], src.line);
  EXPECT_EQ(d["column"], src.column);
  EXPECT_EQ(d["severity"], "warning");
  EXPECT_EQ(d["stage"], "Data Cleaning");
  EXPECT_EQ(d["effect"], json::array({"Error-prone", "Efficiency"}));
  EXPECT_EQ(d["message"], src.message);
  EXPECT_EQ(d["advice"], src.descriptor().advice);
  EXPECT_EQ(doc["summary"]["smells"], 1);
  EXPECT_EQ(doc["summary"]["by_rule"]["ML03"], 1);
  EXPECT_EQ(doc["summary"]["by_effect"]["Efficiency"], 1);

  // Keys are emitted in a fixed order.
  std::string text = render_json(r);
  EXPECT_LT(text.find("\"tool\""), text.find("\"files\""));
  EXPECT_LT(text.find("\"files\""), text.find("\"diagnostics\""));
  EXPECT_LT(text.find("\"diagnostics\""), text.find("\"summary\""));
}

TEST(Json, TimestampOnlyWhenRequested) {
  Report r = build_report(RunResult{}, utc_timestamp());
  json doc = json::parse(render_json(r));
  ASSERT_TRUE(doc.contains("timestamp"));
  EXPECT_TRUE(std::regex_match(doc["timestamp"].get<std::string>(),
                               std::regex(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z)")));
}

TEST(Summary, CountsMatchDiagnostics) {
  Report r = report_of({{"a.py", testing::read_file(testing::fixture_dir() / "ML08/positive/values_after_dropna.py")},
                        {"b.py", kChain}});
  std::size_t total = 0;
  for (const auto& [id, n] : r.by_rule) total += n;
  EXPECT_EQ(total, r.diagnostics.size());
  std::map<std::string, std::size_t> effects;
  for (const Diagnostic& d : r.diagnostics) {
    for (Effect e : d.descriptor().effects) ++effects[std::string(to_string(e))];
  }
  EXPECT_EQ(effects, r.by_effect);
}

// Structural checks for the parts of SARIF 2.1.0 this tool emits.
void check_sarif(const json& doc) {
  ASSERT_EQ(doc["version"], "2.1.0");
  ASSERT_TRUE(doc["$schema"].is_string());
  ASSERT_EQ(doc["runs"].size(), 1u);
  const json& run = doc["runs"][0];
  const json& driver = run["tool"]["driver"];
  EXPECT_EQ(driver["name"], "mlint");
  ASSERT_EQ(driver["rules"].size(), 22u);
  for (const json& rule : driver["rules"]) {
    EXPECT_TRUE(rule["id"].is_string());
    EXPECT_TRUE(rule["fullDescription"]["text"].is_string());
    EXPECT_TRUE(rule["shortDescription"]["text"].is_string());
    std::string level = rule["defaultConfiguration"]["level"];
    EXPECT_TRUE(level == "warning" || level == "note");
    EXPECT_FALSE(rule.contains("helpUri"));
  }
  ASSERT_TRUE(run["results"].is_array());
  for (const json& res : run["results"]) {
    std::size_t idx = res["ruleIndex"];
    ASSERT_LT(idx, 22u);
    EXPECT_EQ(driver["rules"][idx]["id"], res["ruleId"]);
    EXPECT_TRUE(res["message"]["text"].is_string());
    const json& loc = res["locations"][0]["physicalLocation"];
    EXPECT_TRUE(loc["artifactLocation"]["uri"].is_string());
    EXPECT_GE(loc["region"]["startLine"].get<int>(), 1);
    EXPECT_GE(loc["region"]["startColumn"].get<int>(), 1);
  }
  ASSERT_EQ(run["invocations"].size(), 1u);
  EXPECT_TRUE(run["invocations"][0]["executionSuccessful"].is_boolean());
}

TEST(Sarif, EmptyIsValidWithNoResults) {
  json doc = json::parse(render_sarif(build_report(RunResult{})));
  check_sarif(doc);
  EXPECT_TRUE(doc["runs"][0]["results"].empty());
}

TEST(Sarif, ResultsReferenceDescriptors) {
  Report r = report_of({{"dir with space/a.py", kChain}, {"bad.py", "def f(:\n"}});
  json doc = json::parse(render_sarif(r));
  check_sarif(doc);
  const json& res = doc["runs"][0]["results"];
  ASSERT_EQ(res.size(), 1u);
  EXPECT_EQ(res[0]["ruleId"], "ML03");
  EXPECT_EQ(res[0]["locations"][0]["physicalLocation"]["artifactLocation"]["uri"], "dir%20with%20space/a.py");
  EXPECT_EQ(doc["runs"][0]["invocations"][0]["toolExecutionNotifications"][0]["level"], "error");
}

TEST(Renderers, AgreeOnDiagnosticCount) {
  Report r = report_of({{"a.py", testing::read_file(testing::fixture_dir() / "ML08/positive/values_after_dropna.py")},
                        {"b.py", kChain}});
  std::string text = render_text(r);
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = text.find(": ML", pos)) != std::string::npos; ++pos) ++lines;
  EXPECT_EQ(lines, r.diagnostics.size());
  EXPECT_EQ(json::parse(render_json(r))["diagnostics"].size(), r.diagnostics.size());
  EXPECT_EQ(json::parse(render_sarif(r))["runs"][0]["results"].size(), r.diagnostics.size());
}

TEST(Explain, CatalogRows) {
  std::string ml14 = explain("ML14");
  EXPECT_NE(ml14.find("Randomness Uncontrolled"), std::string::npos);
  EXPECT_NE(ml14.find("Model Training & Model Evaluation"), std::string::npos);
  EXPECT_NE(ml14.find("Reproducibility"), std::string::npos);
  EXPECT_NE(explain("ML03").find("API-Specific: Pandas"), std::string::npos);
  EXPECT_THROW((void)explain("ML99"), std::invalid_argument);
}

TEST(ListRules, TwentyTwoRows) {
  std::string text = list_rules();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 22);
  EXPECT_EQ(text.rfind("ML01 ", 0), 0u);
}

TEST(Format, Parse) {
  EXPECT_EQ(parse_format("sarif"), Format::Sarif);
  EXPECT_FALSE(parse_format("xml"));
}

}  // namespace
}  // namespace mlint::report
