// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock time.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mlint/cli/cli.hpp"
#include "mlint/harness/corpus.hpp"
#include "mlint/report/report.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace mlint;
using mlint::harness::Expectation;

namespace {

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
  bool ok() const { return failures.empty(); }
};

using Site = std::tuple<std::string, std::uint32_t, std::string>;  // path, line, rule

std::set<Site> sites(const RunResult& r) {
  std::set<Site> out;
  for (const Diagnostic& d : r.diagnostics) out.emplace(d.path, d.line, d.rule_id);
  return out;
}

std::set<Site> sites(const std::vector<Expectation>& expected) {
  std::set<Site> out;
  for (const Expectation& e : expected) out.emplace(e.path, e.line, e.rule_id);
  return out;
}

/// A fixture project loaded into memory, keyed by its on-disk paths.
struct Project {
  std::vector<std::string> paths;
  std::vector<std::string> texts;
  bool positive = false;
};

std::vector<Project> load_projects() {
  std::vector<Project> out;
  for (const auto& files : harness::fixture_projects(testing::fixture_dir())) {
    Project p;
    for (const fs::path& f : files) {
      p.paths.push_back(f.generic_string());
      p.texts.push_back(testing::read_file(f));
      p.positive = p.positive || f.generic_string().find("/positive/") != std::string::npos;
    }
    out.push_back(std::move(p));
  }
  return out;
}

RunResult run_texts(const std::vector<std::string>& paths, const std::vector<std::string>& texts,
                    const RunConfig& config = RunConfig::defaults(), bool reversed = false) {
  std::vector<SourceUnit> units;
  for (std::size_t i = 0; i < paths.size(); ++i) units.push_back(parse(paths[i], texts[i]));
  if (reversed) std::reverse(units.begin(), units.end());
  return testing::default_engine().run(units, config);
}

std::vector<Expectation> expectations_of(const Project& p) {
  std::vector<Expectation> out;
  for (std::size_t i = 0; i < p.paths.size(); ++i) {
    auto found = harness::collect_expectations(parse(p.paths[i], p.texts[i]));
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

std::string join(const std::set<Site>& s) {
  std::string out;
  for (const auto& [path, line, id] : s) out += " " + fs::path(path).filename().string() + ":" + std::to_string(line) + ":" + id;
  return out.empty() ? " (none)" : out;
}

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int code = cli::run_cli(args, o, e);
  if (out) *out = o.str();
  return code;
}

// 1. Catalog completeness.
struct Row {
  const char* id;
  const char* name;
  const char* stage;
  const char* effect;
  const char* type;
};

const Row kCatalog[] = {
    {"ML01", "Unnecessary Iteration", "Data Cleaning", "Efficiency", "Generic"},
    {"ML02", "NaN Equivalence Comparison Misused", "Data Cleaning", "Error-prone", "Generic"},
    {"ML03", "Chain Indexing", "Data Cleaning", "Error-prone & Efficiency", "API-Specific: Pandas"},
    {"ML04", "Columns and DataType Not Explicitly Set", "Data Cleaning", "Readability", "Generic"},
    {"ML05", "Empty Column Misinitialization", "Data Cleaning", "Robustness", "Generic"},
    {"ML06", "Merge API Parameter Not Explicitly Set", "Data Cleaning", "Readability & Error-prone", "Generic"},
    {"ML07", "In-Place APIs Misused", "Data Cleaning", "Error-prone", "Generic"},
    {"ML08", "Dataframe Conversion API Misused", "Data Cleaning", "Error-prone", "API-Specific: Pandas"},
    {"ML09", "Matrix Multiplication API Misused", "Data Cleaning", "Readability", "API-Specific: NumPy"},
    {"ML10", "No Scaling before Scaling-Sensitive Operation", "Feature Engineering", "Error-prone", "Generic"},
    {"ML11", "Hyperparameter Not Explicitly Set", "Model Training", "Error-prone & Reproducibility", "Generic"},
    {"ML12", "Memory Not Freed", "Model Training", "Memory Issue", "Generic"},
    {"ML13", "Deterministic Algorithm Option Not Used", "Model Training", "Reproducibility", "Generic"},
    {"ML14", "Randomness Uncontrolled", "Model Training & Model Evaluation", "Reproducibility", "Generic"},
    {"ML15", "Missing the Mask of Invalid Value", "Model Training", "Error-prone", "Generic"},
    {"ML16", "Broadcasting Feature Not Used", "Model Training", "Efficiency", "Generic"},
    {"ML17", "TensorArray Not Used", "Model Training", "Efficiency & Error-prone", "API-Specific: TensorFlow 2"},
    {"ML18", "Training / Evaluation Mode Improper Toggling", "Model Training", "Error-prone", "Generic"},
    {"ML19", "Pytorch Call Method Misused", "Model Training", "Robustness", "API-Specific: PyTorch"},
    {"ML20", "Gradients Not Cleared before Backward Propagation", "Model Training", "Error-prone",
     "API-Specific: PyTorch"},
    {"ML21", "Data Leakage", "Model Evaluation", "Error-prone", "Generic"},
    {"ML22", "Threshold-Dependent Validation", "Model Evaluation", "Robustness", "Generic"},
};

Check catalog_completeness() {
  Check c;
  std::string listing;
  c.expect(run_cli({"--list-rules"}, &listing) == 0, "--list-rules exit status");
  std::vector<std::string> rows;
  std::istringstream in(listing);
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  c.expect(rows.size() == 22, "--list-rules printed " + std::to_string(rows.size()) + " rows");

  c.expect(catalog().size() == 22, "registry size");
  int generic = 0, specific = 0;
  for (std::size_t i = 0; i < std::size(kCatalog); ++i) {
    const Row& want = kCatalog[i];
    const RuleDescriptor* d = find_rule(want.id);
    if (!d) {
      c.expect(false, std::string("missing ") + want.id);
      continue;
    }
    c.expect(d->name == want.name, std::string(want.id) + " name: " + d->name);
    c.expect(d->stage_label() == want.stage, std::string(want.id) + " stage: " + d->stage_label());
    c.expect(d->effect_label() == want.effect, std::string(want.id) + " effect: " + d->effect_label());
    c.expect(d->type_label() == want.type, std::string(want.id) + " type: " + d->type_label());
    (d->api_specific ? specific : generic)++;
    if (i < rows.size()) {
      const std::string& row = rows[i];
      bool all = row.rfind(want.id, 0) == 0 && row.find(want.name) != std::string::npos &&
                 row.find(want.stage) != std::string::npos && row.find(want.effect) != std::string::npos &&
                 row.find(want.type) != std::string::npos;
      c.expect(all, std::string("--list-rules row ") + want.id + ": " + row);
    }
  }
  c.expect(generic == 16 && specific == 6,
           "generic/API-specific split " + std::to_string(generic) + "/" + std::to_string(specific));
  return c;
}

// 2. Canonical snippets.
Check canonical_examples() {
  Check c;
  const struct {
    const char* file;
    const char* rule;
    bool positive;
  } kSnippets[] = {
      {"ML01/positive/canonical_row_loop.py", "ML01", true},
      {"ML01/negative/canonical_vectorized.py", "ML01", false},
      {"ML03/positive/canonical_chain.py", "ML03", true},
      {"ML03/negative/canonical_loc.py", "ML03", false},
      {"ML15/positive/canonical_tf_log.py", "ML15", true},
      {"ML15/negative/canonical_clipped.py", "ML15", false},
      {"ML20/positive/canonical_missing_zero_grad.py", "ML20", true},
      {"ML20/negative/canonical_in_order.py", "ML20", false},
      {"ML19/positive/canonical_forward.py", "ML19", true},
      {"ML19/negative/canonical_call.py", "ML19", false},
  };
  for (const auto& s : kSnippets) {
    fs::path path = testing::fixture_dir() / s.file;
    std::string text = testing::read_file(path);
    SourceUnit unit = parse(path.generic_string(), text);
    c.expect(unit.ast() != nullptr, std::string(s.file) + " does not parse");
    std::set<Site> want = sites(harness::collect_expectations(unit));
    std::set<Site> got = sites(testing::default_engine().run({unit}, RunConfig::defaults()));
    c.expect(got == want, std::string(s.file) + ": expected" + join(want) + ", got" + join(got));
    bool has_rule = std::any_of(got.begin(), got.end(), [&](const Site& x) { return std::get<2>(x) == s.rule; });
    c.expect(has_rule == s.positive,
             std::string(s.file) + (s.positive ? " does not trigger " : " triggers ") + s.rule);
  }
  return c;
}

// 3. Corpus verification.
Check corpus_verification() {
  Check c;
  harness::VerifyReport r = harness::verify(testing::fixture_dir(), testing::default_engine(), RunConfig::defaults());
  c.expect(r.passed(), r.summary());
  c.expect(r.files >= 88, "only " + std::to_string(r.files) + " fixture files");
  std::map<std::string, std::size_t> positive_sites;
  for (const Expectation& e : harness::collect_expectations(testing::fixture_dir())) ++positive_sites[e.rule_id];
  for (const RuleDescriptor& d : catalog()) {
    c.expect(positive_sites[d.id] >= 2, d.id + " has fewer than 2 positive sites");
    fs::path neg = testing::fixture_dir() / d.id / "negative";
    std::size_t negatives = fs::is_directory(neg) ? harness::fixture_projects(neg).size() : 0;
    c.expect(negatives >= 2, d.id + " has fewer than 2 negative fixtures");
  }
  return c;
}

// 4. Determinism.
Check determinism(const std::vector<Project>& projects) {
  Check c;
  const std::string root = testing::fixture_dir().string();
  for (const char* format : {"json", "sarif"}) {
    std::string first, second;
    run_cli({"--format", format, root}, &first);
    run_cli({"--format", format, root}, &second);
    c.expect(!first.empty() && first == second, std::string(format) + " output differs between runs");
  }

  std::vector<std::string> all_paths, all_texts;
  for (const Project& p : projects) {
    all_paths.insert(all_paths.end(), p.paths.begin(), p.paths.end());
    all_texts.insert(all_texts.end(), p.texts.begin(), p.texts.end());
  }
  RunResult forward = run_texts(all_paths, all_texts);
  RunResult backward = run_texts(all_paths, all_texts, RunConfig::defaults(), true);
  c.expect(forward.diagnostics == backward.diagnostics, "whole-corpus diagnostics depend on file order");

  std::size_t project_level = 0;
  for (const Project& p : projects) {
    RunResult a = run_texts(p.paths, p.texts);
    RunResult b = run_texts(p.paths, p.texts, RunConfig::defaults(), true);
    c.expect(a.diagnostics == b.diagnostics, p.paths.front() + ": diagnostics depend on file order");
    for (const Diagnostic& d : a.diagnostics) project_level += d.rule_id == "ML13" || d.rule_id == "ML14";
  }
  c.expect(project_level > 0, "no ML13/ML14 diagnostics were exercised");
  return c;
}

// 5. Mode gating.
Check mode_gating(const std::vector<Project>& projects) {
  Check c;
  RunConfig production = RunConfig::defaults();
  production.mode = Mode::Production;
  std::size_t gated = 0;
  for (const Project& p : projects) {
    std::set<Site> dev = sites(run_texts(p.paths, p.texts));
    std::set<Site> prod = sites(run_texts(p.paths, p.texts, production));
    std::set<Site> expected;
    for (const Site& s : dev) {
      const std::string& id = std::get<2>(s);
      if (id == "ML13" || id == "ML14") {
        ++gated;
      } else {
        expected.insert(s);
      }
    }
    c.expect(prod == expected, p.paths.front() + ": production run differs by more than ML13/ML14");
  }
  c.expect(gated >= 4, "too few ML13/ML14 positives to exercise gating");

  std::string ml13 = (testing::fixture_dir() / "ML13" / "positive").string();
  c.expect(run_cli({"--mode", "development", "--select", "ML13", ml13}) == 1, "development run of ML13 positives");
  c.expect(run_cli({"--mode", "production", "--select", "ML13", ml13}) == 0, "production run of ML13 positives");
  return c;
}

// 6. Alias robustness.
Check alias_robustness(const std::vector<Project>& projects) {
  Check c;
  std::size_t rewritten_projects = 0;
  for (const Project& p : projects) {
    if (!p.positive) continue;
    std::vector<std::string> rewritten;
    bool changed = false;
    for (const std::string& text : p.texts) {
      rewritten.push_back(harness::rewrite_import_aliases(text));
      changed = changed || rewritten.back() != text;
    }
    if (!changed) continue;
    ++rewritten_projects;
    std::set<Site> before = sites(run_texts(p.paths, p.texts));
    std::set<Site> after = sites(run_texts(p.paths, rewritten));
    c.expect(before == after, p.paths.front() + ": before" + join(before) + ", after" + join(after));
  }
  c.expect(rewritten_projects >= 40, "only " + std::to_string(rewritten_projects) + " positive projects rewritten");
  return c;
}

// 7. Fuzz.
std::string mutate(const std::string& seed, std::mt19937& rng) {
  std::string text = seed;
  static const char* kPieces[] = {"(", ")", "[", "]", ":", "\n", "    ", "\t", "'", "\"\"\"", "#", "\\", ".",
                                  "for ", "def ", "lambda ", "yield", "**", "@", "\xc3\xa9", "\xff", "\r"};
  int edits = 1 + static_cast<int>(rng() % 8);
  for (int i = 0; i < edits && !text.empty(); ++i) {
    std::size_t pos = rng() % text.size();
    switch (rng() % 4) {
      case 0: text.erase(pos, 1 + rng() % 12); break;
      case 1: text.insert(pos, kPieces[rng() % std::size(kPieces)]); break;
      case 2: text[pos] = static_cast<char>(rng() & 0xff); break;
      default: {
        std::size_t from = rng() % text.size();
        text.insert(pos, text.substr(from, rng() % 40));
      }
    }
  }
  return text;
}

// Line-granular edits that usually keep the file parseable, so the analysis
// passes see shuffled but well-formed programs.
std::string mutate_lines(const std::string& seed, std::mt19937& rng) {
  std::vector<std::string> lines;
  std::istringstream in(seed);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  static const char* kNames[] = {"df", "model", "x", "y", "np", "pd", "torch", "loss", "data"};
  int edits = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < edits && !lines.empty(); ++i) {
    std::size_t a = rng() % lines.size(), b = rng() % lines.size();
    switch (rng() % 4) {
      case 0: lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(a)); break;
      case 1: lines.insert(lines.begin() + static_cast<std::ptrdiff_t>(a), lines[b]); break;
      case 2: std::swap(lines[a], lines[b]); break;
      default: {
        std::string from = kNames[rng() % std::size(kNames)], to = kNames[rng() % std::size(kNames)];
        for (std::string& line : lines) {
          for (std::size_t at = line.find(from); at != std::string::npos; at = line.find(from, at + to.size())) {
            line.replace(at, from.size(), to);
          }
        }
      }
    }
  }
  std::string out;
  for (const std::string& line : lines) out += line + "\n";
  return out;
}

Check fuzz(const std::vector<Project>& projects) {
  Check c;
  std::vector<std::string> seeds;
  for (const Project& p : projects) seeds.insert(seeds.end(), p.texts.begin(), p.texts.end());
  std::mt19937 rng(20240611);
  const std::string tokens = "abcxyz_019 =+-*/%<>!()[]{}:;,.'\"#@\\\n\n\t    ";
  std::size_t parsed = 0, failed = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string text;
    switch (i % 4) {
      case 0: {
        std::size_t len = rng() % 400;
        for (std::size_t k = 0; k < len; ++k) text.push_back(static_cast<char>(rng() & 0xff));
        break;
      }
      case 1: {
        std::size_t len = rng() % 400;
        for (std::size_t k = 0; k < len; ++k) text.push_back(tokens[rng() % tokens.size()]);
        break;
      }
      case 2: text = mutate(seeds[rng() % seeds.size()], rng); break;
      default: text = mutate_lines(seeds[rng() % seeds.size()], rng);
    }
    try {
      SourceUnit unit = parse("fuzz.py", text);
      (unit.ast() ? parsed : failed)++;
      RunResult r = testing::default_engine().run({unit}, RunConfig::defaults());
      c.expect(!r.has_rule_errors(), "rule error on fuzz input " + std::to_string(i));
      (void)report::render_sarif(report::build_report(r));
    } catch (const std::exception& e) {
      c.expect(false, "exception on fuzz input " + std::to_string(i) + ": " + e.what());
    }
  }
  c.expect(parsed > 500 && failed > 500,
           "fuzz mix too one-sided: " + std::to_string(parsed) + " parsed, " + std::to_string(failed) + " failed");
  return c;
}

// 8. Suppression.
std::string append_to_line(const std::string& text, std::uint32_t line, const std::string& suffix) {
  std::string out;
  std::istringstream in(text);
  std::uint32_t n = 0;
  for (std::string l; std::getline(in, l);) {
    if (++n == line) l += suffix;
    out += l + "\n";
  }
  return out;
}

Check suppression(const std::vector<Project>& projects) {
  Check c;
  std::size_t suppressed = 0;
  for (const Project& p : projects) {
    if (!p.positive) continue;
    std::vector<Expectation> expected = expectations_of(p);
    std::set<Site> baseline = sites(run_texts(p.paths, p.texts));

    for (const Expectation& e : expected) {
      std::vector<std::string> texts = p.texts;
      auto idx = std::find(p.paths.begin(), p.paths.end(), e.path) - p.paths.begin();
      texts[idx] = append_to_line(texts[idx], e.line, "  # mlint: disable=" + e.rule_id);
      std::set<Site> want = baseline;
      want.erase({e.path, e.line, e.rule_id});
      std::set<Site> got = sites(run_texts(p.paths, texts));
      c.expect(got == want, e.path + ":" + std::to_string(e.line) + " " + e.rule_id + ": got" + join(got));
      ++suppressed;
    }

    testing::TempDir dir;
    std::vector<std::string> args;
    std::vector<std::string> all = p.texts;
    for (const Expectation& e : expected) {
      auto idx = std::find(p.paths.begin(), p.paths.end(), e.path) - p.paths.begin();
      all[idx] = append_to_line(all[idx], e.line, "  # mlint: disable=" + e.rule_id);
    }
    for (std::size_t i = 0; i < p.paths.size(); ++i) {
      args.push_back(dir.write(std::to_string(i) + "_" + fs::path(p.paths[i]).filename().string(), all[i]).string());
    }
    std::string out;
    int code = run_cli(args, &out);
    c.expect(code == 0, p.paths.front() + ": exit " + std::to_string(code) + " after suppressing all findings\n" + out);

    std::vector<std::string> original_args;
    for (std::size_t i = 0; i < p.paths.size(); ++i) {
      original_args.push_back(dir.write("orig/" + std::to_string(i) + "_" + fs::path(p.paths[i]).filename().string(),
                                        p.texts[i])
                                  .string());
    }
    c.expect(run_cli(original_args) == 1, p.paths.front() + ": unsuppressed copy did not exit 1");
  }
  c.expect(suppressed >= 44, "only " + std::to_string(suppressed) + " expected sites were suppressed");
  return c;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Check()> run;
  };

  std::vector<Project> projects = load_projects();
  const Criterion criteria[] = {
      {"1 catalog completeness", 1.0, catalog_completeness},
      {"2 canonical examples", 5.0, canonical_examples},
      {"3 corpus verification", 30.0, corpus_verification},
      {"4 determinism", 60.0, [&] { return determinism(projects); }},
      {"5 mode gating", 60.0, [&] { return mode_gating(projects); }},
      {"6 alias robustness", 60.0, [&] { return alias_robustness(projects); }},
      {"7 robustness fuzz", 60.0, [&] { return fuzz(projects); }},
      {"8 suppression", 60.0, [&] { return suppression(projects); }},
  };

  int failed = 0;
  for (const Criterion& k : criteria) {
    auto start = clock::now();
    Check result = k.run();
    double seconds = std::chrono::duration<double>(clock::now() - start).count();
    if (seconds > k.budget_seconds) {
      result.failures.push_back("took " + std::to_string(seconds) + " s, budget " + std::to_string(k.budget_seconds) + " s");
    }
    std::printf("%s: %s (%.3f s)\n", result.ok() ? "PASS" : "FAIL", k.name, seconds);
    for (const std::string& f : result.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    failed += !result.ok();
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
