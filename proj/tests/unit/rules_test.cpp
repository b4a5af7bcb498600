#include <gtest/gtest.h>

#include "test_support.hpp"

namespace mlint {
namespace {

using testing::Hits;

struct Case {
  const char* name;
  const char* rule;
  const char* source;
  std::vector<std::uint32_t> lines;  // lines the rule must flag, nothing else
};

void PrintTo(const Case& c, std::ostream* os) { *os << c.name; }

#define PD "import pandas as pd\nimport numpy as np\ndf = pd.DataFrame({'a': [1]})\n"
#define TF "import tensorflow as tf\n"
#define TORCH "import torch\n"
#define SK "from sklearn.decomposition import PCA\nfrom sklearn.cluster import KMeans\n"

const Case kCases[] = {
    // ML01
    {"ml01_iterrows", "ML01", PD "result = []\nfor index, row in df.iterrows():\n    result.append(row[0] + 1)\n", {5}},
    {"ml01_vectorized", "ML01", PD "result = df.add(1)\n", {}},
    {"ml01_plain_list", "ML01", PD "s = 0\nfor x in [1, 2, 3]:\n    s += x\n", {}},
    {"ml01_tensor_accumulate", "ML01",
     TORCH "t = torch.zeros(4)\ntotal = 0\nfor i in range(4):\n    total += t[i]\n", {4}},
    // ML02
    {"ml02_df_eq_nan", "ML02", PD "mask = df == np.nan\n", {4}},
    {"ml02_is_none", "ML02", PD "ok = x is None\n", {}},
    {"ml02_nan_eq_nan", "ML02", PD "flag = np.nan == np.nan\n", {4}},
    {"ml02_float_nan", "ML02", PD "bad = df['a'] != float('NaN')\n", {4}},
    {"ml02_no_library", "ML02", "import math\nbad = x == float('nan')\n", {}},
    // ML03
    {"ml03_chain", "ML03", PD "v = df[\"one\"][\"two\"]\n", {4}},
    {"ml03_loc", "ML03", PD "v = df.loc[:, (\"one\", \"two\")]\n", {}},
    {"ml03_plain_list", "ML03", PD "matrix = [[1, 2], [3, 4]]\nv = matrix[0][1]\n", {}},
    // ML04
    {"ml04_bare", "ML04", PD "d = pd.read_csv(\"a.csv\")\n", {4}},
    {"ml04_explicit", "ML04", PD "d = pd.read_csv(\"a.csv\", usecols=[\"a\"], dtype={\"a\": \"int64\"})\n", {}},
    {"ml04_dtype_only", "ML04", PD "d = pd.read_csv(\"a.csv\", dtype=str)\n", {4}},
    {"ml04_forwarded", "ML04", PD "d = pd.read_csv(\"a.csv\", **opts)\n", {}},
    // ML05
    {"ml05_zero", "ML05", PD "df[\"new\"] = 0\n", {4}},
    {"ml05_nan", "ML05", PD "df[\"new\"] = np.nan\n", {}},
    {"ml05_computed", "ML05", PD "df[\"count\"] = len(rows)\n", {}},
    {"ml05_empty_string", "ML05", PD "df[\"name\"] = \"\"\n", {4}},
    // ML06
    {"ml06_bare", "ML06", PD "m = df.merge(df2)\n", {4}},
    {"ml06_explicit", "ML06", PD "m = df.merge(df2, on=\"k\", how=\"inner\", validate=\"1:1\")\n", {}},
    {"ml06_left_right", "ML06", PD "m = df.merge(df2, left_on=\"a\", right_on=\"b\", how=\"left\", validate=\"m:1\")\n", {}},
    {"ml06_function_form", "ML06", PD "m = pd.merge(df, df2, on=\"k\")\n", {4}},
    // ML07
    {"ml07_dropna", "ML07", PD "df.dropna()\n", {4}},
    {"ml07_assigned", "ML07", PD "df = df.dropna()\n", {}},
    {"ml07_clip", "ML07", PD "a = np.zeros(3)\nnp.clip(a, 0, 1)\n", {5}},
    {"ml07_inplace", "ML07", PD "df.dropna(inplace=True)\n", {}},
    // ML08
    {"ml08_values", "ML08", PD "arr = df.values\n", {4}},
    {"ml08_to_numpy", "ML08", PD "arr = df.to_numpy()\n", {}},
    {"ml08_unknown", "ML08", PD "arr = obj.values\n", {}},
    // ML09
    {"ml09_matrices", "ML09", PD "a = np.zeros((2, 2))\nb = np.ones((2, 2))\nc = np.dot(a, b)\n", {6}},
    {"ml09_scalars", "ML09", PD "c = np.dot(3.0, 4.0)\n", {}},
    {"ml09_matmul", "ML09", PD "a = np.zeros((2, 2))\nc = np.matmul(a, a)\n", {}},
    {"ml09_vectors", "ML09", PD "a = np.zeros(3)\nc = np.dot(a, a)\n", {}},
    // ML10
    {"ml10_pca", "ML10", SK "m = PCA()\nm.fit(X)\n", {4}},
    {"ml10_pipeline", "ML10",
     SK "from sklearn.pipeline import Pipeline\nfrom sklearn.preprocessing import StandardScaler\n"
        "p = Pipeline([(\"s\", StandardScaler()), (\"pca\", PCA())])\np.fit(X)\n",
     {}},
    {"ml10_insensitive", "ML10", "from sklearn.linear_model import LinearRegression\nm = LinearRegression()\nm.fit(X)\n", {}},
    // ML11
    {"ml11_kmeans", "ML11", SK "m = KMeans()\n", {3}},
    {"ml11_kmeans_explicit", "ML11", SK "m = KMeans(n_clusters=8, random_state=0)\n", {}},
    {"ml11_sgd", "ML11", TORCH "from torch.optim import SGD\nopt = SGD(model.parameters())\n", {3}},
    {"ml11_sgd_lr", "ML11", TORCH "from torch.optim import SGD\nopt = SGD(model.parameters(), lr=0.1)\n", {}},
    // ML12
    {"ml12_model_in_loop", "ML12",
     TF "from tensorflow.keras import Sequential\nfor k in ks:\n    model = Sequential()\n    model.fit(x, y)\n", {4}},
    {"ml12_cleared", "ML12",
     TF "from tensorflow.keras import Sequential\nfor k in ks:\n    tf.keras.backend.clear_session()\n"
        "    model = Sequential()\n",
     {}},
    {"ml12_loss_item", "ML12",
     TORCH "losses = []\nfor b in data:\n    loss = criterion(model(b), t)\n    losses.append(loss.item())\n", {}},
    // ML15
    {"ml15_tf_log", "ML15", TF "y = tf.log(x)\n", {2}},
    {"ml15_clipped", "ML15", TF "y = tf.log(tf.clip_by_value(x, 1e-10, 1.0))\n", {}},
    {"ml15_positive_literal", "ML15", "import numpy as np\ny = np.log(2.0)\n", {}},
    // ML16
    {"ml16_tile_add", "ML16", TF "a = tf.constant([[1.0]])\nb = tf.constant([[2.0]])\nc = tf.tile(a, [1, n]) + b\n", {4}},
    {"ml16_broadcast", "ML16", TF "a = tf.constant([[1.0]])\nb = tf.constant([[2.0]])\nc = a + b\n", {}},
    {"ml16_tile_variable", "ML16",
     TF "a = tf.constant([[1.0]])\nb = tf.constant([[2.0]])\nt = tf.tile(a, [1, n])\nc = t * b\n", {4}},
    // ML17
    {"ml17_concat_loop", "ML17", TF "a = tf.constant([0])\nfor i in r:\n    a = tf.concat([a, x], 0)\n", {4}},
    {"ml17_tensor_array", "ML17",
     TF "ta = tf.TensorArray(tf.float32, size=n)\nfor i in range(n):\n    ta = ta.write(i, x)\n", {}},
    {"ml17_no_loop", "ML17", TF "a = tf.constant([0])\nb = tf.concat([a, x], 0)\n", {}},
    // ML18
    {"ml18_eval_then_backward", "ML18",
     TORCH "model = torch.nn.Linear(2, 2)\nmodel.eval()\nvalidate()\nloss.backward()\n", {3}},
    {"ml18_toggled_back", "ML18",
     TORCH "model = torch.nn.Linear(2, 2)\nmodel.eval()\nvalidate()\nmodel.train()\nloss.backward()\n", {}},
    {"ml18_eval_only", "ML18", TORCH "def test(model):\n    model = torch.nn.Linear(2, 2)\n    model.eval()\n", {}},
    // ML19
    {"ml19_forward", "ML19",
     TORCH "class Net(torch.nn.Module):\n    def step(self, x):\n        out = self.net.forward(x)\n", {4}},
    {"ml19_call", "ML19", TORCH "class Net(torch.nn.Module):\n    def step(self, x):\n        out = self.net(x)\n", {}},
    {"ml19_super", "ML19",
     TORCH "class Net(torch.nn.Module):\n    def forward(self, x):\n        return super().forward(x)\n", {}},
    // ML20
    {"ml20_missing", "ML20",
     TORCH "opt = torch.optim.SGD(params, lr=0.1)\nfor b in data:\n    loss = f(b)\n    loss.backward()\n    opt.step()\n",
     {5}},
    {"ml20_in_order", "ML20",
     TORCH "opt = torch.optim.SGD(params, lr=0.1)\nfor b in data:\n    opt.zero_grad()\n    loss = f(b)\n"
           "    loss.backward()\n    opt.step()\n",
     {}},
    {"ml20_single_shot", "ML20", TORCH "loss = f(x)\nloss.backward()\n", {}},
    // ML21
    {"ml21_scale_then_split", "ML21",
     "from sklearn.preprocessing import StandardScaler\nfrom sklearn.model_selection import train_test_split\n"
     "scaler = StandardScaler()\nXs = scaler.fit_transform(X)\na = train_test_split(Xs, y)\n",
     {5}},
    {"ml21_pipeline_cv", "ML21",
     "from sklearn.pipeline import Pipeline\nfrom sklearn.preprocessing import StandardScaler\nfrom sklearn.svm import SVC\n"
     "from sklearn.model_selection import cross_val_score\n"
     "p = Pipeline([(\"s\", StandardScaler()), (\"m\", SVC())])\ns = cross_val_score(p, X, y)\n",
     {}},
    {"ml21_plain_split", "ML21", "from sklearn.model_selection import train_test_split\na = train_test_split(X, y)\n", {}},
    // ML22
    {"ml22_f1_only", "ML22", "from sklearn.metrics import f1_score\ns = f1_score(y, p)\n", {2}},
    {"ml22_with_auc", "ML22",
     "from sklearn.metrics import f1_score, roc_auc_score\ns = f1_score(y, p)\na = roc_auc_score(y, q)\n", {}},
    {"ml22_no_metrics", "ML22", "from sklearn.metrics import f1_score\nprint(1)\n", {}},
};

class RuleExamples : public ::testing::TestWithParam<Case> {};

TEST_P(RuleExamples, FlagsExactlyTheExpectedLines) {
  const Case& c = GetParam();
  Hits expected;
  for (std::uint32_t line : c.lines) expected.emplace(line, c.rule);
  EXPECT_EQ(testing::only(c.rule, c.source), expected) << c.source;
}

INSTANTIATE_TEST_SUITE_P(Catalog, RuleExamples, ::testing::ValuesIn(kCases),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(Ml04, ParameterNarrowsReaderList) {
  RunConfig c = RunConfig::defaults();
  c.selected = {"ML04"};
  c.params["ML04"].set_list("readers", {"pandas.read_excel"});
  RunResult r = testing::analyze(PD "d = pd.read_csv(\"a.csv\")\n", c);
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Ml04, MessageNamesMissingKeyword) {
  RunConfig c = RunConfig::defaults();
  c.selected = {"ML04"};
  RunResult r = testing::analyze(PD "d = pd.read_csv(\"a.csv\", dtype=str)\n", c);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_NE(r.diagnostics[0].message.find("usecols"), std::string::npos);
  EXPECT_EQ(r.diagnostics[0].message.find("dtype"), std::string::npos);
}

TEST(Ml06, MessageListsMissingParameters) {
  RunConfig c = RunConfig::defaults();
  c.selected = {"ML06"};
  RunResult r = testing::analyze(PD "m = df.merge(df2)\n", c);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  for (const char* key : {"on", "how", "validate"}) {
    EXPECT_NE(r.diagnostics[0].message.find(key), std::string::npos) << key;
  }
}

TEST(Ml11, OptimizerKeywordRequirementIsConfigurable) {
  RunConfig c = RunConfig::defaults();
  c.selected = {"ML11"};
  c.params["ML11"].set_bool("optimizer_requires_keyword", false);
  RunResult r = testing::analyze(TORCH "opt = torch.optim.SGD(model.parameters())\n", c);
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Ml13, ProjectWithoutOptionFlagsEachTorchImport) {
  RunConfig c = RunConfig::defaults();
  c.selected = {"ML13"};
  RunResult r = testing::analyze(testing::Files{{"a.py", "import os\nimport torch\n"}, {"b.py", "from torch import nn\n"}}, c);
  ASSERT_EQ(r.diagnostics.size(), 2u);
  EXPECT_EQ(r.diagnostics[0].line, 2u);
  EXPECT_EQ(r.diagnostics[1].path, "b.py");

  RunResult fixed = testing::analyze(
      testing::Files{{"a.py", "import torch\n"}, {"b.py", "import torch\ntorch.use_deterministic_algorithms(True)\n"}}, c);
  EXPECT_TRUE(fixed.diagnostics.empty());
}

TEST(Ml14, SplitWithoutRandomStateFlagged) {
  EXPECT_EQ(testing::only("ML14", "from sklearn.model_selection import train_test_split\na = train_test_split(X, y)\n"),
            (Hits{{2, "ML14"}}));
  EXPECT_TRUE(testing::only("ML14", "from sklearn.model_selection import train_test_split\n"
                                    "a = train_test_split(X, y, random_state=0)\n")
                  .empty());
}

TEST(Ml14, SeededFileSilencesProjectArm) {
  EXPECT_TRUE(testing::only("ML14", "import numpy as np\nnp.random.seed(42)\nx = np.random.rand(3)\n").empty());
  EXPECT_EQ(testing::only("ML14", "import numpy as np\nx = np.random.rand(3)\n"), (Hits{{2, "ML14"}}));
}

TEST(Ml09, UnknownRankIsInfoOnlyInDevelopment) {
  const std::string text = PD "def f(a, b):\n    return np.dot(np.asarray(a), np.asarray(b))\n";
  RunConfig c = RunConfig::defaults();
  c.selected = {"ML09"};
  RunResult dev = testing::analyze(text, c);
  ASSERT_EQ(dev.diagnostics.size(), 1u);
  EXPECT_EQ(dev.diagnostics[0].severity, Severity::Info);
  c.mode = Mode::Production;
  EXPECT_TRUE(testing::analyze(text, c).diagnostics.empty());
}

TEST(Severity, FollowsEffectPolicy) {
  for (const RuleDescriptor& d : catalog()) {
    bool error_prone = std::find(d.effects.begin(), d.effects.end(), Effect::ErrorProne) != d.effects.end();
    bool advisory = d.id == "ML04" || d.id == "ML06" || d.id == "ML08" || d.id == "ML09" || d.id == "ML16" ||
                    d.id == "ML22";
    if (advisory) {
      EXPECT_EQ(d.severity, Severity::Info) << d.id;
    } else if (error_prone) {
      EXPECT_EQ(d.severity, Severity::Warning) << d.id;
    }
  }
}

}  // namespace
}  // namespace mlint
