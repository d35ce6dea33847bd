// Copyright 2026 The UniDim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_trees.h"
#include "unidim/corpus.h"
#include "unidim/error.h"
#include "unidim/random.h"

namespace unidim {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = UNIDIM_FIXTURE_DIR;

std::string Slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kIo;
}

std::string MessageOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.what();
  }
  return "";
}

TEST_CASE("parse_dis reads the smallest document") {
  const RstNode root =
      ParseDis("( Root (leaf 1) (rel2par span) (text _!Hi!_) )");
  CHECK(root.kind == NodeKind::kRoot);
  CHECK(root.is_leaf);
  CHECK(root.text == "Hi");
  CHECK(root.rel2par == "span");
  CHECK(root.children.empty());
}

TEST_CASE("parse_dis reads the two-EDU fixture") {
  const RstNode root = ParseDis(Slurp(kFixtures / "two_edu.dis"));
  REQUIRE(root.children.size() == 2);
  CHECK(root.first_edu == 1);
  CHECK(root.last_edu == 2);
  CHECK(root.rel2par.empty());
  CHECK(root.children[0].kind == NodeKind::kNucleus);
  CHECK(root.children[0].text == "The plant employs 500 people.");
  CHECK(root.children[1].kind == NodeKind::kSatellite);
  CHECK(root.children[1].rel2par == "elaboration-additional");
  CHECK(root.children[1].text == "It opened in 1985.");
}

TEST_CASE("parse_dis accepts the distribution's closing text marker") {
  const RstNode root =
      ParseDis(Slurp(kFixtures / "rst" / "TRAINING" / "wsj_0601.out.dis"));
  const std::vector<const RstNode *> leaves = Leaves(root);
  REQUIRE(leaves.size() == 6);
  CHECK(leaves[0]->text == "Analysts said");
  // Parentheses inside the payload belong to the text.
  CHECK(leaves[2]->text == "because demand (mostly overseas) weakened.");
}

TEST_CASE("parse_dis reports syntax errors with a location") {
  const auto unbalanced = [] {
    ParseDis("( Root (span 1 2)\n  ( Nucleus (leaf 1) (text _!a!_) )\n");
  };
  CHECK(CodeOf(unbalanced) == ErrorCode::kSyntax);
  CHECK(MessageOf(unbalanced).find("line 3") != std::string::npos);
  CHECK(CodeOf([] { ParseDis("( Root (leaf 1) (text _!a!_) ) )"); }) ==
        ErrorCode::kSyntax);
  CHECK(CodeOf([] { ParseDis("( Branch (leaf 1) (text _!a!_) )"); }) ==
        ErrorCode::kSyntax);
  CHECK(CodeOf([] { ParseDis("( Root (leaf x) (text _!a!_) )"); }) ==
        ErrorCode::kSyntax);
  CHECK(CodeOf([] { ParseDis("( Root (leaf 1) (text _!a )"); }) ==
        ErrorCode::kSyntax);
  CHECK(CodeOf([] { ParseDis(""); }) == ErrorCode::kSyntax);
}

TEST_CASE("parse_dis rejects inconsistent spans") {
  CHECK(CodeOf([] {
          ParseDis(
              "( Root (span 1 3)"
              " ( Nucleus (leaf 1) (rel2par span) (text _!a!_) )"
              " ( Satellite (leaf 2) (rel2par cause) (text _!b!_) ) )");
        }) == ErrorCode::kSpanInconsistency);
  CHECK(CodeOf([] {
          ParseDis(
              "( Root (span 1 2)"
              " ( Nucleus (leaf 2) (rel2par span) (text _!a!_) )"
              " ( Satellite (leaf 1) (rel2par cause) (text _!b!_) ) )");
        }) == ErrorCode::kSpanInconsistency);
}

TEST_CASE("serialize/parse round trip on fixtures and random trees") {
  for (const fs::path &path :
       {kFixtures / "two_edu.dis",
        kFixtures / "rst" / "TRAINING" / "wsj_0601.out.dis",
        kFixtures / "rst" / "TEST" / "wsj_1101.out.dis"}) {
    const RstNode tree = ParseDis(Slurp(path));
    CHECK(ParseDis(SerializeDis(tree)) == tree);
  }
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const RstNode tree = testing::RandomTree(rng, 1 + static_cast<int>(rng.UniformInt(12)));
    CHECK(ParseDis(SerializeDis(tree)) == tree);
  }
}

TEST_CASE("binarize leaves binary trees unchanged") {
  const RstNode tree = ParseDis(Slurp(kFixtures / "two_edu.dis"));
  CHECK(Binarize(tree).root == tree);
}

TEST_CASE("binarize turns a three-way List into (A, (B, C))") {
  const RstNode tree = ParseDis(
      "( Root (span 1 3)"
      " ( Nucleus (leaf 1) (rel2par List) (text _!A!_) )"
      " ( Nucleus (leaf 2) (rel2par List) (text _!B!_) )"
      " ( Nucleus (leaf 3) (rel2par List) (text _!C!_) ) )");
  const RstNode root = Binarize(tree).root;
  REQUIRE(root.children.size() == 2);
  CHECK(root.children[0].is_leaf);
  CHECK(root.children[0].text == "A");
  const RstNode &inner = root.children[1];
  CHECK(inner.kind == NodeKind::kNucleus);
  CHECK(inner.rel2par == "List");
  CHECK(inner.first_edu == 2);
  CHECK(inner.last_edu == 3);
  REQUIRE(inner.children.size() == 2);
  CHECK(inner.children[0].text == "B");
  CHECK(inner.children[1].text == "C");
  const auto instances = ExtractRstInstances(Binarize(tree), "train/x");
  REQUIRE(instances.size() == 2);
  for (const RelationInstance &inst : instances) {
    CHECK(inst.end_label == "list");
    CHECK(inst.class_label == "Joint");
    CHECK(inst.arity == Arity::kMulti);
  }
  CHECK(instances[0].arg1_text == "A");
  CHECK(instances[0].arg2_text == "B C");
}

TEST_CASE("binarize attaches satellites around a single nucleus") {
  const RstNode tree = ParseDis(
      "( Root (span 1 3)"
      " ( Satellite (leaf 1) (rel2par condition) (text _!S1!_) )"
      " ( Nucleus (leaf 2) (rel2par span) (text _!N!_) )"
      " ( Satellite (leaf 3) (rel2par purpose) (text _!S2!_) ) )");
  const auto instances = ExtractRstInstances(Binarize(tree), "train/x");
  REQUIRE(instances.size() == 2);
  CHECK(instances[0].end_label == "condition");
  CHECK(instances[0].nuclearity_order == NuclearityOrder::kSN);
  CHECK(instances[0].arg2_text == "N S2");
  CHECK(instances[1].end_label == "purpose");
  CHECK(instances[1].nuclearity_order == NuclearityOrder::kNS);
}

TEST_CASE("binarization preserves leaves and relation multisets") {
  Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    const RstNode tree =
        testing::RandomTree(rng, 1 + static_cast<int>(rng.UniformInt(20)));
    const RstNode binary = Binarize(tree).root;
    CHECK(testing::IsBinary(binary));
    const auto before = Leaves(tree);
    const auto after = Leaves(binary);
    REQUIRE(before.size() == after.size());
    for (std::size_t k = 0; k < before.size(); ++k) {
      CHECK(before[k]->first_edu == after[k]->first_edu);
      CHECK(before[k]->text == after[k]->text);
    }
    CHECK(testing::SourceRelations(tree) == testing::BinaryRelations(binary));
  }
}

TEST_CASE("extraction count equals internal nodes minus exclusions") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const BinaryRstTree tree =
        Binarize(testing::RandomTree(rng, 1 + static_cast<int>(rng.UniformInt(15))));
    const std::multiset<std::string> relations =
        testing::BinaryRelations(tree.root);
    int excluded = 0;
    for (const std::string &r : relations) {
      if (IsExcludedRstRelation(r)) ++excluded;
    }
    const auto instances = ExtractRstInstances(tree, "train/r");
    CHECK(static_cast<int>(instances.size()) ==
          CountInternalNodes(tree.root) - excluded);
  }
}

TEST_CASE("extract_rst_instances on the fixture document") {
  const RstNode tree =
      ParseDis(Slurp(kFixtures / "rst" / "TRAINING" / "wsj_0601.out.dis"));
  const auto instances = ExtractRstInstances(Binarize(tree), "train/wsj_0601");
  // 5 internal nodes after binarization, one attribution.
  REQUIRE(instances.size() == 4);
  CHECK(instances[0].end_label == "elaboration-additional");
  CHECK(instances[0].class_label == "Elaboration");
  CHECK(instances[0].nuclearity_order == NuclearityOrder::kNS);
  CHECK(instances[1].end_label == "reason");
  CHECK(instances[1].class_label == "Explanation");
  CHECK(instances[1].arg1_text == "sales fell sharply in the quarter");
  CHECK(instances[1].profile ==
        LookupRst({"Explanation", "reason", Arity::kMono, NuclearityOrder::kNS}));
  CHECK(instances[2].end_label == "list");
  CHECK(instances[3].end_label == "list");
  // Argument 1 always precedes argument 2 in the document.
  std::string document;
  for (const RstNode *leaf : Leaves(tree)) document += leaf->text + " ";
  for (const RelationInstance &inst : instances) {
    const std::size_t a = document.find(inst.arg1_text);
    const std::size_t b = document.find(inst.arg2_text);
    REQUIRE(a != std::string::npos);
    REQUIRE(b != std::string::npos);
    CHECK(a < b);
  }
}

TEST_CASE("Cause N-S node carries the table profile") {
  const RstNode tree = ParseDis(
      "( Root (span 1 2)"
      " ( Nucleus (leaf 1) (rel2par span) (text _!It rained!_) )"
      " ( Satellite (leaf 2) (rel2par Cause) (text _!so the game stopped!_) ) )");
  const auto instances = ExtractRstInstances(Binarize(tree), "train/c");
  REQUIRE(instances.size() == 1);
  CHECK(instances[0].class_label == "Cause");
  CHECK(instances[0].profile ==
        LookupRst({"Cause", "Cause", Arity::kMono, NuclearityOrder::kNS}));
}

TEST_CASE("attribution and same-unit nodes emit no instance") {
  const RstNode tree =
      ParseDis(Slurp(kFixtures / "rst" / "TEST" / "wsj_1101.out.dis"));
  const auto instances = ExtractRstInstances(Binarize(tree), "test/wsj_1101");
  REQUIRE(instances.size() == 1);
  CHECK(instances[0].class_label == "Condition");
  // The excluded same-unit span still feeds its parent.
  CHECK(instances[0].arg2_text == "the bank, it said, will cut lending.");
  CHECK(IsExcludedRstRelation("Attribution"));
  CHECK(IsExcludedRstRelation("attribution-negative"));
  CHECK(IsExcludedRstRelation("Same-Unit"));
  CHECK_FALSE(IsExcludedRstRelation("cause"));
}

TEST_CASE("group_rst_class") {
  CHECK(GroupRstClass("consequence-s") == "Cause");
  CHECK(GroupRstClass("concession") == "Contrast");
  CHECK(GroupRstClass("elaboration-additional") == "Elaboration");
  CHECK(GroupRstClass("Elaboration-Additional-e") == "Elaboration");
  CHECK(GroupRstClass("evaluation-s") == "Evaluation");
  CHECK(GroupRstClass("TextualOrganization") == "Textual-Organization");
  CHECK(GroupRstClass("topic-drift") == "Topic-Change");
  CHECK(GroupRstClass("question-answer-n") == "Topic-Comment");
  CHECK(GroupRstClass("manner") == "Manner-Means");
  CHECK(CanonicalRstRelation("Consequence-n-e") == "consequence-n");
  CHECK(CodeOf([] { GroupRstClass("banana"); }) == ErrorCode::kUnknownLabel);
  CHECK(CodeOf([] { GroupRstClass("attribution"); }) ==
        ErrorCode::kUnknownLabel);
  CHECK(RstClasses().size() == 16);
  CHECK(std::is_sorted(RstClasses().begin(), RstClasses().end()));
}

TEST_CASE("every class has at least one relation in the grouping map") {
  const std::set<std::string> classes(RstClasses().begin(), RstClasses().end());
  std::set<std::string> seen;
  for (const RstTableRow &row : LoadEmbeddedTables().rst_rows) {
    const std::string klass = GroupRstClass(row.key.end_label);
    CHECK(classes.count(klass) == 1);
    // The grouping agrees with the table's class column.
    CHECK(klass == row.key.class_label);
    seen.insert(klass);
  }
  CHECK(seen.size() == 14);
}

TEST_CASE("RST directory reader assigns train and test ids") {
  const auto instances = ReadRstDirectory(kFixtures / "rst");
  REQUIRE(instances.size() == 5);
  CHECK(instances[0].doc_id == "test/wsj_1101.out");
  CHECK(instances[1].doc_id == "train/wsj_0601.out");
  const auto ids = InstanceIds(instances);
  CHECK(ids[0] == "test/wsj_1101.out#0");
  CHECK(ids[4] == "train/wsj_0601.out#3");
}

TEST_CASE("read_pdtb_records on the fixture directory") {
  const auto instances = ReadPdtbRecords(kFixtures / "pdtb");
  // EntRel skipped; the two-sense record gives two instances.
  REQUIRE(instances.size() == 5);
  CHECK(instances[0].class_label == "Asynchronous");
  CHECK(instances[0].end_label == "Precedence");
  CHECK(instances[0].relation_type == RelationType::kImplicit);
  CHECK(instances[0].arg1_text == "Prices rose.");
  const RelationInstance &reason = instances[1];
  CHECK(reason.class_label == "Cause");
  CHECK(reason.end_label == "Reason");
  CHECK(reason.relation_type == RelationType::kExplicit);
  CHECK(reason.arg_order == ArgOrder::kA1A2);
  CHECK(reason.profile ==
        DimensionProfile{Polarity::kPos, BasicOperation::kCausal,
                         SourceOfCoherence::kObjective,
                         ImplicationOrder::kNonBasic,
                         Temporality::kAntichronological, false, false, false,
                         false});
  CHECK(instances[2].class_label == "Contrast");
  CHECK(instances[3].class_label == "Conjunction");
  CHECK(instances[2].arg1_text == instances[3].arg1_text);
  // Arg2 comes first in the text: stored in linear order.
  const RelationInstance &flipped = instances[4];
  CHECK(flipped.doc_id == "wsj_2101");
  CHECK(flipped.arg_order == ArgOrder::kA2A1);
  CHECK(flipped.arg1_text == "Sales grew");
  CHECK(flipped.arg2_text == "costs fell");
}

TEST_CASE("PDTB reader errors and edge cases") {
  CHECK(ParsePdtbAnnotations("", "", "wsj_0001", "f").empty());
  CHECK(ParsePdtbAnnotations("\n\n", "", "wsj_0001", "f").empty());
  const auto short_line = [] {
    ParsePdtbAnnotations("Explicit|a|b\n", "xyz", "wsj_0001", "gold/00/x");
  };
  CHECK(CodeOf(short_line) == ErrorCode::kFormat);
  CHECK(MessageOf(short_line).find("gold/00/x:1") != std::string::npos);
  // Field 9 holds the sense, 15 and 21 the argument spans.
  std::vector<std::string> f(32);
  f[0] = "Implicit";
  f[8] = "Expansion";
  f[14] = "0..1";
  f[20] = "2..3";
  std::string line;
  for (std::size_t i = 0; i < f.size(); ++i) line += (i ? "|" : "") + f[i];
  CHECK(CodeOf([&] { ParsePdtbAnnotations(line, "abcd", "wsj_0001", "f"); }) ==
        ErrorCode::kUnknownSense);
  f[8] = "Expansion.Conjunction";
  f[20] = "2..30";
  line.clear();
  for (std::size_t i = 0; i < f.size(); ++i) line += (i ? "|" : "") + f[i];
  CHECK(CodeOf([&] { ParsePdtbAnnotations(line, "abcd", "wsj_0001", "f"); }) ==
        ErrorCode::kFormat);
  CHECK(ParsePdtbSense("Comparison.Concession+SpeechAct.Arg2-as-denier+SpeechAct")
            .first == "Concession+SpeechAct");
  CHECK(ParsePdtbSense("Expansion.Level-of-detail.Arg2-as-detail").second ==
        "Arg2-as-detail");
  CHECK(CodeOf([] { ParsePdtbSense("Expansion.Hypophora"); }) ==
        ErrorCode::kUnknownSense);
}

TEST_CASE("interchange round trip") {
  auto instances = ReadPdtbRecords(kFixtures / "pdtb");
  for (RelationInstance &inst : ReadRstDirectory(kFixtures / "rst")) {
    instances.push_back(inst);
  }
  std::stringstream buffer;
  WriteInterchange(instances, buffer);
  const auto back = ReadInterchange(buffer);
  CHECK(back == instances);
  // Field names are fixed.
  const std::string line = ToInterchangeLine(instances[1]);
  for (const char *field :
       {"\"framework\":\"PDTB\"", "\"doc_id\":", "\"relation_type\":\"EXPLICIT\"",
        "\"class_label\":\"Cause\"", "\"end_label\":\"Reason\"",
        "\"arity\":\"NA\"", "\"order\":\"A1_A2\"", "\"arg1_text\":",
        "\"arg2_text\":", "\"polarity\":\"POS\"",
        "\"implication_order\":\"NONBASIC\""}) {
    CHECK(line.find(field) != std::string::npos);
  }
}

TEST_CASE("interchange errors name the line") {
  std::stringstream bad("\n{\"framework\":\"RST\"}\n");
  try {
    ReadInterchange(bad);
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kFormat);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::stringstream junk("not json\n");
  CHECK(CodeOf([&] { ReadInterchange(junk); }) == ErrorCode::kFormat);
  std::stringstream empty("");
  CHECK(ReadInterchange(empty).empty());
}

SyntheticConfig PdtbConfig(std::vector<std::string> classes, int n,
                           std::uint64_t seed) {
  SyntheticConfig cfg;
  cfg.framework = Framework::kPdtb;
  cfg.class_set = std::move(classes);
  cfg.n_per_class = n;
  cfg.validation_per_class = n / 4;
  cfg.test_per_class = n / 4;
  cfg.seed = seed;
  return cfg;
}

TEST_CASE("filter_and_split drops classes under the training minimum") {
  std::vector<RelationInstance> corpus =
      GenerateSynthetic(PdtbConfig({"Cause", "Contrast"}, 120, 3));
  // Thin Contrast to 99 training instances.
  int contrast_train = 0;
  std::erase_if(corpus, [&](const RelationInstance &inst) {
    const int section = WsjSection(inst.doc_id);
    if (inst.class_label != "Contrast" || section < 2 || section > 20) {
      return false;
    }
    return ++contrast_train > 99;
  });
  const DatasetSplits splits = FilterAndSplit(corpus, Task::kPdtbImplicit);
  CHECK(splits.class_set == std::vector<std::string>{"Cause"});
  for (const auto *part : {&splits.train, &splits.validation, &splits.test}) {
    for (const RelationInstance &inst : *part) {
      CHECK(inst.class_label == "Cause");
    }
  }
  CHECK(splits.train.size() == 120);
  CHECK(FilterAndSplit(corpus, Task::kPdtbImplicit, 99).class_set.size() == 2);
  CHECK(FilterAndSplit(corpus, Task::kPdtbExplicit).class_set.empty());
}

TEST_CASE("PDTB section split") {
  CHECK(WsjSection("wsj_2101") == 21);
  CHECK(WsjSection("wsj_0012") == 0);
  CHECK(WsjSection("gold/05/wsj_0512") == 5);
  CHECK(WsjSection("doc7") == -1);
  auto instances = ReadPdtbRecords(kFixtures / "pdtb");
  // Only classes seen in training survive.
  CHECK(FilterAndSplit(instances, Task::kPdtbTotal, 0).class_set.empty());
  RelationInstance train = instances[4];
  train.doc_id = "wsj_0301";
  instances.push_back(train);
  train.doc_id = "wsj_2301";
  instances.push_back(train);
  const DatasetSplits splits = FilterAndSplit(instances, Task::kPdtbTotal, 0);
  CHECK(splits.class_set == std::vector<std::string>{"Contrast"});
  REQUIRE(splits.test.size() == 1);
  CHECK(splits.test[0].doc_id == "wsj_2101");
  REQUIRE(splits.validation.size() == 1);
  CHECK(splits.validation[0].doc_id == "wsj_0001");
  REQUIRE(splits.train.size() == 1);
  CHECK(splits.train[0].doc_id == "wsj_0301");
  RelationInstance orphan = instances[0];
  orphan.doc_id = "doc7";
  CHECK(CodeOf([&] { FilterAndSplit({orphan}, Task::kPdtbTotal); }) ==
        ErrorCode::kMissingSection);
  RelationInstance rst;
  rst.doc_id = "wsj_0601";
  CHECK(CodeOf([&] { FilterAndSplit({rst}, Task::kRst); }) ==
        ErrorCode::kMissingSection);
}

TEST_CASE("RST validation takes the last fifth of training documents") {
  SyntheticConfig cfg;
  cfg.class_set = {"Cause", "Contrast"};
  cfg.n_per_class = 10;
  cfg.test_per_class = 3;
  cfg.seed = 5;
  const DatasetSplits splits = FilterAndSplit(GenerateSynthetic(cfg), Task::kRst, 1);
  CHECK(splits.train.size() == 16);
  CHECK(splits.validation.size() == 4);
  CHECK(splits.test.size() == 6);
  std::string last_train;
  for (const auto &inst : splits.train) last_train = std::max(last_train, inst.doc_id);
  for (const auto &inst : splits.validation) CHECK(inst.doc_id > last_train);
}

TEST_CASE("splits are disjoint on random synthetic corpora") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::string> classes = SyntheticClasses(Framework::kPdtb);
    rng.Shuffle(classes);
    classes.resize(1 + rng.UniformInt(5));
    auto cfg = PdtbConfig(classes, 1 + static_cast<int>(rng.UniformInt(30)),
                          rng.Next());
    cfg.relation_type = rng.Bernoulli(0.5) ? RelationType::kExplicit
                                           : RelationType::kImplicit;
    const auto corpus = GenerateSynthetic(cfg);
    const DatasetSplits splits =
        FilterAndSplit(corpus, Task::kPdtbTotal, static_cast<int>(rng.UniformInt(20)));
    std::set<std::string> train_docs, val_docs, test_docs;
    for (const auto &i : splits.train) train_docs.insert(i.doc_id);
    for (const auto &i : splits.validation) val_docs.insert(i.doc_id);
    for (const auto &i : splits.test) test_docs.insert(i.doc_id);
    for (const auto &d : val_docs) CHECK(train_docs.count(d) == 0);
    for (const auto &d : test_docs) {
      CHECK(train_docs.count(d) == 0);
      CHECK(val_docs.count(d) == 0);
    }
    CHECK(splits.train.size() + splits.validation.size() + splits.test.size() <=
          corpus.size());
    for (const std::string &label : splits.class_set) {
      CHECK(std::any_of(splits.train.begin(), splits.train.end(),
                        [&](const auto &i) { return i.class_label == label; }));
    }
    CHECK(std::is_sorted(splits.class_set.begin(), splits.class_set.end()));
  }
}

TEST_CASE("generate_synthetic is deterministic and follows the tables") {
  SyntheticConfig cfg;
  cfg.class_set = {"Cause", "Contrast"};
  cfg.n_per_class = 2;
  cfg.seed = 7;
  const auto a = GenerateSynthetic(cfg);
  const auto b = GenerateSynthetic(cfg);
  CHECK(a.size() == 4);
  CHECK(a == b);
  std::stringstream sa, sb;
  WriteInterchange(a, sa);
  WriteInterchange(b, sb);
  CHECK(sa.str() == sb.str());
  cfg.seed = 8;
  CHECK(GenerateSynthetic(cfg) != a);

  for (Framework fw : {Framework::kRst, Framework::kPdtb}) {
    SyntheticConfig all;
    all.framework = fw;
    all.class_set = SyntheticClasses(fw);
    all.n_per_class = 5;
    all.test_per_class = 1;
    all.profile_tokens = true;
    for (const RelationInstance &inst : GenerateSynthetic(all)) {
      if (inst.class_label == "Cause") {
        CHECK(inst.profile.basic_operation == BasicOperation::kCausal);
      }
      CHECK(inst.arg1_text.size() > 0);
      CHECK(inst.arg2_text.size() > 0);
    }
  }
  cfg.n_per_class = 0;
  CHECK(GenerateSynthetic(cfg).empty());
  cfg.class_set = {"Banana"};
  cfg.n_per_class = 1;
  CHECK(CodeOf([&] { GenerateSynthetic(cfg); }) ==
        ErrorCode::kUnsupportedClass);
}

TEST_CASE("synthetic RST classes have distinct profiles except two") {
  SyntheticConfig cfg;
  cfg.class_set = RstClasses();
  cfg.n_per_class = 1;
  const auto corpus = GenerateSynthetic(cfg);
  std::map<FeatureIndexVector, std::vector<std::string>> by_profile;
  for (const auto &inst : corpus) {
    by_profile[EncodeProfile(inst.profile)].push_back(inst.class_label);
  }
  CHECK(by_profile.size() == 15);
  for (const auto &[ids, labels] : by_profile) {
    if (labels.size() > 1) {
      CHECK(labels == std::vector<std::string>{"Textual-Organization",
                                               "Topic-Change"});
    }
  }
}

TEST_CASE("compute_stats histograms") {
  RelationInstance inst;
  inst.class_label = "Cause";
  const std::vector<RelationInstance> three(3, inst);
  const CorpusStats stats = ComputeStats(three);
  REQUIRE(stats.groups.size() == 1);
  const GroupStats &group = stats.groups.at({"RST", "NA"});
  CHECK(group.total == 3);
  CHECK(group.histograms[0] == std::vector<int>{3, 0, 0});
  CHECK(group.class_counts.at("Cause") == 3);

  SyntheticConfig cfg;
  cfg.framework = Framework::kPdtb;
  cfg.class_set = {"Cause"};
  cfg.n_per_class = 17;
  const CorpusStats cause = ComputeStats(GenerateSynthetic(cfg));
  const GroupStats &g = cause.groups.at({"PDTB", "IMPLICIT"});
  CHECK(g.histograms[static_cast<int>(DimensionId::kBasicOperation)] ==
        std::vector<int>{17, 0, 0});

  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<RelationInstance> corpus;
    for (Framework fw : {Framework::kRst, Framework::kPdtb}) {
      SyntheticConfig c;
      c.framework = fw;
      c.class_set = SyntheticClasses(fw);
      c.n_per_class = static_cast<int>(rng.UniformInt(4));
      c.relation_type = RelationType::kExplicit;
      c.seed = rng.Next();
      for (auto &i : GenerateSynthetic(c)) corpus.push_back(i);
    }
    const CorpusStats s = ComputeStats(corpus);
    int total = 0;
    for (const auto &[key, group] : s.groups) {
      total += group.total;
      for (const auto &hist : group.histograms) {
        int sum = 0;
        for (int v : hist) sum += v;
        CHECK(sum == group.total);
      }
    }
    CHECK(total == static_cast<int>(corpus.size()));
    std::stringstream x, y;
    WriteStatsTsv(s, x);
    WriteStatsTsv(ComputeStats(corpus), y);
    CHECK(x.str() == y.str());
  }
}

}  // namespace
}  // namespace unidim
