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

// Corpus readers for RST-DT trees and PDTB 3.0 annotations, relation
// instance extraction, splits, a synthetic corpus generator and statistics.

#ifndef UNIDIM_CORPUS_H_
#define UNIDIM_CORPUS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unidim/dimensions.h"

namespace unidim {

// ---------------------------------------------------------------------------
// RST trees.

enum class NodeKind : std::uint8_t { kRoot, kNucleus, kSatellite };

std::string_view NodeKindName(NodeKind kind);  // Root / Nucleus / Satellite

struct RstNode {
  NodeKind kind = NodeKind::kRoot;
  int first_edu = 0;  // for leaves first_edu == last_edu == leaf number
  int last_edu = 0;
  bool is_leaf = false;
  std::string rel2par;  // empty on a root without (rel2par ...)
  std::string text;     // leaves only
  std::vector<RstNode> children;

  friend bool operator==(const RstNode &, const RstNode &) = default;
};

// Tree whose internal nodes all have exactly two children.
struct BinaryRstTree {
  RstNode root;
};

// Parses a .dis document. Throws kSyntax (with line and column) or
// kSpanInconsistency.
RstNode ParseDis(std::string_view text);

// Inverse of ParseDis, one node per line with two-space indentation.
std::string SerializeDis(const RstNode &tree);

// Right-branching binarization. An intermediate node is a Nucleus; its
// rel2par is the multinuclear relation when it spans two or more nuclei,
// "span" otherwise.
BinaryRstTree Binarize(const RstNode &tree);

int CountLeaves(const RstNode &tree);
int CountInternalNodes(const RstNode &tree);
// Leaves in document order.
std::vector<const RstNode *> Leaves(const RstNode &tree);

// Canonical RST-DT relation name: lower case, "-e" suffix removed, and the
// "-n"/"-s" suffix removed when the longer name is unknown. Throws
// kUnknownLabel.
std::string CanonicalRstRelation(std::string_view label);

// Same-Unit and Attribution relations produce no instance.
bool IsExcludedRstRelation(std::string_view label);

// One of the 16 RST classes. Throws kUnknownLabel.
std::string GroupRstClass(std::string_view end_label);

// The 16 classes in lexicographic order.
const std::vector<std::string> &RstClasses();

// ---------------------------------------------------------------------------
// Relation instances.

enum class Framework : std::uint8_t { kRst, kPdtb };
enum class RelationType : std::uint8_t { kNa, kExplicit, kImplicit };

std::string_view FrameworkName(Framework framework);        // RST / PDTB
std::string_view RelationTypeName(RelationType type);       // NA / EXPLICIT / IMPLICIT
Framework ParseFramework(std::string_view name);
RelationType ParseRelationType(std::string_view name);

struct RelationInstance {
  // "doc_id#k", k counting the document's instances in source order. Set by
  // every reader and the generator; not part of the interchange record.
  std::string id;
  Framework framework = Framework::kRst;
  std::string doc_id;
  RelationType relation_type = RelationType::kNa;
  std::string class_label;
  std::string end_label;
  // RST: arity and nuclearity order. PDTB: arg_order.
  Arity arity = Arity::kMono;
  NuclearityOrder nuclearity_order = NuclearityOrder::kAny;
  ArgOrder arg_order = ArgOrder::kAny;
  std::string arg1_text;  // always the earlier argument
  std::string arg2_text;
  DimensionProfile profile;

  friend bool operator==(const RelationInstance &,
                         const RelationInstance &) = default;
};

// "doc_id#k" where k counts the instances of the document in list order.
std::vector<std::string> InstanceIds(
    const std::vector<RelationInstance> &instances);
// Stores InstanceIds into the id fields.
void AssignInstanceIds(std::vector<RelationInstance> &instances);

// Emits one instance per internal node of a binarized tree, skipping
// excluded relations. Throws kUnknownLabel for relations outside the
// grouping map.
std::vector<RelationInstance> ExtractRstInstances(const BinaryRstTree &tree,
                                                  const std::string &doc_id);

// Reads every .dis file below dir. Files under a directory named "test"
// (case-insensitive) get doc id "test/<stem>", all others "train/<stem>".
std::vector<RelationInstance> ReadRstDirectory(
    const std::filesystem::path &dir);

// Interchange format: one JSON object per line.
void WriteInterchange(const std::vector<RelationInstance> &instances,
                      std::ostream &os);
std::string ToInterchangeLine(const RelationInstance &instance);
// Throws kFormat naming the line.
std::vector<RelationInstance> ReadInterchange(std::istream &is);
std::vector<RelationInstance> ReadInterchangeFile(
    const std::filesystem::path &path);

// ---------------------------------------------------------------------------
// PDTB 3.0.

// Parses "Contingency.Cause.Reason" into ("Cause", "Reason"). Throws
// kUnknownSense when there is no level-2 component or no mapping row.
std::pair<std::string, std::string> ParsePdtbSense(std::string_view sense);

// Parses one pipe-delimited annotation file against its raw text. Only
// Explicit and Implicit records are kept; every sense gives one instance.
// Throws kFormat naming file_label and the line.
std::vector<RelationInstance> ParsePdtbAnnotations(std::string_view gold,
                                                   std::string_view raw,
                                                   const std::string &doc_id,
                                                   const std::string &file_label);

// A .jsonl path is read as interchange records; a directory is read as the
// PDTB 3.0 distribution layout (gold/SS/wsj_SSNN with raw/SS/wsj_SSNN).
std::vector<RelationInstance> ReadPdtbRecords(
    const std::filesystem::path &source);

// ---------------------------------------------------------------------------
// Splits.

enum class Task : std::uint8_t {
  kRst,
  kPdtbExplicit,
  kPdtbImplicit,
  kPdtbTotal,
};

std::string_view TaskName(Task task);  // rst / pdtb-explicit / ...
Task ParseTask(std::string_view name);  // throws kUsage

struct DatasetSplits {
  std::vector<RelationInstance> train;
  std::vector<RelationInstance> validation;
  std::vector<RelationInstance> test;
  std::vector<std::string> class_set;  // sorted

  int ClassIndex(const std::string &label) const;  // throws kLabelOutOfRange
};

inline constexpr int kDefaultMinClassCount = 100;

// RST: "train/" documents split 80/20 by document name, "test/" documents
// form the test set. PDTB: WSJ sections 2-20 / 0-1 / 21-22. Classes with
// fewer than min_count training instances are removed from every split.
// Throws kMissingSection.
DatasetSplits FilterAndSplit(const std::vector<RelationInstance> &instances,
                             Task task, int min_count = kDefaultMinClassCount);

// WSJ section of a PDTB document id, or -1.
int WsjSection(std::string_view doc_id);

// ---------------------------------------------------------------------------
// Synthetic corpora.

struct SyntheticConfig {
  Framework framework = Framework::kRst;
  std::vector<std::string> class_set;
  int n_per_class = 100;          // training pool
  int validation_per_class = 0;   // PDTB only; RST carves validation from train
  int test_per_class = 0;
  std::uint64_t seed = 0;
  RelationType relation_type = RelationType::kImplicit;  // PDTB only
  int arg_tokens = 8;             // noise tokens per argument
  int vocabulary_size = 400;      // shared noise vocabulary
  double cue_rate = 0.5;          // chance of a class cue token per instance
  bool profile_tokens = false;    // emit one token per dimension value
};

// Classes the generator supports for a framework.
std::vector<std::string> SyntheticClasses(Framework framework);

// Throws kUnsupportedClass.
std::vector<RelationInstance> GenerateSynthetic(const SyntheticConfig &config);

// ---------------------------------------------------------------------------
// Statistics.

struct GroupStats {
  int total = 0;
  std::map<std::string, int> class_counts;
  // Per dimension, counts indexed by value index.
  std::array<std::vector<int>, kNumDimensions> histograms;
};

struct CorpusStats {
  // Keyed by (framework, relation type) names.
  std::map<std::pair<std::string, std::string>, GroupStats> groups;
};

CorpusStats ComputeStats(const std::vector<RelationInstance> &instances);

// Tab-separated: framework, relation_type, kind, key, value, count.
void WriteStatsTsv(const CorpusStats &stats, std::ostream &os);

}  // namespace unidim

#endif  // UNIDIM_CORPUS_H_
