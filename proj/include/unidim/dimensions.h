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

// Cognitive coherence dimensions (CCR / UniDim) and the mapping tables that
// assign them to RST-DT and PDTB 3.0 relation labels.

#ifndef UNIDIM_DIMENSIONS_H_
#define UNIDIM_DIMENSIONS_H_

#include <array>
#include <bitset>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unidim {

// Declaration order fixes the feature index of every dimension and every
// value; checkpoints and encoded features depend on it.
enum class DimensionId : std::uint8_t {
  kPolarity,
  kBasicOperation,
  kSourceOfCoherence,
  kImplicationOrder,
  kTemporality,
  kSpecificity,
  kAlternative,
  kConditional,
  kGoal,
};

inline constexpr int kNumDimensions = 9;

inline constexpr std::array<DimensionId, kNumDimensions> kAllDimensions = {
    DimensionId::kPolarity,         DimensionId::kBasicOperation,
    DimensionId::kSourceOfCoherence, DimensionId::kImplicationOrder,
    DimensionId::kTemporality,      DimensionId::kSpecificity,
    DimensionId::kAlternative,      DimensionId::kConditional,
    DimensionId::kGoal,
};

// The four additional dimensions are binary and default to FALSE.
inline constexpr bool IsAdditional(DimensionId dim) {
  return static_cast<int>(dim) >= static_cast<int>(DimensionId::kSpecificity);
}

enum class Polarity : std::uint8_t { kPos, kNeg, kNs };
enum class BasicOperation : std::uint8_t { kCausal, kAdditive, kNs };
enum class SourceOfCoherence : std::uint8_t { kObjective, kSubjective, kNs };
enum class ImplicationOrder : std::uint8_t { kBasic, kNonBasic, kNa, kNs };
enum class Temporality : std::uint8_t {
  kSynchronous,
  kChronological,
  kAntichronological,
  kNa,
  kNs,
};

// "polarity", "basic_operation", ...
std::string_view DimensionName(DimensionId dim);
// "pol", "bop", "soc", "impl", "temp", "spec", "alt", "cond", "goal".
std::string_view DimensionShortName(DimensionId dim);
// Row label used in report tables ("Pol.", "Basic Op.", ...).
std::string_view DimensionTableLabel(DimensionId dim);
// Accepts the long or the short name. Throws kUnknownDimension.
DimensionId ParseDimension(std::string_view name);

// Size of the closed value set of a dimension.
int ValueSetSize(DimensionId dim);
// Upper-case enum spelling of a value, e.g. "POS", "NONBASIC", "TRUE".
std::string_view ValueName(DimensionId dim, int index);

// One value of one dimension. Construction validates that the value belongs
// to the dimension, so a DimensionValue can never cross dimensions.
class DimensionValue {
 public:
  DimensionValue(Polarity v);           // NOLINT(runtime/explicit)
  DimensionValue(BasicOperation v);     // NOLINT(runtime/explicit)
  DimensionValue(SourceOfCoherence v);  // NOLINT(runtime/explicit)
  DimensionValue(ImplicationOrder v);   // NOLINT(runtime/explicit)
  DimensionValue(Temporality v);        // NOLINT(runtime/explicit)

  static DimensionValue Binary(DimensionId dim, bool value);
  // Throws kOutOfRange if index is outside the dimension's value set.
  static DimensionValue FromIndex(DimensionId dim, int index);
  // Parses the upper-case enum spelling. Throws kUnknownToken.
  static DimensionValue FromName(DimensionId dim, std::string_view name);

  DimensionId dimension() const { return dim_; }
  int index() const { return index_; }
  std::string_view name() const { return ValueName(dim_, index_); }

  friend bool operator==(const DimensionValue &,
                         const DimensionValue &) = default;

 private:
  DimensionValue(DimensionId dim, int index) : dim_(dim), index_(index) {}

  DimensionId dim_;
  int index_;
};

std::ostream &operator<<(std::ostream &os, const DimensionValue &value);

// The nine-slot profile of a relation. Every slot is always present; the
// default is the first member of each value set (additional dims FALSE).
struct DimensionProfile {
  Polarity polarity = Polarity::kPos;
  BasicOperation basic_operation = BasicOperation::kCausal;
  SourceOfCoherence source_of_coherence = SourceOfCoherence::kObjective;
  ImplicationOrder implication_order = ImplicationOrder::kBasic;
  Temporality temporality = Temporality::kSynchronous;
  bool specificity = false;
  bool alternative = false;
  bool conditional = false;
  bool goal = false;

  DimensionValue Get(DimensionId dim) const;
  void Set(DimensionValue value);

  friend bool operator==(const DimensionProfile &,
                         const DimensionProfile &) = default;
};

std::ostream &operator<<(std::ostream &os, const DimensionProfile &profile);

// Profile used for relations that no table row describes: every core
// dimension under-specified, every additional dimension FALSE.
DimensionProfile UnderspecifiedProfile();

// Categorical feature indices, one per dimension in declaration order.
using FeatureIndexVector = std::array<int, kNumDimensions>;

FeatureIndexVector EncodeProfile(const DimensionProfile &profile);
DimensionProfile DecodeProfile(const FeatureIndexVector &ids);

// Which dimensions take part in a model's input (ablation removes some).
using DimensionMask = std::bitset<kNumDimensions>;
inline DimensionMask AllDimensionsMask() { return DimensionMask().set(); }

// ---------------------------------------------------------------------------
// Mapping tables.

enum class Arity : std::uint8_t { kMono, kMulti, kBoth };
enum class NuclearityOrder : std::uint8_t { kNS, kSN, kAny };
enum class ArgOrder : std::uint8_t { kA1A2, kA2A1, kAny };

std::string_view ArityName(Arity arity);            // MONO / MULTI / BOTH
std::string_view NuclearityOrderName(NuclearityOrder order);  // N_S / S_N / ANY
std::string_view ArgOrderName(ArgOrder order);      // A1_A2 / A2_A1 / ANY
Arity ParseArity(std::string_view name);
NuclearityOrder ParseNuclearityOrder(std::string_view name);
ArgOrder ParseArgOrder(std::string_view name);

struct RstMappingKey {
  std::string class_label;  // may be empty: matched on end label only
  std::string end_label;
  Arity arity = Arity::kMono;
  NuclearityOrder order = NuclearityOrder::kAny;
};

struct PdtbMappingKey {
  std::string level2_class;
  std::string end_label;  // level-3 label or empty
  ArgOrder arg_order = ArgOrder::kAny;
};

// Raw, pre-normalization cell strings in the mapping-table column order.
struct RawDimensionCells {
  std::string polarity;
  std::string basic_operation;
  std::string implication_order;
  std::string source_of_coherence;
  std::string temporality;
  std::string additional;
};

struct RstTableRow {
  // Columns as printed: Class, End label, Nuc., N-S. The class column is
  // filled in on every row (the printed table leaves repeats blank).
  std::string raw_class;
  std::string raw_end_label;
  std::string raw_nuclearity;
  std::string raw_order;
  RawDimensionCells cells;

  // Derived key. end_label is the RST-DT relation name the row describes.
  RstMappingKey key;
};

struct PdtbTableRow {
  std::string raw_class;  // Class_type column (level-2 sense)
  std::string raw_end_label;
  std::string raw_arg_order;  // "A1-A2", "A2-A1" or empty
  RawDimensionCells cells;

  PdtbMappingKey key;
};

struct MappingTable {
  std::vector<RstTableRow> rst_rows;
  std::vector<PdtbTableRow> pdtb_rows;
};

inline constexpr std::size_t kRstTableRows = 72;
inline constexpr std::size_t kPdtbTableRows = 52;

// Returns the compiled-in tables. Verifies a checksum over the embedded data
// and throws kCorruption on mismatch.
const MappingTable &LoadEmbeddedTables();

// FNV-1a over every raw cell of both tables, in order.
std::uint64_t TablesChecksum(const MappingTable &tables);

// Normalizes one raw table cell for one dimension. For the additional
// dimensions the raw string is the "Add. features" cell. Throws
// kUnknownToken naming the dimension and the cell.
DimensionValue NormalizeValue(DimensionId dim, std::string_view raw);

// Inverse spelling for NormalizeValue: the table token for a value
// ("pos", "NS", "N.A.", ...; additional dims: feature name or empty).
std::string StringifyValue(const DimensionValue &value);

DimensionProfile NormalizeCells(const RawDimensionCells &cells);

// Slot-wise merge: disagreeing core slots become NS, binary slots OR.
// Requires at least one profile.
DimensionProfile MergeProfiles(std::span<const DimensionProfile> profiles);

// Row lookups with the resolution order exact -> order ANY -> arity BOTH ->
// same arity -> every row of the end label; survivors are merged. A PDTB key
// with order ANY keeps both orders. Throw kUnknownLabel.
DimensionProfile LookupRst(const RstMappingKey &key);
DimensionProfile LookupPdtb(const PdtbMappingKey &key);

// Variants over an explicit row set, used to exercise the resolution logic
// with constructed rows.
DimensionProfile LookupRst(std::span<const RstTableRow> rows,
                           const RstMappingKey &key);
DimensionProfile LookupPdtb(std::span<const PdtbTableRow> rows,
                            const PdtbMappingKey &key);

// Canonical class name for an RST table "Class" cell ("Conditional" is listed
// as "Condition" in the class inventory).
std::string CanonicalRstClass(std::string_view table_class);

// One JSON object per line; field names follow the mapping-table column headers.
void WriteTablesJsonl(const MappingTable &tables, std::ostream &os);

}  // namespace unidim

#endif  // UNIDIM_DIMENSIONS_H_
