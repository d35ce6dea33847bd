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

#include "unidim/dimensions.h"

#include <functional>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "mapping_tables_data.h"
#include "strings.h"
#include "unidim/error.h"

namespace unidim {

namespace {

using internal::EqualsIgnoreCase;

struct DimensionInfo {
  std::string_view name;
  std::string_view short_name;
  std::string_view table_label;
  std::vector<std::string_view> values;
};

const DimensionInfo &Info(DimensionId dim) {
  static const std::array<DimensionInfo, kNumDimensions> kInfo = {{
      {"polarity", "pol", "Pol.", {"POS", "NEG", "NS"}},
      {"basic_operation", "bop", "Basic Op.", {"CAUSAL", "ADDITIVE", "NS"}},
      {"source_of_coherence", "soc", "SoC.", {"OBJECTIVE", "SUBJECTIVE", "NS"}},
      {"implication_order", "impl", "Impl. order",
       {"BASIC", "NONBASIC", "NA", "NS"}},
      {"temporality", "temp", "Temp.",
       {"SYNCHRONOUS", "CHRONOLOGICAL", "ANTICHRONOLOGICAL", "NA", "NS"}},
      {"specificity", "spec", "Spec.", {"FALSE", "TRUE"}},
      {"alternative", "alt", "Alter.", {"FALSE", "TRUE"}},
      {"conditional", "cond", "Cond.", {"FALSE", "TRUE"}},
      {"goal", "goal", "Goal", {"FALSE", "TRUE"}},
  }};
  return kInfo[static_cast<int>(dim)];
}

// Index of the NS / NA members for the core dimensions; -1 if absent.
int NsIndex(DimensionId dim) {
  switch (dim) {
    case DimensionId::kPolarity: return static_cast<int>(Polarity::kNs);
    case DimensionId::kBasicOperation:
      return static_cast<int>(BasicOperation::kNs);
    case DimensionId::kSourceOfCoherence:
      return static_cast<int>(SourceOfCoherence::kNs);
    case DimensionId::kImplicationOrder:
      return static_cast<int>(ImplicationOrder::kNs);
    case DimensionId::kTemporality: return static_cast<int>(Temporality::kNs);
    default: return -1;
  }
}

// ---------------------------------------------------------------------------
// Raw-token lexicon. Every token that may appear in a table cell is listed
// here; anything else is a transcription error.

struct LexiconEntry {
  DimensionId dim;
  std::string_view token;
  int index;
};

constexpr int kNs = -2;  // marker: token means "under-specified"

const std::vector<LexiconEntry> &CoreLexicon() {
  using D = DimensionId;
  static const std::vector<LexiconEntry> kLexicon = {
      {D::kPolarity, "pos", static_cast<int>(Polarity::kPos)},
      {D::kPolarity, "neg", static_cast<int>(Polarity::kNeg)},
      {D::kBasicOperation, "cau", static_cast<int>(BasicOperation::kCausal)},
      {D::kBasicOperation, "add", static_cast<int>(BasicOperation::kAdditive)},
      {D::kSourceOfCoherence, "obj",
       static_cast<int>(SourceOfCoherence::kObjective)},
      {D::kSourceOfCoherence, "sub",
       static_cast<int>(SourceOfCoherence::kSubjective)},
      {D::kImplicationOrder, "bas", static_cast<int>(ImplicationOrder::kBasic)},
      {D::kImplicationOrder, "non-b",
       static_cast<int>(ImplicationOrder::kNonBasic)},
      {D::kImplicationOrder, "N.A.", static_cast<int>(ImplicationOrder::kNa)},
      {D::kImplicationOrder, "NA", static_cast<int>(ImplicationOrder::kNa)},
      {D::kTemporality, "syn", static_cast<int>(Temporality::kSynchronous)},
      {D::kTemporality, "sync", static_cast<int>(Temporality::kSynchronous)},
      {D::kTemporality, "chron", static_cast<int>(Temporality::kChronological)},
      // Only in the RST Problem-solution row; read as "chron".
      {D::kTemporality, "achron",
       static_cast<int>(Temporality::kChronological)},
      {D::kTemporality, "anti",
       static_cast<int>(Temporality::kAntichronological)},
      {D::kTemporality, "N.A.", static_cast<int>(Temporality::kNa)},
      {D::kTemporality, "NA", static_cast<int>(Temporality::kNa)},
  };
  return kLexicon;
}

// Feature names of the "Add. features" column. "list" names a dimension that
// is not modelled and contributes nothing.
struct FeatureToken {
  std::string_view token;
  std::optional<DimensionId> dim;
};

const std::vector<FeatureToken> &FeatureLexicon() {
  static const std::vector<FeatureToken> kFeatures = {
      {"specificity", DimensionId::kSpecificity},
      {"spec.-ex.", DimensionId::kSpecificity},
      {"spec.-equiv.", DimensionId::kSpecificity},
      {"alternative", DimensionId::kAlternative},
      {"conditional", DimensionId::kConditional},
      {"goal", DimensionId::kGoal},
      {"list", std::nullopt},
  };
  return kFeatures;
}

[[noreturn]] void ThrowUnknownToken(DimensionId dim, std::string_view raw) {
  throw Error(ErrorCode::kUnknownToken,
              "unknown token for dimension " + std::string(DimensionName(dim)) +
                  ": \"" + std::string(raw) + "\"");
}

// Resolves one slash-free token. Returns kNs for "NS"/"any".
int ResolveCoreToken(DimensionId dim, std::string_view token) {
  if (token == "NS" || token == "any") return kNs;
  for (const LexiconEntry &entry : CoreLexicon()) {
    if (entry.dim == dim && entry.token == token) return entry.index;
  }
  return -1;
}

std::string NormalizeEndLabel(std::string_view label) {
  return internal::ToLower(internal::Trim(label));
}

void AppendChecksum(std::uint64_t &hash, std::string_view cell) {
  hash = internal::Fnv1a(cell, hash);
  hash = internal::Fnv1a(std::string_view("\x1f", 1), hash);
}

Arity ArityFromTable(std::string_view raw) {
  if (raw == "Mono") return Arity::kMono;
  if (raw == "Multi") return Arity::kMulti;
  if (raw == "Both") return Arity::kBoth;
  throw Error(ErrorCode::kCorruption, "bad Nuc. cell: " + std::string(raw));
}

NuclearityOrder NuclearityOrderFromTable(std::string_view raw) {
  if (raw == "N-S") return NuclearityOrder::kNS;
  if (raw == "S-N") return NuclearityOrder::kSN;
  if (raw.empty()) return NuclearityOrder::kAny;
  throw Error(ErrorCode::kCorruption, "bad N-S cell: " + std::string(raw));
}

ArgOrder ArgOrderFromTable(std::string_view raw) {
  if (raw == "A1-A2") return ArgOrder::kA1A2;
  if (raw == "A2-A1") return ArgOrder::kA2A1;
  if (raw.empty()) return ArgOrder::kAny;
  throw Error(ErrorCode::kCorruption, "bad A1-A2 cell: " + std::string(raw));
}

MappingTable BuildTables() {
  MappingTable tables;
  for (std::size_t i = 0; i < internal::kRawRstRowCount; ++i) {
    const internal::RawRstRow &raw = internal::kRawRstRows[i];
    RstTableRow row;
    row.raw_class = raw.klass;
    row.raw_end_label = raw.end_label;
    row.raw_nuclearity = raw.nuclearity;
    row.raw_order = raw.order;
    row.cells = {raw.polarity,          raw.basic_operation,
                 raw.implication_order, raw.source_of_coherence,
                 raw.temporality,       raw.additional};
    row.key.class_label = CanonicalRstClass(raw.klass);
    row.key.end_label = raw.relation;
    row.key.arity = ArityFromTable(raw.nuclearity);
    row.key.order = NuclearityOrderFromTable(raw.order);
    tables.rst_rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < internal::kRawPdtbRowCount; ++i) {
    const internal::RawPdtbRow &raw = internal::kRawPdtbRows[i];
    PdtbTableRow row;
    row.raw_class = raw.klass;
    row.raw_end_label = raw.end_label;
    row.raw_arg_order = raw.arg_order;
    row.cells = {raw.polarity,          raw.basic_operation,
                 raw.implication_order, raw.source_of_coherence,
                 raw.temporality,       raw.additional};
    row.key.level2_class = raw.klass;
    row.key.end_label = raw.end_label;
    row.key.arg_order = ArgOrderFromTable(raw.arg_order);
    tables.pdtb_rows.push_back(std::move(row));
  }
  return tables;
}

// Checksum of the embedded data as transcribed. Changing any cell requires
// updating this constant.
constexpr std::uint64_t kEmbeddedTablesChecksum = 0x42e9d12a5fdd735fULL;

// Applies the tiered resolution: the first non-empty tier wins.
template <typename Row>
std::vector<const Row *> FirstNonEmptyTier(
    const std::vector<const Row *> &candidates,
    std::initializer_list<std::function<bool(const Row &)>> tiers) {
  for (const auto &tier : tiers) {
    std::vector<const Row *> kept;
    for (const Row *row : candidates) {
      if (tier(*row)) kept.push_back(row);
    }
    if (!kept.empty()) return kept;
  }
  return candidates;
}

template <typename Row>
DimensionProfile MergeRows(const std::vector<const Row *> &rows) {
  std::vector<DimensionProfile> profiles;
  profiles.reserve(rows.size());
  for (const Row *row : rows) profiles.push_back(NormalizeCells(row->cells));
  return MergeProfiles(profiles);
}

}  // namespace

std::string_view DimensionName(DimensionId dim) { return Info(dim).name; }
std::string_view DimensionShortName(DimensionId dim) {
  return Info(dim).short_name;
}
std::string_view DimensionTableLabel(DimensionId dim) {
  return Info(dim).table_label;
}

DimensionId ParseDimension(std::string_view name) {
  for (DimensionId dim : kAllDimensions) {
    if (name == Info(dim).name || name == Info(dim).short_name) return dim;
  }
  throw Error(ErrorCode::kUnknownDimension,
              "unknown dimension: \"" + std::string(name) + "\"");
}

int ValueSetSize(DimensionId dim) {
  return static_cast<int>(Info(dim).values.size());
}

std::string_view ValueName(DimensionId dim, int index) {
  const auto &values = Info(dim).values;
  if (index < 0 || index >= static_cast<int>(values.size())) {
    throw Error(ErrorCode::kOutOfRange,
                "value index " + std::to_string(index) + " out of range for " +
                    std::string(DimensionName(dim)));
  }
  return values[index];
}

DimensionValue::DimensionValue(Polarity v)
    : dim_(DimensionId::kPolarity), index_(static_cast<int>(v)) {}
DimensionValue::DimensionValue(BasicOperation v)
    : dim_(DimensionId::kBasicOperation), index_(static_cast<int>(v)) {}
DimensionValue::DimensionValue(SourceOfCoherence v)
    : dim_(DimensionId::kSourceOfCoherence), index_(static_cast<int>(v)) {}
DimensionValue::DimensionValue(ImplicationOrder v)
    : dim_(DimensionId::kImplicationOrder), index_(static_cast<int>(v)) {}
DimensionValue::DimensionValue(Temporality v)
    : dim_(DimensionId::kTemporality), index_(static_cast<int>(v)) {}

DimensionValue DimensionValue::Binary(DimensionId dim, bool value) {
  if (!IsAdditional(dim)) {
    throw Error(ErrorCode::kOutOfRange,
                std::string(DimensionName(dim)) + " is not a binary dimension");
  }
  return DimensionValue(dim, value ? 1 : 0);
}

DimensionValue DimensionValue::FromIndex(DimensionId dim, int index) {
  ValueName(dim, index);  // range check
  return DimensionValue(dim, index);
}

DimensionValue DimensionValue::FromName(DimensionId dim,
                                        std::string_view name) {
  const auto &values = Info(dim).values;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == name) return DimensionValue(dim, static_cast<int>(i));
  }
  ThrowUnknownToken(dim, name);
}

std::ostream &operator<<(std::ostream &os, const DimensionValue &value) {
  return os << DimensionName(value.dimension()) << "=" << value.name();
}

DimensionValue DimensionProfile::Get(DimensionId dim) const {
  switch (dim) {
    case DimensionId::kPolarity: return polarity;
    case DimensionId::kBasicOperation: return basic_operation;
    case DimensionId::kSourceOfCoherence: return source_of_coherence;
    case DimensionId::kImplicationOrder: return implication_order;
    case DimensionId::kTemporality: return temporality;
    case DimensionId::kSpecificity: return DimensionValue::Binary(dim, specificity);
    case DimensionId::kAlternative: return DimensionValue::Binary(dim, alternative);
    case DimensionId::kConditional: return DimensionValue::Binary(dim, conditional);
    case DimensionId::kGoal: return DimensionValue::Binary(dim, goal);
  }
  throw Error(ErrorCode::kUnknownDimension, "bad dimension id");
}

void DimensionProfile::Set(DimensionValue value) {
  const int i = value.index();
  switch (value.dimension()) {
    case DimensionId::kPolarity: polarity = static_cast<Polarity>(i); break;
    case DimensionId::kBasicOperation:
      basic_operation = static_cast<BasicOperation>(i);
      break;
    case DimensionId::kSourceOfCoherence:
      source_of_coherence = static_cast<SourceOfCoherence>(i);
      break;
    case DimensionId::kImplicationOrder:
      implication_order = static_cast<ImplicationOrder>(i);
      break;
    case DimensionId::kTemporality:
      temporality = static_cast<Temporality>(i);
      break;
    case DimensionId::kSpecificity: specificity = i == 1; break;
    case DimensionId::kAlternative: alternative = i == 1; break;
    case DimensionId::kConditional: conditional = i == 1; break;
    case DimensionId::kGoal: goal = i == 1; break;
  }
}

std::ostream &operator<<(std::ostream &os, const DimensionProfile &profile) {
  os << "{";
  for (DimensionId dim : kAllDimensions) {
    if (dim != DimensionId::kPolarity) os << ", ";
    os << profile.Get(dim).name();
  }
  return os << "}";
}

DimensionProfile UnderspecifiedProfile() {
  DimensionProfile profile;
  profile.polarity = Polarity::kNs;
  profile.basic_operation = BasicOperation::kNs;
  profile.source_of_coherence = SourceOfCoherence::kNs;
  profile.implication_order = ImplicationOrder::kNs;
  profile.temporality = Temporality::kNs;
  return profile;
}

FeatureIndexVector EncodeProfile(const DimensionProfile &profile) {
  FeatureIndexVector ids{};
  for (DimensionId dim : kAllDimensions) {
    ids[static_cast<int>(dim)] = profile.Get(dim).index();
  }
  return ids;
}

DimensionProfile DecodeProfile(const FeatureIndexVector &ids) {
  DimensionProfile profile;
  for (DimensionId dim : kAllDimensions) {
    profile.Set(DimensionValue::FromIndex(dim, ids[static_cast<int>(dim)]));
  }
  return profile;
}

std::string_view ArityName(Arity arity) {
  switch (arity) {
    case Arity::kMono: return "MONO";
    case Arity::kMulti: return "MULTI";
    case Arity::kBoth: return "BOTH";
  }
  return "";
}

std::string_view NuclearityOrderName(NuclearityOrder order) {
  switch (order) {
    case NuclearityOrder::kNS: return "N_S";
    case NuclearityOrder::kSN: return "S_N";
    case NuclearityOrder::kAny: return "ANY";
  }
  return "";
}

std::string_view ArgOrderName(ArgOrder order) {
  switch (order) {
    case ArgOrder::kA1A2: return "A1_A2";
    case ArgOrder::kA2A1: return "A2_A1";
    case ArgOrder::kAny: return "ANY";
  }
  return "";
}

Arity ParseArity(std::string_view name) {
  if (name == "MONO") return Arity::kMono;
  if (name == "MULTI") return Arity::kMulti;
  if (name == "BOTH") return Arity::kBoth;
  throw Error(ErrorCode::kFormat, "bad arity: \"" + std::string(name) + "\"");
}

NuclearityOrder ParseNuclearityOrder(std::string_view name) {
  if (name == "N_S") return NuclearityOrder::kNS;
  if (name == "S_N") return NuclearityOrder::kSN;
  if (name == "ANY") return NuclearityOrder::kAny;
  throw Error(ErrorCode::kFormat,
              "bad nuclearity order: \"" + std::string(name) + "\"");
}

ArgOrder ParseArgOrder(std::string_view name) {
  if (name == "A1_A2") return ArgOrder::kA1A2;
  if (name == "A2_A1") return ArgOrder::kA2A1;
  if (name == "ANY") return ArgOrder::kAny;
  throw Error(ErrorCode::kFormat,
              "bad argument order: \"" + std::string(name) + "\"");
}

std::uint64_t TablesChecksum(const MappingTable &tables) {
  std::uint64_t hash = internal::kFnvOffset;
  const auto add_cells = [&hash](const RawDimensionCells &c) {
    for (const std::string *cell :
         {&c.polarity, &c.basic_operation, &c.implication_order,
          &c.source_of_coherence, &c.temporality, &c.additional}) {
      AppendChecksum(hash, *cell);
    }
  };
  for (const RstTableRow &row : tables.rst_rows) {
    AppendChecksum(hash, row.raw_class);
    AppendChecksum(hash, row.raw_end_label);
    AppendChecksum(hash, row.raw_nuclearity);
    AppendChecksum(hash, row.raw_order);
    add_cells(row.cells);
    AppendChecksum(hash, row.key.end_label);
  }
  for (const PdtbTableRow &row : tables.pdtb_rows) {
    AppendChecksum(hash, row.raw_class);
    AppendChecksum(hash, row.raw_end_label);
    AppendChecksum(hash, row.raw_arg_order);
    add_cells(row.cells);
  }
  return hash;
}

const MappingTable &LoadEmbeddedTables() {
  static const MappingTable kTables = [] {
    MappingTable tables = BuildTables();
    const std::uint64_t checksum = TablesChecksum(tables);
    if (tables.rst_rows.size() != kRstTableRows ||
        tables.pdtb_rows.size() != kPdtbTableRows ||
        checksum != kEmbeddedTablesChecksum) {
      std::ostringstream msg;
      msg << "embedded mapping tables failed their integrity check (rows "
          << tables.rst_rows.size() << "/" << tables.pdtb_rows.size()
          << ", checksum " << std::hex << checksum << ")";
      throw Error(ErrorCode::kCorruption, msg.str());
    }
    return tables;
  }();
  return kTables;
}

DimensionValue NormalizeValue(DimensionId dim, std::string_view raw) {
  const std::string_view cell = internal::Trim(raw);
  if (IsAdditional(dim)) {
    bool present = false;
    for (const std::string &token : internal::SplitWhitespace(cell)) {
      const FeatureToken *match = nullptr;
      for (const FeatureToken &feature : FeatureLexicon()) {
        if (feature.token == token) match = &feature;
      }
      if (match == nullptr) ThrowUnknownToken(dim, raw);
      if (match->dim == dim) present = true;
    }
    return DimensionValue::Binary(dim, present);
  }
  if (cell.empty()) ThrowUnknownToken(dim, raw);
  const std::vector<std::string> parts = internal::Split(cell, '/');
  int resolved = -1;
  for (const std::string &part : parts) {
    const int index = ResolveCoreToken(dim, part);
    if (index == -1) ThrowUnknownToken(dim, raw);
    resolved = index;
  }
  // Slash-joined alternatives are ambiguous by construction.
  if (parts.size() > 1 || resolved == kNs) {
    return DimensionValue::FromIndex(dim, NsIndex(dim));
  }
  return DimensionValue::FromIndex(dim, resolved);
}

std::string StringifyValue(const DimensionValue &value) {
  const DimensionId dim = value.dimension();
  if (IsAdditional(dim)) {
    return value.index() == 1 ? std::string(DimensionName(dim)) : std::string();
  }
  if (value.index() == NsIndex(dim)) return "NS";
  for (const LexiconEntry &entry : CoreLexicon()) {
    if (entry.dim == dim && entry.index == value.index()) {
      return std::string(entry.token);
    }
  }
  return std::string(value.name());
}

DimensionProfile NormalizeCells(const RawDimensionCells &cells) {
  DimensionProfile profile;
  profile.Set(NormalizeValue(DimensionId::kPolarity, cells.polarity));
  profile.Set(NormalizeValue(DimensionId::kBasicOperation, cells.basic_operation));
  profile.Set(
      NormalizeValue(DimensionId::kImplicationOrder, cells.implication_order));
  profile.Set(
      NormalizeValue(DimensionId::kSourceOfCoherence, cells.source_of_coherence));
  profile.Set(NormalizeValue(DimensionId::kTemporality, cells.temporality));
  for (DimensionId dim : {DimensionId::kSpecificity, DimensionId::kAlternative,
                          DimensionId::kConditional, DimensionId::kGoal}) {
    profile.Set(NormalizeValue(dim, cells.additional));
  }
  return profile;
}

DimensionProfile MergeProfiles(std::span<const DimensionProfile> profiles) {
  if (profiles.empty()) {
    throw Error(ErrorCode::kUnknownLabel, "no rows to merge");
  }
  DimensionProfile merged = profiles.front();
  for (const DimensionProfile &other : profiles.subspan(1)) {
    for (DimensionId dim : kAllDimensions) {
      const DimensionValue a = merged.Get(dim);
      const DimensionValue b = other.Get(dim);
      if (a == b) continue;
      if (IsAdditional(dim)) {
        merged.Set(DimensionValue::Binary(dim, true));
      } else {
        merged.Set(DimensionValue::FromIndex(dim, NsIndex(dim)));
      }
    }
  }
  return merged;
}

std::string CanonicalRstClass(std::string_view table_class) {
  if (table_class == "Conditional") return "Condition";
  return std::string(table_class);
}

DimensionProfile LookupRst(std::span<const RstTableRow> rows,
                           const RstMappingKey &key) {
  const std::string wanted = NormalizeEndLabel(key.end_label);
  std::vector<const RstTableRow *> candidates;
  bool class_conflict = false;
  for (const RstTableRow &row : rows) {
    if (NormalizeEndLabel(row.key.end_label) != wanted &&
        NormalizeEndLabel(row.raw_end_label) != wanted) {
      continue;
    }
    if (!key.class_label.empty() &&
        !EqualsIgnoreCase(row.key.class_label, key.class_label) &&
        !EqualsIgnoreCase(row.raw_class, key.class_label)) {
      class_conflict = true;
      continue;
    }
    candidates.push_back(&row);
  }
  if (candidates.empty()) {
    throw Error(ErrorCode::kUnknownLabel,
                "no RST mapping row for end label \"" + key.end_label + "\"" +
                    (class_conflict ? " in class \"" + key.class_label + "\""
                                    : std::string()));
  }
  const auto selected = FirstNonEmptyTier<RstTableRow>(
      candidates,
      {[&](const RstTableRow &r) {
         return r.key.arity == key.arity && r.key.order == key.order;
       },
       [&](const RstTableRow &r) {
         return r.key.arity == key.arity &&
                r.key.order == NuclearityOrder::kAny;
       },
       [&](const RstTableRow &r) {
         return r.key.arity == Arity::kBoth &&
                r.key.order == NuclearityOrder::kAny;
       },
       [&](const RstTableRow &r) { return r.key.arity == key.arity; }});
  return MergeRows(selected);
}

DimensionProfile LookupPdtb(std::span<const PdtbTableRow> rows,
                            const PdtbMappingKey &key) {
  std::vector<const PdtbTableRow *> level2;
  for (const PdtbTableRow &row : rows) {
    if (EqualsIgnoreCase(row.key.level2_class, key.level2_class)) {
      level2.push_back(&row);
    }
  }
  if (level2.empty()) {
    throw Error(ErrorCode::kUnknownLabel,
                "no PDTB mapping row for level-2 class \"" + key.level2_class +
                    "\"");
  }
  // Narrow to the end label; senses without a level-3 row fall back to the
  // label-less row of the class, then to the whole class.
  const std::string wanted = NormalizeEndLabel(key.end_label);
  const auto base = FirstNonEmptyTier<PdtbTableRow>(
      level2, {[&](const PdtbTableRow &r) {
                 return !wanted.empty() &&
                        NormalizeEndLabel(r.key.end_label) == wanted;
               },
               [](const PdtbTableRow &r) { return r.key.end_label.empty(); }});
  // An unknown argument order keeps every row of the base set.
  if (key.arg_order == ArgOrder::kAny) return MergeRows(base);
  const auto selected = FirstNonEmptyTier<PdtbTableRow>(
      base, {[&](const PdtbTableRow &r) {
               return r.key.arg_order == key.arg_order;
             },
             [](const PdtbTableRow &r) {
               return r.key.arg_order == ArgOrder::kAny;
             }});
  return MergeRows(selected);
}

DimensionProfile LookupRst(const RstMappingKey &key) {
  return LookupRst(LoadEmbeddedTables().rst_rows, key);
}

DimensionProfile LookupPdtb(const PdtbMappingKey &key) {
  return LookupPdtb(LoadEmbeddedTables().pdtb_rows, key);
}

void WriteTablesJsonl(const MappingTable &tables, std::ostream &os) {
  using nlohmann::ordered_json;
  const auto add_cells = [](ordered_json &rec, const RawDimensionCells &c) {
    rec["Pol."] = c.polarity;
    rec["Basic Op."] = c.basic_operation;
    rec["Impl. order"] = c.implication_order;
    rec["SoC"] = c.source_of_coherence;
    rec["Temp."] = c.temporality;
    rec["Add. features"] = c.additional;
  };
  for (const RstTableRow &row : tables.rst_rows) {
    ordered_json rec;
    rec["table"] = "rst";
    rec["Class"] = row.raw_class;
    rec["End label"] = row.raw_end_label;
    rec["Nuc."] = row.raw_nuclearity;
    rec["N-S"] = row.raw_order;
    add_cells(rec, row.cells);
    os << rec.dump() << "\n";
  }
  for (const PdtbTableRow &row : tables.pdtb_rows) {
    ordered_json rec;
    rec["table"] = "pdtb";
    rec["Class_type"] = row.raw_class;
    rec["End label"] = row.raw_end_label;
    rec["A1-A2"] = row.raw_arg_order;
    add_cells(rec, row.cells);
    os << rec.dump() << "\n";
  }
}

}  // namespace unidim
