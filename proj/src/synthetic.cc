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
#include <cctype>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "strings.h"
#include "unidim/corpus.h"
#include "unidim/error.h"
#include "unidim/random.h"

namespace unidim {
namespace {

struct RstChoice {
  const char *klass;
  const char *relation;
  Arity arity;
  NuclearityOrder order;
};

// One representative relation per class. Picked so that the class profiles
// differ wherever the table allows it.
constexpr RstChoice kRstChoices[] = {
    {"Background", "background", Arity::kMono, NuclearityOrder::kNS},
    {"Cause", "cause", Arity::kMono, NuclearityOrder::kNS},
    {"Comparison", "comparison", Arity::kMulti, NuclearityOrder::kAny},
    {"Condition", "condition", Arity::kMono, NuclearityOrder::kNS},
    {"Contrast", "contrast", Arity::kMulti, NuclearityOrder::kAny},
    {"Elaboration", "elaboration-general-specific", Arity::kMono,
     NuclearityOrder::kNS},
    {"Enablement", "purpose", Arity::kMono, NuclearityOrder::kNS},
    {"Evaluation", "evaluation", Arity::kMulti, NuclearityOrder::kAny},
    {"Explanation", "evidence", Arity::kMono, NuclearityOrder::kNS},
    {"Joint", "list", Arity::kMulti, NuclearityOrder::kAny},
    {"Manner-Means", "means", Arity::kMono, NuclearityOrder::kNS},
    {"Summary", "summary", Arity::kMono, NuclearityOrder::kNS},
    {"Temporal", "temporal-before", Arity::kMono, NuclearityOrder::kNS},
    {"Textual-Organization", "textualorganization", Arity::kMulti,
     NuclearityOrder::kAny},
    {"Topic-Change", "topic-shift", Arity::kMulti, NuclearityOrder::kAny},
    {"Topic-Comment", "problem-solution-n", Arity::kMono,
     NuclearityOrder::kNS},
};

struct ClassTemplate {
  std::string label;
  std::string end_label;
  Arity arity = Arity::kMono;
  NuclearityOrder nuclearity_order = NuclearityOrder::kAny;
  ArgOrder arg_order = ArgOrder::kAny;
  DimensionProfile profile;
  std::string cue;
};

std::string CueToken(const std::string &label) {
  std::string cue = "cue_";
  for (unsigned char c : label) {
    cue += std::isalnum(c) ? static_cast<char>(std::tolower(c)) : '_';
  }
  return cue;
}

ClassTemplate RstTemplate(const std::string &label) {
  for (const RstChoice &choice : kRstChoices) {
    if (label != choice.klass) continue;
    ClassTemplate t;
    t.label = label;
    t.end_label = choice.relation;
    t.arity = choice.arity;
    t.nuclearity_order = choice.order;
    try {
      t.profile = LookupRst({label, t.end_label, t.arity, t.nuclearity_order});
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kUnknownLabel) throw;
      t.profile = UnderspecifiedProfile();
    }
    t.cue = CueToken(label);
    return t;
  }
  throw Error(ErrorCode::kUnsupportedClass,
              "no synthetic template for RST class \"" + label + "\"");
}

// The first A1-A2 row of the class, else its first row.
ClassTemplate PdtbTemplate(const std::string &label) {
  const PdtbTableRow *chosen = nullptr;
  for (const PdtbTableRow &row : LoadEmbeddedTables().pdtb_rows) {
    if (row.key.level2_class != label) continue;
    if (chosen == nullptr) chosen = &row;
    if (row.key.arg_order == ArgOrder::kA1A2) {
      if (chosen->key.arg_order != ArgOrder::kA1A2) chosen = &row;
      break;
    }
  }
  if (chosen == nullptr) {
    throw Error(ErrorCode::kUnsupportedClass,
                "no synthetic template for PDTB class \"" + label + "\"");
  }
  ClassTemplate t;
  t.label = label;
  t.end_label = chosen->key.end_label;
  t.arg_order = ArgOrder::kA1A2;
  t.profile = LookupPdtb({label, t.end_label, t.arg_order});
  t.cue = CueToken(label);
  return t;
}

std::string ProfileToken(DimensionId dim, const DimensionProfile &profile) {
  return std::string(DimensionShortName(dim)) + "_" +
         internal::ToLower(profile.Get(dim).name());
}

void InsertAt(std::vector<std::string> &tokens, Rng &rng, std::string token) {
  const auto pos = static_cast<std::ptrdiff_t>(rng.UniformInt(tokens.size() + 1));
  tokens.insert(tokens.begin() + pos, std::move(token));
}

std::string Format(const char *pattern, int a, int b) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), pattern, a, b);
  return buffer;
}

}  // namespace

std::vector<std::string> SyntheticClasses(Framework framework) {
  if (framework == Framework::kRst) return RstClasses();
  std::set<std::string> classes;
  for (const PdtbTableRow &row : LoadEmbeddedTables().pdtb_rows) {
    classes.insert(row.key.level2_class);
  }
  return {classes.begin(), classes.end()};
}

std::vector<RelationInstance> GenerateSynthetic(const SyntheticConfig &config) {
  if (config.n_per_class < 0 || config.validation_per_class < 0 ||
      config.test_per_class < 0 || config.arg_tokens < 1 ||
      config.vocabulary_size < 1) {
    throw Error(ErrorCode::kUsage, "synthetic sizes must be non-negative");
  }
  std::vector<ClassTemplate> templates;
  for (const std::string &label : config.class_set) {
    templates.push_back(config.framework == Framework::kRst
                            ? RstTemplate(label)
                            : PdtbTemplate(label));
  }

  const bool rst = config.framework == Framework::kRst;
  struct SplitPlan {
    int per_class;
    std::vector<int> sections;  // PDTB
    const char *prefix;         // RST
  };
  std::vector<SplitPlan> plans;
  std::vector<int> train_sections;
  for (int s = 2; s <= 20; ++s) train_sections.push_back(s);
  plans.push_back({config.n_per_class, train_sections, "train/"});
  if (!rst) plans.push_back({config.validation_per_class, {0, 1}, ""});
  plans.push_back({config.test_per_class, {21, 22}, "test/"});

  Rng rng(MixSeed(config.seed, 0x5e));
  std::vector<RelationInstance> out;
  for (const SplitPlan &plan : plans) {
    int counter = 0;
    for (int k = 0; k < plan.per_class; ++k) {
      for (std::size_t c = 0; c < templates.size(); ++c, ++counter) {
        const ClassTemplate &t = templates[c];
        RelationInstance inst;
        inst.framework = config.framework;
        if (rst) {
          inst.doc_id = plan.prefix +
                        Format("syn_%05d_%02d", k, static_cast<int>(c));
          inst.relation_type = RelationType::kNa;
        } else {
          const int n = static_cast<int>(plan.sections.size());
          inst.doc_id = Format("wsj_%02d%02d", plan.sections[counter % n],
                               (counter / n) % 100);
          inst.relation_type = config.relation_type;
        }
        inst.class_label = t.label;
        inst.end_label = t.end_label;
        inst.arity = t.arity;
        inst.nuclearity_order = t.nuclearity_order;
        inst.arg_order = t.arg_order;
        inst.profile = t.profile;

        std::vector<std::string> args[2];
        for (auto &arg : args) {
          for (int i = 0; i < config.arg_tokens; ++i) {
            arg.push_back(Format(
                "w%03d",
                static_cast<int>(rng.UniformInt(
                    static_cast<std::uint64_t>(config.vocabulary_size))),
                0));
          }
        }
        if (rng.Bernoulli(config.cue_rate)) InsertAt(args[0], rng, t.cue);
        if (config.profile_tokens) {
          for (DimensionId dim : kAllDimensions) {
            InsertAt(args[rng.UniformInt(2)], rng,
                     ProfileToken(dim, t.profile));
          }
        }
        inst.arg1_text = internal::Join(args[0], " ");
        inst.arg2_text = internal::Join(args[1], " ");
        out.push_back(std::move(inst));
      }
    }
  }
  AssignInstanceIds(out);
  return out;
}

}  // namespace unidim
