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

#include <map>
#include <string>
#include <vector>

#include "strings.h"
#include "unidim/corpus.h"
#include "unidim/error.h"

namespace unidim {
namespace {

struct Grouping {
  const char *relation;
  const char *klass;
};

// RST-DT relation names (lower case, without the "-e" embedding suffix)
// grouped into the 16 coarse classes.
constexpr Grouping kGroupings[] = {
    {"background", "Background"},
    {"circumstance", "Background"},
    {"cause", "Cause"},
    {"result", "Cause"},
    {"consequence", "Cause"},
    {"consequence-n", "Cause"},
    {"consequence-s", "Cause"},
    {"cause-result", "Cause"},
    {"comparison", "Comparison"},
    {"preference", "Comparison"},
    {"analogy", "Comparison"},
    {"proportion", "Comparison"},
    {"condition", "Condition"},
    {"hypothetical", "Condition"},
    {"contingency", "Condition"},
    {"otherwise", "Condition"},
    {"contrast", "Contrast"},
    {"concession", "Contrast"},
    {"antithesis", "Contrast"},
    {"elaboration-additional", "Elaboration"},
    {"elaboration-general-specific", "Elaboration"},
    {"elaboration-part-whole", "Elaboration"},
    {"elaboration-process-step", "Elaboration"},
    {"elaboration-object-attribute", "Elaboration"},
    {"elaboration-set-member", "Elaboration"},
    {"example", "Elaboration"},
    {"definition", "Elaboration"},
    {"purpose", "Enablement"},
    {"enablement", "Enablement"},
    {"evaluation", "Evaluation"},
    {"interpretation", "Evaluation"},
    {"conclusion", "Evaluation"},
    {"comment", "Evaluation"},
    {"evidence", "Explanation"},
    {"explanation-argumentative", "Explanation"},
    {"reason", "Explanation"},
    {"list", "Joint"},
    {"disjunction", "Joint"},
    {"manner", "Manner-Means"},
    {"means", "Manner-Means"},
    {"summary", "Summary"},
    {"restatement", "Summary"},
    {"temporal-before", "Temporal"},
    {"temporal-after", "Temporal"},
    {"temporal-same-time", "Temporal"},
    {"sequence", "Temporal"},
    {"inverted-sequence", "Temporal"},
    {"textualorganization", "Textual-Organization"},
    {"topic-shift", "Topic-Change"},
    {"topic-drift", "Topic-Change"},
    {"problem-solution", "Topic-Comment"},
    {"problem-solution-n", "Topic-Comment"},
    {"problem-solution-s", "Topic-Comment"},
    {"question-answer", "Topic-Comment"},
    {"statement-response", "Topic-Comment"},
    {"topic-comment", "Topic-Comment"},
    {"comment-topic", "Topic-Comment"},
    {"rhetorical-question", "Topic-Comment"},
};

constexpr const char *kExcluded[] = {"attribution", "attribution-negative",
                                     "same-unit"};

const std::map<std::string, std::string> &GroupingMap() {
  static const auto *map = [] {
    auto *m = new std::map<std::string, std::string>();
    for (const Grouping &g : kGroupings) m->emplace(g.relation, g.klass);
    return m;
  }();
  return *map;
}

bool IsExcludedName(const std::string &name) {
  for (const char *excluded : kExcluded) {
    if (name == excluded) return true;
  }
  return false;
}

bool Known(const std::string &name) {
  return GroupingMap().count(name) > 0 || IsExcludedName(name);
}

bool EndsWith(const std::string &s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string CanonicalRstRelation(std::string_view label) {
  std::string name = internal::ToLower(internal::Trim(label));
  if (EndsWith(name, "-e")) name.resize(name.size() - 2);
  if (Known(name)) return name;
  if (EndsWith(name, "-n") || EndsWith(name, "-s")) {
    const std::string shorter = name.substr(0, name.size() - 2);
    if (Known(shorter)) return shorter;
  }
  throw Error(ErrorCode::kUnknownLabel,
              "unknown RST relation \"" + std::string(label) + "\"");
}

bool IsExcludedRstRelation(std::string_view label) {
  std::string name = internal::ToLower(internal::Trim(label));
  if (EndsWith(name, "-e")) name.resize(name.size() - 2);
  return IsExcludedName(name);
}

std::string GroupRstClass(std::string_view end_label) {
  const std::string name = CanonicalRstRelation(end_label);
  const auto it = GroupingMap().find(name);
  if (it == GroupingMap().end()) {
    throw Error(ErrorCode::kUnknownLabel,
                "RST relation \"" + std::string(end_label) +
                    "\" has no class");
  }
  return it->second;
}

const std::vector<std::string> &RstClasses() {
  static const std::vector<std::string> classes = {
      "Background",  "Cause",        "Comparison",
      "Condition",   "Contrast",     "Elaboration",
      "Enablement",  "Evaluation",   "Explanation",
      "Joint",       "Manner-Means", "Summary",
      "Temporal",    "Textual-Organization",
      "Topic-Change", "Topic-Comment",
  };
  return classes;
}

}  // namespace unidim
