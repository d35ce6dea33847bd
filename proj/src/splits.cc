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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "strings.h"
#include "unidim/corpus.h"
#include "unidim/error.h"

namespace unidim {
namespace {

bool TaskKeeps(Task task, const RelationInstance &inst) {
  switch (task) {
    case Task::kRst:
      return inst.framework == Framework::kRst;
    case Task::kPdtbExplicit:
      return inst.framework == Framework::kPdtb &&
             inst.relation_type == RelationType::kExplicit;
    case Task::kPdtbImplicit:
      return inst.framework == Framework::kPdtb &&
             inst.relation_type == RelationType::kImplicit;
    case Task::kPdtbTotal:
      return inst.framework == Framework::kPdtb;
  }
  return false;
}

enum class Part { kTrain, kValidation, kTest, kNone };

}  // namespace

std::string_view TaskName(Task task) {
  switch (task) {
    case Task::kRst:
      return "rst";
    case Task::kPdtbExplicit:
      return "pdtb-explicit";
    case Task::kPdtbImplicit:
      return "pdtb-implicit";
    case Task::kPdtbTotal:
      return "pdtb-total";
  }
  return "?";
}

Task ParseTask(std::string_view name) {
  for (Task task : {Task::kRst, Task::kPdtbExplicit, Task::kPdtbImplicit,
                    Task::kPdtbTotal}) {
    if (internal::EqualsIgnoreCase(name, TaskName(task))) return task;
  }
  throw Error(ErrorCode::kUsage,
              "unknown task \"" + std::string(name) +
                  "\" (expected rst, pdtb-explicit, pdtb-implicit or "
                  "pdtb-total)");
}

int DatasetSplits::ClassIndex(const std::string &label) const {
  const auto it = std::lower_bound(class_set.begin(), class_set.end(), label);
  if (it == class_set.end() || *it != label) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "label \"" + label + "\" is not in the class set");
  }
  return static_cast<int>(it - class_set.begin());
}

int WsjSection(std::string_view doc_id) {
  const std::size_t slash = doc_id.find_last_of('/');
  if (slash != std::string_view::npos) doc_id.remove_prefix(slash + 1);
  if (doc_id.size() < 8 || doc_id.substr(0, 4) != "wsj_") return -1;
  const char a = doc_id[4], b = doc_id[5];
  if (a < '0' || a > '9' || b < '0' || b > '9') return -1;
  return (a - '0') * 10 + (b - '0');
}

DatasetSplits FilterAndSplit(const std::vector<RelationInstance> &instances,
                             Task task, int min_count) {
  std::vector<const RelationInstance *> kept;
  for (const RelationInstance &inst : instances) {
    if (TaskKeeps(task, inst)) kept.push_back(&inst);
  }
  std::vector<Part> parts(kept.size(), Part::kNone);
  if (task == Task::kRst) {
    std::set<std::string> train_docs;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const std::string &doc = kept[i]->doc_id;
      if (doc.rfind("train/", 0) == 0) {
        parts[i] = Part::kTrain;
        train_docs.insert(doc);
      } else if (doc.rfind("test/", 0) == 0) {
        parts[i] = Part::kTest;
      } else {
        throw Error(ErrorCode::kMissingSection,
                    "RST document \"" + doc +
                        "\" is not marked train/ or test/");
      }
    }
    // The last fifth of the training documents, in name order.
    const std::size_t n_docs = train_docs.size();
    const std::size_t n_val = (n_docs * 20 + 50) / 100;
    std::set<std::string> val_docs;
    auto it = train_docs.end();
    for (std::size_t k = 0; k < n_val; ++k) val_docs.insert(*--it);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (parts[i] == Part::kTrain && val_docs.count(kept[i]->doc_id) > 0) {
        parts[i] = Part::kValidation;
      }
    }
  } else {
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const int section = WsjSection(kept[i]->doc_id);
      if (section < 0) {
        throw Error(ErrorCode::kMissingSection,
                    "PDTB document \"" + kept[i]->doc_id +
                        "\" has no WSJ section");
      }
      if (section >= 2 && section <= 20) {
        parts[i] = Part::kTrain;
      } else if (section <= 1) {
        parts[i] = Part::kValidation;
      } else if (section <= 22) {
        parts[i] = Part::kTest;
      }
    }
  }

  std::map<std::string, int> train_counts;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (parts[i] == Part::kTrain) ++train_counts[kept[i]->class_label];
  }
  DatasetSplits splits;
  for (const auto &[label, count] : train_counts) {
    if (count >= min_count) splits.class_set.push_back(label);
  }
  const std::set<std::string> classes(splits.class_set.begin(),
                                      splits.class_set.end());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (classes.count(kept[i]->class_label) == 0) continue;
    switch (parts[i]) {
      case Part::kTrain:
        splits.train.push_back(*kept[i]);
        break;
      case Part::kValidation:
        splits.validation.push_back(*kept[i]);
        break;
      case Part::kTest:
        splits.test.push_back(*kept[i]);
        break;
      case Part::kNone:
        break;
    }
  }
  return splits;
}

}  // namespace unidim
