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

#include <ostream>
#include <string>
#include <vector>

#include "unidim/corpus.h"

namespace unidim {

CorpusStats ComputeStats(const std::vector<RelationInstance> &instances) {
  CorpusStats stats;
  for (const RelationInstance &inst : instances) {
    const std::pair<std::string, std::string> key(
        FrameworkName(inst.framework), RelationTypeName(inst.relation_type));
    auto [it, inserted] = stats.groups.try_emplace(key);
    GroupStats &group = it->second;
    if (inserted) {
      for (DimensionId dim : kAllDimensions) {
        group.histograms[static_cast<int>(dim)].assign(ValueSetSize(dim), 0);
      }
    }
    ++group.total;
    ++group.class_counts[inst.class_label];
    for (DimensionId dim : kAllDimensions) {
      ++group.histograms[static_cast<int>(dim)][inst.profile.Get(dim).index()];
    }
  }
  return stats;
}

void WriteStatsTsv(const CorpusStats &stats, std::ostream &os) {
  os << "framework\trelation_type\tkind\tkey\tvalue\tcount\n";
  for (const auto &[key, group] : stats.groups) {
    const std::string prefix = key.first + "\t" + key.second + "\t";
    os << prefix << "total\t-\t-\t" << group.total << "\n";
    for (const auto &[label, count] : group.class_counts) {
      os << prefix << "class\t" << label << "\t-\t" << count << "\n";
    }
    for (DimensionId dim : kAllDimensions) {
      const std::vector<int> &hist = group.histograms[static_cast<int>(dim)];
      for (int v = 0; v < static_cast<int>(hist.size()); ++v) {
        os << prefix << "dimension\t" << DimensionName(dim) << "\t"
           << ValueName(dim, v) << "\t" << hist[v] << "\n";
      }
    }
  }
}

}  // namespace unidim
