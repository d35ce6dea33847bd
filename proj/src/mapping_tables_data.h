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

#ifndef UNIDIM_SRC_MAPPING_TABLES_DATA_H_
#define UNIDIM_SRC_MAPPING_TABLES_DATA_H_

#include <cstddef>

namespace unidim::internal {

struct RawRstRow {
  const char *klass;
  const char *end_label;
  const char *nuclearity;
  const char *order;
  const char *polarity;
  const char *basic_operation;
  const char *implication_order;
  const char *source_of_coherence;
  const char *temporality;
  const char *additional;
  const char *relation;  // RST-DT spelling of the end label
};

struct RawPdtbRow {
  const char *klass;
  const char *end_label;
  const char *arg_order;
  const char *polarity;
  const char *basic_operation;
  const char *implication_order;
  const char *source_of_coherence;
  const char *temporality;
  const char *additional;
};

extern const RawRstRow kRawRstRows[];
extern const RawPdtbRow kRawPdtbRows[];
extern const std::size_t kRawRstRowCount;
extern const std::size_t kRawPdtbRowCount;

}  // namespace unidim::internal

#endif  // UNIDIM_SRC_MAPPING_TABLES_DATA_H_
