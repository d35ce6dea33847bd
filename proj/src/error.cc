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

#include "unidim/error.h"

namespace unidim {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownToken: return "E_UNKNOWN_TOKEN";
    case ErrorCode::kUnknownLabel: return "E_UNKNOWN_LABEL";
    case ErrorCode::kCorruption: return "E_CORRUPTION";
    case ErrorCode::kSyntax: return "E_SYNTAX";
    case ErrorCode::kSpanInconsistency: return "E_SPAN";
    case ErrorCode::kFormat: return "E_FORMAT";
    case ErrorCode::kUnknownSense: return "E_UNKNOWN_SENSE";
    case ErrorCode::kMissingSection: return "E_MISSING_SECTION";
    case ErrorCode::kUnsupportedClass: return "E_UNSUPPORTED_CLASS";
    case ErrorCode::kEmptyArgument: return "E_EMPTY_ARGUMENT";
    case ErrorCode::kBackendUnavailable: return "E_BACKEND_UNAVAILABLE";
    case ErrorCode::kShapeMismatch: return "E_SHAPE";
    case ErrorCode::kOutOfRange: return "E_OUT_OF_RANGE";
    case ErrorCode::kLabelOutOfRange: return "E_LABEL_OUT_OF_RANGE";
    case ErrorCode::kCheckpointKind: return "E_CHECKPOINT_KIND";
    case ErrorCode::kDivergence: return "E_DIVERGENCE";
    case ErrorCode::kEmptySplit: return "E_EMPTY_SPLIT";
    case ErrorCode::kLengthMismatch: return "E_LENGTH_MISMATCH";
    case ErrorCode::kUnknownDimension: return "E_UNKNOWN_DIMENSION";
    case ErrorCode::kUsage: return "E_USAGE";
    case ErrorCode::kIo: return "E_IO";
  }
  return "E_UNKNOWN";
}

}  // namespace unidim
