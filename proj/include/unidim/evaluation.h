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

// Classification reports, ablation sweeps and dimension-prediction reports.

#ifndef UNIDIM_EVALUATION_H_
#define UNIDIM_EVALUATION_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "unidim/dimensions.h"

namespace unidim {

struct ClassMetrics {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int support = 0;

  bool operator==(const ClassMetrics &) const = default;
};

// Rows follow the class_set order. 0/0 is defined as 0 and macro averages
// are unweighted means over the whole class_set.
struct ClassificationReport {
  std::vector<ClassMetrics> rows;
  double accuracy = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  int total_support = 0;

  const ClassMetrics &Row(std::string_view label) const;  // throws kUnknownLabel
  bool operator==(const ClassificationReport &) const = default;
};

// Throws kLengthMismatch, kEmptySplit (no examples) or kLabelOutOfRange.
ClassificationReport MakeClassificationReport(
    const std::vector<std::string> &golds, const std::vector<std::string> &preds,
    const std::vector<std::string> &class_set);
ClassificationReport MakeClassificationReport(
    const std::vector<int> &golds, const std::vector<int> &preds,
    const std::vector<std::string> &class_set);

// One JSON object per class, then "accuracy" and "macro avg" rows. Numbers
// are written with round-trip precision.
std::string ReportToJsonl(const ClassificationReport &report);
ClassificationReport ReportFromJsonl(std::string_view text);  // throws kFormat

// Aligned table with one row per class plus accuracy and macro rows. With a
// second report, every metric column is paired (first, second).
std::string FormatReportTable(const ClassificationReport &report,
                              const ClassificationReport *paired = nullptr,
                              std::string_view first_name = "model",
                              std::string_view second_name = "baseline");

// ---------------------------------------------------------------------------
// Dimension prediction.

struct DimensionReportRow {
  DimensionId dim;
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  ClassificationReport report;
};

// Nine rows in dimension order; each is a report over that dimension's
// value set. Throws kLengthMismatch.
std::vector<DimensionReportRow> DimensionPredictionReport(
    const std::vector<FeatureIndexVector> &golds,
    const std::vector<FeatureIndexVector> &preds);

std::string DimensionReportToJsonl(const std::vector<DimensionReportRow> &rows);
std::string FormatDimensionTable(const std::vector<DimensionReportRow> &rows);

// ---------------------------------------------------------------------------
// Ablation groups.

// Group names: pol, bop, soc, impl, temp, add (specificity, alternative,
// conditional and goal together). Full dimension names are accepted too.
// Throws kUnknownDimension.
std::vector<DimensionId> AblationGroup(std::string_view name);
// Mask with every dimension of every named group removed.
DimensionMask AblationMask(const std::vector<std::string> &groups);

struct MetricDeltas {
  double accuracy = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  std::vector<double> class_f1;  // class_set order
};

struct AblationResult {
  std::vector<std::string> removed;
  ClassificationReport full;
  ClassificationReport ablated;
  MetricDeltas deltas;  // ablated minus full
};

MetricDeltas ComputeDeltas(const ClassificationReport &full,
                           const ClassificationReport &ablated);
std::string AblationToJsonl(const AblationResult &result);
std::string FormatAblationTable(const std::vector<AblationResult> &results);

}  // namespace unidim

#endif  // UNIDIM_EVALUATION_H_
