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
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "strings.h"
#include "unidim/error.h"
#include "unidim/evaluation.h"

namespace unidim {
namespace {

using json = nlohmann::ordered_json;

double SafeDiv(double a, double b) { return b == 0.0 ? 0.0 : a / b; }

std::string Fixed(double v, int width, int precision = 2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%*.*f", width, precision, v);
  return buf;
}

std::string Pad(std::string_view s, std::size_t width, bool left = true) {
  std::string out(s);
  if (out.size() >= width) return out;
  const std::string fill(width - out.size(), ' ');
  return left ? out + fill : fill + out;
}

std::string Cell(double a, const double *b) {
  if (b == nullptr) return Fixed(a, 9);
  return Fixed(a, 4) + " / " + Fixed(*b, 4);
}

}  // namespace

const ClassMetrics &ClassificationReport::Row(std::string_view label) const {
  for (const ClassMetrics &row : rows) {
    if (row.label == label) return row;
  }
  throw Error(ErrorCode::kUnknownLabel,
              "no report row for \"" + std::string(label) + "\"");
}

ClassificationReport MakeClassificationReport(
    const std::vector<int> &golds, const std::vector<int> &preds,
    const std::vector<std::string> &class_set) {
  if (golds.size() != preds.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(golds.size()) + " gold labels but " +
                    std::to_string(preds.size()) + " predictions");
  }
  if (golds.empty()) throw Error(ErrorCode::kEmptySplit, "nothing to evaluate");
  const int c = static_cast<int>(class_set.size());
  std::vector<int> tp(c, 0), gold_count(c, 0), pred_count(c, 0);
  int correct = 0;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    for (int y : {golds[i], preds[i]}) {
      if (y < 0 || y >= c) {
        throw Error(ErrorCode::kLabelOutOfRange,
                    "label index " + std::to_string(y) + " outside the class set");
      }
    }
    ++gold_count[golds[i]];
    ++pred_count[preds[i]];
    if (golds[i] == preds[i]) {
      ++tp[golds[i]];
      ++correct;
    }
  }
  ClassificationReport r;
  r.total_support = static_cast<int>(golds.size());
  r.accuracy = static_cast<double>(correct) / r.total_support;
  for (int k = 0; k < c; ++k) {
    ClassMetrics m;
    m.label = class_set[k];
    m.precision = SafeDiv(tp[k], pred_count[k]);
    m.recall = SafeDiv(tp[k], gold_count[k]);
    m.f1 = SafeDiv(2 * m.precision * m.recall, m.precision + m.recall);
    m.support = gold_count[k];
    r.macro_precision += m.precision;
    r.macro_recall += m.recall;
    r.macro_f1 += m.f1;
    r.rows.push_back(std::move(m));
  }
  if (c > 0) {
    r.macro_precision /= c;
    r.macro_recall /= c;
    r.macro_f1 /= c;
  }
  return r;
}

ClassificationReport MakeClassificationReport(
    const std::vector<std::string> &golds, const std::vector<std::string> &preds,
    const std::vector<std::string> &class_set) {
  std::map<std::string, int> index;
  for (std::size_t k = 0; k < class_set.size(); ++k) {
    index[class_set[k]] = static_cast<int>(k);
  }
  auto to_ids = [&](const std::vector<std::string> &labels) {
    std::vector<int> ids;
    ids.reserve(labels.size());
    for (const std::string &l : labels) {
      const auto it = index.find(l);
      if (it == index.end()) {
        throw Error(ErrorCode::kLabelOutOfRange,
                    "label \"" + l + "\" is not in the class set");
      }
      ids.push_back(it->second);
    }
    return ids;
  };
  return MakeClassificationReport(to_ids(golds), to_ids(preds), class_set);
}

std::string ReportToJsonl(const ClassificationReport &report) {
  std::string out;
  for (const ClassMetrics &m : report.rows) {
    json j = {{"row", "class"},           {"label", m.label},
              {"precision", m.precision}, {"recall", m.recall},
              {"f1", m.f1},               {"support", m.support}};
    out += j.dump() + "\n";
  }
  out += json({{"row", "accuracy"},
               {"value", report.accuracy},
               {"support", report.total_support}})
             .dump() +
         "\n";
  out += json({{"row", "macro"},
               {"precision", report.macro_precision},
               {"recall", report.macro_recall},
               {"f1", report.macro_f1},
               {"support", report.total_support}})
             .dump() +
         "\n";
  return out;
}

ClassificationReport ReportFromJsonl(std::string_view text) {
  ClassificationReport r;
  int line_no = 0;
  for (const std::string &line : internal::Split(text, '\n')) {
    ++line_no;
    if (internal::Trim(line).empty()) continue;
    try {
      const json j = json::parse(line);
      const std::string kind = j.at("row").get<std::string>();
      if (kind == "class") {
        r.rows.push_back({j.at("label").get<std::string>(),
                          j.at("precision").get<double>(),
                          j.at("recall").get<double>(), j.at("f1").get<double>(),
                          j.at("support").get<int>()});
      } else if (kind == "accuracy") {
        r.accuracy = j.at("value").get<double>();
        r.total_support = j.at("support").get<int>();
      } else if (kind == "macro") {
        r.macro_precision = j.at("precision").get<double>();
        r.macro_recall = j.at("recall").get<double>();
        r.macro_f1 = j.at("f1").get<double>();
      } else {
        throw Error(ErrorCode::kFormat, "line " + std::to_string(line_no) +
                                            ": unknown row kind " + kind);
      }
    } catch (const json::exception &e) {
      throw Error(ErrorCode::kFormat,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return r;
}

std::string FormatReportTable(const ClassificationReport &report,
                              const ClassificationReport *paired,
                              std::string_view first_name,
                              std::string_view second_name) {
  std::size_t label_width = 12;
  for (const ClassMetrics &m : report.rows) {
    label_width = std::max(label_width, m.label.size() + 2);
  }
  const std::size_t cell = paired == nullptr ? 9 : 11;
  std::string out;
  if (paired != nullptr) {
    out += "cells: " + std::string(first_name) + " / " +
           std::string(second_name) + "\n";
  }
  out += Pad("", label_width) + Pad("precision", cell, false) + "  " +
         Pad("recall", cell, false) + "  " + Pad("f1-score", cell, false) +
         "  " + Pad("support", 8, false) + "\n";
  auto pick = [&](auto field, std::size_t k) -> const double * {
    if (paired == nullptr || k >= paired->rows.size()) return nullptr;
    return &(paired->rows[k].*field);
  };
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const ClassMetrics &m = report.rows[k];
    out += Pad(m.label, label_width) +
           Pad(Cell(m.precision, pick(&ClassMetrics::precision, k)), cell, false) +
           "  " + Pad(Cell(m.recall, pick(&ClassMetrics::recall, k)), cell, false) +
           "  " + Pad(Cell(m.f1, pick(&ClassMetrics::f1, k)), cell, false) + "  " +
           Pad(std::to_string(m.support), 8, false) + "\n";
  }
  out += "\n";
  out += Pad("accuracy", label_width) + Pad("", cell) + "  " + Pad("", cell) +
         "  " +
         Pad(Cell(report.accuracy, paired ? &paired->accuracy : nullptr), cell,
             false) +
         "  " + Pad(std::to_string(report.total_support), 8, false) + "\n";
  out += Pad("macro avg", label_width) +
         Pad(Cell(report.macro_precision,
                  paired ? &paired->macro_precision : nullptr),
             cell, false) +
         "  " +
         Pad(Cell(report.macro_recall, paired ? &paired->macro_recall : nullptr),
             cell, false) +
         "  " +
         Pad(Cell(report.macro_f1, paired ? &paired->macro_f1 : nullptr), cell,
             false) +
         "  " + Pad(std::to_string(report.total_support), 8, false) + "\n";
  return out;
}

std::vector<DimensionReportRow> DimensionPredictionReport(
    const std::vector<FeatureIndexVector> &golds,
    const std::vector<FeatureIndexVector> &preds) {
  if (golds.size() != preds.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(golds.size()) + " gold profiles but " +
                    std::to_string(preds.size()) + " predictions");
  }
  std::vector<DimensionReportRow> rows;
  for (DimensionId dim : kAllDimensions) {
    const int d = static_cast<int>(dim);
    std::vector<std::string> values;
    for (int i = 0; i < ValueSetSize(dim); ++i) {
      values.emplace_back(ValueName(dim, i));
    }
    std::vector<int> g, p;
    for (std::size_t i = 0; i < golds.size(); ++i) {
      g.push_back(golds[i][d]);
      p.push_back(preds[i][d]);
    }
    DimensionReportRow row{dim, 0, 0, MakeClassificationReport(g, p, values)};
    row.accuracy = row.report.accuracy;
    row.macro_f1 = row.report.macro_f1;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string DimensionReportToJsonl(const std::vector<DimensionReportRow> &rows) {
  std::string out;
  for (const DimensionReportRow &row : rows) {
    out += json({{"dimension", std::string(DimensionName(row.dim))},
                 {"accuracy", row.accuracy},
                 {"macro_f1", row.macro_f1},
                 {"support", row.report.total_support}})
               .dump() +
           "\n";
  }
  return out;
}

std::string FormatDimensionTable(const std::vector<DimensionReportRow> &rows) {
  std::string out = Pad("Dimension", 14) + Pad("Acc.", 8, false) +
                    Pad("Macro-F1", 10, false) + "\n";
  for (const DimensionReportRow &row : rows) {
    out += Pad(DimensionTableLabel(row.dim), 14) + Fixed(row.accuracy, 8) +
           Fixed(row.macro_f1, 10) + "\n";
  }
  return out;
}

std::vector<DimensionId> AblationGroup(std::string_view name) {
  const std::string lower = internal::ToLower(internal::Trim(name));
  if (lower == "add") {
    return {DimensionId::kSpecificity, DimensionId::kAlternative,
            DimensionId::kConditional, DimensionId::kGoal};
  }
  return {ParseDimension(lower)};
}

DimensionMask AblationMask(const std::vector<std::string> &groups) {
  DimensionMask mask = AllDimensionsMask();
  for (const std::string &g : groups) {
    for (DimensionId dim : AblationGroup(g)) mask.reset(static_cast<int>(dim));
  }
  return mask;
}

MetricDeltas ComputeDeltas(const ClassificationReport &full,
                           const ClassificationReport &ablated) {
  if (full.rows.size() != ablated.rows.size()) {
    throw Error(ErrorCode::kLengthMismatch, "reports cover different class sets");
  }
  MetricDeltas d;
  d.accuracy = ablated.accuracy - full.accuracy;
  d.macro_precision = ablated.macro_precision - full.macro_precision;
  d.macro_recall = ablated.macro_recall - full.macro_recall;
  d.macro_f1 = ablated.macro_f1 - full.macro_f1;
  for (std::size_t k = 0; k < full.rows.size(); ++k) {
    d.class_f1.push_back(ablated.rows[k].f1 - full.rows[k].f1);
  }
  return d;
}

std::string AblationToJsonl(const AblationResult &result) {
  json removed = result.removed;
  std::string out;
  for (std::size_t k = 0; k < result.ablated.rows.size(); ++k) {
    const ClassMetrics &m = result.ablated.rows[k];
    out += json({{"removed", removed},
                 {"row", "class"},
                 {"label", m.label},
                 {"precision", m.precision},
                 {"recall", m.recall},
                 {"f1", m.f1},
                 {"support", m.support},
                 {"delta_f1", result.deltas.class_f1[k]}})
               .dump() +
           "\n";
  }
  out += json({{"removed", removed},
               {"row", "summary"},
               {"accuracy", result.ablated.accuracy},
               {"macro_precision", result.ablated.macro_precision},
               {"macro_recall", result.ablated.macro_recall},
               {"macro_f1", result.ablated.macro_f1},
               {"delta_accuracy", result.deltas.accuracy},
               {"delta_macro_precision", result.deltas.macro_precision},
               {"delta_macro_recall", result.deltas.macro_recall},
               {"delta_macro_f1", result.deltas.macro_f1}})
             .dump() +
         "\n";
  return out;
}

std::string FormatAblationTable(const std::vector<AblationResult> &results) {
  std::string out = Pad("Removed", 14) + Pad("Acc.", 8, false) +
                    Pad("dAcc.", 8, false) + Pad("Macro-F1", 10, false) +
                    Pad("dF1", 8, false) + "\n";
  for (const AblationResult &r : results) {
    std::string name = "Total";
    if (!r.removed.empty()) name = "-" + internal::Join(r.removed, ",-");
    out += Pad(name, 14) + Fixed(r.ablated.accuracy, 8) +
           Fixed(r.deltas.accuracy, 8) + Fixed(r.ablated.macro_f1, 10) +
           Fixed(r.deltas.macro_f1, 8) + "\n";
  }
  return out;
}

}  // namespace unidim
