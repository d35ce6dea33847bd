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

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "json.hpp"
#include "unidim/error.h"
#include "unidim/training.h"

namespace unidim {
namespace {

using Eigen::MatrixXd;
using json = nlohmann::ordered_json;

std::vector<FeatureIndexVector> Features(
    const std::vector<RelationInstance> &instances) {
  std::vector<FeatureIndexVector> out;
  out.reserve(instances.size());
  for (const RelationInstance &inst : instances) {
    out.push_back(EncodeProfile(inst.profile));
  }
  return out;
}

std::vector<int> Labels(const DatasetSplits &splits,
                        const std::vector<RelationInstance> &instances) {
  std::vector<int> out;
  out.reserve(instances.size());
  for (const RelationInstance &inst : instances) {
    out.push_back(splits.ClassIndex(inst.class_label));
  }
  return out;
}

// Everything the loop needs about one split, gathered once.
struct SplitTensors {
  const MatrixXd *h = nullptr;
  std::vector<FeatureIndexVector> features;
  std::vector<int> labels;
  int size() const { return static_cast<int>(features.size()); }
};

SplitTensors Gather(const EncodedSplits &data,
                    const std::vector<RelationInstance> &instances,
                    const MatrixXd &h) {
  if (h.cols() != static_cast<Eigen::Index>(instances.size())) {
    throw Error(ErrorCode::kShapeMismatch,
                "representations do not match the split size");
  }
  return {&h, Features(instances), Labels(data.splits, instances)};
}

Batch MakeBatch(const SplitTensors &s, const std::vector<int> &order,
                std::size_t begin, std::size_t end) {
  Batch b;
  b.h.resize(s.h->rows(), static_cast<Eigen::Index>(end - begin));
  for (std::size_t i = begin; i < end; ++i) {
    const int k = order[i];
    b.h.col(static_cast<Eigen::Index>(i - begin)) = s.h->col(k);
    b.features.push_back(s.features[k]);
    b.targets.push_back(s.features[k]);
    b.labels.push_back(s.labels[k]);
  }
  return b;
}

std::vector<int> Argmax(const MatrixXd &logits) {
  std::vector<int> out(logits.cols());
  for (Eigen::Index j = 0; j < logits.cols(); ++j) {
    Eigen::Index best = 0;
    logits.col(j).maxCoeff(&best);
    out[j] = static_cast<int>(best);
  }
  return out;
}

// (accuracy, macro-F1) on a split, averaged over the nine heads for the
// dimension predictor.
std::pair<double, double> Validate(const ModelParams &model,
                                   const SplitTensors &s,
                                   const std::vector<std::string> &class_set) {
  Batch b;
  b.h = *s.h;
  b.features = s.features;
  const std::vector<MatrixXd> logits = ForwardBatch(model, b);
  if (KindOf(model) == ModelKind::kDimPredictor) {
    std::vector<FeatureIndexVector> preds(s.size());
    for (int k = 0; k < kNumDimensions; ++k) {
      const std::vector<int> p = Argmax(logits[k]);
      for (int i = 0; i < s.size(); ++i) preds[i][k] = p[i];
    }
    double acc = 0, f1 = 0;
    for (const DimensionReportRow &row :
         DimensionPredictionReport(s.features, preds)) {
      acc += row.accuracy;
      f1 += row.macro_f1;
    }
    return {acc / kNumDimensions, f1 / kNumDimensions};
  }
  const ClassificationReport r =
      MakeClassificationReport(s.labels, Argmax(logits[0]), class_set);
  return {r.accuracy, r.macro_f1};
}

TrainResult Loop(ModelParams model, const EncodedSplits &data,
                 const TrainConfig &cfg, SeedStreams &streams,
                 CheckpointMeta meta) {
  cfg.Validate();
  if (data.splits.train.empty()) {
    throw Error(ErrorCode::kEmptySplit, "training split is empty");
  }
  if (data.splits.validation.empty()) {
    throw Error(ErrorCode::kEmptySplit, "validation split is empty");
  }
  if (HiddenDim(model) != data.hidden_dim()) {
    throw Error(ErrorCode::kShapeMismatch,
                "model expects representations of width " +
                    std::to_string(HiddenDim(model)) + ", data has " +
                    std::to_string(data.hidden_dim()));
  }
  const SplitTensors train = Gather(data, data.splits.train, data.train_h);
  const SplitTensors valid =
      Gather(data, data.splits.validation, data.validation_h);

  TrainResult result;
  result.history.trainable_params = CountTrainableParams(model);
  meta.epoch = 0;
  result.best = {model, meta};
  result.final = result.best;
  if (cfg.max_epochs == 0) return result;

  const std::int64_t steps_per_epoch =
      (train.size() + cfg.batch_size - 1) / cfg.batch_size;
  const std::int64_t total_steps = steps_per_epoch * cfg.max_epochs;
  AdamW optimizer(cfg.weight_decay);
  std::vector<int> order(train.size());
  std::iota(order.begin(), order.end(), 0);
  double best_metric = -1.0;

  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    const auto start = std::chrono::steady_clock::now();
    streams.shuffle.Shuffle(order);
    double loss_sum = 0.0;
    for (std::size_t begin = 0; begin < order.size();
         begin += static_cast<std::size_t>(cfg.batch_size)) {
      const std::size_t end =
          std::min(order.size(), begin + static_cast<std::size_t>(cfg.batch_size));
      const Batch batch = MakeBatch(train, order, begin, end);
      LossAndGrad lg = ComputeLossAndGradients(
          model, batch, {cfg.dropout, &streams.dropout}, cfg.head_weights);
      if (!std::isfinite(lg.loss)) {
        throw Error(ErrorCode::kDivergence,
                    "non-finite loss at epoch " + std::to_string(epoch) +
                        ", update " + std::to_string(optimizer.steps() + 1));
      }
      loss_sum += lg.loss * static_cast<double>(end - begin);
      ClipGradients(lg.grads, cfg.grad_clip_max_norm);
      const double lr = ScheduledLearningRate(
          cfg.learning_rate, optimizer.steps(), cfg.warmup_steps, total_steps);
      optimizer.Step(TrainableParams(model), lg.grads, lr);
    }
    EpochRecord rec;
    rec.epoch = epoch;
    rec.train_loss = loss_sum / train.size();
    std::tie(rec.validation_accuracy, rec.validation_macro_f1) =
        Validate(model, valid, data.splits.class_set);
    rec.validation_metric = cfg.selection_metric == SelectionMetric::kAccuracy
                                ? rec.validation_accuracy
                                : rec.validation_macro_f1;
    rec.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    result.history.epochs.push_back(rec);
    if (rec.validation_metric > best_metric) {
      best_metric = rec.validation_metric;
      result.history.selected_epoch = epoch;
      meta.epoch = epoch;
      result.best = {model, meta};
    }
  }
  meta.epoch = cfg.max_epochs;
  result.final = {std::move(model), meta};
  return result;
}

CheckpointMeta MetaFor(const EncodedSplits &data, const TrainConfig &cfg) {
  CheckpointMeta meta;
  meta.task = data.task;
  meta.class_set = data.splits.class_set;
  meta.seed = cfg.seed;
  meta.encoder_fingerprint = data.encoder_fingerprint;
  return meta;
}

}  // namespace

std::string_view SelectionMetricName(SelectionMetric m) {
  return m == SelectionMetric::kAccuracy ? "accuracy" : "macro-f1";
}

SelectionMetric ParseSelectionMetric(std::string_view name) {
  if (name == "accuracy") return SelectionMetric::kAccuracy;
  if (name == "macro-f1" || name == "macro_f1") return SelectionMetric::kMacroF1;
  throw Error(ErrorCode::kUsage, "unknown selection metric \"" +
                                     std::string(name) + "\"");
}

TrainConfig TrainConfig::Transfer() {
  TrainConfig cfg;
  cfg.learning_rate = 1e-5;
  cfg.max_epochs = 50;
  return cfg;
}

TrainConfig TrainConfig::DimPredictor() {
  TrainConfig cfg;
  cfg.learning_rate = 1e-5;
  return cfg;
}

void TrainConfig::Validate() const {
  auto fail = [](const std::string &msg) {
    throw Error(ErrorCode::kUsage, msg);
  };
  if (!(learning_rate > 0)) fail("learning_rate must be positive");
  if (batch_size < 1) fail("batch_size must be positive");
  if (max_epochs < 0) fail("max_epochs must be non-negative");
  if (!(grad_clip_max_norm > 0)) fail("grad_clip_max_norm must be positive");
  if (!(dropout >= 0 && dropout < 1)) fail("dropout must be in [0, 1)");
  if (warmup_steps < 0) fail("warmup_steps must be non-negative");
  if (!(weight_decay >= 0)) fail("weight_decay must be non-negative");
  if (dim_embed_size < 1) fail("dim_embed_size must be positive");
}

AdamW::AdamW(double weight_decay, double beta1, double beta2, double epsilon)
    : weight_decay_(weight_decay),
      beta1_(beta1),
      beta2_(beta2),
      epsilon_(epsilon) {}

void AdamW::Step(const std::vector<Param *> &params,
                 const std::vector<MatrixXd> &grads, double lr) {
  if (params.size() != grads.size()) {
    throw Error(ErrorCode::kShapeMismatch, "gradient list does not match");
  }
  if (m_.empty()) {
    for (const Param *p : params) {
      m_.push_back(MatrixXd::Zero(p->value.rows(), p->value.cols()));
      v_.push_back(MatrixXd::Zero(p->value.rows(), p->value.cols()));
    }
  }
  ++steps_;
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(steps_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(steps_));
  for (std::size_t i = 0; i < params.size(); ++i) {
    MatrixXd &w = params[i]->value;
    w *= 1.0 - lr * weight_decay_;
    m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grads[i];
    v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grads[i].cwiseAbs2();
    w.array() -= lr * (m_[i].array() / c1) /
                 ((v_[i].array() / c2).sqrt() + epsilon_);
  }
}

double ScheduledLearningRate(double base, std::int64_t step,
                             std::int64_t warmup_steps,
                             std::int64_t total_steps) {
  if (step < warmup_steps) {
    return base * static_cast<double>(step) / static_cast<double>(warmup_steps);
  }
  if (step >= total_steps || total_steps <= warmup_steps) return 0.0;
  return base * static_cast<double>(total_steps - step) /
         static_cast<double>(total_steps - warmup_steps);
}

double ClipGradients(std::vector<MatrixXd> &grads, double max_norm) {
  double sq = 0.0;
  for (const MatrixXd &g : grads) sq += g.squaredNorm();
  const double norm = std::sqrt(sq);
  const double coef = max_norm / (norm + 1e-6);
  if (coef < 1.0) {
    for (MatrixXd &g : grads) g *= coef;
  }
  return norm;
}

SeedStreams SeedEverything(std::uint64_t seed) {
  return {Rng(MixSeed(seed, 1)), Rng(MixSeed(seed, 2)), Rng(MixSeed(seed, 3))};
}

EncodedSplits EncodeSplits(DatasetSplits splits, std::string task,
                           const EncoderConfig &encoder) {
  EncodedSplits out;
  out.train_h = EncodeInstances(splits.train, encoder).transpose();
  out.validation_h = EncodeInstances(splits.validation, encoder).transpose();
  out.test_h = EncodeInstances(splits.test, encoder).transpose();
  out.splits = std::move(splits);
  out.task = std::move(task);
  out.encoder_fingerprint = encoder.Fingerprint();
  return out;
}

TrainResult Train(ModelKind kind, const EncodedSplits &data,
                  const TrainConfig &cfg, DimensionMask mask) {
  cfg.Validate();
  SeedStreams streams = SeedEverything(cfg.seed);
  const int classes = static_cast<int>(data.splits.class_set.size());
  ModelParams model;
  switch (kind) {
    case ModelKind::kBaseline:
      model = InitBaseline(data.hidden_dim(), classes, streams.init);
      break;
    case ModelKind::kAugmented:
      model = InitAugmented(data.hidden_dim(), classes, streams.init, mask,
                            cfg.dim_embed_size);
      break;
    case ModelKind::kDimPredictor:
      model = InitDimPredictor(data.hidden_dim(), streams.init);
      break;
    case ModelKind::kTransfer:
      throw Error(ErrorCode::kCheckpointKind,
                  "transfer models are built from a source checkpoint");
  }
  return Loop(std::move(model), data, cfg, streams, MetaFor(data, cfg));
}

TrainResult TrainTransfer(const Checkpoint &source, const EncodedSplits &target,
                          const TrainConfig &cfg) {
  const auto *trained = std::get_if<AugmentedClassifierParams>(&source.model);
  if (trained == nullptr) {
    throw Error(ErrorCode::kCheckpointKind,
                "transfer needs an augmented classifier checkpoint, got " +
                    std::string(ModelKindName(KindOf(source.model))));
  }
  if (source.meta.task != TaskName(Task::kPdtbTotal)) {
    throw Error(ErrorCode::kCheckpointKind,
                "transfer source must be trained on " +
                    std::string(TaskName(Task::kPdtbTotal)) + ", got \"" +
                    source.meta.task + "\"");
  }
  if (!source.meta.encoder_fingerprint.empty() &&
      !target.encoder_fingerprint.empty() &&
      source.meta.encoder_fingerprint != target.encoder_fingerprint) {
    throw Error(ErrorCode::kShapeMismatch,
                "encoder differs from the source model's (" +
                    source.meta.encoder_fingerprint + " vs " +
                    target.encoder_fingerprint + ")");
  }
  cfg.Validate();
  SeedStreams streams = SeedEverything(cfg.seed);
  ModelParams model = MakeTransfer(
      *trained, static_cast<int>(target.splits.class_set.size()), streams.init);
  return Loop(std::move(model), target, cfg, streams, MetaFor(target, cfg));
}

std::vector<int> PredictClasses(const ModelParams &model,
                                const Eigen::MatrixXd &h,
                                const std::vector<RelationInstance> &instances) {
  if (KindOf(model) == ModelKind::kDimPredictor) {
    throw Error(ErrorCode::kCheckpointKind,
                "the dimension predictor has no relation classes");
  }
  Batch b;
  b.h = h;
  b.features = Features(instances);
  return Argmax(ForwardBatch(model, b)[0]);
}

std::vector<FeatureIndexVector> PredictDimensions(const ModelParams &model,
                                                  const Eigen::MatrixXd &h) {
  if (KindOf(model) != ModelKind::kDimPredictor) {
    throw Error(ErrorCode::kCheckpointKind,
                "expected a dimension predictor, got " +
                    std::string(ModelKindName(KindOf(model))));
  }
  Batch b;
  b.h = h;
  const std::vector<MatrixXd> logits = ForwardBatch(model, b);
  std::vector<FeatureIndexVector> preds(h.cols());
  for (int k = 0; k < kNumDimensions; ++k) {
    const std::vector<int> p = Argmax(logits[k]);
    for (std::size_t i = 0; i < preds.size(); ++i) preds[i][k] = p[i];
  }
  return preds;
}

namespace {

const std::vector<RelationInstance> &SplitByName(const EncodedSplits &data,
                                                 const std::string &which,
                                                 const MatrixXd **h) {
  if (which == "test") {
    *h = &data.test_h;
    return data.splits.test;
  }
  if (which == "validation") {
    *h = &data.validation_h;
    return data.splits.validation;
  }
  if (which == "train") {
    *h = &data.train_h;
    return data.splits.train;
  }
  throw Error(ErrorCode::kUsage, "unknown split \"" + which + "\"");
}

}  // namespace

ClassificationReport EvaluateClassifier(const ModelParams &model,
                                        const EncodedSplits &data,
                                        const std::string &which) {
  const MatrixXd *h = nullptr;
  const std::vector<RelationInstance> &split = SplitByName(data, which, &h);
  if (split.empty()) throw Error(ErrorCode::kEmptySplit, which + " split is empty");
  return MakeClassificationReport(Labels(data.splits, split),
                                  PredictClasses(model, *h, split),
                                  data.splits.class_set);
}

std::vector<DimensionReportRow> EvaluateDimPredictor(const ModelParams &model,
                                                     const EncodedSplits &data,
                                                     const std::string &which) {
  const MatrixXd *h = nullptr;
  const std::vector<RelationInstance> &split = SplitByName(data, which, &h);
  if (split.empty()) throw Error(ErrorCode::kEmptySplit, which + " split is empty");
  return DimensionPredictionReport(Features(split), PredictDimensions(model, *h));
}

AblationResult RunAblation(const EncodedSplits &data,
                           const std::vector<std::string> &remove,
                           const TrainConfig &cfg,
                           const ClassificationReport &full) {
  AblationResult result;
  result.removed = remove;
  result.full = full;
  const TrainResult run =
      Train(ModelKind::kAugmented, data, cfg, AblationMask(remove));
  result.ablated = EvaluateClassifier(run.best.model, data);
  result.deltas = ComputeDeltas(full, result.ablated);
  return result;
}

std::string HistoryToJsonl(const TrainHistory &history) {
  std::string out;
  for (const EpochRecord &rec : history.epochs) {
    out += json({{"epoch", rec.epoch},
                 {"train_loss", rec.train_loss},
                 {"validation_accuracy", rec.validation_accuracy},
                 {"validation_macro_f1", rec.validation_macro_f1},
                 {"validation_metric", rec.validation_metric},
                 {"selected", rec.epoch == history.selected_epoch}})
               .dump() +
           "\n";
  }
  return out;
}

void WriteRunDirectory(const std::filesystem::path &dir,
                       const std::string &config_snapshot,
                       const TrainResult &result) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string());
  auto write = [&](const char *name, const std::string &text) {
    std::ofstream out(dir / name, std::ios::binary);
    out << text;
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + (dir / name).string());
  };
  write("config.txt", config_snapshot);
  write("metrics.jsonl", HistoryToJsonl(result.history));
  SaveCheckpoint(result.best, dir / "best.ckpt");
  SaveCheckpoint(result.final, dir / "final.ckpt");
}

}  // namespace unidim
