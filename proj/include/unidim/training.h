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

// Optimization loop: AdamW, linear warmup/decay, global-norm clipping,
// per-epoch validation and best-epoch selection.

#ifndef UNIDIM_TRAINING_H_
#define UNIDIM_TRAINING_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "unidim/corpus.h"
#include "unidim/encoder.h"
#include "unidim/evaluation.h"
#include "unidim/models.h"

namespace unidim {

enum class SelectionMetric : std::uint8_t { kAccuracy, kMacroF1 };

std::string_view SelectionMetricName(SelectionMetric m);  // accuracy / macro-f1
SelectionMetric ParseSelectionMetric(std::string_view name);  // throws kUsage

struct TrainConfig {
  double learning_rate = 5e-5;
  int batch_size = 4;
  int max_epochs = 10;
  double grad_clip_max_norm = 1.0;
  double dropout = 0.2;
  int warmup_steps = 0;
  double weight_decay = 0.01;
  std::uint64_t seed = 0;
  SelectionMetric selection_metric = SelectionMetric::kAccuracy;
  int dim_embed_size = kDefaultDimEmbedSize;
  std::array<double, kNumDimensions> head_weights = {1, 1, 1, 1, 1,
                                                     1, 1, 1, 1};

  // Defaults for transfer (lr 1e-5, 50 epochs) and the dimension predictor
  // (lr 1e-5).
  static TrainConfig Transfer();
  static TrainConfig DimPredictor();

  // Throws kUsage.
  void Validate() const;
};

inline constexpr double kAdamBeta1 = 0.9;
inline constexpr double kAdamBeta2 = 0.999;
inline constexpr double kAdamEpsilon = 1e-8;

// AdamW with decoupled weight decay. State is keyed by position in the
// parameter list, which must not change between steps.
class AdamW {
 public:
  explicit AdamW(double weight_decay, double beta1 = kAdamBeta1,
                 double beta2 = kAdamBeta2, double epsilon = kAdamEpsilon);

  void Step(const std::vector<Param *> &params,
            const std::vector<Eigen::MatrixXd> &grads, double lr);
  std::int64_t steps() const { return steps_; }

 private:
  double weight_decay_, beta1_, beta2_, epsilon_;
  std::int64_t steps_ = 0;
  std::vector<Eigen::MatrixXd> m_, v_;
};

// Learning rate used for update number `step` (0-based): rises linearly from
// 0 to base over warmup_steps, then falls linearly to 0 at total_steps.
double ScheduledLearningRate(double base, std::int64_t step,
                             std::int64_t warmup_steps, std::int64_t total_steps);

// Scales grads so their global L2 norm is at most max_norm. Returns the
// norm before clipping.
double ClipGradients(std::vector<Eigen::MatrixXd> &grads, double max_norm);

// Independent random streams derived from one run seed.
struct SeedStreams {
  Rng init, shuffle, dropout;
};
SeedStreams SeedEverything(std::uint64_t seed);

// Splits with their representations precomputed (one column per instance).
struct EncodedSplits {
  DatasetSplits splits;
  std::string task;
  Eigen::MatrixXd train_h, validation_h, test_h;  // hidden x N
  std::string encoder_fingerprint;

  int hidden_dim() const { return static_cast<int>(train_h.rows()); }
};

EncodedSplits EncodeSplits(DatasetSplits splits, std::string task,
                           const EncoderConfig &encoder);

struct EpochRecord {
  int epoch = 0;  // 1-based
  double train_loss = 0.0;
  double validation_accuracy = 0.0;
  double validation_macro_f1 = 0.0;
  double validation_metric = 0.0;
  double seconds = 0.0;
};

struct TrainHistory {
  std::vector<EpochRecord> epochs;
  int selected_epoch = 0;  // 1-based; 0 when no epoch ran
  std::int64_t trainable_params = 0;
};

struct TrainResult {
  Checkpoint best;
  Checkpoint final;
  TrainHistory history;
};

// kind is kBaseline, kAugmented or kDimPredictor. Throws kEmptySplit,
// kDivergence.
TrainResult Train(ModelKind kind, const EncodedSplits &data,
                  const TrainConfig &cfg,
                  DimensionMask mask = AllDimensionsMask());

// The source must be an augmented classifier trained on pdtb-total (else
// kCheckpointKind). Only the new classifier is trained.
TrainResult TrainTransfer(const Checkpoint &source, const EncodedSplits &target,
                          const TrainConfig &cfg);

// Inference over a representation matrix (hidden x N).
std::vector<int> PredictClasses(const ModelParams &model,
                                const Eigen::MatrixXd &h,
                                const std::vector<RelationInstance> &instances);
std::vector<FeatureIndexVector> PredictDimensions(const ModelParams &model,
                                                  const Eigen::MatrixXd &h);

// Report on the test split (validation when which == "validation").
ClassificationReport EvaluateClassifier(const ModelParams &model,
                                        const EncodedSplits &data,
                                        const std::string &which = "test");
std::vector<DimensionReportRow> EvaluateDimPredictor(
    const ModelParams &model, const EncodedSplits &data,
    const std::string &which = "test");

// Retrains the augmented classifier with the named groups removed and
// compares with `full` (trained with every dimension under the same cfg).
AblationResult RunAblation(const EncodedSplits &data,
                           const std::vector<std::string> &remove,
                           const TrainConfig &cfg,
                           const ClassificationReport &full);

// Run directory: config.txt, metrics.jsonl, best.ckpt, final.ckpt.
std::string HistoryToJsonl(const TrainHistory &history);
void WriteRunDirectory(const std::filesystem::path &dir,
                       const std::string &config_snapshot,
                       const TrainResult &result);

}  // namespace unidim

#endif  // UNIDIM_TRAINING_H_
