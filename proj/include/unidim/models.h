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

// The four model variants: baseline classifier, dimension-augmented
// classifier, transfer head over a frozen augmented body, and the nine-head
// dimension predictor. Activations are laid out one example per column.

#ifndef UNIDIM_MODELS_H_
#define UNIDIM_MODELS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "unidim/dimensions.h"
#include "unidim/random.h"

namespace unidim {

inline constexpr int kFfn1Size = 256;
inline constexpr int kFfn2Size = 128;
inline constexpr int kDefaultDimEmbedSize = 8;
inline constexpr double kDimEmbedInitBound = 0.1;
inline constexpr double kLeakySlope = 0.01;

enum class ModelKind : std::uint8_t {
  kBaseline,
  kAugmented,
  kTransfer,
  kDimPredictor,
};

std::string_view ModelKindName(ModelKind kind);  // baseline / augmented / ...
ModelKind ParseModelKind(std::string_view name);  // throws kUsage

// A named tensor. Frozen tensors receive no gradient and are not counted as
// trainable.
struct Param {
  std::string name;
  Eigen::MatrixXd value;
  bool frozen = false;

  Eigen::Index size() const { return value.size(); }
};

struct Linear {
  Param weight;  // out x in
  Param bias;    // out x 1

  int in() const { return static_cast<int>(weight.value.cols()); }
  int out() const { return static_cast<int>(weight.value.rows()); }
};

// Embedding tables and the two FFNs shared by the augmented classifier and
// the transfer model.
struct AugmentedBody {
  int hidden_dim = 0;
  int dim_embed_size = kDefaultDimEmbedSize;
  DimensionMask mask = AllDimensionsMask();
  // Tables of masked-out dimensions are empty (0 x dim_embed_size).
  std::array<Param, kNumDimensions> embeddings;
  Linear ffn1_in, ffn1_out;  // input -> 256 -> 256
  Linear ffn2_in, ffn2_out;  // 256 -> 128 -> 128

  int InputWidth() const {
    return hidden_dim + static_cast<int>(mask.count()) * dim_embed_size;
  }
};

struct AugmentedClassifierParams {
  AugmentedBody body;
  Linear classifier;  // 128 -> C
};

struct BaselineClassifierParams {
  int hidden_dim = 0;
  Linear classifier;  // hidden -> C
};

struct TransferParams {
  AugmentedBody body;  // every tensor frozen
  Linear classifier;   // W_r: 128 -> C_target
};

struct DimPredictorParams {
  int hidden_dim = 0;
  Linear trunk_in, trunk_out;  // hidden -> 256 -> 128
  std::array<Linear, kNumDimensions> heads;
};

using ModelParams = std::variant<BaselineClassifierParams,
                                 AugmentedClassifierParams, TransferParams,
                                 DimPredictorParams>;

ModelKind KindOf(const ModelParams &model);
int NumClasses(const ModelParams &model);  // 0 for the dimension predictor
int HiddenDim(const ModelParams &model);

// Every tensor in a fixed order (the checkpoint order).
std::vector<Param *> AllParams(ModelParams &model);
std::vector<const Param *> AllParams(const ModelParams &model);
std::vector<Param *> TrainableParams(ModelParams &model);
std::int64_t CountTrainableParams(const ModelParams &model);

// Initialization: linear layers uniform in +-1/sqrt(fan_in), embeddings
// uniform in +-kDimEmbedInitBound.
BaselineClassifierParams InitBaseline(int hidden_dim, int num_classes,
                                      Rng &rng);
AugmentedClassifierParams InitAugmented(int hidden_dim, int num_classes,
                                        Rng &rng,
                                        DimensionMask mask = AllDimensionsMask(),
                                        int dim_embed_size = kDefaultDimEmbedSize);
DimPredictorParams InitDimPredictor(int hidden_dim, Rng &rng);

// Copies the body with every tensor frozen and adds a fresh classifier.
TransferParams MakeTransfer(const AugmentedClassifierParams &trained,
                            int num_target_classes, Rng &rng);

// Single-example forward passes in inference mode (no dropout). Throw
// kShapeMismatch or kOutOfRange.
Eigen::VectorXd ForwardAugmented(const AugmentedClassifierParams &params,
                                 const Eigen::VectorXd &h,
                                 const FeatureIndexVector &feature_ids);
Eigen::VectorXd ForwardBaseline(const BaselineClassifierParams &params,
                                const Eigen::VectorXd &h);
Eigen::VectorXd ForwardTransfer(const TransferParams &params,
                                const Eigen::VectorXd &h,
                                const FeatureIndexVector &feature_ids);
std::array<Eigen::VectorXd, kNumDimensions> ForwardDimPredictor(
    const DimPredictorParams &params, const Eigen::VectorXd &h);

// The 128-wide representation fed to the classifier.
Eigen::VectorXd PreClassifier(const AugmentedBody &body,
                              const Eigen::VectorXd &h,
                              const FeatureIndexVector &feature_ids);

Eigen::VectorXd Softmax(const Eigen::VectorXd &logits);

// Mean over columns of -log softmax(logits)[label]. logits is C x N.
// Throws kLabelOutOfRange.
double CrossEntropy(const Eigen::MatrixXd &logits, const std::vector<int> &labels,
                    int num_classes);

// Weighted sum of the nine per-head cross-entropies (unit weights by
// default). Throws kLabelOutOfRange naming the dimension.
double DimPredictionLoss(
    const std::array<Eigen::VectorXd, kNumDimensions> &logits,
    const FeatureIndexVector &labels,
    const std::array<double, kNumDimensions> &weights = {1, 1, 1, 1, 1, 1, 1,
                                                         1, 1});

// ---------------------------------------------------------------------------
// Batched computation for training.

struct Batch {
  Eigen::MatrixXd h;                        // hidden x B
  std::vector<FeatureIndexVector> features;  // augmented / transfer input
  std::vector<int> labels;                   // classifiers
  std::vector<FeatureIndexVector> targets;   // dimension predictor labels
  int size() const { return static_cast<int>(h.cols()); }
};

// Dropout is applied (inverted scaling) only when rng is non-null.
struct DropoutSpec {
  double rate = 0.0;
  Rng *rng = nullptr;
};

// Logits per head: one C x B matrix for classifiers, nine for the
// dimension predictor.
std::vector<Eigen::MatrixXd> ForwardBatch(const ModelParams &model,
                                          const Batch &batch,
                                          const DropoutSpec &dropout = {});

struct LossAndGrad {
  double loss = 0.0;
  // Aligned with TrainableParams(model).
  std::vector<Eigen::MatrixXd> grads;
};

LossAndGrad ComputeLossAndGradients(
    const ModelParams &model, const Batch &batch,
    const DropoutSpec &dropout = {},
    const std::array<double, kNumDimensions> &head_weights = {1, 1, 1, 1, 1,
                                                              1, 1, 1, 1});

// ---------------------------------------------------------------------------
// Checkpoints.

struct CheckpointMeta {
  std::string task;          // e.g. "pdtb-total"; may be empty
  std::vector<std::string> class_set;
  std::uint64_t seed = 0;
  std::string encoder_fingerprint;
  int epoch = -1;  // 1-based epoch of the weights, 0 before training
};

struct Checkpoint {
  ModelParams model;
  CheckpointMeta meta;
};

inline constexpr std::uint32_t kCheckpointVersion = 1;

void SaveCheckpoint(const Checkpoint &ckpt, const std::filesystem::path &path);
// Validates every tensor shape. Throws kIo, kCorruption or kShapeMismatch.
Checkpoint LoadCheckpoint(const std::filesystem::path &path);

// FNV-1a over the bytes of the given tensors, for freeze audits.
std::uint64_t HashParams(const std::vector<const Param *> &params);

}  // namespace unidim

#endif  // UNIDIM_MODELS_H_
