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

#include <cmath>
#include <string>
#include <vector>

#include "unidim/error.h"
#include "unidim/models.h"

namespace unidim {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Linear InitLinear(const std::string &name, int in, int out, Rng &rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(in));
  Linear l;
  l.weight.name = name + ".weight";
  l.weight.value.resize(out, in);
  for (Eigen::Index j = 0; j < in; ++j) {
    for (Eigen::Index i = 0; i < out; ++i) {
      l.weight.value(i, j) = rng.Uniform(-bound, bound);
    }
  }
  l.bias.name = name + ".bias";
  l.bias.value.resize(out, 1);
  for (Eigen::Index i = 0; i < out; ++i) {
    l.bias.value(i, 0) = rng.Uniform(-bound, bound);
  }
  return l;
}

MatrixXd Affine(const Linear &l, const MatrixXd &x) {
  if (x.rows() != l.in()) {
    throw Error(ErrorCode::kShapeMismatch,
                l.weight.name + " expects input width " +
                    std::to_string(l.in()) + ", got " +
                    std::to_string(x.rows()));
  }
  MatrixXd z = l.weight.value * x;
  z.colwise() += l.bias.value.col(0);
  return z;
}

MatrixXd Leaky(const MatrixXd &z) {
  return z.unaryExpr([](double v) { return v > 0 ? v : kLeakySlope * v; });
}

MatrixXd LeakyGrad(const MatrixXd &z) {
  return z.unaryExpr([](double v) { return v > 0 ? 1.0 : kLeakySlope; });
}

// Inverted dropout mask, or an empty matrix when dropout is off.
MatrixXd DropoutMask(Eigen::Index rows, Eigen::Index cols,
                     const DropoutSpec &spec) {
  if (spec.rng == nullptr || spec.rate <= 0.0) return MatrixXd();
  if (spec.rate >= 1.0) return MatrixXd::Zero(rows, cols);
  const double keep = 1.0 - spec.rate;
  MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      m(i, j) = spec.rng->Bernoulli(keep) ? 1.0 / keep : 0.0;
    }
  }
  return m;
}

MatrixXd ApplyMask(const MatrixXd &x, const MatrixXd &mask) {
  return mask.size() == 0 ? x : MatrixXd(x.cwiseProduct(mask));
}

void CheckHidden(const MatrixXd &h, int hidden_dim) {
  if (h.rows() != hidden_dim) {
    throw Error(ErrorCode::kShapeMismatch,
                "representation has width " + std::to_string(h.rows()) +
                    ", expected " + std::to_string(hidden_dim));
  }
}

// Activations of the augmented body kept for the backward pass.
struct BodyCache {
  MatrixXd x0, z1, a1, z2, mask1, z3, a3, z4, mask2, out;
};

BodyCache BodyForward(const AugmentedBody &body, const MatrixXd &h,
                      const std::vector<FeatureIndexVector> &features,
                      const DropoutSpec &dropout) {
  CheckHidden(h, body.hidden_dim);
  const Eigen::Index n = h.cols();
  if (static_cast<Eigen::Index>(features.size()) != n) {
    throw Error(ErrorCode::kShapeMismatch,
                "batch has " + std::to_string(n) + " representations but " +
                    std::to_string(features.size()) + " feature vectors");
  }
  BodyCache c;
  c.x0.resize(body.InputWidth(), n);
  c.x0.topRows(body.hidden_dim) = h;
  Eigen::Index row = body.hidden_dim;
  for (DimensionId dim : kAllDimensions) {
    const int d = static_cast<int>(dim);
    if (!body.mask.test(d)) continue;
    const MatrixXd &table = body.embeddings[d].value;
    for (Eigen::Index j = 0; j < n; ++j) {
      const int id = features[j][d];
      if (id < 0 || id >= table.rows()) {
        throw Error(ErrorCode::kOutOfRange,
                    "feature index " + std::to_string(id) + " out of range for " +
                        std::string(DimensionName(dim)));
      }
      c.x0.block(row, j, body.dim_embed_size, 1) = table.row(id).transpose();
    }
    row += body.dim_embed_size;
  }
  c.z1 = Affine(body.ffn1_in, c.x0);
  c.a1 = Leaky(c.z1);
  c.z2 = Affine(body.ffn1_out, c.a1);
  c.mask1 = DropoutMask(c.z2.rows(), n, dropout);
  const MatrixXd d1 = ApplyMask(Leaky(c.z2), c.mask1);
  c.z3 = Affine(body.ffn2_in, d1);
  c.a3 = Leaky(c.z3);
  c.z4 = Affine(body.ffn2_out, c.a3);
  c.mask2 = DropoutMask(c.z4.rows(), n, dropout);
  c.out = ApplyMask(Leaky(c.z4), c.mask2);
  return c;
}

struct LinearGrad {
  MatrixXd weight, bias;
};

// Gradient of a linear layer; returns the gradient wrt its input.
MatrixXd LinearBackward(const Linear &l, const MatrixXd &x, const MatrixXd &dz,
                        LinearGrad &g) {
  g.weight = dz * x.transpose();
  g.bias = dz.rowwise().sum();
  return l.weight.value.transpose() * dz;
}

// Appends the body gradients in AllParams order.
void BodyBackward(const AugmentedBody &body, const BodyCache &c,
                  const std::vector<FeatureIndexVector> &features,
                  const MatrixXd &dout, std::vector<MatrixXd> &grads) {
  MatrixXd dz4 = ApplyMask(dout, c.mask2).cwiseProduct(LeakyGrad(c.z4));
  LinearGrad g2b, g2a, g1b, g1a;
  MatrixXd da3 = LinearBackward(body.ffn2_out, c.a3, dz4, g2b);
  MatrixXd dz3 = da3.cwiseProduct(LeakyGrad(c.z3));
  const MatrixXd d1 = ApplyMask(Leaky(c.z2), c.mask1);
  MatrixXd dd1 = LinearBackward(body.ffn2_in, d1, dz3, g2a);
  MatrixXd dz2 = ApplyMask(dd1, c.mask1).cwiseProduct(LeakyGrad(c.z2));
  MatrixXd da1 = LinearBackward(body.ffn1_out, c.a1, dz2, g1b);
  MatrixXd dz1 = da1.cwiseProduct(LeakyGrad(c.z1));
  MatrixXd dx0 = LinearBackward(body.ffn1_in, c.x0, dz1, g1a);

  Eigen::Index row = body.hidden_dim;
  for (DimensionId dim : kAllDimensions) {
    const int d = static_cast<int>(dim);
    const MatrixXd &table = body.embeddings[d].value;
    MatrixXd g = MatrixXd::Zero(table.rows(), table.cols());
    if (body.mask.test(d)) {
      for (Eigen::Index j = 0; j < dx0.cols(); ++j) {
        g.row(features[j][d]) +=
            dx0.block(row, j, body.dim_embed_size, 1).transpose();
      }
      row += body.dim_embed_size;
    }
    grads.push_back(std::move(g));
  }
  for (LinearGrad *lg : {&g1a, &g1b, &g2a, &g2b}) {
    grads.push_back(std::move(lg->weight));
    grads.push_back(std::move(lg->bias));
  }
}

// Column-wise log-softmax.
MatrixXd LogSoftmax(const MatrixXd &logits) {
  MatrixXd out(logits.rows(), logits.cols());
  for (Eigen::Index j = 0; j < logits.cols(); ++j) {
    const double m = logits.col(j).maxCoeff();
    const double lse =
        m + std::log((logits.col(j).array() - m).exp().sum());
    out.col(j) = logits.col(j).array() - lse;
  }
  return out;
}

void CheckLabels(const std::vector<int> &labels, Eigen::Index n, int classes,
                 const std::string &what) {
  if (static_cast<Eigen::Index>(labels.size()) != n) {
    throw Error(ErrorCode::kShapeMismatch,
                what + ": " + std::to_string(labels.size()) + " labels for " +
                    std::to_string(n) + " examples");
  }
  for (int y : labels) {
    if (y < 0 || y >= classes) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  what + ": label " + std::to_string(y) + " outside [0, " +
                      std::to_string(classes) + ")");
    }
  }
}

// Mean cross-entropy and its gradient wrt the logits, scaled by weight.
double SoftmaxCrossEntropy(const MatrixXd &logits, const std::vector<int> &labels,
                           double weight, MatrixXd *dlogits) {
  const MatrixXd logp = LogSoftmax(logits);
  const double n = static_cast<double>(logits.cols());
  double loss = 0.0;
  for (Eigen::Index j = 0; j < logits.cols(); ++j) loss -= logp(labels[j], j);
  loss /= n;
  if (dlogits != nullptr) {
    *dlogits = logp.array().exp();
    for (Eigen::Index j = 0; j < logits.cols(); ++j) {
      (*dlogits)(labels[j], j) -= 1.0;
    }
    *dlogits *= weight / n;
  }
  return weight * loss;
}

std::vector<int> HeadLabels(const std::vector<FeatureIndexVector> &targets,
                            int d) {
  std::vector<int> out;
  out.reserve(targets.size());
  for (const FeatureIndexVector &t : targets) out.push_back(t[d]);
  return out;
}

void AppendLinear(std::vector<Param *> &out, Linear &l) {
  out.push_back(&l.weight);
  out.push_back(&l.bias);
}

void AppendBody(std::vector<Param *> &out, AugmentedBody &body) {
  for (Param &p : body.embeddings) out.push_back(&p);
  AppendLinear(out, body.ffn1_in);
  AppendLinear(out, body.ffn1_out);
  AppendLinear(out, body.ffn2_in);
  AppendLinear(out, body.ffn2_out);
}

AugmentedBody InitBody(int hidden_dim, Rng &rng, DimensionMask mask,
                       int dim_embed_size) {
  if (hidden_dim <= 0 || dim_embed_size <= 0) {
    throw Error(ErrorCode::kShapeMismatch, "model sizes must be positive");
  }
  AugmentedBody body;
  body.hidden_dim = hidden_dim;
  body.dim_embed_size = dim_embed_size;
  body.mask = mask;
  for (DimensionId dim : kAllDimensions) {
    const int d = static_cast<int>(dim);
    Param &p = body.embeddings[d];
    p.name = "embed." + std::string(DimensionName(dim));
    const int rows = mask.test(d) ? ValueSetSize(dim) : 0;
    p.value.resize(rows, dim_embed_size);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < dim_embed_size; ++j) {
        p.value(i, j) = rng.Uniform(-kDimEmbedInitBound, kDimEmbedInitBound);
      }
    }
  }
  body.ffn1_in = InitLinear("ffn1.in", body.InputWidth(), kFfn1Size, rng);
  body.ffn1_out = InitLinear("ffn1.out", kFfn1Size, kFfn1Size, rng);
  body.ffn2_in = InitLinear("ffn2.in", kFfn1Size, kFfn2Size, rng);
  body.ffn2_out = InitLinear("ffn2.out", kFfn2Size, kFfn2Size, rng);
  return body;
}

void CheckClasses(int num_classes) {
  if (num_classes <= 0) {
    throw Error(ErrorCode::kShapeMismatch, "number of classes must be positive");
  }
}

MatrixXd AsColumn(const VectorXd &h) { return MatrixXd(h); }

}  // namespace

std::string_view ModelKindName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kBaseline:
      return "baseline";
    case ModelKind::kAugmented:
      return "augmented";
    case ModelKind::kTransfer:
      return "transfer";
    case ModelKind::kDimPredictor:
      return "dim-predictor";
  }
  return "?";
}

ModelKind ParseModelKind(std::string_view name) {
  for (ModelKind k : {ModelKind::kBaseline, ModelKind::kAugmented,
                      ModelKind::kTransfer, ModelKind::kDimPredictor}) {
    if (ModelKindName(k) == name) return k;
  }
  throw Error(ErrorCode::kUsage, "unknown model kind \"" + std::string(name) + "\"");
}

ModelKind KindOf(const ModelParams &model) {
  return static_cast<ModelKind>(model.index());
}

int NumClasses(const ModelParams &model) {
  return std::visit(
      Overloaded{[](const DimPredictorParams &) { return 0; },
                 [](const auto &p) { return p.classifier.out(); }},
      model);
}

int HiddenDim(const ModelParams &model) {
  return std::visit(
      Overloaded{[](const AugmentedClassifierParams &p) { return p.body.hidden_dim; },
                 [](const TransferParams &p) { return p.body.hidden_dim; },
                 [](const auto &p) { return p.hidden_dim; }},
      model);
}

std::vector<Param *> AllParams(ModelParams &model) {
  std::vector<Param *> out;
  std::visit(Overloaded{[&](BaselineClassifierParams &p) {
                          AppendLinear(out, p.classifier);
                        },
                        [&](AugmentedClassifierParams &p) {
                          AppendBody(out, p.body);
                          AppendLinear(out, p.classifier);
                        },
                        [&](TransferParams &p) {
                          AppendBody(out, p.body);
                          AppendLinear(out, p.classifier);
                        },
                        [&](DimPredictorParams &p) {
                          AppendLinear(out, p.trunk_in);
                          AppendLinear(out, p.trunk_out);
                          for (Linear &head : p.heads) AppendLinear(out, head);
                        }},
             model);
  return out;
}

std::vector<const Param *> AllParams(const ModelParams &model) {
  std::vector<Param *> mutable_params =
      AllParams(const_cast<ModelParams &>(model));
  return {mutable_params.begin(), mutable_params.end()};
}

std::vector<Param *> TrainableParams(ModelParams &model) {
  std::vector<Param *> out;
  for (Param *p : AllParams(model)) {
    if (!p->frozen) out.push_back(p);
  }
  return out;
}

std::int64_t CountTrainableParams(const ModelParams &model) {
  std::int64_t n = 0;
  for (const Param *p : AllParams(model)) {
    if (!p->frozen) n += p->size();
  }
  return n;
}

BaselineClassifierParams InitBaseline(int hidden_dim, int num_classes,
                                      Rng &rng) {
  CheckClasses(num_classes);
  if (hidden_dim <= 0) {
    throw Error(ErrorCode::kShapeMismatch, "hidden_dim must be positive");
  }
  BaselineClassifierParams p;
  p.hidden_dim = hidden_dim;
  p.classifier = InitLinear("classifier", hidden_dim, num_classes, rng);
  return p;
}

AugmentedClassifierParams InitAugmented(int hidden_dim, int num_classes,
                                        Rng &rng, DimensionMask mask,
                                        int dim_embed_size) {
  CheckClasses(num_classes);
  AugmentedClassifierParams p;
  p.body = InitBody(hidden_dim, rng, mask, dim_embed_size);
  p.classifier = InitLinear("classifier", kFfn2Size, num_classes, rng);
  return p;
}

DimPredictorParams InitDimPredictor(int hidden_dim, Rng &rng) {
  if (hidden_dim <= 0) {
    throw Error(ErrorCode::kShapeMismatch, "hidden_dim must be positive");
  }
  DimPredictorParams p;
  p.hidden_dim = hidden_dim;
  p.trunk_in = InitLinear("trunk.in", hidden_dim, kFfn1Size, rng);
  p.trunk_out = InitLinear("trunk.out", kFfn1Size, kFfn2Size, rng);
  for (DimensionId dim : kAllDimensions) {
    p.heads[static_cast<int>(dim)] =
        InitLinear("head." + std::string(DimensionName(dim)), kFfn2Size,
                   ValueSetSize(dim), rng);
  }
  return p;
}

TransferParams MakeTransfer(const AugmentedClassifierParams &trained,
                            int num_target_classes, Rng &rng) {
  CheckClasses(num_target_classes);
  TransferParams p;
  p.body = trained.body;
  std::vector<Param *> body_params;
  AppendBody(body_params, p.body);
  for (Param *param : body_params) param->frozen = true;
  p.classifier = InitLinear("transfer", kFfn2Size, num_target_classes, rng);
  return p;
}

std::vector<MatrixXd> ForwardBatch(const ModelParams &model, const Batch &batch,
                                   const DropoutSpec &dropout) {
  return std::visit(
      Overloaded{
          [&](const BaselineClassifierParams &p) {
            CheckHidden(batch.h, p.hidden_dim);
            const MatrixXd mask =
                DropoutMask(batch.h.rows(), batch.h.cols(), dropout);
            return std::vector<MatrixXd>{
                Affine(p.classifier, ApplyMask(batch.h, mask))};
          },
          [&](const AugmentedClassifierParams &p) {
            const BodyCache c = BodyForward(p.body, batch.h, batch.features,
                                            dropout);
            return std::vector<MatrixXd>{Affine(p.classifier, c.out)};
          },
          [&](const TransferParams &p) {
            const BodyCache c = BodyForward(p.body, batch.h, batch.features,
                                            dropout);
            return std::vector<MatrixXd>{Affine(p.classifier, c.out)};
          },
          [&](const DimPredictorParams &p) {
            CheckHidden(batch.h, p.hidden_dim);
            const MatrixXd a2 =
                Leaky(Affine(p.trunk_out, Leaky(Affine(p.trunk_in, batch.h))));
            const MatrixXd d =
                ApplyMask(a2, DropoutMask(a2.rows(), a2.cols(), dropout));
            std::vector<MatrixXd> out;
            for (const Linear &head : p.heads) out.push_back(Affine(head, d));
            return out;
          }},
      model);
}

LossAndGrad ComputeLossAndGradients(
    const ModelParams &model, const Batch &batch, const DropoutSpec &dropout,
    const std::array<double, kNumDimensions> &head_weights) {
  LossAndGrad result;
  std::vector<MatrixXd> all;  // AllParams order
  const Eigen::Index n = batch.h.cols();
  if (n == 0) throw Error(ErrorCode::kEmptySplit, "empty batch");
  std::visit(
      Overloaded{
          [&](const BaselineClassifierParams &p) {
            CheckHidden(batch.h, p.hidden_dim);
            CheckLabels(batch.labels, n, p.classifier.out(), "classifier");
            const MatrixXd mask = DropoutMask(batch.h.rows(), n, dropout);
            const MatrixXd x = ApplyMask(batch.h, mask);
            MatrixXd dlogits;
            result.loss = SoftmaxCrossEntropy(Affine(p.classifier, x),
                                              batch.labels, 1.0, &dlogits);
            LinearGrad g;
            LinearBackward(p.classifier, x, dlogits, g);
            all = {std::move(g.weight), std::move(g.bias)};
          },
          [&](const AugmentedClassifierParams &p) {
            const BodyCache c =
                BodyForward(p.body, batch.h, batch.features, dropout);
            CheckLabels(batch.labels, n, p.classifier.out(), "classifier");
            MatrixXd dlogits;
            result.loss = SoftmaxCrossEntropy(Affine(p.classifier, c.out),
                                              batch.labels, 1.0, &dlogits);
            LinearGrad g;
            const MatrixXd dout = LinearBackward(p.classifier, c.out, dlogits, g);
            BodyBackward(p.body, c, batch.features, dout, all);
            all.push_back(std::move(g.weight));
            all.push_back(std::move(g.bias));
          },
          [&](const TransferParams &p) {
            const BodyCache c =
                BodyForward(p.body, batch.h, batch.features, dropout);
            CheckLabels(batch.labels, n, p.classifier.out(), "transfer");
            MatrixXd dlogits;
            result.loss = SoftmaxCrossEntropy(Affine(p.classifier, c.out),
                                              batch.labels, 1.0, &dlogits);
            LinearGrad g;
            const MatrixXd dout = LinearBackward(p.classifier, c.out, dlogits, g);
            bool body_frozen = true;
            std::vector<Param *> body_params;
            AppendBody(body_params, const_cast<AugmentedBody &>(p.body));
            for (const Param *bp : body_params) body_frozen &= bp->frozen;
            if (body_frozen) {
              all.resize(body_params.size());
            } else {
              BodyBackward(p.body, c, batch.features, dout, all);
            }
            all.push_back(std::move(g.weight));
            all.push_back(std::move(g.bias));
          },
          [&](const DimPredictorParams &p) {
            CheckHidden(batch.h, p.hidden_dim);
            if (static_cast<Eigen::Index>(batch.targets.size()) != n) {
              throw Error(ErrorCode::kShapeMismatch,
                          "dimension targets do not match the batch");
            }
            const MatrixXd z1 = Affine(p.trunk_in, batch.h);
            const MatrixXd a1 = Leaky(z1);
            const MatrixXd z2 = Affine(p.trunk_out, a1);
            const MatrixXd mask = DropoutMask(z2.rows(), n, dropout);
            const MatrixXd d = ApplyMask(Leaky(z2), mask);
            MatrixXd dd = MatrixXd::Zero(d.rows(), n);
            std::vector<MatrixXd> head_grads;
            for (DimensionId dim : kAllDimensions) {
              const int k = static_cast<int>(dim);
              const std::vector<int> labels = HeadLabels(batch.targets, k);
              CheckLabels(labels, n, p.heads[k].out(),
                          std::string(DimensionName(dim)));
              MatrixXd dlogits;
              result.loss += SoftmaxCrossEntropy(Affine(p.heads[k], d), labels,
                                                 head_weights[k], &dlogits);
              LinearGrad g;
              dd += LinearBackward(p.heads[k], d, dlogits, g);
              head_grads.push_back(std::move(g.weight));
              head_grads.push_back(std::move(g.bias));
            }
            const MatrixXd dz2 = ApplyMask(dd, mask).cwiseProduct(LeakyGrad(z2));
            LinearGrad g2, g1;
            const MatrixXd da1 = LinearBackward(p.trunk_out, a1, dz2, g2);
            LinearBackward(p.trunk_in, batch.h,
                           MatrixXd(da1.cwiseProduct(LeakyGrad(z1))), g1);
            all = {std::move(g1.weight), std::move(g1.bias),
                   std::move(g2.weight), std::move(g2.bias)};
            for (MatrixXd &g : head_grads) all.push_back(std::move(g));
          }},
      model);
  const std::vector<const Param *> params = AllParams(model);
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!params[i]->frozen) result.grads.push_back(std::move(all[i]));
  }
  return result;
}

Eigen::VectorXd ForwardAugmented(const AugmentedClassifierParams &params,
                                 const Eigen::VectorXd &h,
                                 const FeatureIndexVector &feature_ids) {
  const BodyCache c = BodyForward(params.body, AsColumn(h), {feature_ids}, {});
  return Affine(params.classifier, c.out).col(0);
}

Eigen::VectorXd ForwardBaseline(const BaselineClassifierParams &params,
                                const Eigen::VectorXd &h) {
  CheckHidden(AsColumn(h), params.hidden_dim);
  return Affine(params.classifier, AsColumn(h)).col(0);
}

Eigen::VectorXd ForwardTransfer(const TransferParams &params,
                                const Eigen::VectorXd &h,
                                const FeatureIndexVector &feature_ids) {
  const BodyCache c = BodyForward(params.body, AsColumn(h), {feature_ids}, {});
  return Affine(params.classifier, c.out).col(0);
}

std::array<Eigen::VectorXd, kNumDimensions> ForwardDimPredictor(
    const DimPredictorParams &params, const Eigen::VectorXd &h) {
  Batch batch;
  batch.h = AsColumn(h);
  const std::vector<MatrixXd> logits = ForwardBatch(params, batch);
  std::array<Eigen::VectorXd, kNumDimensions> out;
  for (int k = 0; k < kNumDimensions; ++k) out[k] = logits[k].col(0);
  return out;
}

Eigen::VectorXd PreClassifier(const AugmentedBody &body,
                              const Eigen::VectorXd &h,
                              const FeatureIndexVector &feature_ids) {
  return BodyForward(body, AsColumn(h), {feature_ids}, {}).out.col(0);
}

Eigen::VectorXd Softmax(const Eigen::VectorXd &logits) {
  return LogSoftmax(AsColumn(logits)).col(0).array().exp();
}

double CrossEntropy(const Eigen::MatrixXd &logits,
                    const std::vector<int> &labels, int num_classes) {
  if (logits.rows() != num_classes) {
    throw Error(ErrorCode::kShapeMismatch,
                "logits have " + std::to_string(logits.rows()) +
                    " rows, expected " + std::to_string(num_classes));
  }
  CheckLabels(labels, logits.cols(), num_classes, "cross-entropy");
  if (logits.cols() == 0) return 0.0;
  return SoftmaxCrossEntropy(logits, labels, 1.0, nullptr);
}

double DimPredictionLoss(
    const std::array<Eigen::VectorXd, kNumDimensions> &logits,
    const FeatureIndexVector &labels,
    const std::array<double, kNumDimensions> &weights) {
  double loss = 0.0;
  for (DimensionId dim : kAllDimensions) {
    const int k = static_cast<int>(dim);
    const int size = ValueSetSize(dim);
    if (logits[k].size() != size) {
      throw Error(ErrorCode::kShapeMismatch,
                  std::string(DimensionName(dim)) + " head has " +
                      std::to_string(logits[k].size()) + " outputs, expected " +
                      std::to_string(size));
    }
    CheckLabels({labels[k]}, 1, size, std::string(DimensionName(dim)));
    loss += weights[k] *
            SoftmaxCrossEntropy(AsColumn(logits[k]), {labels[k]}, 1.0, nullptr);
  }
  return loss;
}

std::uint64_t HashParams(const std::vector<const Param *> &params) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (const Param *p : params) {
    const auto *bytes = reinterpret_cast<const unsigned char *>(p->value.data());
    const std::size_t n = static_cast<std::size_t>(p->size()) * sizeof(double);
    for (std::size_t i = 0; i < n; ++i) {
      hash ^= bytes[i];
      hash *= 1099511628211ULL;
    }
  }
  return hash;
}

}  // namespace unidim
