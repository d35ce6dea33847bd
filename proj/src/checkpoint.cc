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

// Layout: 8-byte magic, u32 version, u32 header length, JSON header, then
// every tensor of AllParams() as column-major little-endian doubles.

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "json.hpp"
#include "unidim/error.h"
#include "unidim/models.h"

namespace unidim {
namespace {

using json = nlohmann::ordered_json;

constexpr char kMagic[8] = {'U', 'N', 'I', 'D', 'I', 'M', 'C', 'K'};

void PutU32(std::string &out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out += static_cast<char>((v >> (8 * i)) & 0xff);
}

void PutU64(std::string &out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out += static_cast<char>((v >> (8 * i)) & 0xff);
}

std::uint64_t GetLE(const std::string &buf, std::size_t pos, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[pos + i]))
         << (8 * i);
  }
  return v;
}

// An all-zero model with the shapes implied by the header.
ModelParams Skeleton(const json &h) {
  const ModelKind kind = ParseModelKind(h.at("kind").get<std::string>());
  const int hidden = h.at("hidden_dim").get<int>();
  const int classes = h.at("num_classes").get<int>();
  Rng rng(0);
  switch (kind) {
    case ModelKind::kBaseline:
      return InitBaseline(hidden, classes, rng);
    case ModelKind::kDimPredictor:
      return InitDimPredictor(hidden, rng);
    case ModelKind::kAugmented:
    case ModelKind::kTransfer: {
      DimensionMask mask;
      for (const auto &name : h.at("dimensions")) {
        mask.set(static_cast<int>(ParseDimension(name.get<std::string>())));
      }
      AugmentedClassifierParams p = InitAugmented(
          hidden, kind == ModelKind::kTransfer ? 1 : classes, rng, mask,
          h.at("dim_embed_size").get<int>());
      if (kind == ModelKind::kAugmented) return p;
      return MakeTransfer(p, classes, rng);
    }
  }
  throw Error(ErrorCode::kCorruption, "bad model kind");
}

}  // namespace

void SaveCheckpoint(const Checkpoint &ckpt, const std::filesystem::path &path) {
  const ModelParams &model = ckpt.model;
  json h;
  h["kind"] = std::string(ModelKindName(KindOf(model)));
  h["hidden_dim"] = HiddenDim(model);
  h["num_classes"] = NumClasses(model);
  const AugmentedBody *body = nullptr;
  if (const auto *a = std::get_if<AugmentedClassifierParams>(&model)) body = &a->body;
  if (const auto *t = std::get_if<TransferParams>(&model)) body = &t->body;
  if (body != nullptr) {
    h["dim_embed_size"] = body->dim_embed_size;
    json dims = json::array();
    for (DimensionId dim : kAllDimensions) {
      if (body->mask.test(static_cast<int>(dim))) {
        dims.push_back(std::string(DimensionName(dim)));
      }
    }
    h["dimensions"] = dims;
  }
  h["task"] = ckpt.meta.task;
  h["class_set"] = ckpt.meta.class_set;
  h["seed"] = ckpt.meta.seed;
  h["encoder"] = ckpt.meta.encoder_fingerprint;
  h["epoch"] = ckpt.meta.epoch;
  json values = json::object();
  for (DimensionId dim : kAllDimensions) {
    json names = json::array();
    for (int i = 0; i < ValueSetSize(dim); ++i) {
      names.push_back(std::string(ValueName(dim, i)));
    }
    values[std::string(DimensionName(dim))] = names;
  }
  h["value_sets"] = values;
  json tensors = json::array();
  for (const Param *p : AllParams(model)) {
    tensors.push_back({{"name", p->name},
                       {"rows", p->value.rows()},
                       {"cols", p->value.cols()},
                       {"frozen", p->frozen}});
  }
  h["tensors"] = tensors;

  const std::string header = h.dump();
  std::string buf(kMagic, sizeof(kMagic));
  PutU32(buf, kCheckpointVersion);
  PutU32(buf, static_cast<std::uint32_t>(header.size()));
  buf += header;
  for (const Param *p : AllParams(model)) {
    for (Eigen::Index i = 0; i < p->size(); ++i) {
      PutU64(buf, std::bit_cast<std::uint64_t>(p->value.data()[i]));
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

Checkpoint LoadCheckpoint(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  const std::string buf((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
  const std::string where = path.string() + ": ";
  if (buf.size() < 16 || std::memcmp(buf.data(), kMagic, 8) != 0) {
    throw Error(ErrorCode::kCorruption, where + "not a checkpoint");
  }
  const auto version = GetLE(buf, 8, 4);
  if (version != kCheckpointVersion) {
    throw Error(ErrorCode::kCorruption,
                where + "unsupported version " + std::to_string(version));
  }
  const std::size_t header_len = GetLE(buf, 12, 4);
  if (buf.size() < 16 + header_len) {
    throw Error(ErrorCode::kCorruption, where + "truncated header");
  }
  Checkpoint ckpt;
  json h;
  try {
    h = json::parse(buf.substr(16, header_len));
    ckpt.model = Skeleton(h);
    ckpt.meta.task = h.at("task").get<std::string>();
    ckpt.meta.class_set = h.at("class_set").get<std::vector<std::string>>();
    ckpt.meta.seed = h.at("seed").get<std::uint64_t>();
    ckpt.meta.encoder_fingerprint = h.at("encoder").get<std::string>();
    ckpt.meta.epoch = h.at("epoch").get<int>();
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kCorruption, where + "bad header: " + e.what());
  }
  for (DimensionId dim : kAllDimensions) {
    const json &names = h["value_sets"][std::string(DimensionName(dim))];
    bool same = names.is_array() &&
                static_cast<int>(names.size()) == ValueSetSize(dim);
    for (int i = 0; same && i < ValueSetSize(dim); ++i) {
      same = names[i] == std::string(ValueName(dim, i));
    }
    if (!same) {
      throw Error(ErrorCode::kShapeMismatch,
                  where + "value set of " + std::string(DimensionName(dim)) +
                      " differs from this build");
    }
  }
  std::vector<Param *> params = AllParams(ckpt.model);
  const json &tensors = h["tensors"];
  if (!tensors.is_array() || tensors.size() != params.size()) {
    throw Error(ErrorCode::kShapeMismatch, where + "tensor count mismatch");
  }
  std::size_t pos = 16 + header_len;
  for (std::size_t i = 0; i < params.size(); ++i) {
    Param &p = *params[i];
    const json &t = tensors[i];
    if (t.value("name", "") != p.name || t.value("rows", -1) != p.value.rows() ||
        t.value("cols", -1) != p.value.cols()) {
      throw Error(ErrorCode::kShapeMismatch,
                  where + "tensor " + std::to_string(i) + " (" + p.name +
                      ") has an unexpected name or shape");
    }
    p.frozen = t.value("frozen", false);
    if (buf.size() < pos + 8 * static_cast<std::size_t>(p.size())) {
      throw Error(ErrorCode::kCorruption, where + "truncated tensor " + p.name);
    }
    for (Eigen::Index k = 0; k < p.size(); ++k, pos += 8) {
      p.value.data()[k] = std::bit_cast<double>(GetLE(buf, pos, 8));
    }
  }
  if (pos != buf.size()) {
    throw Error(ErrorCode::kCorruption, where + "trailing bytes");
  }
  return ckpt;
}

}  // namespace unidim
