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
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "strings.h"
#include "unidim/encoder.h"
#include "unidim/error.h"
#include "unidim/random.h"

namespace unidim {
namespace {

void PutU32(std::ostream &os, std::uint32_t v) {
  const unsigned char bytes[4] = {
      static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
      static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<const char *>(bytes), 4);
}

bool GetU32(std::istream &is, std::uint32_t &v) {
  unsigned char bytes[4];
  if (!is.read(reinterpret_cast<char *>(bytes), 4)) return false;
  v = static_cast<std::uint32_t>(bytes[0]) |
      static_cast<std::uint32_t>(bytes[1]) << 8 |
      static_cast<std::uint32_t>(bytes[2]) << 16 |
      static_cast<std::uint32_t>(bytes[3]) << 24;
  return true;
}

// Entry `row` of the projection column owned by a bucket.
double ProjectionEntry(std::uint64_t column_seed, int row) {
  const std::uint64_t z = MixSeed(column_seed, static_cast<std::uint64_t>(row));
  return static_cast<double>(z >> 11) * 0x1.0p-52 - 1.0;
}

}  // namespace

std::string_view EncoderBackendName(EncoderBackend backend) {
  return backend == EncoderBackend::kToy ? "toy" : "pretrained";
}

EncoderBackend ParseEncoderBackend(std::string_view name) {
  const std::string lower = internal::ToLower(name);
  if (lower == "toy") return EncoderBackend::kToy;
  if (lower == "pretrained") return EncoderBackend::kPretrained;
  throw Error(ErrorCode::kUsage, "unknown encoder \"" + std::string(name) +
                                     "\" (expected toy or pretrained)");
}

void EncoderConfig::Validate() const {
  if (hidden_dim <= 0) {
    throw Error(ErrorCode::kUsage, "hidden_dim must be positive");
  }
  if (max_sequence_length < 8) {
    throw Error(ErrorCode::kUsage, "max_sequence_length must be at least 8");
  }
}

std::string EncoderConfig::Fingerprint() const {
  std::string out = std::string(EncoderBackendName(backend)) +
                    ":hidden=" + std::to_string(hidden_dim) +
                    ":max_len=" + std::to_string(max_sequence_length);
  if (backend == EncoderBackend::kToy) {
    out += ":seed=" + std::to_string(seed);
  } else {
    out += ":name=" + pretrained_name;
  }
  return out;
}

std::pair<int, int> TruncatedLengths(int m, int n, int budget) {
  if (m + n <= budget) return {m, n};
  int keep_m = static_cast<int>(static_cast<long long>(budget) * m / (m + n));
  keep_m = std::clamp(keep_m, 1, m);
  int keep_n = std::min(n, budget - keep_m);
  keep_m = budget - keep_n;
  return {keep_m, keep_n};
}

PairSequence BuildPairSequence(std::string_view arg1, std::string_view arg2,
                               const EncoderConfig &cfg) {
  cfg.Validate();
  std::vector<std::string> a = internal::SplitWhitespace(arg1);
  std::vector<std::string> b = internal::SplitWhitespace(arg2);
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kEmptyArgument,
                std::string(a.empty() ? "first" : "second") +
                    " argument has no tokens");
  }
  const auto [m, n] = TruncatedLengths(static_cast<int>(a.size()),
                                       static_cast<int>(b.size()),
                                       cfg.max_sequence_length - 3);
  a.resize(m);
  b.resize(n);
  PairSequence seq;
  seq.tokens.reserve(m + n + 3);
  seq.tokens.emplace_back(kClsToken);
  for (std::string &t : a) seq.tokens.push_back(std::move(t));
  seq.tokens.emplace_back(kSepToken);
  seq.segment_ids.assign(seq.tokens.size(), 0);
  for (std::string &t : b) seq.tokens.push_back(std::move(t));
  seq.tokens.emplace_back(kSepToken);
  seq.segment_ids.resize(seq.tokens.size(), 1);
  return seq;
}

Eigen::VectorXd EncodeToy(const PairSequence &seq, const EncoderConfig &cfg) {
  cfg.Validate();
  if (seq.tokens.size() != seq.segment_ids.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "token and segment lists differ in length");
  }
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(cfg.hidden_dim);
  const std::uint64_t base = MixSeed(cfg.seed, 0x70);
  int hashes = 0;
  for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
    std::string key = seq.tokens[i];
    key += '\x1f';
    key += static_cast<char>('0' + seq.segment_ids[i]);
    for (int j = 0; j < kToyHashes; ++j) {
      const std::uint64_t h =
          internal::Fnv1a(key, MixSeed(base, static_cast<std::uint64_t>(j)));
      const std::uint64_t bucket = h % kToyBuckets;
      const double sign = (h >> 63) ? -1.0 : 1.0;
      const std::uint64_t column_seed = MixSeed(base, kToyHashes + bucket);
      for (int r = 0; r < cfg.hidden_dim; ++r) {
        sum[r] += sign * ProjectionEntry(column_seed, r);
      }
      ++hashes;
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(hashes));
  return (sum * scale).array().tanh().matrix();
}

void WriteEmbeddingFile(const std::filesystem::path &path,
                        const EmbeddingTable &table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  for (const auto &[id, values] : table) {
    PutU32(out, static_cast<std::uint32_t>(id.size()));
    out.write(id.data(), static_cast<std::streamsize>(id.size()));
    PutU32(out, static_cast<std::uint32_t>(values.size()));
    for (float v : values) PutU32(out, std::bit_cast<std::uint32_t>(v));
  }
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

EmbeddingTable ReadEmbeddingFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kBackendUnavailable,
                "embedding file not found: " + path.string());
  }
  EmbeddingTable table;
  while (in.peek() != std::char_traits<char>::eof()) {
    std::uint32_t id_len = 0, dim = 0;
    std::string id;
    bool ok = GetU32(in, id_len);
    if (ok) {
      id.resize(id_len);
      ok = static_cast<bool>(in.read(id.data(), id_len));
    }
    ok = ok && GetU32(in, dim);
    std::vector<float> values(ok ? dim : 0);
    for (std::uint32_t k = 0; ok && k < dim; ++k) {
      std::uint32_t bits = 0;
      ok = GetU32(in, bits);
      values[k] = std::bit_cast<float>(bits);
    }
    if (!ok) {
      throw Error(ErrorCode::kFormat,
                  path.string() + ": truncated record after " +
                      std::to_string(table.size()) + " records");
    }
    table[id] = std::move(values);
  }
  return table;
}

Eigen::VectorXd Encode(const PairSequence &seq, const EncoderConfig &cfg) {
  if (cfg.backend == EncoderBackend::kPretrained) {
    throw Error(ErrorCode::kBackendUnavailable,
                "the pretrained backend (" + cfg.pretrained_name +
                    ") is only available through a precomputed embedding "
                    "file keyed by instance id");
  }
  return EncodeToy(seq, cfg);
}

Eigen::MatrixXd EncodeInstances(const std::vector<RelationInstance> &instances,
                                const EncoderConfig &cfg) {
  cfg.Validate();
  Eigen::MatrixXd out(static_cast<Eigen::Index>(instances.size()),
                      cfg.hidden_dim);
  if (cfg.backend == EncoderBackend::kToy) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const PairSequence seq = BuildPairSequence(
          instances[i].arg1_text, instances[i].arg2_text, cfg);
      out.row(static_cast<Eigen::Index>(i)) = EncodeToy(seq, cfg).transpose();
    }
    return out;
  }
  if (cfg.embeddings_path.empty()) {
    throw Error(ErrorCode::kBackendUnavailable,
                "pretrained backend needs an embedding file");
  }
  const EmbeddingTable table = ReadEmbeddingFile(cfg.embeddings_path);
  const std::vector<std::string> fallback = InstanceIds(instances);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const std::string &id =
        instances[i].id.empty() ? fallback[i] : instances[i].id;
    const auto it = table.find(id);
    if (it == table.end()) {
      throw Error(ErrorCode::kBackendUnavailable,
                  "no embedding for instance " + id);
    }
    if (static_cast<int>(it->second.size()) != cfg.hidden_dim) {
      throw Error(ErrorCode::kShapeMismatch,
                  "embedding for " + id + " has length " +
                      std::to_string(it->second.size()) + ", expected " +
                      std::to_string(cfg.hidden_dim));
    }
    for (int k = 0; k < cfg.hidden_dim; ++k) {
      out(static_cast<Eigen::Index>(i), k) = it->second[k];
    }
  }
  return out;
}

}  // namespace unidim
