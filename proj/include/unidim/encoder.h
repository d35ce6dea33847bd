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

// Sequence-pair representations. The TOY backend is a deterministic hashed
// random projection; the PRETRAINED backend reads vectors produced offline
// by a pretrained encoder from an embedding file.

#ifndef UNIDIM_ENCODER_H_
#define UNIDIM_ENCODER_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "unidim/corpus.h"

namespace unidim {

enum class EncoderBackend : std::uint8_t { kToy, kPretrained };

std::string_view EncoderBackendName(EncoderBackend backend);  // toy / pretrained
EncoderBackend ParseEncoderBackend(std::string_view name);    // throws kUsage

struct EncoderConfig {
  EncoderBackend backend = EncoderBackend::kToy;
  int hidden_dim = 768;
  int max_sequence_length = 512;
  std::uint64_t seed = 0;  // TOY only
  std::string pretrained_name = "bert-base-uncased";  // PRETRAINED only
  // PRETRAINED: file of precomputed vectors keyed by instance id.
  std::string embeddings_path;

  // Throws kUsage on hidden_dim <= 0 or max_sequence_length < 8.
  void Validate() const;
  // Stable summary of every field that changes the representation.
  std::string Fingerprint() const;
};

inline constexpr std::string_view kClsToken = "[CLS]";
inline constexpr std::string_view kSepToken = "[SEP]";

// [CLS] a1 .. am [SEP] b1 .. bn [SEP]; segment 0 up to the first [SEP].
struct PairSequence {
  std::vector<std::string> tokens;
  std::vector<int> segment_ids;
};

// Whitespace tokenization. When the pair does not fit, both arguments lose
// tokens from their tails in proportion to their lengths. Throws
// kEmptyArgument.
PairSequence BuildPairSequence(std::string_view arg1, std::string_view arg2,
                               const EncoderConfig &cfg);

// Lengths (m', n') kept from arguments of lengths (m, n) under a budget.
std::pair<int, int> TruncatedLengths(int m, int n, int budget);

// TOY backend. Each (token, segment) is hashed to kToyHashes signed
// buckets; each bucket owns a seed-derived projection column with entries
// uniform in [-1, 1]. The columns are summed, scaled by 1/sqrt(#hashes) and
// squashed with tanh. Everything is double precision.
inline constexpr int kToyHashes = 2;
inline constexpr std::uint64_t kToyBuckets = 1ULL << 20;

Eigen::VectorXd EncodeToy(const PairSequence &seq, const EncoderConfig &cfg);

// Precomputed embeddings. File layout, repeated per record, little endian:
// u32 id length, id bytes, u32 vector length, float32 values.
using EmbeddingTable = std::map<std::string, std::vector<float>>;

void WriteEmbeddingFile(const std::filesystem::path &path,
                        const EmbeddingTable &table);
// Throws kBackendUnavailable if the file is missing, kFormat if truncated.
EmbeddingTable ReadEmbeddingFile(const std::filesystem::path &path);

// Encodes one argument pair (TOY only; PRETRAINED needs instance ids and
// throws kBackendUnavailable).
Eigen::VectorXd Encode(const PairSequence &seq, const EncoderConfig &cfg);

// Row i is the representation of instances[i].
Eigen::MatrixXd EncodeInstances(const std::vector<RelationInstance> &instances,
                                const EncoderConfig &cfg);

}  // namespace unidim

#endif  // UNIDIM_ENCODER_H_
