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

// Random RST trees and relation multisets shared by the tests.

#ifndef UNIDIM_TESTS_TEST_TREES_H_
#define UNIDIM_TESTS_TEST_TREES_H_

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "unidim/corpus.h"
#include "unidim/random.h"

namespace unidim::testing {

inline const std::vector<std::string> kMultiLabels = {
    "List", "Contrast", "Sequence", "Same-Unit", "Disjunction"};
inline const std::vector<std::string> kSatelliteLabels = {
    "elaboration-additional", "attribution", "Cause", "background",
    "condition", "Evidence", "purpose", "Elaboration-object-attribute-e"};

inline RstNode RandomSubtree(Rng &rng, int first, int last, NodeKind kind,
                             std::string rel2par) {
  RstNode node;
  node.kind = kind;
  node.first_edu = first;
  node.last_edu = last;
  node.rel2par = std::move(rel2par);
  if (first == last) {
    node.is_leaf = true;
    node.text = "edu " + std::to_string(first) + " text";
    return node;
  }
  const int n = last - first + 1;
  const int k = 2 + static_cast<int>(rng.UniformInt(std::min(3, n - 1)));
  std::vector<int> gaps;
  for (int g = first; g < last; ++g) gaps.push_back(g);
  rng.Shuffle(gaps);
  gaps.resize(k - 1);
  std::sort(gaps.begin(), gaps.end());
  std::vector<std::pair<int, int>> spans;
  int start = first;
  for (int g : gaps) {
    spans.emplace_back(start, g);
    start = g + 1;
  }
  spans.emplace_back(start, last);
  if (rng.Bernoulli(0.4)) {
    const std::string label = kMultiLabels[rng.UniformInt(kMultiLabels.size())];
    for (const auto &[a, b] : spans) {
      node.children.push_back(
          RandomSubtree(rng, a, b, NodeKind::kNucleus, label));
    }
  } else {
    const std::size_t nucleus = rng.UniformInt(spans.size());
    for (std::size_t i = 0; i < spans.size(); ++i) {
      if (i == nucleus) {
        node.children.push_back(RandomSubtree(
            rng, spans[i].first, spans[i].second, NodeKind::kNucleus, "span"));
      } else {
        node.children.push_back(RandomSubtree(
            rng, spans[i].first, spans[i].second, NodeKind::kSatellite,
            kSatelliteLabels[rng.UniformInt(kSatelliteLabels.size())]));
      }
    }
  }
  return node;
}

inline RstNode RandomTree(Rng &rng, int n_leaves) {
  return RandomSubtree(rng, 1, n_leaves, NodeKind::kRoot, "");
}

inline bool IsBinary(const RstNode &node) {
  if (node.is_leaf) return node.children.empty();
  if (node.children.size() != 2) return false;
  return IsBinary(node.children[0]) && IsBinary(node.children[1]);
}

// Relation labels of an n-ary tree: a multinuclear node of arity k counts
// its label k-1 times, a mononuclear node counts each satellite's label.
inline void CollectSource(const RstNode &node, std::multiset<std::string> &out) {
  if (node.is_leaf) return;
  int nuclei = 0;
  std::string multi;
  for (const RstNode &child : node.children) {
    if (child.kind == NodeKind::kNucleus) {
      ++nuclei;
      multi = child.rel2par;
    }
  }
  for (const RstNode &child : node.children) {
    if (nuclei >= 2) {
      if (&child != &node.children.front()) out.insert(multi);
    } else if (child.kind == NodeKind::kSatellite) {
      out.insert(child.rel2par);
    }
  }
  for (const RstNode &child : node.children) CollectSource(child, out);
}

inline std::multiset<std::string> SourceRelations(const RstNode &tree) {
  std::multiset<std::string> out;
  CollectSource(tree, out);
  return out;
}

// One label per internal node of a binary tree.
inline void CollectBinary(const RstNode &node, std::multiset<std::string> &out) {
  if (node.is_leaf) return;
  const RstNode &l = node.children[0];
  const RstNode &r = node.children[1];
  if (l.kind == NodeKind::kNucleus && r.kind == NodeKind::kNucleus) {
    out.insert(l.rel2par == "span" ? r.rel2par : l.rel2par);
  } else if (l.kind == NodeKind::kNucleus) {
    out.insert(r.rel2par);
  } else {
    out.insert(l.rel2par);
  }
  CollectBinary(l, out);
  CollectBinary(r, out);
}

inline std::multiset<std::string> BinaryRelations(const RstNode &tree) {
  std::multiset<std::string> out;
  CollectBinary(tree, out);
  return out;
}

}  // namespace unidim::testing

#endif  // UNIDIM_TESTS_TEST_TREES_H_
