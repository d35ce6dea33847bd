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
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "strings.h"
#include "unidim/corpus.h"
#include "unidim/error.h"

namespace unidim {
namespace {

using internal::EqualsIgnoreCase;

class DisParser {
 public:
  explicit DisParser(std::string_view text) : text_(text) {}

  RstNode ParseDocument() {
    SkipSpace();
    RstNode root = ParseNode();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing input after the root node");
    if (root.kind != NodeKind::kRoot) Fail("document must start with Root");
    return root;
  }

 private:
  [[noreturn]] void Fail(const std::string &what) const {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kSyntax, "line " + std::to_string(line) +
                                        ", column " + std::to_string(column) +
                                        ": " + what);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void Expect(char c) {
    SkipSpace();
    if (pos_ >= text_.size()) {
      Fail(std::string("unexpected end of input, expected '") + c + "'");
    }
    if (text_[pos_] != c) {
      Fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  std::string_view Atom() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) {
      if (pos_ >= text_.size()) Fail("unexpected end of input");
      Fail("expected a symbol");
    }
    return text_.substr(start, pos_ - start);
  }

  int Int() {
    const std::string_view atom = Atom();
    int value = 0;
    const auto [end, ec] =
        std::from_chars(atom.data(), atom.data() + atom.size(), value);
    if (ec != std::errc() || end != atom.data() + atom.size()) {
      pos_ -= atom.size();
      Fail("expected an integer, found \"" + std::string(atom) + "\"");
    }
    return value;
  }

  // Text payload after "(text". The payload opens with "_!" and ends at the
  // first "!_" or "_!" that is followed by the closing parenthesis.
  std::string Text() {
    SkipSpace();
    if (text_.substr(pos_, 2) != "_!") Fail("expected _! before text");
    pos_ += 2;
    const std::size_t start = pos_;
    for (std::size_t i = start; i + 1 < text_.size(); ++i) {
      const std::string_view mark = text_.substr(i, 2);
      if (mark != "!_" && mark != "_!") continue;
      std::size_t j = i + 2;
      while (j < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[j]))) {
        ++j;
      }
      if (j < text_.size() && text_[j] == ')') {
        pos_ = i + 2;
        return std::string(text_.substr(start, i - start));
      }
    }
    Fail("unterminated text payload");
  }

  RstNode ParseNode() {
    Expect('(');
    RstNode node;
    const std::size_t kind_pos = pos_;
    const std::string_view kind = Atom();
    if (kind == "Root") {
      node.kind = NodeKind::kRoot;
    } else if (kind == "Nucleus") {
      node.kind = NodeKind::kNucleus;
    } else if (kind == "Satellite") {
      node.kind = NodeKind::kSatellite;
    } else {
      pos_ = kind_pos;
      SkipSpace();
      Fail("unknown node kind \"" + std::string(kind) + "\"");
    }
    bool has_span = false, has_text = false;
    while (true) {
      SkipSpace();
      if (pos_ >= text_.size()) Fail("unbalanced parenthesis");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (text_[pos_] != '(') Fail("expected '(' or ')'");
      // Peek at the head symbol of the group.
      const std::size_t group_start = pos_;
      ++pos_;
      const std::string_view head = Atom();
      if (head == "span") {
        node.first_edu = Int();
        node.last_edu = Int();
        has_span = true;
        Expect(')');
      } else if (head == "leaf") {
        node.first_edu = node.last_edu = Int();
        node.is_leaf = true;
        has_span = true;
        Expect(')');
      } else if (head == "rel2par") {
        node.rel2par = std::string(Atom());
        Expect(')');
      } else if (head == "text") {
        node.text = Text();
        has_text = true;
        Expect(')');
      } else if (head == "Root" || head == "Nucleus" || head == "Satellite") {
        pos_ = group_start;
        node.children.push_back(ParseNode());
      } else {
        pos_ = group_start + 1;
        SkipSpace();
        Fail("unknown field \"" + std::string(head) + "\"");
      }
    }
    if (!has_span) Fail("node without (span ...) or (leaf ...)");
    if (node.is_leaf && !has_text) Fail("leaf without (text ...)");
    if (node.is_leaf && !node.children.empty()) {
      throw Error(ErrorCode::kSpanInconsistency,
                  "leaf " + std::to_string(node.first_edu) + " has children");
    }
    if (!node.is_leaf) CheckSpans(node);
    return node;
  }

  static void CheckSpans(const RstNode &node) {
    const std::string where = "span (" + std::to_string(node.first_edu) +
                              " " + std::to_string(node.last_edu) + ")";
    if (node.children.size() < 2) {
      throw Error(ErrorCode::kSpanInconsistency,
                  where + " needs at least two children");
    }
    int expected = node.first_edu;
    for (const RstNode &child : node.children) {
      if (child.first_edu != expected || child.last_edu < child.first_edu) {
        throw Error(ErrorCode::kSpanInconsistency,
                    where + ": children are not contiguous at EDU " +
                        std::to_string(expected));
      }
      expected = child.last_edu + 1;
    }
    if (expected != node.last_edu + 1) {
      throw Error(ErrorCode::kSpanInconsistency,
                  where + ": children end at EDU " +
                      std::to_string(expected - 1));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void SerializeInto(const RstNode &node, int depth, std::string &out) {
  out.append(2 * depth, ' ');
  out += "( ";
  out += NodeKindName(node.kind);
  if (node.is_leaf) {
    out += " (leaf " + std::to_string(node.first_edu) + ")";
  } else {
    out += " (span " + std::to_string(node.first_edu) + " " +
           std::to_string(node.last_edu) + ")";
  }
  if (!node.rel2par.empty()) out += " (rel2par " + node.rel2par + ")";
  if (node.is_leaf) {
    out += " (text _!" + node.text + "!_) )\n";
    return;
  }
  out += "\n";
  for (const RstNode &child : node.children) {
    SerializeInto(child, depth + 1, out);
  }
  out.append(2 * depth, ' ');
  out += ")\n";
}

int CountNuclei(const std::vector<RstNode> &kids) {
  return static_cast<int>(
      std::count_if(kids.begin(), kids.end(), [](const RstNode &n) {
        return n.kind == NodeKind::kNucleus;
      }));
}

std::vector<RstNode> BinarizeChildren(std::vector<RstNode> kids);

RstNode Intermediate(std::vector<RstNode> kids) {
  if (kids.size() == 1) return std::move(kids.front());
  RstNode node;
  node.kind = NodeKind::kNucleus;
  node.first_edu = kids.front().first_edu;
  node.last_edu = kids.back().last_edu;
  node.rel2par = "span";
  if (CountNuclei(kids) >= 2) {
    for (const RstNode &kid : kids) {
      if (kid.kind == NodeKind::kNucleus) {
        node.rel2par = kid.rel2par;
        break;
      }
    }
  }
  node.children = BinarizeChildren(std::move(kids));
  return node;
}

// Splits an ordered child list into two. The first child is split off when
// it is a satellite or when a later nucleus exists (multinuclear chains
// branch to the right); otherwise trailing satellites attach one at a time.
std::vector<RstNode> BinarizeChildren(std::vector<RstNode> kids) {
  if (kids.size() <= 2) return kids;
  std::vector<RstNode> out;
  const bool first_is_satellite = kids.front().kind == NodeKind::kSatellite;
  const bool later_nucleus =
      std::any_of(kids.begin() + 1, kids.end(), [](const RstNode &n) {
        return n.kind == NodeKind::kNucleus;
      });
  if (first_is_satellite || later_nucleus) {
    std::vector<RstNode> rest(std::make_move_iterator(kids.begin() + 1),
                              std::make_move_iterator(kids.end()));
    out.push_back(std::move(kids.front()));
    out.push_back(Intermediate(std::move(rest)));
  } else {
    RstNode last = std::move(kids.back());
    kids.pop_back();
    out.push_back(Intermediate(std::move(kids)));
    out.push_back(std::move(last));
  }
  return out;
}

RstNode BinarizeNode(const RstNode &node) {
  RstNode out = node;
  if (node.is_leaf) return out;
  std::vector<RstNode> kids;
  kids.reserve(node.children.size());
  for (const RstNode &child : node.children) kids.push_back(BinarizeNode(child));
  out.children = BinarizeChildren(std::move(kids));
  return out;
}

void CollectLeaves(const RstNode &node, std::vector<const RstNode *> &out) {
  if (node.is_leaf) {
    out.push_back(&node);
    return;
  }
  for (const RstNode &child : node.children) CollectLeaves(child, out);
}

std::string SpanText(const RstNode &node) {
  std::vector<std::string> parts;
  for (const RstNode *leaf : Leaves(node)) {
    const std::string_view text = internal::Trim(leaf->text);
    if (!text.empty()) parts.emplace_back(text);
  }
  return internal::Join(parts, " ");
}

DimensionProfile RstProfile(const RstMappingKey &key) {
  try {
    return LookupRst(key);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::kUnknownLabel) throw;
    // Relations the table does not list.
    return UnderspecifiedProfile();
  }
}

void ExtractFrom(const RstNode &node, const std::string &doc_id,
                 std::vector<RelationInstance> &out) {
  if (node.is_leaf) return;
  if (node.children.size() != 2) {
    throw Error(ErrorCode::kShapeMismatch,
                "tree is not binary at span (" +
                    std::to_string(node.first_edu) + " " +
                    std::to_string(node.last_edu) + ")");
  }
  const RstNode &left = node.children[0];
  const RstNode &right = node.children[1];
  const bool left_nucleus = left.kind == NodeKind::kNucleus;
  const bool right_nucleus = right.kind == NodeKind::kNucleus;
  RelationInstance inst;
  inst.framework = Framework::kRst;
  inst.doc_id = doc_id;
  inst.relation_type = RelationType::kNa;
  std::string relation;
  if (left_nucleus && right_nucleus) {
    inst.arity = Arity::kMulti;
    inst.nuclearity_order = NuclearityOrder::kAny;
    relation = EqualsIgnoreCase(left.rel2par, "span") ? right.rel2par
                                                      : left.rel2par;
  } else if (left_nucleus) {
    inst.arity = Arity::kMono;
    inst.nuclearity_order = NuclearityOrder::kNS;
    relation = right.rel2par;
  } else if (right_nucleus) {
    inst.arity = Arity::kMono;
    inst.nuclearity_order = NuclearityOrder::kSN;
    relation = left.rel2par;
  } else {
    throw Error(ErrorCode::kSpanInconsistency,
                "span (" + std::to_string(node.first_edu) + " " +
                    std::to_string(node.last_edu) + ") has no nucleus");
  }
  if (!IsExcludedRstRelation(relation)) {
    inst.end_label = CanonicalRstRelation(relation);
    inst.class_label = GroupRstClass(inst.end_label);
    inst.arg1_text = SpanText(left);
    inst.arg2_text = SpanText(right);
    inst.profile = RstProfile({inst.class_label, inst.end_label, inst.arity,
                               inst.nuclearity_order});
    out.push_back(std::move(inst));
  }
  ExtractFrom(left, doc_id, out);
  ExtractFrom(right, doc_id, out);
}

}  // namespace

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kRoot:
      return "Root";
    case NodeKind::kNucleus:
      return "Nucleus";
    case NodeKind::kSatellite:
      return "Satellite";
  }
  return "?";
}

RstNode ParseDis(std::string_view text) {
  return DisParser(text).ParseDocument();
}

std::string SerializeDis(const RstNode &tree) {
  std::string out;
  SerializeInto(tree, 0, out);
  return out;
}

BinaryRstTree Binarize(const RstNode &tree) { return {BinarizeNode(tree)}; }

int CountLeaves(const RstNode &tree) {
  if (tree.is_leaf) return 1;
  int n = 0;
  for (const RstNode &child : tree.children) n += CountLeaves(child);
  return n;
}

int CountInternalNodes(const RstNode &tree) {
  if (tree.is_leaf) return 0;
  int n = 1;
  for (const RstNode &child : tree.children) n += CountInternalNodes(child);
  return n;
}

std::vector<const RstNode *> Leaves(const RstNode &tree) {
  std::vector<const RstNode *> out;
  CollectLeaves(tree, out);
  return out;
}

std::vector<RelationInstance> ExtractRstInstances(const BinaryRstTree &tree,
                                                  const std::string &doc_id) {
  std::vector<RelationInstance> out;
  ExtractFrom(tree.root, doc_id, out);
  AssignInstanceIds(out);
  return out;
}

std::vector<RelationInstance> ReadRstDirectory(
    const std::filesystem::path &dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto &entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (EqualsIgnoreCase(entry.path().extension().string(), ".dis")) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<RelationInstance> out;
  for (const fs::path &file : files) {
    bool is_test = false;
    for (const fs::path &part : fs::relative(file, dir).parent_path()) {
      if (EqualsIgnoreCase(part.string(), "test")) is_test = true;
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, "cannot read " + file.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string doc_id =
        std::string(is_test ? "test/" : "train/") + file.stem().string();
    try {
      const RstNode tree = ParseDis(buffer.str());
      for (RelationInstance &inst :
           ExtractRstInstances(Binarize(tree), doc_id)) {
        out.push_back(std::move(inst));
      }
    } catch (const Error &e) {
      throw Error(e.code(), file.string() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace unidim
