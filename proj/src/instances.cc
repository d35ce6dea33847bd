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

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "strings.h"
#include "unidim/corpus.h"
#include "unidim/error.h"

namespace unidim {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json &Field(const json &rec, const char *name, int line) {
  const auto it = rec.find(name);
  if (it == rec.end()) {
    throw Error(ErrorCode::kFormat, "line " + std::to_string(line) +
                                        ": missing field \"" + name + "\"");
  }
  return *it;
}

std::string StringField(const json &rec, const char *name, int line) {
  const json &value = Field(rec, name, line);
  if (!value.is_string()) {
    throw Error(ErrorCode::kFormat, "line " + std::to_string(line) +
                                        ": field \"" + name +
                                        "\" is not a string");
  }
  return value.get<std::string>();
}

}  // namespace

std::string_view FrameworkName(Framework framework) {
  return framework == Framework::kRst ? "RST" : "PDTB";
}

std::string_view RelationTypeName(RelationType type) {
  switch (type) {
    case RelationType::kNa:
      return "NA";
    case RelationType::kExplicit:
      return "EXPLICIT";
    case RelationType::kImplicit:
      return "IMPLICIT";
  }
  return "?";
}

Framework ParseFramework(std::string_view name) {
  const std::string lower = internal::ToLower(name);
  if (lower == "rst") return Framework::kRst;
  if (lower == "pdtb") return Framework::kPdtb;
  throw Error(ErrorCode::kUsage, "unknown framework \"" + std::string(name) +
                                     "\" (expected rst or pdtb)");
}

RelationType ParseRelationType(std::string_view name) {
  const std::string lower = internal::ToLower(name);
  if (lower == "na") return RelationType::kNa;
  if (lower == "explicit") return RelationType::kExplicit;
  if (lower == "implicit") return RelationType::kImplicit;
  throw Error(ErrorCode::kFormat,
              "unknown relation type \"" + std::string(name) + "\"");
}

std::vector<std::string> InstanceIds(
    const std::vector<RelationInstance> &instances) {
  std::map<std::string, int> seen;
  std::vector<std::string> ids;
  ids.reserve(instances.size());
  for (const RelationInstance &inst : instances) {
    const int k = seen[inst.doc_id]++;
    ids.push_back(inst.doc_id + "#" + std::to_string(k));
  }
  return ids;
}

void AssignInstanceIds(std::vector<RelationInstance> &instances) {
  const std::vector<std::string> ids = InstanceIds(instances);
  for (std::size_t i = 0; i < instances.size(); ++i) instances[i].id = ids[i];
}

std::string ToInterchangeLine(const RelationInstance &inst) {
  ordered_json rec;
  rec["framework"] = FrameworkName(inst.framework);
  rec["doc_id"] = inst.doc_id;
  rec["relation_type"] = RelationTypeName(inst.relation_type);
  rec["class_label"] = inst.class_label;
  rec["end_label"] = inst.end_label;
  if (inst.framework == Framework::kRst) {
    rec["arity"] = ArityName(inst.arity);
    rec["order"] = NuclearityOrderName(inst.nuclearity_order);
  } else {
    rec["arity"] = "NA";
    rec["order"] = ArgOrderName(inst.arg_order);
  }
  rec["arg1_text"] = inst.arg1_text;
  rec["arg2_text"] = inst.arg2_text;
  ordered_json dims = ordered_json::object();
  for (DimensionId dim : kAllDimensions) {
    dims[std::string(DimensionName(dim))] = inst.profile.Get(dim).name();
  }
  rec["dims"] = std::move(dims);
  return rec.dump(-1, ' ', false, json::error_handler_t::replace);
}

void WriteInterchange(const std::vector<RelationInstance> &instances,
                      std::ostream &os) {
  for (const RelationInstance &inst : instances) {
    os << ToInterchangeLine(inst) << '\n';
  }
}

std::vector<RelationInstance> ReadInterchange(std::istream &is) {
  std::vector<RelationInstance> out;
  std::string line;
  int number = 0;
  while (std::getline(is, line)) {
    ++number;
    if (internal::Trim(line).empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::parse_error &e) {
      throw Error(ErrorCode::kFormat,
                  "line " + std::to_string(number) + ": " + e.what());
    }
    if (!rec.is_object()) {
      throw Error(ErrorCode::kFormat,
                  "line " + std::to_string(number) + ": not an object");
    }
    RelationInstance inst;
    try {
      inst.framework = ParseFramework(StringField(rec, "framework", number));
      inst.doc_id = StringField(rec, "doc_id", number);
      inst.relation_type =
          ParseRelationType(StringField(rec, "relation_type", number));
      inst.class_label = StringField(rec, "class_label", number);
      inst.end_label = StringField(rec, "end_label", number);
      const std::string arity = StringField(rec, "arity", number);
      const std::string order = StringField(rec, "order", number);
      if (inst.framework == Framework::kRst) {
        inst.arity = ParseArity(arity);
        inst.nuclearity_order = ParseNuclearityOrder(order);
      } else {
        inst.arg_order = ParseArgOrder(order);
      }
      inst.arg1_text = StringField(rec, "arg1_text", number);
      inst.arg2_text = StringField(rec, "arg2_text", number);
      const json &dims = Field(rec, "dims", number);
      for (DimensionId dim : kAllDimensions) {
        const auto it = dims.find(std::string(DimensionName(dim)));
        if (it == dims.end() || !it->is_string()) {
          throw Error(ErrorCode::kFormat,
                      "line " + std::to_string(number) + ": dims." +
                          std::string(DimensionName(dim)) + " missing");
        }
        inst.profile.Set(
            DimensionValue::FromName(dim, it->get<std::string>()));
      }
    } catch (const Error &e) {
      if (e.code() == ErrorCode::kFormat) throw;
      throw Error(ErrorCode::kFormat,
                  "line " + std::to_string(number) + ": " + e.what());
    }
    out.push_back(std::move(inst));
  }
  AssignInstanceIds(out);
  return out;
}

std::vector<RelationInstance> ReadInterchangeFile(
    const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  try {
    return ReadInterchange(in);
  } catch (const Error &e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace unidim
