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

// 1-based field numbers of the pipe-delimited annotation format.
constexpr int kFieldType = 1;
constexpr int kFieldSenses[] = {9, 10, 12, 13};
constexpr int kFieldArg1Spans = 15;
constexpr int kFieldArg2Spans = 21;

struct Span {
  std::size_t begin;
  std::size_t end;
};

std::size_t ParseOffset(std::string_view s, bool &ok) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  ok = ok && ec == std::errc() && end == s.data() + s.size();
  return value;
}

// "a..b;c..d"
std::vector<Span> ParseSpanList(std::string_view field, bool &ok) {
  std::vector<Span> spans;
  for (const std::string &part : internal::Split(internal::Trim(field), ';')) {
    const std::size_t dots = part.find("..");
    if (dots == std::string::npos) {
      ok = false;
      return {};
    }
    Span span;
    span.begin = ParseOffset(std::string_view(part).substr(0, dots), ok);
    span.end = ParseOffset(std::string_view(part).substr(dots + 2), ok);
    if (span.end < span.begin) ok = false;
    spans.push_back(span);
  }
  return spans;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::pair<std::string, std::string> ParsePdtbSense(std::string_view sense) {
  const std::vector<std::string> parts =
      internal::Split(internal::Trim(sense), '.');
  if (parts.size() < 2 || parts[1].empty()) {
    throw Error(ErrorCode::kUnknownSense,
                "sense \"" + std::string(sense) + "\" has no level-2 class");
  }
  std::string level2 = parts[1];
  std::string level3 = parts.size() > 2 ? parts[2] : std::string();
  // Resolve the class spelling against the table.
  for (const PdtbTableRow &row : LoadEmbeddedTables().pdtb_rows) {
    if (internal::EqualsIgnoreCase(row.key.level2_class, level2)) {
      return {row.key.level2_class, level3};
    }
  }
  throw Error(ErrorCode::kUnknownSense,
              "sense \"" + std::string(sense) + "\" is not in the mapping table");
}

std::vector<RelationInstance> ParsePdtbAnnotations(
    std::string_view gold, std::string_view raw, const std::string &doc_id,
    const std::string &file_label) {
  std::vector<RelationInstance> out;
  int number = 0;
  for (const std::string &line : internal::Split(gold, '\n')) {
    ++number;
    const std::string_view trimmed = internal::Trim(line);
    if (trimmed.empty()) continue;
    const auto fail = [&](const std::string &what) -> Error {
      return Error(ErrorCode::kFormat, file_label + ":" +
                                           std::to_string(number) + ": " +
                                           what);
    };
    const std::vector<std::string> fields = internal::Split(line, '|');
    if (static_cast<int>(fields.size()) < kFieldArg2Spans) {
      throw fail("expected at least " + std::to_string(kFieldArg2Spans) +
                 " fields, found " + std::to_string(fields.size()));
    }
    const std::string type(internal::Trim(fields[kFieldType - 1]));
    RelationType relation_type;
    if (type == "Explicit") {
      relation_type = RelationType::kExplicit;
    } else if (type == "Implicit") {
      relation_type = RelationType::kImplicit;
    } else {
      continue;
    }
    bool ok = true;
    const std::vector<Span> arg1 =
        ParseSpanList(fields[kFieldArg1Spans - 1], ok);
    const std::vector<Span> arg2 =
        ParseSpanList(fields[kFieldArg2Spans - 1], ok);
    if (!ok || arg1.empty() || arg2.empty()) throw fail("bad argument spans");
    const auto text_of = [&](const std::vector<Span> &spans) {
      std::vector<std::string> parts;
      for (const Span &span : spans) {
        if (span.end > raw.size()) throw fail("span beyond the raw text");
        parts.emplace_back(
            internal::Trim(raw.substr(span.begin, span.end - span.begin)));
      }
      return internal::Join(parts, " ");
    };
    const std::string arg1_text = text_of(arg1);
    const std::string arg2_text = text_of(arg2);
    const bool a1_first = arg1.front().begin <= arg2.front().begin;

    for (int field : kFieldSenses) {
      const std::string_view sense = internal::Trim(fields[field - 1]);
      if (sense.empty()) continue;
      std::pair<std::string, std::string> parsed;
      try {
        parsed = ParsePdtbSense(sense);
      } catch (const Error &e) {
        throw Error(e.code(), file_label + ":" + std::to_string(number) +
                                  ": " + e.what());
      }
      RelationInstance inst;
      inst.framework = Framework::kPdtb;
      inst.doc_id = doc_id;
      inst.relation_type = relation_type;
      inst.class_label = parsed.first;
      inst.end_label = parsed.second;
      inst.arg_order = a1_first ? ArgOrder::kA1A2 : ArgOrder::kA2A1;
      inst.arg1_text = a1_first ? arg1_text : arg2_text;
      inst.arg2_text = a1_first ? arg2_text : arg1_text;
      inst.profile =
          LookupPdtb({inst.class_label, inst.end_label, inst.arg_order});
      out.push_back(std::move(inst));
    }
  }
  AssignInstanceIds(out);
  return out;
}

std::vector<RelationInstance> ReadPdtbRecords(
    const std::filesystem::path &source) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(source)) return ReadInterchangeFile(source);
  const fs::path gold_dir = source / "gold";
  const fs::path raw_dir = source / "raw";
  if (!fs::is_directory(gold_dir) || !fs::is_directory(raw_dir)) {
    if (fs::is_directory(source) && fs::is_empty(source)) return {};
    throw Error(ErrorCode::kIo, source.string() +
                                    ": expected an interchange file or a "
                                    "directory with gold/ and raw/");
  }
  std::vector<fs::path> files;
  for (const auto &entry : fs::recursive_directory_iterator(gold_dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<RelationInstance> out;
  for (const fs::path &gold_path : files) {
    const fs::path rel = fs::relative(gold_path, gold_dir);
    const fs::path raw_path = raw_dir / rel;
    const std::string doc_id = gold_path.filename().string();
    const std::string gold = ReadFile(gold_path);
    const std::string raw = ReadFile(raw_path);
    for (RelationInstance &inst :
         ParsePdtbAnnotations(gold, raw, doc_id, gold_path.string())) {
      out.push_back(std::move(inst));
    }
  }
  AssignInstanceIds(out);
  return out;
}

}  // namespace unidim
