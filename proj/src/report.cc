// Copyright 2026 The Minipol Authors
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

#include "minipol/report.h"

#include <sstream>

#include "json.hpp"

namespace minipol {

namespace {

using nlohmann::ordered_json;

const char* KindName(AngelicPair::Kind kind) {
  return kind == AngelicPair::Kind::kCondition ? "condition" : "precondition";
}

}  // namespace

std::string ReportToJson(const RepairResult& result, const std::string& file) {
  ordered_json j;
  j["status"] = result.patched() ? "PATCHED" : "NO_PATCH";
  if (result.patched()) {
    const Patch& p = *result.patch;
    j["reason"] = nullptr;
    j["patch_kind"] = KindName(p.kind);
    j["location"] = {{"file", file},
                     {"line", p.loc.line},
                     {"col", p.loc.col},
                     {"node_id", p.loc.node_id}};
    j["expression"] = p.expression;
    j["level"] = p.level;
  } else {
    j["reason"] = NoPatchReasonName(result.reason);
    j["patch_kind"] = nullptr;
    j["location"] = nullptr;
    j["expression"] = nullptr;
    j["level"] = nullptr;
  }
  j["tests"] = {{"passing", result.tests_passing},
                {"failing", result.tests_failing}};
  j["pairs_examined"] = result.pairs_examined;
  j["candidates_by_phase"] = ordered_json::object();
  for (const char* phase : {"condition", "precondition"}) {
    auto it = result.candidates_by_phase.find(phase);
    if (it != result.candidates_by_phase.end()) {
      j["candidates_by_phase"][phase] = it->second;
    }
  }
  j["timings"] = {{"test_executions", result.test_executions},
                  {"solver_nodes", result.solver_nodes}};
  j["diagnostics"] = result.diagnostics;
  j["diff"] = result.patched() ? ordered_json(result.patch->diff)
                               : ordered_json(nullptr);
  if (!result.smt_files.empty()) j["smt_files"] = result.smt_files;
  return j.dump(2) + "\n";
}

std::string FormatHumanReport(const RepairResult& result,
                              const std::string& file) {
  std::ostringstream out;
  if (!result.patched()) {
    out << "No patch found (" << NoPatchReasonName(result.reason) << ").\n";
    for (const auto& d : result.diagnostics) out << "  " << d << "\n";
    return out.str();
  }
  const Patch& p = *result.patch;
  auto indented = [](const std::string& text) {
    std::string out = "  ";
    for (char c : text) {
      out += c;
      if (c == '\n') out += "  ";
    }
    return out;
  };
  out << "Fix found!\n";
  if (p.kind == AngelicPair::Kind::kCondition) {
    out << "At line " << p.loc.line << " of file " << file << ", replace\n"
        << indented(p.before) << "\nby\n" << indented(p.after) << "\n";
  } else {
    out << "At line " << p.loc.line << " of file " << file << ", guard\n"
        << indented(p.before) << "\nas\n" << indented(p.after) << "\n";
  }
  return out.str();
}

std::string TracesToJson(const std::vector<SynthesisInput>& traces) {
  ordered_json all = ordered_json::array();
  for (const auto& t : traces) {
    ordered_json j;
    j["kind"] = KindName(t.target_kind);
    j["node_id"] = t.node_id;
    j["statement_id"] = t.statement_id;
    ordered_json schema = ordered_json::array();
    for (const auto& o : t.schema) {
      schema.push_back({{"name", o.name}, {"type", TypeName(o.type)}});
    }
    j["schema"] = schema;
    ordered_json constants = ordered_json::array();
    for (const auto& c : t.constants) {
      constants.push_back(
          {{"value", ToLiteral(c.value)},
           {"origin", c.origin == SynthConstant::Origin::kDefault ? "default"
                                                                  : "mined"}});
    }
    j["constants"] = constants;
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
      ordered_json values = ordered_json::array();
      for (const auto& v : r.inputs) values.push_back(ToLiteral(v));
      rows.push_back({{"test", r.test_name},
                      {"m", r.m},
                      {"inputs", values},
                      {"expected", r.expected}});
    }
    j["rows"] = rows;
    j["warnings"] = t.warnings;
    all.push_back(j);
  }
  return all.dump(2) + "\n";
}

}  // namespace minipol
