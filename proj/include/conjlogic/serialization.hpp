// Copyright 2026 The conjlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON forms. Keys keep insertion order so that dumping a parsed document
// reproduces it byte for byte.

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conjlogic/analysis.hpp"
#include "conjlogic/clifford.hpp"
#include "conjlogic/knowledge.hpp"
#include "conjlogic/laws.hpp"
#include "conjlogic/pauli.hpp"
#include "conjlogic/reduction.hpp"
#include "conjlogic/truth.hpp"

namespace conjlogic {

using Json = nlohmann::ordered_json;

inline std::string truth_text(TruthValue t) { return std::string(1, to_char(t)); }

inline void to_json(Json &j, const Proposition &p) {
  j = Json{{"n", p.size()}, {"letters", p.letters()}, {"sign", p.sign() ? 1 : 0}};
}

inline void from_json(const Json &j, Proposition &p) {
  const auto n = j.at("n").get<std::size_t>();
  const auto letters = j.at("letters").get<std::string>();
  const int sign = j.at("sign").get<int>();
  if (letters.size() != n) {
    throw DimensionMismatch(n, letters.size());
  }
  if (sign != 0 && sign != 1) {
    throw Error("sign must be 0 or 1");
  }
  p = parse_prop("<" + std::string(sign ? "-" : "") + letters + ">", n);
}

inline void to_json(Json &j, const Gate &g) {
  Json targets = Json::array({g.a + 1});
  if (g.kind == GateKind::CZ) {
    targets.push_back(g.b + 1);
  }
  j = Json{{"kind", gate_name(g.kind)}, {"targets", targets}};
}

inline void from_json(const Json &j, Gate &g) {
  const auto name = j.at("kind").get<std::string>();
  const auto kind = gate_kind_from_name(name);
  if (!kind) {
    throw Error("unknown gate '" + name + "'");
  }
  const auto targets = j.at("targets").get<std::vector<std::size_t>>();
  const std::size_t want = *kind == GateKind::CZ ? 2 : 1;
  if (targets.size() != want) {
    throw Error(name + " takes " + std::to_string(want) + " target(s)");
  }
  for (std::size_t t : targets) {
    if (t == 0) {
      throw Error("system indices start at 1");
    }
  }
  g = want == 2 ? Gate::cz(targets[0] - 1, targets[1] - 1) : Gate::single(*kind, targets[0] - 1);
  if (want == 2 && g.a == g.b) {
    throw InvalidGate("CZ needs two distinct systems");
  }
}

inline Json state_json(const KnowledgeState &s) {
  return Json{{"n", s.size()},
              {"variant", to_string(s.variant())},
              {"cz", to_string(s.cz())},
              {"generators", s.generators()}};
}

inline KnowledgeState state_from_json(const Json &j) {
  return KnowledgeState::from_generators(j.at("n").get<std::size_t>(),
                                         j.at("generators").get<std::vector<Proposition>>(),
                                         theory_from_string(j.at("variant").get<std::string>()),
                                         cz_from_string(j.at("cz").get<std::string>()));
}

inline Json reduction_json(const ReductionResult &r) {
  Json pivots = Json::array();
  for (std::size_t p : r.pivots) {
    pivots.push_back(p + 1);
  }
  return Json{{"relation", to_string(r.relation)},
              {"transcript", r.transcript},
              {"transcript_text", format_transcript(r.transcript)},
              {"reduced", r.reduced},
              {"pivots", pivots}};
}

inline Json law_report_json(const LawReport &report) {
  static const char *kNames[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  Json out = Json::array();
  for (const auto &v : report.verdicts) {
    Json ces = Json::array();
    for (const auto &c : v.counterexamples) {
      Json atoms = Json::object();
      for (std::size_t i = 0; i < c.atom_values.size(); ++i) {
        atoms[kNames[i]] = truth_text(c.atom_values[i]);
      }
      ces.push_back(Json{{"atom_values", atoms}, {"lhs", truth_text(c.lhs)}, {"rhs", truth_text(c.rhs)}});
    }
    out.push_back(Json{{"law_id", v.law_id}, {"name", v.name}, {"holds", v.holds}, {"counterexamples", ces}});
  }
  return out;
}

inline Json truth_table_json(const TruthTable &t) {
  Json rows = Json::array();
  for (const auto &row : t.rows) {
    std::string cells;
    for (TruthValue v : row) {
      cells += to_char(v);
    }
    rows.push_back(cells);
  }
  return Json{{"headers", t.headers}, {"rows", rows}};
}

inline Json pm_json(const PmReport &r) {
  Json square = Json::array();
  for (std::size_t row = 0; row < 3; ++row) {
    Json cells = Json::array();
    for (std::size_t col = 0; col < 3; ++col) {
      cells.push_back(format_prop(r.square[row * 3 + col]));
    }
    square.push_back(cells);
  }
  Json constraints = Json::array();
  for (const auto &c : r.constraints) {
    Json cells = Json::array();
    for (std::size_t i : c.cells) {
      cells.push_back(r.square[i].letters());
    }
    constraints.push_back(Json{{"line", c.is_row ? "row" : "column"},
                               {"cells", cells},
                               {"parity", c.parity ? 1 : 0},
                               {"prediction", format_prop(c.prediction)}});
  }
  Json assignment = nullptr;
  if (r.assignment) {
    assignment = Json::object();
    for (std::size_t i = 0; i < 9; ++i) {
      assignment[r.square[i].letters()] = (*r.assignment)[i] ? 1 : 0;
    }
  }
  return Json{{"variant", to_string(r.variant)},
              {"square", square},
              {"constraints", constraints},
              {"parity_xor", r.parity_xor() ? 1 : 0},
              {"satisfiable", r.satisfiable},
              {"assignments_searched", r.assignments_searched},
              {"assignment", assignment}};
}

inline Json consistency_json(const ConsistencyReport &r) {
  std::vector<std::string> premise;
  for (const auto &p : r.premise) {
    premise.push_back(format_prop(p));
  }
  std::vector<std::string> reduced;
  for (const auto &p : r.reduced_premise) {
    reduced.push_back(format_prop(p));
  }
  std::vector<std::string> derived;
  for (const auto &p : r.derived) {
    derived.push_back(format_prop(p));
  }
  return Json{{"cz", to_string(r.cz)},
              {"premise", premise},
              {"reduced_premise", reduced},
              {"reduction", format_transcript(r.reduction)},
              {"route_b_transcript", format_transcript(r.route_b)},
              {"derived", derived},
              {"contradiction_found", r.contradiction_found},
              {"poisoned", r.state_poisoned}};
}

}  // namespace conjlogic
