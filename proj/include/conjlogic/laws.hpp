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

// Table-driven suite of the classical equivalence (E1-E13) and implication
// (I1-I8) laws, checked exhaustively under the three-valued connectives.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "conjlogic/formula.hpp"
#include "conjlogic/truth.hpp"

namespace conjlogic {

enum class LawKind { Equivalence, Implication };

/// One side-by-side statement of a law. Laws such as De Morgan have two.
struct LawPart {
  Formula lhs;
  Formula rhs;
};

struct Law {
  std::string id;
  std::string name;
  LawKind kind;
  int atoms;
  std::vector<LawPart> parts;
  bool expected_holds;          // classical marking: false for the struck-out laws
  std::vector<Formula> columns;  // truth-table layout after the atom columns
};

struct Counterexample {
  std::size_t part = 0;  // 0-based index into Law::parts
  Assignment atom_values;
  TruthValue lhs = TruthValue::Indeterminate;
  TruthValue rhs = TruthValue::Indeterminate;
};

struct LawVerdict {
  std::string law_id;
  std::string name;
  LawKind kind = LawKind::Equivalence;
  int atoms = 0;
  bool holds = true;
  bool expected_holds = true;
  std::vector<Counterexample> counterexamples;  // every failing row, lexicographic, by part

  bool matches_expected() const { return holds == expected_holds; }
};

struct LawReport {
  std::vector<LawVerdict> verdicts;

  bool all_match_expected() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const LawVerdict &v) { return v.matches_expected(); });
  }
  const LawVerdict *find(const std::string &id) const {
    for (const auto &v : verdicts) {
      if (v.law_id == id) {
        return &v;
      }
    }
    return nullptr;
  }
};

inline const std::vector<Law> &law_table() {
  static const std::vector<Law> table = [] {
    const Formula p = Formula::atom(0);
    const Formula q = Formula::atom(1);
    const Formula r = Formula::atom(2);
    const Formula top = Formula::tautology();
    const Formula bottom = Formula::contradiction();
    const auto E = LawKind::Equivalence;
    const auto I = LawKind::Implication;

    std::vector<Law> t;
    t.push_back({"E1", "Double negation", E, 1, {{lnot(lnot(p)), p}}, true, {lnot(p), lnot(lnot(p))}});
    t.push_back({"E2",
                 "De Morgan's laws",
                 E,
                 2,
                 {{lnot(land(p, q)), lor(lnot(p), lnot(q))}, {lnot(lor(p, q)), land(lnot(p), lnot(q))}},
                 true,
                 {land(p, q), lor(lnot(p), lnot(q)), lor(p, q), land(lnot(p), lnot(q))}});
    t.push_back({"E3",
                 "Commutative laws",
                 E,
                 2,
                 {{land(p, q), land(q, p)}, {lor(p, q), lor(q, p)}},
                 true,
                 {land(p, q), land(q, p), lor(p, q), lor(q, p)}});
    t.push_back({"E4",
                 "Associative laws",
                 E,
                 3,
                 {{land(p, land(q, r)), land(land(p, q), r)}, {lor(p, lor(q, r)), lor(lor(p, q), r)}},
                 true,
                 {land(p, land(q, r)), land(land(p, q), r), lor(p, lor(q, r)), lor(lor(p, q), r)}});
    t.push_back({"E5",
                 "Distributive laws",
                 E,
                 3,
                 {{land(p, lor(q, r)), lor(land(p, q), land(p, r))},
                  {lor(p, land(q, r)), land(lor(p, q), lor(p, r))}},
                 true,
                 {land(p, lor(q, r)), lor(land(p, q), land(p, r)), lor(p, land(q, r)),
                  land(lor(p, q), lor(p, r))}});
    t.push_back({"E6", "Idempotence", E, 1, {{land(p, p), p}, {lor(p, p), p}}, true, {land(p, p), lor(p, p)}});
    t.push_back(
        {"E7", "Identity laws", E, 1, {{land(p, top), p}, {lor(p, bottom), p}}, true, {land(p, top), lor(p, bottom)}});
    t.push_back({"E8",
                 "Domination laws",
                 E,
                 1,
                 {{land(p, bottom), bottom}, {lor(p, top), top}},
                 true,
                 {land(p, bottom), bottom, lor(p, top), top}});
    t.push_back({"E9",
                 "Inverse laws",
                 E,
                 1,
                 {{land(p, lnot(p)), bottom}, {lor(p, lnot(p)), top}},
                 false,
                 {lnot(p), lor(p, lnot(p)), top, land(p, lnot(p)), bottom}});
    t.push_back({"E10",
                 "Absorption laws",
                 E,
                 2,
                 {{land(p, lor(p, q)), p}, {lor(p, land(p, q)), p}},
                 true,
                 {land(p, q), lor(p, land(p, q)), lor(p, q), land(p, lor(p, q))}});
    t.push_back({"E11",
                 "Implication law",
                 E,
                 2,
                 {{implies(p, q), lor(lnot(p), q)}},
                 false,
                 {implies(p, q), lor(lnot(p), q), implies(implies(p, q), lor(lnot(p), q)),
                  implies(lor(lnot(p), q), implies(p, q))}});
    // Contrapositive in the q-first form; the p-first form is not a law even classically.
    t.push_back({"E12",
                 "Contrapositive law",
                 E,
                 2,
                 {{implies(p, q), implies(lnot(q), lnot(p))}},
                 true,
                 {implies(p, q), lnot(p), lnot(q), implies(lnot(q), lnot(p))}});
    t.push_back({"E13",
                 "Equivalence law",
                 E,
                 2,
                 {{iff(p, q), land(implies(p, q), implies(q, p))}},
                 true,
                 {iff(p, q), implies(p, q), implies(q, p)}});

    t.push_back({"I1",
                 "Modus ponens",
                 I,
                 2,
                 {{land(implies(p, q), p), q}},
                 true,
                 {implies(p, q), land(implies(p, q), p), implies(land(implies(p, q), p), q)}});
    t.push_back({"I2",
                 "Law of syllogism",
                 I,
                 3,
                 {{land(implies(p, q), implies(q, r)), implies(p, r)}},
                 true,
                 {implies(p, q), implies(q, r), land(implies(p, q), implies(q, r)), implies(p, r)}});
    t.push_back({"I3",
                 "Modus tollens",
                 I,
                 2,
                 {{land(implies(p, q), lnot(q)), lnot(p)}},
                 true,
                 {implies(p, q), land(implies(p, q), lnot(q)), implies(land(implies(p, q), lnot(q)), lnot(p))}});
    t.push_back({"I4",
                 "Conjunctive simplification",
                 I,
                 2,
                 {{land(p, q), p}},
                 true,
                 {land(p, q), implies(land(p, q), p)}});
    t.push_back({"I5",
                 "Disjunctive amplification",
                 I,
                 2,
                 {{p, lor(p, q)}},
                 true,
                 {lor(p, q), implies(p, lor(p, q))}});
    t.push_back({"I6",
                 "Disjunctive syllogism",
                 I,
                 2,
                 {{land(lor(p, q), lnot(q)), p}},
                 false,
                 {lor(p, q), land(lor(p, q), lnot(q)), implies(land(lor(p, q), lnot(q)), p)}});
    t.push_back({"I7",
                 "Proof by contradiction",
                 I,
                 1,
                 {{implies(lnot(p), bottom), p}},
                 true,
                 {implies(lnot(p), bottom), implies(implies(lnot(p), bottom), p)}});
    t.push_back({"I8",
                 "Proof by cases",
                 I,
                 3,
                 {{land(implies(p, r), implies(q, r)), implies(lor(p, q), r)}},
                 true,
                 {implies(p, r), implies(q, r), land(implies(p, r), implies(q, r)), implies(lor(p, q), r)}});
    return t;
  }();
  return table;
}

inline const Law &find_law(const std::string &id) {
  for (const auto &law : law_table()) {
    if (law.id == id) {
      return law;
    }
  }
  throw Error("unknown law '" + id + "'");
}

inline LawVerdict check_law(const Law &law) {
  LawVerdict v;
  v.law_id = law.id;
  v.name = law.name;
  v.kind = law.kind;
  v.atoms = law.atoms;
  v.expected_holds = law.expected_holds;
  for (std::size_t part = 0; part < law.parts.size(); ++part) {
    const auto &[lhs, rhs] = law.parts[part];
    for_each_assignment(law.atoms, [&](const Assignment &a) {
      const TruthValue l = evaluate(lhs, a);
      const TruthValue r = evaluate(rhs, a);
      const bool ok = law.kind == LawKind::Equivalence ? l == r : material_implies(l, r) == TruthValue::True;
      if (!ok) {
        v.counterexamples.push_back({part, a, l, r});
      }
      return true;
    });
  }
  v.holds = v.counterexamples.empty();
  return v;
}

inline LawReport law_suite() {
  LawReport report;
  for (const auto &law : law_table()) {
    report.verdicts.push_back(check_law(law));
  }
  return report;
}

/// Full truth table of a law in lexicographic row order (p slowest, 0 < ? < 1).
struct TruthTable {
  std::vector<std::string> headers;  // atom names then the law's display columns
  std::vector<std::vector<TruthValue>> rows;
};

inline TruthTable truth_table(const Law &law) {
  static const std::vector<std::string> kNames = {"p", "q", "r"};
  TruthTable table;
  for (int i = 0; i < law.atoms; ++i) {
    table.headers.push_back(kNames.at(static_cast<std::size_t>(i)));
  }
  for (const auto &c : law.columns) {
    table.headers.push_back(to_string(c));
  }
  for_each_assignment(law.atoms, [&](const Assignment &a) {
    std::vector<TruthValue> row(a.begin(), a.end());
    for (const auto &c : law.columns) {
      row.push_back(evaluate(c, a));
    }
    table.rows.push_back(std::move(row));
    return true;
  });
  return table;
}

inline std::string render_truth_table(const TruthTable &table) {
  std::vector<std::size_t> widths;
  for (const auto &h : table.headers) {
    widths.push_back(std::max<std::size_t>(h.size(), 1));
  }
  std::ostringstream out;
  auto cell = [&](std::size_t col, const std::string &text) {
    out << text << std::string(widths[col] - text.size(), ' ');
    if (col + 1 < widths.size()) {
      out << "  ";
    }
  };
  for (std::size_t c = 0; c < table.headers.size(); ++c) {
    cell(c, table.headers[c]);
  }
  out << '\n';
  for (std::size_t c = 0; c < table.headers.size(); ++c) {
    cell(c, std::string(widths[c], '-'));
  }
  out << '\n';
  for (const auto &row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      cell(c, std::string(1, to_char(row[c])));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace conjlogic
