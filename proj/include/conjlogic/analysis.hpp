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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conjlogic/clifford.hpp"
#include "conjlogic/knowledge.hpp"
#include "conjlogic/laws.hpp"
#include "conjlogic/pauli.hpp"

namespace conjlogic {

// ---------------------------------------------------------------------------
// Peres-Mermin square
// ---------------------------------------------------------------------------

/// value(a) ^ value(b) ^ value(c) == parity, over cells of the 3x3 grid.
struct PmConstraint {
  std::array<std::size_t, 3> cells{};  // row-major cell indices, third is the predicted one
  bool parity = false;
  Proposition prediction;  // what {cells[0], cells[1]} predicts about cells[2]
  bool is_row = true;
};

struct PmReport {
  TheoryVariant variant = TheoryVariant::Quantum;
  std::array<Proposition, 9> square;
  std::vector<PmConstraint> constraints;  // three rows, then three columns
  bool satisfiable = false;
  std::optional<std::array<bool, 9>> assignment;  // first witness in search order
  std::size_t assignments_searched = 0;

  /// XOR of all six parities. Each cell sits in exactly one row and one column,
  /// so an odd total rules out every assignment.
  bool parity_xor() const {
    bool x = false;
    for (const auto &c : constraints) {
      x ^= c.parity;
    }
    return x;
  }
};

inline std::array<Proposition, 9> pm_grid() {
  static constexpr const char *kCells[9] = {"ZI", "IZ", "ZZ", "IX", "XI", "XX", "ZX", "XZ", "YY"};
  std::array<Proposition, 9> grid;
  for (std::size_t i = 0; i < 9; ++i) {
    grid[i] = Proposition::from_letters(kCells[i]);
  }
  return grid;
}

inline bool pm_assignment_satisfies(const std::vector<PmConstraint> &constraints, const std::array<bool, 9> &values) {
  for (const auto &c : constraints) {
    if ((values[c.cells[0]] ^ values[c.cells[1]] ^ values[c.cells[2]]) != c.parity) {
      return false;
    }
  }
  return true;
}

/// Exhaustive search over the 512 value assignments, visiting masks in the
/// order given by `order(i)` for i in [0, 512).
inline std::optional<std::array<bool, 9>> pm_search(const std::vector<PmConstraint> &constraints,
                                                    const std::function<std::uint32_t(std::uint32_t)> &order,
                                                    std::size_t *searched = nullptr) {
  for (std::uint32_t i = 0; i < 512; ++i) {
    const std::uint32_t mask = order(i);
    std::array<bool, 9> values{};
    for (std::size_t b = 0; b < 9; ++b) {
      values[b] = ((mask >> b) & 1u) != 0;
    }
    if (searched) {
      *searched = i + 1;
    }
    if (pm_assignment_satisfies(constraints, values)) {
      return values;
    }
  }
  return std::nullopt;
}

inline PmReport pm_square(TheoryVariant v) {
  PmReport report;
  report.variant = v;
  report.square = pm_grid();
  static constexpr std::array<std::array<std::size_t, 3>, 6> kLines = {{
      {0, 1, 2}, {3, 4, 5}, {6, 7, 8},  // rows
      {0, 3, 6}, {1, 4, 7}, {2, 5, 8},  // columns
  }};
  for (std::size_t line = 0; line < kLines.size(); ++line) {
    const auto &cells = kLines[line];
    const Proposition gens[] = {report.square[cells[0]], report.square[cells[1]]};
    const auto state = KnowledgeState::from_generators(2, gens, v);
    const TruthValue t = state.predicts(report.square[cells[2]]);
    if (!is_determinate(t)) {
      throw Error("grid line does not determine its third cell");
    }
    PmConstraint c;
    c.cells = cells;
    c.parity = t == TruthValue::False;
    c.prediction = report.square[cells[2]];
    c.prediction.set_sign(c.parity);
    c.is_row = line < 3;
    report.constraints.push_back(c);
  }
  report.assignment =
      pm_search(report.constraints, [](std::uint32_t i) { return i; }, &report.assignments_searched);
  report.satisfiable = report.assignment.has_value();
  return report;
}

// ---------------------------------------------------------------------------
// CZ-choice consistency check
// ---------------------------------------------------------------------------

/// Derives the <±YIY> prediction of <-YYI, -IYY> along two routes:
///  (a) joint reduction, combination of the two reduced facts, expansion;
///  (b) pulling the premise back through CZ(1,2), CZ(2,3), CZ(1,3), predicting
///      <±XIX> there, and pushing the prediction forward again.
/// Standard CZ gives <YIY> both ways. Tilde CZ gives <YIY> and <-YIY>.
struct ConsistencyReport {
  CzChoice cz = CzChoice::Standard;
  std::vector<Proposition> premise;
  std::vector<Proposition> reduced_premise;  // route (a) single-system form
  Transcript reduction;                      // route (a) transcript
  Proposition reduced_prediction;            // route (a) combined fact before expansion
  Transcript route_b;                        // the three-CZ transcript
  std::vector<Proposition> pulled_back_premise;
  Proposition pulled_back_prediction;
  std::vector<Proposition> derived;  // route (a) result, then route (b) result
  bool contradiction_found = false;
  bool state_poisoned = false;
};

inline ConsistencyReport cz_consistency_check(CzChoice c) {
  constexpr TheoryVariant v = TheoryVariant::Quantum;
  ConsistencyReport report;
  report.cz = c;
  report.premise = {parse_prop("<-YYI>"), parse_prop("<-IYY>")};

  KnowledgeState state = KnowledgeState::from_generators(3, report.premise, v, c);
  report.reduced_premise = state.frame().reduced;
  report.reduction = state.frame().transcript;
  report.reduced_prediction = state.combine_reduced(0b11);
  const Proposition route_a = state.expand(report.reduced_prediction);

  report.route_b = {Gate::cz(0, 1), Gate::cz(1, 2), Gate::cz(0, 2)};
  const Transcript pull_back = invert_transcript(report.route_b);
  for (const auto &p : report.premise) {
    report.pulled_back_premise.push_back(apply_transcript(p, pull_back, v, c));
  }
  const auto pulled = KnowledgeState::from_generators(3, report.pulled_back_premise, v, c);
  report.pulled_back_prediction = pulled.expand(pulled.combine_reduced(0b11));
  const Proposition route_b = apply_transcript(report.pulled_back_prediction, report.route_b, v, c);

  report.derived = {route_a, route_b};
  state = state.with_derived(route_a).with_derived(route_b);
  report.contradiction_found = route_a.same_letters(route_b) && route_a.sign() != route_b.sign();
  report.state_poisoned = state.poisoned();
  return report;
}

// ---------------------------------------------------------------------------
// Law report
// ---------------------------------------------------------------------------

struct LawReportWithTables {
  LawReport report;
  std::vector<TruthTable> tables;  // parallel to report.verdicts
};

inline LawReportWithTables law_report() {
  LawReportWithTables out;
  out.report = law_suite();
  for (const auto &law : law_table()) {
    out.tables.push_back(truth_table(law));
  }
  return out;
}

}  // namespace conjlogic
