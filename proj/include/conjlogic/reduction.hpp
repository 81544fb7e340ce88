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

// Clifford reduction: transform correlation propositions into single-system
// form with S, H and CZ, recording the transcript so results can be expanded
// back.
//
// Single proposition. The pivot is the first nontrivial position. S turns every
// Y into -X, then H turns every non-pivot X into Z (and a Z pivot into X), then
// CZ(pivot, j) clears each remaining Z. The steps are emitted in that order,
// positions ascending, which reproduces the textbook chain
//   <XYZIZY> -> <XXZIZX> -> <XZZIZZ> -> <XIIIII>.
//
// Sets. Propositions are processed in the given order. Each one is reduced on
// the positions not yet used as pivots; compatibility forces it to hold only I
// or X on earlier pivots, and each such X is cleared with CNOT(new pivot ->
// old pivot) = H, CZ, H, which leaves the earlier single-X rows unchanged.
// Systems are never permuted, so a reduced proposition carries its X at its own
// pivot position.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conjlogic/clifford.hpp"
#include "conjlogic/error.hpp"
#include "conjlogic/pauli.hpp"

namespace conjlogic {

enum class Relation { Single, CompatibleDistinctSystems, IncompatibleSameSystem };

inline std::string to_string(Relation r) {
  switch (r) {
    case Relation::Single:
      return "single";
    case Relation::CompatibleDistinctSystems:
      return "compatible-distinct-systems";
    case Relation::IncompatibleSameSystem:
      return "incompatible-same-system";
  }
  return "?";
}

struct ReductionResult {
  Transcript transcript;
  std::vector<Proposition> reduced;  // apply_transcript(input[k]) == reduced[k]
  Relation relation = Relation::Single;
  std::vector<std::size_t> pivots;  // 0-based system holding reduced[k]'s letter
};

namespace detail {

class Reducer {
 public:
  Reducer(std::vector<Proposition> rows, TheoryVariant v, CzChoice c)
      : rows_(std::move(rows)), variant_(v), cz_(c), n_(rows_.empty() ? 0 : rows_.front().size()),
        used_(n_, false) {}

  /// Reduces row r on the positions not yet used as pivots to a single X.
  /// Returns the new pivot, or nullopt when r is trivial on those positions.
  std::optional<std::size_t> isolate(std::size_t r) {
    const Proposition &row = rows_[r];
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n_ && !pivot; ++i) {
      if (!used_[i] && is_nontrivial(row.letter(i))) {
        pivot = i;
      }
    }
    if (!pivot) {
      return std::nullopt;
    }
    const std::size_t q = *pivot;

    std::vector<std::size_t> s_targets;
    std::vector<std::size_t> h_targets;
    for (std::size_t i = q; i < n_; ++i) {
      if (used_[i]) {
        continue;
      }
      const PauliLetter l = row.letter(i);
      if (l == PauliLetter::Y) {
        s_targets.push_back(i);
      }
      const bool after_s_is_x = l == PauliLetter::X || l == PauliLetter::Y;
      if (i == q ? l == PauliLetter::Z : after_s_is_x) {
        h_targets.push_back(i);
      }
    }
    for (std::size_t i : s_targets) {
      emit(Gate::single(GateKind::S, i));
    }
    for (std::size_t i : h_targets) {
      emit(Gate::single(GateKind::H, i));
    }
    std::vector<std::size_t> cz_targets;
    for (std::size_t i = q + 1; i < n_; ++i) {
      if (!used_[i] && rows_[r].z(i)) {
        cz_targets.push_back(i);
      }
    }
    for (std::size_t j : cz_targets) {
      emit(Gate::cz(q, j));
    }
    used_[q] = true;
    return q;
  }

  /// Clears the X letters row r carries on earlier pivots via CNOT(q -> p).
  void clear_earlier_pivots(std::size_t r, std::size_t q, std::span<const std::size_t> earlier) {
    for (std::size_t p : earlier) {
      if (rows_[r].letter(p) == PauliLetter::X) {
        for (const Gate &g : cnot(q, p)) {
          emit(g);
        }
      }
    }
  }

  void emit(const Gate &g) {
    for (auto &row : rows_) {
      apply_gate_in_place(row, g, variant_, cz_);
    }
    transcript_.push_back(g);
  }

  const Proposition &row(std::size_t r) const { return rows_[r]; }
  std::vector<Proposition> take_rows() { return std::move(rows_); }
  Transcript take_transcript() { return std::move(transcript_); }

 private:
  std::vector<Proposition> rows_;
  TheoryVariant variant_;
  CzChoice cz_;
  std::size_t n_;
  std::vector<bool> used_;
  Transcript transcript_;
};

inline void require_same_size(std::span<const Proposition> props) {
  for (const auto &p : props) {
    if (p.size() != props.front().size()) {
      throw DimensionMismatch(props.front().size(), p.size());
    }
  }
}

}  // namespace detail

/// Reduces one non-identity proposition to a single X at its first nontrivial
/// position.
inline ReductionResult reduce_single(const Proposition &p, TheoryVariant v, CzChoice c = CzChoice::Standard) {
  if (p.is_identity()) {
    throw TrivialProposition("cannot reduce the identity string " + format_prop(p));
  }
  detail::Reducer reducer({p}, v, c);
  const auto pivot = reducer.isolate(0);
  ReductionResult result;
  result.transcript = reducer.take_transcript();
  result.reduced = reducer.take_rows();
  result.pivots = {*pivot};
  result.relation = Relation::Single;
  return result;
}

/// Simultaneous reduction of two independent propositions. Compatible pairs end
/// as single X's on two distinct systems; incompatible pairs end as two
/// different letters on one system.
inline ReductionResult reduce_pair(const Proposition &p, const Proposition &q, TheoryVariant v,
                                   CzChoice c = CzChoice::Standard) {
  if (p.size() != q.size()) {
    throw DimensionMismatch(p.size(), q.size());
  }
  if (p.is_identity() || q.is_identity()) {
    throw TrivialProposition("cannot reduce the identity string");
  }
  if (p.same_letters(q)) {
    throw DependentSet("the two propositions are equal up to sign", 2);
  }
  detail::Reducer reducer({p, q}, v, c);
  const std::size_t a = *reducer.isolate(0);
  const PauliLetter at_pivot = reducer.row(1).letter(a);

  ReductionResult result;
  const auto second = reducer.isolate(1);
  if (!second) {
    // q is now single-system on a; equal strings were excluded above, so it is Y or Z.
    result.relation = Relation::IncompatibleSameSystem;
    result.pivots = {a, a};
  } else {
    const std::size_t b = *second;
    if (at_pivot == PauliLetter::I || at_pivot == PauliLetter::X) {
      const std::size_t earlier[] = {a};
      reducer.clear_earlier_pivots(1, b, earlier);
      result.relation = Relation::CompatibleDistinctSystems;
      result.pivots = {a, b};
    } else {
      // Y or Z at the first pivot: Hadamards on both systems, then CZ.
      reducer.emit(Gate::single(GateKind::H, a));
      reducer.emit(Gate::single(GateKind::H, b));
      reducer.emit(Gate::cz(a, b));
      result.relation = Relation::IncompatibleSameSystem;
      result.pivots = {a, a};
    }
  }
  result.transcript = reducer.take_transcript();
  result.reduced = reducer.take_rows();
  return result;
}

/// Simultaneous reduction of a pairwise compatible, independent set: proposition
/// k ends as a single X (with some sign) at pivots[k], all pivots distinct.
/// Errors name 1-based positions in `props`.
inline ReductionResult reduce_set(std::span<const Proposition> props, TheoryVariant v,
                                  CzChoice c = CzChoice::Standard) {
  ReductionResult result;
  if (props.empty()) {
    return result;
  }
  detail::require_same_size(props);
  for (std::size_t i = 0; i < props.size(); ++i) {
    for (std::size_t j = i + 1; j < props.size(); ++j) {
      if (!compatible(props[i], props[j])) {
        throw IncompatiblePair("propositions " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                   " are incompatible",
                               i + 1, j + 1);
      }
    }
  }
  detail::Reducer reducer(std::vector<Proposition>(props.begin(), props.end()), v, c);
  for (std::size_t r = 0; r < props.size(); ++r) {
    const auto pivot = reducer.isolate(r);
    if (!pivot) {
      throw DependentSet("proposition " + std::to_string(r + 1) + " depends on the ones before it", r + 1);
    }
    reducer.clear_earlier_pivots(r, *pivot, result.pivots);
    result.pivots.push_back(*pivot);
  }
  result.transcript = reducer.take_transcript();
  result.reduced = reducer.take_rows();
  result.relation = props.size() == 1 ? Relation::Single : Relation::CompatibleDistinctSystems;
  return result;
}

inline ReductionResult reduce_set(const std::vector<Proposition> &props, TheoryVariant v,
                                  CzChoice c = CzChoice::Standard) {
  return reduce_set(std::span<const Proposition>(props), v, c);
}

}  // namespace conjlogic
