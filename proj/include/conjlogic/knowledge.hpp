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

// Knowledge states: conjunctions of compatible, independent propositions, the
// predictions they imply, and what measurement does to them.
//
// Predictions are computed in the reduced frame. The generators are jointly
// reduced to single X's at distinct pivots; there a conjunction of single-system
// facts predicts exactly the products of any subset of them (signs XORed), and
// the inverted transcript carries each product back. Membership queries run
// the other way: a query is reduced with the same transcript and tested for
// being such a product.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conjlogic/clifford.hpp"
#include "conjlogic/error.hpp"
#include "conjlogic/gf2.hpp"
#include "conjlogic/pauli.hpp"
#include "conjlogic/reduction.hpp"
#include "conjlogic/truth.hpp"

namespace conjlogic {

/// Linear independence of the (x | z) rows over GF(2), ignoring signs.
inline bool independent(std::span<const Proposition> props) { return symplectic_rank(props) == props.size(); }

/// Closures are materialised only up to this many generators.
inline constexpr std::size_t kMaxClosureGenerators = 24;

struct MeasurementRecord {
  Proposition measured;        // sign 0 form of the question
  bool outcome = false;        // 0 or 1
  Proposition resulting_prop;  // the question carrying the outcome as its sign
  bool predicted = false;      // outcome was determined before measuring
};

class KnowledgeState {
 public:
  KnowledgeState() : KnowledgeState(1) {}

  explicit KnowledgeState(std::size_t n, TheoryVariant v = TheoryVariant::Quantum, CzChoice c = CzChoice::Standard)
      : n_(n), variant_(v), cz_(c), frame_(std::make_shared<const ReductionResult>()) {
    if (n == 0) {
      throw Error("a knowledge state needs at least one system");
    }
  }

  /// Builds the conjunction by asserting each generator in turn.
  static KnowledgeState from_generators(std::size_t n, std::span<const Proposition> generators,
                                        TheoryVariant v = TheoryVariant::Quantum, CzChoice c = CzChoice::Standard) {
    KnowledgeState s(n, v, c);
    for (const auto &g : generators) {
      s = s.assert_prop(g);
    }
    return s;
  }

  std::size_t size() const { return n_; }
  TheoryVariant variant() const { return variant_; }
  CzChoice cz() const { return cz_; }
  const std::vector<Proposition> &generators() const { return generators_; }

  /// Joint reduction of the generators (the cached reduced frame).
  const ReductionResult &frame() const { return *frame_; }

  bool poisoned() const { return conflict_.has_value(); }
  /// A proposition and its negation that were both derived, when poisoned.
  const std::optional<std::pair<Proposition, Proposition>> &conflict() const { return conflict_; }

  /// 1 if q is predicted, 0 if its negation is, ? otherwise.
  TruthValue predicts(const Proposition &q) const {
    check_size(q);
    const Proposition r = apply_transcript(q, frame_->transcript, variant_, cz_);
    Proposition combined(n_);
    for (std::size_t k = 0; k < frame_->pivots.size(); ++k) {
      const std::size_t pivot = frame_->pivots[k];
      const PauliLetter l = r.letter(pivot);
      if (l == PauliLetter::X) {
        combined.xor_assign(frame_->reduced[k]);
      } else if (l != PauliLetter::I) {
        return TruthValue::Indeterminate;
      }
    }
    if (!combined.same_letters(r)) {
      return TruthValue::Indeterminate;
    }
    return from_bool(combined.sign() == r.sign());
  }

  /// Adds p to the conjunction. Predicted propositions leave the state as is.
  /// Incompatible propositions are refused: learning them requires measure().
  KnowledgeState assert_prop(const Proposition &p) const {
    check_size(p);
    if (p.is_identity()) {
      if (p.sign()) {
        throw Contradiction("cannot assert the contradiction " + format_prop(p));
      }
      return *this;
    }
    switch (predicts(p)) {
      case TruthValue::True:
        return *this;
      case TruthValue::False:
        throw Contradiction(format_prop(p) + " contradicts the state, which predicts " + format_prop(negate_prop(p)));
      case TruthValue::Indeterminate:
        break;
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (!compatible(generators_[i], p)) {
        throw IncompatiblePair(format_prop(p) + " is incompatible with generator " + format_prop(generators_[i]),
                               i + 1, generators_.size() + 1);
      }
    }
    std::vector<Proposition> gens = generators_;
    gens.push_back(p);
    return with_generators(std::move(gens));
  }

  /// Every prediction of the state, 2^k propositions for k generators, in
  /// letter order. Includes the tautology.
  std::vector<Proposition> closure() const {
    const std::size_t k = generators_.size();
    if (k > kMaxClosureGenerators) {
      throw Error("closure of " + std::to_string(k) + " generators is too large to list");
    }
    std::vector<Proposition> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      out.push_back(combine_reduced(mask));
    }
    const Transcript back = invert_transcript(frame_->transcript);
    for (const Gate &g : back) {
      for (auto &p : out) {
        apply_gate_in_place(p, g, variant_, cz_);
      }
    }
    std::sort(out.begin(), out.end(), letter_order_less);
    return out;
  }

  /// Product, in the reduced frame, of the reduced generators selected by
  /// `mask` (bit k selects generator k).
  Proposition combine_reduced(std::uint64_t mask) const {
    Proposition p(n_);
    for (std::size_t k = 0; k < frame_->reduced.size(); ++k) {
      if ((mask >> k) & 1u) {
        p.xor_assign(frame_->reduced[k]);
      }
    }
    return p;
  }

  /// Carries a reduced-frame proposition back to the original frame.
  Proposition expand(const Proposition &reduced) const {
    return apply_transcript(reduced, invert_transcript(frame_->transcript), variant_, cz_);
  }

  /// Records a proposition derived outside the closure machinery (for example
  /// through a different transcript). Deriving the negation of a prediction
  /// poisons the state instead of throwing, so both sides can be reported.
  KnowledgeState with_derived(const Proposition &p) const {
    check_size(p);
    KnowledgeState out = *this;
    if (!out.conflict_ && predicts(p) == TruthValue::False) {
      out.conflict_ = std::make_pair(negate_prop(p), p);
    }
    return out;
  }

  /// Measures the question q (its sign is ignored). A predicted outcome is
  /// returned without drawing from rng and without changing the state.
  /// Otherwise a fair coin decides, every prediction incompatible with q is
  /// dropped and q with the outcome as sign is added.
  template <std::uniform_random_bit_generator Rng>
  std::pair<MeasurementRecord, KnowledgeState> measure(const Proposition &question, Rng &rng) const {
    check_size(question);
    Proposition q = question;
    q.set_sign(false);
    if (q.is_identity()) {
      throw TrivialProposition("cannot measure the identity string");
    }
    MeasurementRecord record{q, false, q, false};
    const TruthValue known = predicts(q);
    if (is_determinate(known)) {
      record.outcome = known == TruthValue::False;
      record.resulting_prop.set_sign(record.outcome);
      record.predicted = true;
      return {record, *this};
    }
    record.outcome = ((rng() - Rng::min()) & 1u) != 0;
    record.resulting_prop.set_sign(record.outcome);
    std::vector<Proposition> gens = surviving_generators(q);
    gens.push_back(record.resulting_prop);
    return {record, with_generators(std::move(gens))};
  }

  /// Generators of the largest part of the closure compatible with q. Every
  /// generator compatible with q is kept unchanged; when several are not, the
  /// first of them is combined into each of the others and then dropped, so
  /// the result does not depend on how the state was presented.
  std::vector<Proposition> surviving_generators(const Proposition &q) const {
    check_size(q);
    std::vector<Proposition> kept;
    std::optional<std::size_t> first_clash;
    const Proposition r = apply_transcript(q, frame_->transcript, variant_, cz_);
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      const PauliLetter l = r.letter(frame_->pivots[k]);
      if (l == PauliLetter::I || l == PauliLetter::X) {
        kept.push_back(generators_[k]);
      } else if (!first_clash) {
        first_clash = k;
      } else {
        kept.push_back(expand(combine_reduced((std::uint64_t{1} << *first_clash) | (std::uint64_t{1} << k))));
      }
    }
    return kept;
  }

 private:
  KnowledgeState with_generators(std::vector<Proposition> gens) const {
    KnowledgeState out(n_, variant_, cz_);
    if (!independent(gens)) {
      throw DependentSet("generators are not independent", gens.size());
    }
    out.frame_ = std::make_shared<const ReductionResult>(reduce_set(gens, variant_, cz_));
    out.generators_ = std::move(gens);
    out.conflict_ = conflict_;
    return out;
  }

  void check_size(const Proposition &p) const {
    if (p.size() != n_) {
      throw DimensionMismatch(n_, p.size());
    }
  }

  std::size_t n_;
  TheoryVariant variant_;
  CzChoice cz_;
  std::vector<Proposition> generators_;
  std::shared_ptr<const ReductionResult> frame_;
  std::optional<std::pair<Proposition, Proposition>> conflict_;
};

/// Seeded source for measurement outcomes. mt19937_64 output is fixed by the
/// standard, so a seed reproduces the same outcomes on every platform.
using OutcomeRng = std::mt19937_64;

}  // namespace conjlogic
