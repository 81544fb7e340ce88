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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conjlogic/error.hpp"
#include "conjlogic/truth.hpp"

namespace conjlogic {

/// Immutable formula tree over atoms and the six connectives. Subtrees are
/// shared, so copies are cheap and formulas can be read from any thread.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Xor, Implies, Iff, Tautology, Contradiction };

  static Formula atom(int id) {
    if (id < 0) {
      throw Error("atom id must be non-negative");
    }
    return Formula(std::make_shared<Node>(Node{Kind::Atom, id, {}, {}}));
  }
  static Formula tautology() { return Formula(std::make_shared<Node>(Node{Kind::Tautology, -1, {}, {}})); }
  static Formula contradiction() {
    return Formula(std::make_shared<Node>(Node{Kind::Contradiction, -1, {}, {}}));
  }
  static Formula unary(Kind kind, const Formula &operand) {
    return Formula(std::make_shared<Node>(Node{kind, -1, operand.node_, {}}));
  }
  static Formula binary(Kind kind, const Formula &lhs, const Formula &rhs) {
    return Formula(std::make_shared<Node>(Node{kind, -1, lhs.node_, rhs.node_}));
  }

  Kind kind() const { return node_->kind; }
  int atom_id() const { return node_->atom; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  /// Number of atoms spanned by the formula, i.e. one more than the largest id.
  int atom_count() const {
    switch (kind()) {
      case Kind::Atom:
        return atom_id() + 1;
      case Kind::Tautology:
      case Kind::Contradiction:
        return 0;
      case Kind::Not:
        return lhs().atom_count();
      default:
        return std::max(lhs().atom_count(), rhs().atom_count());
    }
  }

 private:
  struct Node {
    Kind kind;
    int atom;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline Formula lnot(const Formula &f) { return Formula::unary(Formula::Kind::Not, f); }
inline Formula land(const Formula &f, const Formula &g) { return Formula::binary(Formula::Kind::And, f, g); }
inline Formula lor(const Formula &f, const Formula &g) { return Formula::binary(Formula::Kind::Or, f, g); }
inline Formula lxor(const Formula &f, const Formula &g) { return Formula::binary(Formula::Kind::Xor, f, g); }
inline Formula implies(const Formula &f, const Formula &g) {
  return Formula::binary(Formula::Kind::Implies, f, g);
}
inline Formula iff(const Formula &f, const Formula &g) { return Formula::binary(Formula::Kind::Iff, f, g); }

/// Left fold of the binary conjunction; the empty conjunction is the tautology.
inline Formula land_all(std::span<const Formula> fs) {
  if (fs.empty()) {
    return Formula::tautology();
  }
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) {
    acc = land(acc, fs[i]);
  }
  return acc;
}

/// Atom id -> truth value.
using Assignment = std::vector<TruthValue>;

class MissingAtom : public Error {
 public:
  explicit MissingAtom(int id) : Error("atom " + std::to_string(id) + " is not assigned"), id_(id) {}
  int id() const { return id_; }

 private:
  int id_;
};

inline TruthValue evaluate(const Formula &f, std::span<const TruthValue> a) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
      if (static_cast<std::size_t>(f.atom_id()) >= a.size()) {
        throw MissingAtom(f.atom_id());
      }
      return a[static_cast<std::size_t>(f.atom_id())];
    case K::Tautology:
      return TruthValue::True;
    case K::Contradiction:
      return TruthValue::False;
    case K::Not:
      return negate(evaluate(f.lhs(), a));
    case K::And:
      return conj(evaluate(f.lhs(), a), evaluate(f.rhs(), a));
    case K::Or:
      return disj(evaluate(f.lhs(), a), evaluate(f.rhs(), a));
    case K::Xor:
      return xor3(evaluate(f.lhs(), a), evaluate(f.rhs(), a));
    case K::Implies:
      return material_implies(evaluate(f.lhs(), a), evaluate(f.rhs(), a));
    case K::Iff:
      return material_iff(evaluate(f.lhs(), a), evaluate(f.rhs(), a));
  }
  throw Error("corrupt formula node");
}

/// Exhaustive checks are capped at this many atoms (3^8 = 6561 rows).
inline constexpr int kMaxCheckedAtoms = 8;

/// Visits all 3^k assignments in lexicographic order (atom 0 slowest, 0 < ? < 1).
/// Stops early when `visit` returns false.
inline void for_each_assignment(int atoms, const std::function<bool(const Assignment &)> &visit) {
  if (atoms < 0 || atoms > kMaxCheckedAtoms) {
    throw Error("exhaustive check supports at most " + std::to_string(kMaxCheckedAtoms) + " atoms, got " +
                std::to_string(atoms));
  }
  Assignment a(static_cast<std::size_t>(atoms), TruthValue::False);
  while (true) {
    if (!visit(a)) {
      return;
    }
    int pos = atoms - 1;
    while (pos >= 0 && a[static_cast<std::size_t>(pos)] == TruthValue::True) {
      a[static_cast<std::size_t>(pos)] = TruthValue::False;
      --pos;
    }
    if (pos < 0) {
      return;
    }
    auto &slot = a[static_cast<std::size_t>(pos)];
    slot = static_cast<TruthValue>(static_cast<int>(slot) + 1);
  }
}

struct CheckResult {
  bool holds = true;
  std::optional<Assignment> counterexample;  // first failing row, lexicographic
};

namespace detail {

inline CheckResult check_rows(const Formula &f, const Formula &g,
                              const std::function<bool(TruthValue, TruthValue)> &row_ok) {
  CheckResult result;
  for_each_assignment(std::max(f.atom_count(), g.atom_count()), [&](const Assignment &a) {
    if (row_ok(evaluate(f, a), evaluate(g, a))) {
      return true;
    }
    result.holds = false;
    result.counterexample = a;
    return false;
  });
  return result;
}

}  // namespace detail

/// f => g: material implication is 1 on every assignment.
inline CheckResult logically_implies(const Formula &f, const Formula &g) {
  return detail::check_rows(
      f, g, [](TruthValue a, TruthValue b) { return material_implies(a, b) == TruthValue::True; });
}

/// f <=> g: identical truth tables.
inline CheckResult logically_equivalent(const Formula &f, const Formula &g) {
  return detail::check_rows(f, g, [](TruthValue a, TruthValue b) { return a == b; });
}

/// Renders with ASCII connectives: ~ & | ^ -> <->, constants <I> and <-I>.
/// Binary subterms are parenthesised unless they are atoms, constants or negations.
inline std::string to_string(const Formula &f, std::span<const std::string> names = {}) {
  using K = Formula::Kind;
  auto atom_name = [&](int id) -> std::string {
    if (static_cast<std::size_t>(id) < names.size()) {
      return names[static_cast<std::size_t>(id)];
    }
    static constexpr const char *kDefault[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
    if (id < 8) {
      return kDefault[id];
    }
    return "a" + std::to_string(id);
  };
  std::function<std::string(const Formula &, bool)> render = [&](const Formula &g, bool nested) -> std::string {
    const char *op = nullptr;
    switch (g.kind()) {
      case K::Atom:
        return atom_name(g.atom_id());
      case K::Tautology:
        return "<I>";
      case K::Contradiction:
        return "<-I>";
      case K::Not:
        return "~" + render(g.lhs(), true);
      case K::And:
        op = " & ";
        break;
      case K::Or:
        op = " | ";
        break;
      case K::Xor:
        op = " ^ ";
        break;
      case K::Implies:
        op = " -> ";
        break;
      case K::Iff:
        op = " <-> ";
        break;
    }
    std::string body = render(g.lhs(), true) + op + render(g.rhs(), true);
    return nested ? "(" + body + ")" : body;
  };
  return render(f, false);
}

}  // namespace conjlogic
