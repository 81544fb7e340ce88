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

// Recursive-descent parser for formulas over named atoms.
//
//   iff     := implies ( ('<->' | '↔') implies )*
//   implies := or ( ('->' | '→') implies )?          right associative
//   or      := xor ( ('|' | '∨') xor )*
//   xor     := and ( ('^' | '⊻') and )*
//   and     := unary ( ('&' | '∧') unary )*
//   unary   := ('~' | '!' | '¬') unary | primary
//   primary := name | '<I>' | '<-I>' | '<¬I>' | '(' iff ')'
//
// Names are [a-z][a-z0-9_]*. Atom ids are assigned in sorted name order across
// every formula parsed together, so "p", "q", "r" become 0, 1, 2.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "conjlogic/error.hpp"
#include "conjlogic/formula.hpp"

namespace conjlogic {

struct ParsedFormulas {
  std::vector<Formula> formulas;
  std::vector<std::string> atom_names;  // indexed by atom id
};

namespace detail {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const std::map<std::string, int> *ids,
                std::vector<std::string> *seen)
      : text_(text), ids_(ids), seen_(seen) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected input in formula", pos_);
    }
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (accept("<->") || accept("↔")) {
      f = iff(f, parse_implies());
    }
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (accept("->") || accept("→")) {
      return implies(f, parse_implies());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_xor();
    while (accept("|") || accept("∨")) {
      f = lor(f, parse_xor());
    }
    return f;
  }

  Formula parse_xor() {
    Formula f = parse_and();
    while (accept("^") || accept("⊻")) {
      f = lxor(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept("&") || accept("∧")) {
      f = land(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (accept("~") || accept("!") || accept("¬")) {
      return lnot(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of formula", pos_);
    }
    if (accept("<I>")) {
      return Formula::tautology();
    }
    if (accept("<-I>") || accept("<¬I>")) {
      return Formula::contradiction();
    }
    if (accept("(")) {
      Formula f = parse_iff();
      if (!accept(")")) {
        throw ParseError("expected ')'", pos_);
      }
      return f;
    }
    const std::size_t start = pos_;
    if (!std::islower(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected an atom name, constant or '('", pos_);
    }
    while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                                   std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (ids_ == nullptr) {
      seen_->push_back(name);
      return Formula::atom(0);
    }
    return Formula::atom(ids_->at(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::map<std::string, int> *ids_;
  std::vector<std::string> *seen_;
};

}  // namespace detail

inline ParsedFormulas parse_formulas(const std::vector<std::string> &texts) {
  std::vector<std::string> names;
  for (const auto &t : texts) {
    detail::FormulaParser(t, nullptr, &names).parse();
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::map<std::string, int> ids;
  for (std::size_t i = 0; i < names.size(); ++i) {
    ids[names[i]] = static_cast<int>(i);
  }
  ParsedFormulas out;
  out.atom_names = names;
  for (const auto &t : texts) {
    out.formulas.push_back(detail::FormulaParser(t, &ids, nullptr).parse());
  }
  return out;
}

inline ParsedFormulas parse_formula(const std::string &text) { return parse_formulas({text}); }

}  // namespace conjlogic
