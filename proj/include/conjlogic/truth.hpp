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
#include <cstdint>
#include <optional>
#include <ostream>

namespace conjlogic {

/// Three-valued truth: false (0), indeterminate (?), true (1).
///
/// The enumerator order is the display order 0 < ? < 1 used for truth-table
/// rows and counterexample enumeration. It carries no arithmetic meaning.
enum class TruthValue : std::uint8_t { False = 0, Indeterminate = 1, True = 2 };

inline constexpr std::array<TruthValue, 3> kTruthValues = {
    TruthValue::False, TruthValue::Indeterminate, TruthValue::True};

constexpr bool is_determinate(TruthValue v) { return v != TruthValue::Indeterminate; }

constexpr TruthValue from_bool(bool b) { return b ? TruthValue::True : TruthValue::False; }

constexpr char to_char(TruthValue v) {
  switch (v) {
    case TruthValue::False:
      return '0';
    case TruthValue::Indeterminate:
      return '?';
    case TruthValue::True:
      return '1';
  }
  return '?';
}

constexpr std::optional<TruthValue> truth_from_char(char c) {
  switch (c) {
    case '0':
      return TruthValue::False;
    case '?':
      return TruthValue::Indeterminate;
    case '1':
      return TruthValue::True;
    default:
      return std::nullopt;
  }
}

inline std::ostream &operator<<(std::ostream &out, TruthValue v) { return out << to_char(v); }

// Connectives. Each agrees with two-valued logic on determinate inputs.

constexpr TruthValue negate(TruthValue v) {
  switch (v) {
    case TruthValue::False:
      return TruthValue::True;
    case TruthValue::True:
      return TruthValue::False;
    default:
      return TruthValue::Indeterminate;
  }
}

constexpr TruthValue conj(TruthValue a, TruthValue b) {
  if (a == TruthValue::False || b == TruthValue::False) {
    return TruthValue::False;
  }
  if (a == TruthValue::True && b == TruthValue::True) {
    return TruthValue::True;
  }
  return TruthValue::Indeterminate;
}

constexpr TruthValue disj(TruthValue a, TruthValue b) {
  if (a == TruthValue::True || b == TruthValue::True) {
    return TruthValue::True;
  }
  if (a == TruthValue::False && b == TruthValue::False) {
    return TruthValue::False;
  }
  return TruthValue::Indeterminate;
}

constexpr TruthValue xor3(TruthValue a, TruthValue b) {
  if (!is_determinate(a) || !is_determinate(b)) {
    return TruthValue::Indeterminate;
  }
  return from_bool(a != b);
}

/// 1 when a is 0, b is 1, or a and b carry the same value (so ? -> ? is 1).
/// This is not Kleene implication: (?, ?) gives 1 and (?, 0) gives 0.
constexpr TruthValue material_implies(TruthValue a, TruthValue b) {
  return from_bool(a == TruthValue::False || b == TruthValue::True || a == b);
}

/// 1 iff both sides carry the same value, including ? = ?. Always determinate.
constexpr TruthValue material_iff(TruthValue a, TruthValue b) { return from_bool(a == b); }

}  // namespace conjlogic
