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
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conjlogic/error.hpp"
#include "conjlogic/pauli.hpp"

namespace conjlogic {

/// Selects the sign rules of S and H. Everything else is shared.
enum class TheoryVariant { Quantum, SpekkensToy };

/// Standard maps <XX> to <YY>. Tilde maps <XX> to <-YY> and exists to exhibit
/// the inconsistency that choice produces.
enum class CzChoice { Standard, Tilde };

enum class GateKind { FlipX, FlipY, FlipZ, S, Sinv, H, CZ };

/// A transformation on one system, or CZ on an unordered pair of distinct
/// systems. Targets are 0-based.
struct Gate {
  GateKind kind = GateKind::H;
  std::size_t a = 0;
  std::size_t b = 0;  // CZ only

  static Gate single(GateKind k, std::size_t target) { return {k, target, 0}; }
  static Gate cz(std::size_t i, std::size_t j) { return {GateKind::CZ, i, j}; }

  friend bool operator==(const Gate &, const Gate &) = default;
};

using Transcript = std::vector<Gate>;

namespace detail {

inline void check_gate(const Gate &g, std::size_t n) {
  if (g.a >= n || (g.kind == GateKind::CZ && g.b >= n)) {
    throw IndexOutOfRange("gate target out of range for " + std::to_string(n) + " systems");
  }
  if (g.kind == GateKind::CZ && g.a == g.b) {
    throw InvalidGate("CZ needs two distinct systems");
  }
}

inline void apply_s(Proposition &p, std::size_t i, TheoryVariant v) {
  const bool x = p.x(i);
  const bool z = p.z(i);
  // Quantum: X->Y, Y->-X, Z->Z.  Toy: X->Y, Y->-X, Z->-Z.
  p.flip_sign(v == TheoryVariant::Quantum ? (x && z) : z);
  p.set_z(i, z != x);
}

}  // namespace detail

/// Applies one gate in place. Positions other than the targets are untouched.
inline void apply_gate_in_place(Proposition &p, const Gate &g, TheoryVariant v,
                                CzChoice c = CzChoice::Standard) {
  detail::check_gate(g, p.size());
  const std::size_t i = g.a;
  switch (g.kind) {
    case GateKind::FlipX:
      p.flip_sign(p.z(i));
      return;
    case GateKind::FlipY:
      p.flip_sign(p.x(i) != p.z(i));
      return;
    case GateKind::FlipZ:
      p.flip_sign(p.x(i));
      return;
    case GateKind::S:
      detail::apply_s(p, i, v);
      return;
    case GateKind::Sinv:
      // S three times; S twice is FlipZ in both variants.
      detail::apply_s(p, i, v);
      p.flip_sign(p.x(i));
      return;
    case GateKind::H: {
      const bool x = p.x(i);
      const bool z = p.z(i);
      if (v == TheoryVariant::Quantum) {
        p.flip_sign(x && z);
      }
      p.set_x(i, z);
      p.set_z(i, x);
      return;
    }
    case GateKind::CZ: {
      const std::size_t j = g.b;
      const bool xi = p.x(i);
      const bool xj = p.x(j);
      const bool zi = p.z(i);
      const bool zj = p.z(j);
      const bool both = xi && xj;
      const bool parity = zi != zj;
      p.flip_sign(both && (c == CzChoice::Standard ? parity : !parity));
      p.set_z(i, zi != xj);
      p.set_z(j, zj != xi);
      return;
    }
  }
}

inline Proposition apply_gate(Proposition p, const Gate &g, TheoryVariant v, CzChoice c = CzChoice::Standard) {
  apply_gate_in_place(p, g, v, c);
  return p;
}

inline void apply_transcript_in_place(Proposition &p, const Transcript &t, TheoryVariant v,
                                      CzChoice c = CzChoice::Standard) {
  for (const auto &g : t) {
    apply_gate_in_place(p, g, v, c);
  }
}

/// Left-to-right fold of apply_gate.
inline Proposition apply_transcript(Proposition p, const Transcript &t, TheoryVariant v,
                                    CzChoice c = CzChoice::Standard) {
  apply_transcript_in_place(p, t, v, c);
  return p;
}

inline Gate inverse(const Gate &g) {
  Gate inv = g;
  if (g.kind == GateKind::S) {
    inv.kind = GateKind::Sinv;
  } else if (g.kind == GateKind::Sinv) {
    inv.kind = GateKind::S;
  }
  return inv;
}

/// Reverses the order and inverts each step. Every kind except S/Sinv is
/// self-inverse, including the tilde CZ.
inline Transcript invert_transcript(const Transcript &t) {
  Transcript out;
  out.reserve(t.size());
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    out.push_back(inverse(*it));
  }
  return out;
}

/// CNOT with control i and target j, as H on j, CZ, H on j.
inline Transcript cnot(std::size_t i, std::size_t j) {
  if (i == j) {
    throw InvalidGate("CNOT needs two distinct systems");
  }
  return {Gate::single(GateKind::H, j), Gate::cz(i, j), Gate::single(GateKind::H, j)};
}

// Text form, with 1-based indices:  S@2; H@1; CZ@(1,2)
// Single-system kinds are X, Y, Z (the flips), S, Sinv and H. CNOT@(i,j) is
// accepted on input and expands to its three steps.

inline std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::FlipX:
      return "X";
    case GateKind::FlipY:
      return "Y";
    case GateKind::FlipZ:
      return "Z";
    case GateKind::S:
      return "S";
    case GateKind::Sinv:
      return "Sinv";
    case GateKind::H:
      return "H";
    case GateKind::CZ:
      return "CZ";
  }
  return "?";
}

inline std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  static constexpr std::pair<std::string_view, GateKind> kNames[] = {
      {"X", GateKind::FlipX}, {"Y", GateKind::FlipY}, {"Z", GateKind::FlipZ}, {"S", GateKind::S},
      {"Sinv", GateKind::Sinv}, {"H", GateKind::H},   {"CZ", GateKind::CZ}};
  for (const auto &[n, k] : kNames) {
    if (n == name) {
      return k;
    }
  }
  return std::nullopt;
}

inline std::string format_gate(const Gate &g) {
  if (g.kind == GateKind::CZ) {
    return "CZ@(" + std::to_string(g.a + 1) + "," + std::to_string(g.b + 1) + ")";
  }
  return gate_name(g.kind) + "@" + std::to_string(g.a + 1);
}

inline std::string format_transcript(const Transcript &t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) {
      out += "; ";
    }
    out += format_gate(t[i]);
  }
  return out;
}

namespace detail {

class TranscriptParser {
 public:
  explicit TranscriptParser(std::string_view text) : text_(text) {}

  Transcript parse() {
    Transcript t;
    skip_space();
    if (pos_ == text_.size()) {
      return t;
    }
    while (true) {
      parse_step(t);
      skip_space();
      if (pos_ == text_.size()) {
        return t;
      }
      expect(';');
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::size_t parse_index() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError("expected a system index", start);
    }
    if (value == 0) {
      throw ParseError("system indices start at 1", start);
    }
    return value - 1;
  }

  void parse_step(Transcript &t) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    const bool is_cnot = name == "CNOT";
    const auto kind = gate_kind_from_name(name);
    if (!kind && !is_cnot) {
      throw ParseError("unknown gate '" + std::string(name) + "'", start);
    }
    expect('@');
    if (is_cnot || *kind == GateKind::CZ) {
      expect('(');
      const std::size_t i = parse_index();
      expect(',');
      const std::size_t j = parse_index();
      expect(')');
      if (i == j) {
        throw ParseError("two-system gate needs distinct indices", start);
      }
      if (is_cnot) {
        const auto steps = cnot(i, j);
        t.insert(t.end(), steps.begin(), steps.end());
      } else {
        t.push_back(Gate::cz(i, j));
      }
      return;
    }
    t.push_back(Gate::single(*kind, parse_index()));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Transcript parse_transcript(std::string_view text) { return detail::TranscriptParser(text).parse(); }

inline std::string to_string(TheoryVariant v) { return v == TheoryVariant::Quantum ? "quantum" : "toy"; }
inline std::string to_string(CzChoice c) { return c == CzChoice::Standard ? "standard" : "tilde"; }

inline TheoryVariant theory_from_string(std::string_view s) {
  if (s == "quantum") {
    return TheoryVariant::Quantum;
  }
  if (s == "toy") {
    return TheoryVariant::SpekkensToy;
  }
  throw Error("unknown theory '" + std::string(s) + "' (expected quantum or toy)");
}

inline CzChoice cz_from_string(std::string_view s) {
  if (s == "standard") {
    return CzChoice::Standard;
  }
  if (s == "tilde") {
    return CzChoice::Tilde;
  }
  throw Error("unknown CZ choice '" + std::string(s) + "' (expected standard or tilde)");
}

}  // namespace conjlogic
