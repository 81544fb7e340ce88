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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conjlogic/error.hpp"

namespace conjlogic {

/// Single-system letter in symplectic form. Bit 0 is x, bit 1 is z.
enum class PauliLetter : std::uint8_t { I = 0b00, X = 0b01, Z = 0b10, Y = 0b11 };

constexpr PauliLetter make_letter(bool x, bool z) {
  return static_cast<PauliLetter>(static_cast<std::uint8_t>(x) | (static_cast<std::uint8_t>(z) << 1));
}
constexpr bool x_bit(PauliLetter l) { return (static_cast<std::uint8_t>(l) & 1u) != 0; }
constexpr bool z_bit(PauliLetter l) { return (static_cast<std::uint8_t>(l) & 2u) != 0; }
constexpr bool is_nontrivial(PauliLetter l) { return l != PauliLetter::I; }

constexpr char to_char(PauliLetter l) {
  switch (l) {
    case PauliLetter::I:
      return 'I';
    case PauliLetter::X:
      return 'X';
    case PauliLetter::Z:
      return 'Z';
    case PauliLetter::Y:
      return 'Y';
  }
  return '?';
}

constexpr std::optional<PauliLetter> letter_from_char(char c) {
  switch (c) {
    case 'I':
      return PauliLetter::I;
    case 'X':
      return PauliLetter::X;
    case 'Y':
      return PauliLetter::Y;
    case 'Z':
      return PauliLetter::Z;
    default:
      return std::nullopt;
  }
}

/// Signed Pauli-string proposition <±P1...Pn>.
///
/// Sign 0 reads "a joint measurement of the string gives outcome 0"; sign 1 is
/// its negation. Letters are packed 64 per word in separate x and z planes;
/// bits past `size()` in the last word are always zero.
class Proposition {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Proposition() = default;

  /// The all-identity string on n systems, i.e. the tautology <I...I>.
  explicit Proposition(std::size_t n, bool sign = false)
      : n_(n), xs_(words_for(n), 0), zs_(words_for(n), 0), sign_(sign) {}

  /// Builds from a bare letter string such as "XYZ". Throws on other characters.
  static Proposition from_letters(std::string_view letters, bool sign = false) {
    Proposition p(letters.size(), sign);
    for (std::size_t i = 0; i < letters.size(); ++i) {
      auto l = letter_from_char(letters[i]);
      if (!l) {
        throw Error(std::string("invalid Pauli letter '") + letters[i] + "'");
      }
      p.set_letter(i, *l);
    }
    return p;
  }

  static constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

  std::size_t size() const { return n_; }
  bool sign() const { return sign_; }
  void set_sign(bool s) { sign_ = s; }
  void flip_sign(bool flip = true) { sign_ ^= flip; }

  bool x(std::size_t i) const { return ((xs_[i / kWordBits] >> (i % kWordBits)) & 1u) != 0; }
  bool z(std::size_t i) const { return ((zs_[i / kWordBits] >> (i % kWordBits)) & 1u) != 0; }
  PauliLetter letter(std::size_t i) const { return make_letter(x(i), z(i)); }

  void set_x(std::size_t i, bool v) { set_bit(xs_, i, v); }
  void set_z(std::size_t i, bool v) { set_bit(zs_, i, v); }
  void set_letter(std::size_t i, PauliLetter l) {
    set_x(i, x_bit(l));
    set_z(i, z_bit(l));
  }

  std::span<const Word> x_words() const { return xs_; }
  std::span<const Word> z_words() const { return zs_; }
  std::span<Word> x_words() { return xs_; }
  std::span<Word> z_words() { return zs_; }

  bool is_identity() const {
    for (std::size_t w = 0; w < xs_.size(); ++w) {
      if ((xs_[w] | zs_[w]) != 0) {
        return false;
      }
    }
    return true;
  }

  std::string letters() const {
    std::string s(n_, 'I');
    for (std::size_t i = 0; i < n_; ++i) {
      s[i] = to_char(letter(i));
    }
    return s;
  }

  /// Letter-wise product of strings with the signs XORed. This is the
  /// combination rule for commuting propositions reduced to disjoint single-X
  /// form; it is not a phase-tracked operator product.
  Proposition &xor_assign(const Proposition &other) {
    if (other.n_ != n_) {
      throw DimensionMismatch(n_, other.n_);
    }
    for (std::size_t w = 0; w < xs_.size(); ++w) {
      xs_[w] ^= other.xs_[w];
      zs_[w] ^= other.zs_[w];
    }
    sign_ ^= other.sign_;
    return *this;
  }

  friend bool operator==(const Proposition &, const Proposition &) = default;

  /// Same letter string, signs ignored.
  bool same_letters(const Proposition &other) const { return n_ == other.n_ && xs_ == other.xs_ && zs_ == other.zs_; }

 private:
  static void set_bit(std::vector<Word> &words, std::size_t i, bool v) {
    const Word mask = Word{1} << (i % kWordBits);
    if (v) {
      words[i / kWordBits] |= mask;
    } else {
      words[i / kWordBits] &= ~mask;
    }
  }

  std::size_t n_ = 0;
  std::vector<Word> xs_;
  std::vector<Word> zs_;
  bool sign_ = false;
};

inline Proposition tautology(std::size_t n) { return Proposition(n, false); }
inline Proposition contradiction(std::size_t n) { return Proposition(n, true); }

inline Proposition negate_prop(Proposition p) {
  p.flip_sign();
  return p;
}

/// Number of nontrivial letters.
inline std::size_t weight(const Proposition &p) {
  std::size_t w = 0;
  const auto xs = p.x_words();
  const auto zs = p.z_words();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    w += static_cast<std::size_t>(std::popcount(xs[i] | zs[i]));
  }
  return w;
}

/// Lowest index holding a nontrivial letter, or nullopt for the identity string.
inline std::optional<std::size_t> first_nontrivial(const Proposition &p) {
  const auto xs = p.x_words();
  const auto zs = p.z_words();
  for (std::size_t w = 0; w < xs.size(); ++w) {
    if (const auto bits = xs[w] | zs[w]; bits != 0) {
      return w * Proposition::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    }
  }
  return std::nullopt;
}

/// Two strings are compatible when they disagree, with both letters nontrivial,
/// at an even number of positions (zero symplectic product). Signs are ignored.
inline bool compatible(const Proposition &p, const Proposition &q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch(p.size(), q.size());
  }
  const auto px = p.x_words();
  const auto pz = p.z_words();
  const auto qx = q.x_words();
  const auto qz = q.z_words();
  unsigned parity = 0;
  for (std::size_t w = 0; w < px.size(); ++w) {
    parity ^= static_cast<unsigned>(std::popcount((px[w] & qz[w]) ^ (pz[w] & qx[w])));
  }
  return (parity & 1u) == 0;
}

// Text form: prop := '<' sign? letter+ '>', sign := '-' | '¬', letter := I|X|Y|Z.

enum class PropErrorKind { BadLetter, EmptyString, MalformedSign, LengthMismatch, MissingBracket };

class PropParseError : public ParseError {
 public:
  PropParseError(const std::string &what, std::size_t position, PropErrorKind kind)
      : ParseError(what, position), kind_(kind) {}

  PropErrorKind kind() const { return kind_; }

 private:
  PropErrorKind kind_;
};

namespace detail {

inline constexpr std::string_view kNotSign = "¬";

/// Parses the body between the brackets. `offset` is the body's position in the
/// caller's text, used for error positions.
inline Proposition parse_prop_body(std::string_view body, std::size_t offset) {
  bool sign = false;
  std::size_t pos = 0;
  if (body.starts_with('-')) {
    sign = true;
    pos = 1;
  } else if (body.starts_with(kNotSign)) {
    sign = true;
    pos = kNotSign.size();
  }
  if (pos == body.size()) {
    if (body.empty()) {
      throw PropParseError("empty proposition", offset, PropErrorKind::EmptyString);
    }
    throw PropParseError("sign without letters", offset + pos, PropErrorKind::EmptyString);
  }
  Proposition p(body.size() - pos, sign);
  for (std::size_t i = pos; i < body.size(); ++i) {
    const char c = body[i];
    if (auto l = letter_from_char(c)) {
      p.set_letter(i - pos, *l);
      continue;
    }
    if (c == '-' || body.substr(i).starts_with(kNotSign)) {
      throw PropParseError("misplaced sign", offset + i, PropErrorKind::MalformedSign);
    }
    throw PropParseError(std::string("bad letter '") + c + "'", offset + i, PropErrorKind::BadLetter);
  }
  return p;
}

}  // namespace detail

inline Proposition parse_prop(std::string_view text, std::optional<std::size_t> expected_n = std::nullopt) {
  if (text.empty()) {
    throw PropParseError("empty proposition", 0, PropErrorKind::EmptyString);
  }
  if (text.front() != '<') {
    throw PropParseError("expected '<'", 0, PropErrorKind::MissingBracket);
  }
  const auto close = text.find('>');
  if (close == std::string_view::npos) {
    throw PropParseError("expected '>'", text.size(), PropErrorKind::MissingBracket);
  }
  if (close + 1 != text.size()) {
    throw PropParseError("trailing characters after '>'", close + 1, PropErrorKind::MissingBracket);
  }
  Proposition p = detail::parse_prop_body(text.substr(1, close - 1), 1);
  if (expected_n && p.size() != *expected_n) {
    throw PropParseError("expected " + std::to_string(*expected_n) + " letters, got " + std::to_string(p.size()), 1,
                         PropErrorKind::LengthMismatch);
  }
  return p;
}

inline std::string format_prop(const Proposition &p) {
  return std::string("<") + (p.sign() ? "-" : "") + p.letters() + ">";
}

inline std::ostream &operator<<(std::ostream &out, const Proposition &p) { return out << format_prop(p); }

/// Total order used for listings: letter string (I < X < Y < Z), then sign.
inline bool letter_order_less(const Proposition &a, const Proposition &b) {
  const auto la = a.letters();
  const auto lb = b.letters();
  if (la != lb) {
    return la < lb;
  }
  return a.sign() < b.sign();
}

}  // namespace conjlogic
