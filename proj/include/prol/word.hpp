// Copyright 2026 The prol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prol/core.hpp"
#include "prol/ring.hpp"

namespace prol {

struct Letter {
  int gen;
  Int exp;
  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
  bool operator<(const Letter& o) const { return gen != o.gen ? gen < o.gen : exp < o.exp; }
};

// Freely reduced word in F_r with integer exponents.
class Word {
 public:
  Word() = default;
  explicit Word(int r) : r_(r) {}
  Word(int r, const std::vector<Letter>& raw) : r_(r) {
    for (const auto& l : raw) push(l.gen, l.exp);
  }

  static Word gen(int r, int i, const Int& e = 1) {
    Word w(r);
    w.push(i, e);
    return w;
  }

  int r() const { return r_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // Appends x_gen^exp with free reduction at the seam.
  void push(int gen, const Int& exp) {
    if (gen < 1 || gen > r_) throw IndexError("generator x" + std::to_string(gen) + " out of range");
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == gen) {
      letters_.back().exp += exp;
      if (letters_.back().exp == 0) letters_.pop_back();
    } else {
      letters_.push_back({gen, exp});
    }
  }

  Word inverse() const {
    Word w(r_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
    return w;
  }

  Word& operator*=(const Word& o) {
    if (o.r_ != r_) throw ShapeMismatch("rank mismatch");
    for (const auto& l : o.letters_) push(l.gen, l.exp);
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  bool operator==(const Word& o) const { return r_ == o.r_ && letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const {
    return r_ != o.r_ ? r_ < o.r_ : letters_ < o.letters_;
  }

  // Exponent sum of x_i.
  Int exponent_sum(int i) const {
    Int s = 0;
    for (const auto& l : letters_)
      if (l.gen == i) s += l.exp;
    return s;
  }

  Int syllable_length() const {
    Int s = 0;
    for (const auto& l : letters_) s += abs(l.exp);
    return s;
  }

  std::string str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const auto& l : letters_) {
      if (!s.empty()) s += '*';
      s += 'x' + std::to_string(l.gen);
      if (l.exp != 1) s += '^' + l.exp.str();
    }
    return s;
  }

 private:
  int r_ = 0;
  std::vector<Letter> letters_;
};

inline Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

inline Word conjugate(const Word& f, const Word& w) { return f * w * f.inverse(); }

// w = z c z^{-1} with c cyclically reduced and z a prefix of w.
inline std::pair<Word, Word> cyclic_decompose(const Word& w) {
  const auto& L = w.letters();
  Word z(w.r());
  if (L.empty()) return {z, Word(w.r())};
  std::size_t i = 0, j = L.size() - 1;
  while (j > i && L[i].gen == L[j].gen) {
    if (L[i].exp + L[j].exp == 0) {
      z.push(L[i].gen, L[i].exp);
      ++i;
      --j;
      continue;
    }
    z.push(L[i].gen, L[i].exp);
    Word c(w.r());
    for (std::size_t k = i + 1; k < j; ++k) c.push(L[k].gen, L[k].exp);
    c.push(L[i].gen, L[i].exp + L[j].exp);
    return {z, c};
  }
  Word c(w.r());
  for (std::size_t k = i; k <= j; ++k) c.push(L[k].gen, L[k].exp);
  return {z, c};
}

inline constexpr long kMaxWordPower = 1L << 16;

// w^alpha. Arbitrary alpha when the cyclic core is a single syllable.
inline Word power(const Word& w, const Int& alpha) {
  if (alpha == 0 || w.is_identity()) return Word(w.r());
  auto [z, c] = cyclic_decompose(w);
  Word core(w.r());
  if (c.size() == 1) {
    core.push(c.letters()[0].gen, c.letters()[0].exp * alpha);
  } else {
    if (abs(alpha) > kMaxWordPower) throw Error("word power too large for a multi-syllable core");
    Word base = alpha > 0 ? c : c.inverse();
    long n = to_long(abs(alpha));
    for (long k = 0; k < n; ++k) core *= base;
  }
  return z * core * z.inverse();
}

// Some a with a t a^{-1} = c for cyclically reduced c, t; nullopt if they are
// not cyclic rotations of each other.
inline std::optional<Word> rotation_conjugator(const Word& c, const Word& t) {
  if (c.r() != t.r()) throw ShapeMismatch("rank mismatch");
  if (c == t) return Word(c.r());
  if (c.syllable_length() != t.syllable_length() || c.syllable_length() > 200000) return std::nullopt;
  std::vector<std::pair<int, int>> unit;
  for (const auto& l : c.letters()) {
    int s = l.exp > 0 ? 1 : -1;
    for (long k = 0; k < to_long(abs(l.exp)); ++k) unit.push_back({l.gen, s});
  }
  Word a(c.r());
  for (std::size_t k = 0; k < unit.size(); ++k) {
    a.push(unit[k].first, unit[k].second);
    if (a * t * a.inverse() == c) return a;
  }
  return std::nullopt;
}

// Grammar: expr := factor ('*'? factor)* ; factor := atom ('^' int)* ;
// atom := 'x'<n> | '1' | '(' expr ')' | '[' expr ',' expr ']'.
class WordParser {
 public:
  WordParser(std::string text, int r) : s_(std::move(text)), r_(r) {}

  Word parse() {
    Word w = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == 'x' || c == '(' || c == '[' || c == '1';
  }
  Int integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    bool paren = false;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      paren = true;
      ++pos_;
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg ^= s_[pos_++] == '-';
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    Int v(s_.substr(start, pos_ - start));
    if (paren) {
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    }
    return neg ? Int(-v) : v;
  }
  Word expr() {
    Word w = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        w *= factor();
      } else if (starts_factor()) {
        w *= factor();
      } else {
        return w;
      }
    }
  }
  Word factor() {
    Word w = atom();
    while (peek('^')) {
      ++pos_;
      w = power(w, integer());
    }
    return w;
  }
  Word atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected generator index");
      int i = std::stoi(s_.substr(start, pos_ - start));
      if (i < 1 || i > r_) {
        pos_ = start;
        fail("generator index out of range");
      }
      return Word::gen(r_, i);
    }
    if (c == '1') {
      ++pos_;
      return Word(r_);
    }
    if (c == '(') {
      ++pos_;
      Word w = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word a = expr();
      if (!peek(',')) fail("expected ','");
      ++pos_;
      Word b = expr();
      if (!peek(']')) fail("expected ']'");
      ++pos_;
      return commutator(a, b);
    }
    fail("unexpected character");
  }

  std::string s_;
  int r_;
  std::size_t pos_ = 0;
};

inline Word parse_word(const std::string& text, int r) { return WordParser(text, r).parse(); }

// Finite Z-linear (or Z/l^N-linear) combination of words.
class GroupRingElt {
 public:
  using Map = std::map<Word, Int>;

  GroupRingElt(int r, Ring ring = Ring::integers()) : r_(r), ring_(std::move(ring)) {}
  static GroupRingElt of(const Word& w, const Int& c = 1, const Ring& ring = Ring::integers()) {
    GroupRingElt e(w.r(), ring);
    e.add(w, c);
    return e;
  }

  int r() const { return r_; }
  const Ring& ring() const { return ring_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, const Int& c) {
    auto [it, inserted] = terms_.try_emplace(w, 0);
    it->second = ring_.reduce(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }

  Int augmentation() const {
    Int s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return ring_.reduce(s);
  }

  GroupRingElt& operator+=(const GroupRingElt& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  GroupRingElt& operator-=(const GroupRingElt& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
  friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }
  friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
    GroupRingElt out(a.r_, a.ring_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add(wa * wb, ca * cb);
    return out;
  }
  GroupRingElt scaled(const Int& k) const {
    GroupRingElt out(r_, ring_);
    for (const auto& [w, c] : terms_) out.add(w, c * k);
    return out;
  }
  bool operator==(const GroupRingElt& o) const { return r_ == o.r_ && terms_ == o.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      s += render_coeff_term(c, w.is_identity() ? std::string() : w.str(), first);
      first = false;
    }
    return s;
  }

 private:
  int r_;
  Ring ring_;
  Map terms_;
};

}  // namespace prol
