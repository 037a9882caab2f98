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

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prol/core.hpp"
#include "prol/ring.hpp"

namespace prol {

// A noncommutative monomial X_{i_1}...X_{i_k} packed into 64 bits: the length
// sits in the top nibble, letters (index - 1) fill the low 4k bits with the
// first letter most significant. Numeric order is graded lexicographic.
using Mono = std::uint64_t;

inline constexpr int kMaxGenerators = 16;
inline constexpr int kMaxDegree = 15;

namespace mono {

inline constexpr Mono kOne = 0;

inline int length(Mono m) { return static_cast<int>(m >> 60); }

inline Mono body(Mono m) { return m & ((Mono(1) << 60) - 1); }

inline Mono make_raw(int len, Mono bits) { return (Mono(len) << 60) | bits; }

// 1-based letter at 0-based position k.
inline int letter(Mono m, int k) {
  int len = length(m);
  return static_cast<int>((m >> (4 * (len - 1 - k))) & 0xF) + 1;
}

inline Mono single(int i) { return make_raw(1, Mono(i - 1)); }

inline Mono concat(Mono a, Mono b) {
  int lb = length(b);
  return make_raw(length(a) + lb, (body(a) << (4 * lb)) | body(b));
}

inline Mono from_indices(const std::vector<int>& idx) {
  if (idx.size() > static_cast<std::size_t>(kMaxDegree)) throw ShapeMismatch("monomial too long");
  Mono bits = 0;
  for (int i : idx) {
    if (i < 1 || i > kMaxGenerators) throw IndexError("generator index out of range");
    bits = (bits << 4) | Mono(i - 1);
  }
  return make_raw(static_cast<int>(idx.size()), bits);
}

inline std::vector<int> to_indices(Mono m) {
  std::vector<int> out(length(m));
  for (int k = 0; k < length(m); ++k) out[k] = letter(m, k);
  return out;
}

inline int first(Mono m) { return letter(m, 0); }
inline int last(Mono m) { return letter(m, length(m) - 1); }

inline Mono drop_first(Mono m) {
  int len = length(m) - 1;
  return make_raw(len, body(m) & ((Mono(1) << (4 * len)) - 1));
}

inline Mono drop_last(Mono m) { return make_raw(length(m) - 1, body(m) >> 4); }

inline Mono reversed(Mono m) {
  Mono bits = 0;
  for (int k = length(m) - 1; k >= 0; --k) bits = (bits << 4) | Mono(letter(m, k) - 1);
  return make_raw(length(m), bits);
}

inline std::string render(Mono m) {
  std::string s;
  for (int k = 0; k < length(m); ++k) {
    if (k) s += '*';
    s += 'X' + std::to_string(letter(m, k));
  }
  return s;
}

}  // namespace mono

// Truncated series in Z<<X_1..X_r>> (or over Z/l^N) modulo degree > D.
class TruncNC {
 public:
  using Map = std::unordered_map<Mono, Int>;

  TruncNC(int r, int D, Ring ring) : r_(r), D_(D), ring_(std::move(ring)) {
    if (r < 1 || r > kMaxGenerators) throw ShapeMismatch("generator count out of range");
    if (D < 0 || D > kMaxDegree) throw ShapeMismatch("truncation degree out of range");
    if (ring_.kind() == Ring::Kind::rational) throw ShapeMismatch("rational coefficients not allowed in series");
  }

  static TruncNC constant(int r, int D, const Ring& ring, const Int& c) {
    TruncNC s(r, D, ring);
    s.add_to(mono::kOne, c);
    return s;
  }
  static TruncNC one(int r, int D, const Ring& ring) { return constant(r, D, ring, 1); }
  static TruncNC var(int r, int D, const Ring& ring, int i) {
    TruncNC s(r, D, ring);
    s.add_to(mono::single(i), 1);
    return s;
  }
  static TruncNC monomial(int r, int D, const Ring& ring, const std::vector<int>& idx, const Int& c = 1) {
    TruncNC s(r, D, ring);
    s.add_to(mono::from_indices(idx), c);
    return s;
  }

  int r() const { return r_; }
  int D() const { return D_; }
  const Ring& ring() const { return ring_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TruncNC zero_like() const { return TruncNC(r_, D_, ring_); }
  TruncNC one_like() const { return one(r_, D_, ring_); }

  Int coeff_at(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }
  Int coeff(const std::vector<int>& idx) const { return coeff_at(mono::from_indices(idx)); }
  Int constant_term() const { return coeff_at(mono::kOne); }

  void add_to(Mono m, const Int& c) {
    if (mono::length(m) > D_) return;
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second = ring_.reduce(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }

  int degree() const {
    int d = kInfiniteValuation;
    for (const auto& [m, c] : terms_) d = std::min(d, mono::length(m));
    return d;
  }

  TruncNC homogeneous(int n) const {
    TruncNC out = zero_like();
    for (const auto& [m, c] : terms_)
      if (mono::length(m) == n) out.terms_.emplace(m, c);
    return out;
  }

  TruncNC truncated(int d) const {
    TruncNC out = zero_like();
    for (const auto& [m, c] : terms_)
      if (mono::length(m) <= d) out.terms_.emplace(m, c);
    return out;
  }

  TruncNC with_D(int D) const {
    TruncNC out(r_, D, ring_);
    for (const auto& [m, c] : terms_)
      if (mono::length(m) <= D) out.terms_.emplace(m, c);
    return out;
  }

  TruncNC with_ring(const Ring& ring) const {
    TruncNC out(r_, D_, ring);
    for (const auto& [m, c] : terms_) out.add_to(m, c);
    return out;
  }

  TruncNC& operator+=(const TruncNC& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_to(m, c);
    return *this;
  }
  TruncNC& operator-=(const TruncNC& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_to(m, -c);
    return *this;
  }
  friend TruncNC operator+(TruncNC a, const TruncNC& b) { return a += b; }
  friend TruncNC operator-(TruncNC a, const TruncNC& b) { return a -= b; }
  TruncNC operator-() const { return scaled(-1); }

  TruncNC scaled(const Int& k) const {
    TruncNC out = zero_like();
    for (const auto& [m, c] : terms_) out.add_to(m, c * k);
    return out;
  }

  friend TruncNC operator*(const TruncNC& a, const TruncNC& b) {
    a.check(b);
    std::array<std::vector<std::pair<Mono, const Int*>>, kMaxDegree + 1> by_len;
    for (const auto& [m, c] : b.terms_) by_len[mono::length(m)].emplace_back(m, &c);
    Map acc;
    for (const auto& [ma, ca] : a.terms_) {
      int la = mono::length(ma);
      for (int lb = 0; lb + la <= a.D_; ++lb)
        for (const auto& [mb, cb] : by_len[lb]) acc[mono::concat(ma, mb)] += ca * *cb;
    }
    TruncNC out = a.zero_like();
    for (auto& [m, c] : acc) {
      Int v = a.ring_.reduce(c);
      if (v != 0) out.terms_.emplace(m, std::move(v));
    }
    return out;
  }
  TruncNC& operator*=(const TruncNC& o) { return *this = *this * o; }

  bool operator==(const TruncNC& o) const {
    return r_ == o.r_ && D_ == o.D_ && ring_ == o.ring_ && terms_ == o.terms_;
  }
  bool operator!=(const TruncNC& o) const { return !(*this == o); }

  TruncNC inverse() const {
    Int c = constant_term();
    if (!ring_.is_unit(c)) throw NotUnit("constant term is not a unit");
    Int ci = ring_.inv(c);
    TruncNC t = scaled(ci);
    t.add_to(mono::kOne, -1);
    TruncNC neg_t = -t;
    TruncNC acc = one_like(), power = one_like();
    for (int k = 1; k <= D_; ++k) {
      power = power * neg_t;
      if (power.is_zero()) break;
      acc += power;
    }
    return acc.scaled(ci);
  }

  TruncNC reversed() const {
    TruncNC out = zero_like();
    for (const auto& [m, c] : terms_) out.terms_.emplace(mono::reversed(m), c);
    return out;
  }

  // Algebra map X_i -> images[i-1]; every image must have zero constant term.
  // The result lives in the space of the images.
  TruncNC substitute(const std::vector<TruncNC>& images) const {
    if (static_cast<int>(images.size()) != r_) throw ShapeMismatch("substitution arity");
    std::vector<int> mindeg(r_);
    for (int i = 0; i < r_; ++i) {
      if (images[i].constant_term() != 0) throw Error("substitution image with constant term");
      images[0].check(images[i]);
      mindeg[i] = images[i].degree();
    }
    std::vector<std::pair<Mono, Int>> items(terms_.begin(), terms_.end());
    return subst_rec(items, images, mindeg, images[0].D());
  }

  // Multiplies the degree-n part by chi^n (the scalar action on H extended).
  TruncNC scale_by_degree(const Int& chi) const {
    std::array<Int, kMaxDegree + 1> pw;
    pw[0] = 1;
    for (int k = 1; k <= D_; ++k) pw[k] = ring_.reduce(pw[k - 1] * chi);
    TruncNC out = zero_like();
    for (const auto& [m, c] : terms_) out.add_to(m, c * pw[mono::length(m)]);
    return out;
  }

  // The image of f -> f^{-1} on the Magnus algebra.
  TruncNC bar() const {
    std::vector<TruncNC> images;
    for (int i = 1; i <= r_; ++i) {
      TruncNC s = zero_like();
      std::vector<int> idx;
      for (int k = 1; k <= D_; ++k) {
        idx.push_back(i);
        s.add_to(mono::from_indices(idx), (k % 2) ? -1 : 1);
      }
      images.push_back(std::move(s));
    }
    return reversed().substitute(images);
  }

  std::vector<std::pair<Mono, Int>> sorted_terms() const {
    std::vector<std::pair<Mono, Int>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
      s += render_coeff_term(c, mono::render(m), first);
      first = false;
    }
    return s;
  }

 private:
  void check(const TruncNC& o) const {
    if (r_ != o.r_ || D_ != o.D_ || ring_ != o.ring_) throw ShapeMismatch("series shape or ring mismatch");
  }

  static TruncNC subst_rec(const std::vector<std::pair<Mono, Int>>& items, const std::vector<TruncNC>& images,
                           const std::vector<int>& mindeg, int budget) {
    const TruncNC& proto = images[0];
    TruncNC out = proto.zero_like();
    if (budget < 0) return out;
    std::vector<std::vector<std::pair<Mono, Int>>> groups(images.size());
    for (const auto& [m, c] : items) {
      if (mono::length(m) == 0) {
        out.add_to(m, c);
      } else {
        groups[mono::first(m) - 1].emplace_back(mono::drop_first(m), c);
      }
    }
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (groups[i].empty() || mindeg[i] > budget) continue;
      TruncNC rest = subst_rec(groups[i], images, mindeg, budget - mindeg[i]);
      if (!rest.is_zero()) out += images[i] * rest;
    }
    return out;
  }

  int r_;
  int D_;
  Ring ring_;
  Map terms_;
};

// sum_{k=0..D} C(alpha, k) s^k, with exact binomials reduced into the ring.
inline TruncNC binomial_pow(const TruncNC& s, const Int& alpha) {
  if (s.constant_term() != 0) throw Error("binomial_pow needs zero constant term");
  TruncNC acc = s.one_like(), power = s.one_like();
  for (int k = 1; k <= s.D(); ++k) {
    power = power * s;
    if (power.is_zero()) break;
    Int b = binom(alpha, static_cast<unsigned>(k));
    if (s.ring().reduce(b) != 0) acc += power.scaled(b);
  }
  return acc;
}

}  // namespace prol
