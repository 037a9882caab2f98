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
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prol/core.hpp"
#include "prol/ring.hpp"

namespace prol {

// Commutative exponent vector: one byte per variable, u_1 in the top byte.
using Expo = std::uint64_t;

inline constexpr int kMaxCommVars = 8;

namespace expo {

inline int get(Expo e, int i) { return static_cast<int>((e >> (8 * (7 - (i - 1)))) & 0xFF); }

inline Expo unit(int i, int k = 1) { return Expo(k) << (8 * (7 - (i - 1))); }

inline int total(Expo e) {
  int t = 0;
  for (int i = 1; i <= kMaxCommVars; ++i) t += get(e, i);
  return t;
}

inline bool divides(Expo a, Expo b) {
  for (int i = 1; i <= kMaxCommVars; ++i)
    if (get(a, i) > get(b, i)) return false;
  return true;
}

inline Expo from_vector(const std::vector<int>& v) {
  if (v.size() > static_cast<std::size_t>(kMaxCommVars)) throw ShapeMismatch("too many variables");
  Expo e = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > 255) throw ShapeMismatch("exponent out of range");
    e |= unit(static_cast<int>(i) + 1, v[i]);
  }
  return e;
}

inline std::string render(Expo e, const std::string& var = "u") {
  std::string s;
  for (int i = 1; i <= kMaxCommVars; ++i) {
    int k = get(e, i);
    if (!k) continue;
    if (!s.empty()) s += '*';
    s += var + std::to_string(i);
    if (k > 1) s += '^' + std::to_string(k);
  }
  return s;
}

}  // namespace expo

// Truncated commutative series in u_1..u_r modulo total degree > D.
class TruncComm {
 public:
  using Map = std::unordered_map<Expo, Int>;

  TruncComm(int r, int D, Ring ring) : r_(r), D_(D), ring_(std::move(ring)) {
    if (r < 1 || r > kMaxCommVars) throw ShapeMismatch("variable count out of range");
    if (D < 0 || D > 255) throw ShapeMismatch("truncation degree out of range");
    if (ring_.kind() == Ring::Kind::rational) throw ShapeMismatch("rational coefficients not allowed in series");
  }

  static TruncComm constant(int r, int D, const Ring& ring, const Int& c) {
    TruncComm s(r, D, ring);
    s.add_to(0, c);
    return s;
  }
  static TruncComm one(int r, int D, const Ring& ring) { return constant(r, D, ring, 1); }
  static TruncComm var(int r, int D, const Ring& ring, int i) {
    TruncComm s(r, D, ring);
    s.add_to(expo::unit(i), 1);
    return s;
  }

  int r() const { return r_; }
  int D() const { return D_; }
  const Ring& ring() const { return ring_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  TruncComm zero_like() const { return TruncComm(r_, D_, ring_); }
  TruncComm one_like() const { return one(r_, D_, ring_); }
  TruncComm const_like(const Int& c) const { return constant(r_, D_, ring_, c); }
  TruncComm var_like(int i) const { return var(r_, D_, ring_, i); }

  Int coeff_at(Expo e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }
  Int coeff(const std::vector<int>& v) const { return coeff_at(expo::from_vector(v)); }
  Int constant_term() const { return coeff_at(Expo(0)); }

  void add_to(Expo e, const Int& c) {
    if (expo::total(e) > D_) return;
    auto [it, inserted] = terms_.try_emplace(e, 0);
    it->second = ring_.reduce(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }

  int degree() const {
    int d = kInfiniteValuation;
    for (const auto& [e, c] : terms_) d = std::min(d, expo::total(e));
    return d;
  }

  TruncComm homogeneous(int n) const {
    TruncComm out = zero_like();
    for (const auto& [e, c] : terms_)
      if (expo::total(e) == n) out.terms_.emplace(e, c);
    return out;
  }

  TruncComm truncated(int d) const {
    TruncComm out = zero_like();
    for (const auto& [e, c] : terms_)
      if (expo::total(e) <= d) out.terms_.emplace(e, c);
    return out;
  }

  TruncComm with_D(int D) const {
    TruncComm out(r_, D, ring_);
    for (const auto& [e, c] : terms_)
      if (expo::total(e) <= D) out.terms_.emplace(e, c);
    return out;
  }

  TruncComm with_ring(const Ring& ring) const {
    TruncComm out(r_, D_, ring);
    for (const auto& [e, c] : terms_) out.add_to(e, c);
    return out;
  }

  TruncComm& operator+=(const TruncComm& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_to(e, c);
    return *this;
  }
  TruncComm& operator-=(const TruncComm& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_to(e, -c);
    return *this;
  }
  friend TruncComm operator+(TruncComm a, const TruncComm& b) { return a += b; }
  friend TruncComm operator-(TruncComm a, const TruncComm& b) { return a -= b; }
  TruncComm operator-() const { return scaled(-1); }

  TruncComm scaled(const Int& k) const {
    TruncComm out = zero_like();
    for (const auto& [e, c] : terms_) out.add_to(e, c * k);
    return out;
  }

  friend TruncComm operator*(const TruncComm& a, const TruncComm& b) {
    a.check(b);
    std::vector<std::pair<int, std::pair<Expo, const Int*>>> bl;
    bl.reserve(b.terms_.size());
    for (const auto& [e, c] : b.terms_) bl.push_back({expo::total(e), {e, &c}});
    Map acc;
    for (const auto& [ea, ca] : a.terms_) {
      int da = expo::total(ea);
      for (const auto& [db, pr] : bl)
        if (da + db <= a.D_) acc[ea + pr.first] += ca * *pr.second;
    }
    TruncComm out = a.zero_like();
    for (auto& [e, c] : acc) {
      Int v = a.ring_.reduce(c);
      if (v != 0) out.terms_.emplace(e, std::move(v));
    }
    return out;
  }
  TruncComm& operator*=(const TruncComm& o) { return *this = *this * o; }

  bool operator==(const TruncComm& o) const {
    return r_ == o.r_ && D_ == o.D_ && ring_ == o.ring_ && terms_ == o.terms_;
  }
  bool operator!=(const TruncComm& o) const { return !(*this == o); }

  TruncComm inverse() const {
    Int c = constant_term();
    if (!ring_.is_unit(c)) throw NotUnit("constant term is not a unit");
    Int ci = ring_.inv(c);
    TruncComm t = scaled(ci);
    t.add_to(0, -1);
    TruncComm neg_t = -t, acc = one_like(), power = one_like();
    for (int k = 1; k <= D_; ++k) {
      power = power * neg_t;
      if (power.is_zero()) break;
      acc += power;
    }
    return acc.scaled(ci);
  }

  // Ring map u_i -> images[i-1] (zero constant terms), landing in the images' space.
  TruncComm substitute(const std::vector<TruncComm>& images) const {
    if (static_cast<int>(images.size()) != r_) throw ShapeMismatch("substitution arity");
    const TruncComm& proto = images[0];
    std::vector<std::vector<TruncComm>> powers(r_);
    for (int i = 0; i < r_; ++i) {
      if (images[i].constant_term() != 0) throw Error("substitution image with constant term");
      powers[i].push_back(proto.one_like());
    }
    auto power_of = [&](int i, int k) -> const TruncComm& {
      while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * images[i]);
      return powers[i][k];
    };
    TruncComm out = proto.zero_like();
    for (const auto& [e, c] : terms_) {
      TruncComm t = proto.const_like(c);
      for (int i = 1; i <= r_ && !t.is_zero(); ++i) {
        int k = expo::get(e, i);
        if (k) t = t * power_of(i - 1, k);
      }
      out += t;
    }
    return out;
  }

  // Exact division by a monomial; throws DivisionObstruction when some term is
  // not divisible. The result keeps D, so the top degrees are lost.
  TruncComm divide_monomial(Expo m) const {
    TruncComm out = zero_like();
    for (const auto& [e, c] : terms_) {
      if (!expo::divides(m, e)) throw DivisionObstruction("term " + expo::render(e) + " not divisible");
      out.terms_.emplace(e - m, c);
    }
    return out;
  }

  std::vector<std::pair<Expo, Int>> sorted_terms() const {
    std::vector<std::pair<Expo, Int>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
      int dx = expo::total(x.first), dy = expo::total(y.first);
      return dx != dy ? dx < dy : x.first > y.first;
    });
    return v;
  }

  std::string str(const std::string& var = "u") const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : sorted_terms()) {
      s += render_coeff_term(c, expo::render(e, var), first);
      first = false;
    }
    return s;
  }

 private:
  void check(const TruncComm& o) const {
    if (r_ != o.r_ || D_ != o.D_ || ring_ != o.ring_) throw ShapeMismatch("series shape or ring mismatch");
  }

  int r_;
  int D_;
  Ring ring_;
  Map terms_;
};

// (1+s)^alpha - 1 style helper: sum_{k=0..D} C(alpha,k) s^k.
inline TruncComm binomial_pow(const TruncComm& s, const Int& alpha) {
  if (s.constant_term() != 0) throw Error("binomial_pow needs zero constant term");
  TruncComm acc = s.one_like(), power = s.one_like();
  for (int k = 1; k <= s.D(); ++k) {
    power = power * s;
    if (power.is_zero()) break;
    acc += power.scaled(binom(alpha, static_cast<unsigned>(k)));
  }
  return acc;
}

// Exact Laurent polynomial in t_1..t_r over Z.
class LaurentPoly {
 public:
  using Map = std::map<std::vector<int>, Int>;

  explicit LaurentPoly(int r) : r_(r) {}
  static LaurentPoly constant(int r, const Int& c) {
    LaurentPoly p(r);
    p.add_to(std::vector<int>(r, 0), c);
    return p;
  }
  static LaurentPoly monomial(int r, int i, int k, const Int& c = 1) {
    std::vector<int> e(r, 0);
    e[i - 1] = k;
    LaurentPoly p(r);
    p.add_to(e, c);
    return p;
  }

  int r() const { return r_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_to(const std::vector<int>& e, const Int& c) {
    if (static_cast<int>(e.size()) != r_) throw ShapeMismatch("exponent arity");
    auto [it, inserted] = terms_.try_emplace(e, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_to(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_to(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(a.r_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(a.r_);
        for (int i = 0; i < a.r_; ++i) e[i] = ea[i] + eb[i];
        out.add_to(e, ca * cb);
      }
    return out;
  }
  bool operator==(const LaurentPoly& o) const { return r_ == o.r_ && terms_ == o.terms_; }

  // Value at t_1 = ... = t_r = 1.
  Int at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  // Image under t_i -> 1 + u_i in the truncated Iwasawa algebra.
  TruncComm expand(int D, const Ring& ring) const {
    TruncComm out(r_, D, ring);
    for (const auto& [e, c] : terms_) {
      TruncComm t = TruncComm::constant(r_, D, ring, c);
      for (int i = 0; i < r_; ++i)
        if (e[i]) t = t * binomial_pow(TruncComm::var(r_, D, ring, i + 1), Int(e[i]));
      out += t;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mon;
      for (int i = 0; i < r_; ++i) {
        if (!it->first[i]) continue;
        if (!mon.empty()) mon += '*';
        mon += "t" + std::to_string(i + 1);
        if (it->first[i] != 1) mon += "^" + std::to_string(it->first[i]);
      }
      s += render_coeff_term(it->second, mon, first);
      first = false;
    }
    return s;
  }

 private:
  int r_;
  Map terms_;
};

}  // namespace prol
