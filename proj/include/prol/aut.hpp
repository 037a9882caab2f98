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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "prol/magnus.hpp"

namespace prol {

// Endomorphism of F_r given by the images of the generators, with an optional
// known inverse.
class FreeAut {
 public:
  FreeAut(int r, std::vector<Word> images, std::optional<std::vector<Word>> inverse = std::nullopt)
      : r_(r), images_(std::move(images)), inverse_(std::move(inverse)) {
    if (static_cast<int>(images_.size()) != r_) throw ShapeMismatch("need one image per generator");
    for (const auto& w : images_)
      if (w.r() != r_) throw ShapeMismatch("image rank mismatch");
  }

  static FreeAut identity(int r) {
    std::vector<Word> im;
    for (int i = 1; i <= r; ++i) im.push_back(Word::gen(r, i));
    return FreeAut(r, im, im);
  }

  // Int(f): x -> f x f^{-1}.
  static FreeAut inner(const Word& f) {
    std::vector<Word> im, inv;
    for (int i = 1; i <= f.r(); ++i) {
      im.push_back(conjugate(f, Word::gen(f.r(), i)));
      inv.push_back(conjugate(f.inverse(), Word::gen(f.r(), i)));
    }
    return FreeAut(f.r(), im, inv);
  }

  int r() const { return r_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int i) const { return images_.at(i - 1); }
  bool has_inverse() const { return inverse_.has_value(); }

  FreeAut inverse() const {
    if (!inverse_) throw Error("inverse automorphism not available");
    return FreeAut(r_, *inverse_, images_);
  }

  Word apply(const Word& w) const {
    Word out(r_);
    for (const auto& l : w.letters()) out *= power(images_[l.gen - 1], l.exp);
    return out;
  }

  GroupRingElt apply(const GroupRingElt& e) const {
    GroupRingElt out(r_, e.ring());
    for (const auto& [w, c] : e.terms()) out.add(apply(w), c);
    return out;
  }

  // this o other
  FreeAut compose(const FreeAut& other) const {
    std::vector<Word> im;
    for (const auto& w : other.images_) im.push_back(apply(w));
    std::optional<std::vector<Word>> inv;
    if (inverse_ && other.inverse_) {
      FreeAut a = other.inverse();
      std::vector<Word> v;
      for (const auto& w : *inverse_) v.push_back(a.apply(w));
      inv = v;
    }
    return FreeAut(r_, im, inv);
  }

  // Theta o phi o Theta^{-1} on a truncated series: X_i -> Theta(phi(x_i)) - 1.
  TruncNC act(const TruncNC& s) const {
    std::vector<TruncNC> sub;
    for (const auto& w : images_) {
      TruncNC t = magnus(w, s.D(), s.ring());
      t.add_to(mono::kOne, -1);
      sub.push_back(std::move(t));
    }
    return s.substitute(sub);
  }

  bool operator==(const FreeAut& o) const { return r_ == o.r_ && images_ == o.images_; }

  std::string str() const {
    std::string s;
    for (int i = 1; i <= r_; ++i) s += (i > 1 ? ", " : "") + std::string("x") + std::to_string(i) + " -> " + image(i).str();
    return s;
  }

 private:
  int r_;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_;
};

inline FreeAut operator*(const FreeAut& a, const FreeAut& b) { return a.compose(b); }

// Norm chi and preferred longitudes: phi(x_i) = y_i x_i^chi y_i^{-1}.
struct AutP {
  int r = 0;
  Int chi = 1;
  std::vector<Word> y;

  static AutP identity(int r) { return AutP{r, 1, std::vector<Word>(r, Word(r))}; }

  FreeAut free_aut() const {
    std::vector<Word> im;
    for (int i = 1; i <= r; ++i) im.push_back(conjugate(y[i - 1], Word::gen(r, i, chi)));
    return FreeAut(r, im);
  }

  const Word& longitude(int i) const { return y.at(i - 1); }

  bool operator==(const AutP& o) const { return r == o.r && chi == o.chi && y == o.y; }
};

struct Extraction {
  Int N;
  std::vector<Word> conjugators;
};

inline Extraction verify_and_extract(const FreeAut& phi) {
  Extraction ex;
  for (int i = 1; i <= phi.r(); ++i) {
    auto [z, c] = cyclic_decompose(phi.image(i));
    if (c.size() != 1 || c.letters()[0].gen != i)
      throw NotConjugateToPower("image of x" + std::to_string(i) + " is not conjugate to a power of x" +
                                std::to_string(i));
    const Int& e = c.letters()[0].exp;
    if (i == 1) {
      ex.N = e;
    } else if (e != ex.N) {
      throw NormMismatch("exponents differ across generators");
    }
    ex.conjugators.push_back(z);
  }
  return ex;
}

inline AutP longitudes(const FreeAut& phi) {
  Extraction ex = verify_and_extract(phi);
  AutP g{phi.r(), ex.N, {}};
  for (int i = 1; i <= phi.r(); ++i) {
    const Word& z = ex.conjugators[i - 1];
    g.y.push_back(z * Word::gen(phi.r(), i, -z.exponent_sum(i)));
  }
  return g;
}

// Longitudes of the composite hg from those of h and g.
inline AutP longitude_cocycle(const AutP& h, const AutP& g) {
  if (h.r != g.r) throw ShapeMismatch("rank mismatch");
  FreeAut ih = h.free_aut();
  AutP out{h.r, h.chi * g.chi, {}};
  for (int i = 0; i < h.r; ++i) out.y.push_back(ih.apply(g.y[i]) * h.y[i]);
  return out;
}

// Longitudes of h^{-1}, given the inverse automorphism; needs chi = +-1.
inline AutP longitude_inverse(const AutP& h, const FreeAut& h_inv) {
  if (h.chi != 1 && h.chi != -1) throw Error("integral inverse norm needs chi = +-1");
  AutP out{h.r, h.chi, {}};
  for (int i = 0; i < h.r; ++i) out.y.push_back(h_inv.apply(h.y[i].inverse()));
  return out;
}

// Principal ideal of Z (nonnegative generator) or of Z/l^N (l^v, v = N is zero).
struct Ideal {
  Ring ring = Ring::integers();
  Int gen = 0;
  int v = 0;

  static Ideal zero(const Ring& ring) { return generated(ring, {}); }

  static Ideal generated(const Ring& ring, const std::vector<Int>& xs) {
    Ideal I;
    I.ring = ring;
    if (ring.is_mod()) {
      I.v = ring.N();
      for (const auto& x : xs) I.v = std::min(I.v, ring.valuation_of(x));
      I.gen = ring.reduce(ipow(Int(ring.l()), static_cast<unsigned>(I.v)));
    } else {
      for (const auto& x : xs) I.gen = gcd(I.gen, x);
    }
    return I;
  }

  bool is_zero() const { return ring.is_mod() ? v == ring.N() : gen == 0; }

  bool contains(const Int& x) const {
    if (ring.is_mod()) return ring.valuation_of(x) >= v;
    return gen == 0 ? x == 0 : x % gen == 0;
  }

  Int residue(const Int& x) const {
    if (ring.is_mod()) return floor_mod(x, ipow(Int(ring.l()), static_cast<unsigned>(v)));
    return gen == 0 ? x : floor_mod(x, gen);
  }

  bool operator==(const Ideal& o) const { return ring == o.ring && gen == o.gen && v == o.v; }

  std::string str() const {
    if (is_zero()) return "0";
    if (ring.is_mod()) return v == 0 ? "1" : std::to_string(ring.l()) + "^" + std::to_string(v);
    return gen.str();
  }
};

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.ring.is_mod()) {
    Ideal c = a;
    if (b.v < c.v) c = b;
    return c;
  }
  return Ideal::generated(a.ring, {a.gen, b.gen});
}

// literal: mu(J; y_j), J a proper subsequence of I', j = i_n or j in J.
// extended: as literal but j = i_n or j in I' (the default).
// classical: cyclic rotations of proper subsequences of I of length >= 2.
enum class DeltaMode { literal, extended, classical };

inline std::string delta_mode_name(DeltaMode m) {
  switch (m) {
    case DeltaMode::literal:
      return "literal";
    case DeltaMode::extended:
      return "extended";
    default:
      return "classical";
  }
}

inline DeltaMode parse_delta_mode(const std::string& s) {
  if (s == "literal") return DeltaMode::literal;
  if (s == "extended") return DeltaMode::extended;
  if (s == "classical") return DeltaMode::classical;
  throw ParseError("unknown delta mode \"" + s + "\"");
}

// Proper nonempty subsequences of I (distinct as sequences).
inline std::vector<MultiIndex> proper_subsequences(const MultiIndex& I) {
  std::set<MultiIndex> seen;
  std::size_t n = I.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << n); ++mask) {
    MultiIndex J;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1u) J.push_back(I[k]);
    seen.insert(J);
  }
  return {seen.begin(), seen.end()};
}

class MilnorTable {
 public:
  MilnorTable(AutP g, int D, Ring ring, DeltaMode mode = DeltaMode::extended)
      : g_(std::move(g)), D_(D), ring_(std::move(ring)), mode_(mode) {
    for (int j = 1; j <= g_.r; ++j) expansions_.push_back(magnus(g_.longitude(j), std::max(D_ - 1, 0), ring_));
    chi_ideal_ = Ideal::generated(ring_, {g_.chi - 1});
  }

  const AutP& g() const { return g_; }
  int D() const { return D_; }
  const Ring& ring() const { return ring_; }
  DeltaMode mode() const { return mode_; }
  const Ideal& chi_ideal() const { return chi_ideal_; }

  // mu(g; I) = mu(I'; y_{i_n}); zero for |I| = 1.
  Int mu(const MultiIndex& I) const {
    if (I.empty() || static_cast<int>(I.size()) > D_) throw Error("multi-index length out of table range");
    if (I.size() == 1) return 0;
    MultiIndex head(I.begin(), I.end() - 1);
    return expansions_.at(I.back() - 1).coeff(head);
  }

  Ideal delta(const MultiIndex& I) const {
    auto it = delta_cache_.find(I);
    if (it != delta_cache_.end()) return it->second;
    std::vector<Int> gens{g_.chi - 1};
    if (mode_ != DeltaMode::classical) {
      MultiIndex head(I.begin(), I.end() - 1);
      if (head.size() >= 2) {
        for (const auto& J : proper_subsequences(head)) {
          std::set<int> js(J.begin(), J.end());
          if (mode_ == DeltaMode::extended) js.insert(head.begin(), head.end());
          js.insert(I.back());
          for (int j : js) {
            MultiIndex Jj = J;
            Jj.push_back(j);
            gens.push_back(mu(Jj));
          }
        }
      }
    } else {
      for (const auto& J : proper_subsequences(I)) {
        if (J.size() < 2) continue;
        MultiIndex K = J;
        for (std::size_t s = 0; s < K.size(); ++s) {
          gens.push_back(mu(K));
          std::rotate(K.begin(), K.begin() + 1, K.end());
        }
      }
    }
    Ideal d = Ideal::generated(ring_, gens);
    delta_cache_.emplace(I, d);
    return d;
  }

  Int mu_bar(const MultiIndex& I) const { return delta(I).residue(mu(I)); }

 private:
  AutP g_;
  int D_;
  Ring ring_;
  DeltaMode mode_;
  Ideal chi_ideal_;
  std::vector<TruncNC> expansions_;
  mutable std::map<MultiIndex, Ideal> delta_cache_;
};

inline MilnorTable milnor_table(const AutP& g, int D, const Ring& ring, DeltaMode mode = DeltaMode::extended) {
  return MilnorTable(g, D, ring, mode);
}

inline bool chi_is_one(const Int& chi, const Ring& ring) { return ring.reduce(chi - 1) == 0; }

struct FiltrationLevel {
  int level;
  bool at_least;  // level is only a lower bound: all tested Milnor numbers vanish
  std::string str() const { return at_least ? ">=" + std::to_string(level) : std::to_string(level); }
  bool operator==(const FiltrationLevel& o) const { return level == o.level && at_least == o.at_least; }
};

// Largest n <= D with deg(Theta(y_i) - 1) >= n for all i.
inline FiltrationLevel filtration_level_from_longitudes(const AutP& g, int D, const Ring& ring) {
  int d = kInfiniteValuation;
  for (int j = 1; j <= g.r; ++j) {
    TruncNC t = magnus(g.longitude(j), D - 1, ring);
    t.add_to(mono::kOne, -1);
    d = std::min(d, t.degree());
  }
  return d >= D ? FiltrationLevel{D, true} : FiltrationLevel{d, false};
}

inline FiltrationLevel filtration_level(const AutP& g, int D, const Ring& ring) {
  if (!chi_is_one(g.chi, ring)) throw ChiNotOne("filtration level needs chi = 1 in the coefficient ring");
  MilnorTable t(g, D, ring);
  FiltrationLevel from_table{D, true};
  for (int n = 2; n <= D && from_table.at_least; ++n)
    for (const auto& I : all_indices(g.r, n))
      if (ring.reduce(t.mu(I)) != 0) {
        from_table = {n - 1, false};
        break;
      }
  if (!(from_table == filtration_level_from_longitudes(g, D, ring)))
    throw Error("Milnor table and longitude degrees disagree on the filtration level");
  return from_table;
}

// Fixed-point generator x_{r+1} = (x_1 ... x_r)^{-1}.
inline Word boundary_generator(int r) {
  Word w(r);
  for (int i = r; i >= 1; --i) w.push(i, -1);
  return w;
}

// True when phi(x_{r+1}) = x_{r+1}^N exactly and the x_r-conjugator has no
// x_{r-1} component in the abelianization.
inline bool in_p_shape(const FreeAut& phi) {
  int r = phi.r();
  if (r < 2) return false;
  Extraction ex;
  try {
    ex = verify_and_extract(phi);
  } catch (const Error&) {
    return false;
  }
  if (phi.apply(boundary_generator(r)) != power(boundary_generator(r), ex.N)) return false;
  return ex.conjugators[r - 1].exponent_sum(r - 1) == 0;
}

// Composes phi with an inner automorphism so that the result fixes x_{r+1}^N
// and has its x_r-conjugator in the subgroup generated by [F,F] and x_1..x_{r-2}.
inline FreeAut belyi_normalize(const FreeAut& phi) {
  int r = phi.r();
  if (r < 2) throw NotInPTilde("need r >= 2");
  Extraction ex;
  try {
    ex = verify_and_extract(phi);
  } catch (const Error& e) {
    throw NotInPTilde(e.what());
  }
  Word t = power(boundary_generator(r), ex.N);
  auto [z, c] = cyclic_decompose(phi.apply(boundary_generator(r)));
  auto a = rotation_conjugator(c, t);
  if (!a) throw NotInPTilde("image of x_{r+1} is not conjugate to x_{r+1}^N");
  Word zz = z * *a;
  FreeAut phi1 = FreeAut::inner(zz.inverse()) * phi;
  Word g = verify_and_extract(phi1).conjugators[r - 1];
  Int c1 = g.exponent_sum(r - 1);
  return FreeAut::inner(power(boundary_generator(r), c1)) * phi1;
}

}  // namespace prol
