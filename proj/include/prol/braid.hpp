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
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "prol/aut.hpp"
#include "prol/comm_series.hpp"

namespace prol {

// sigma_i (band == false) or the pure generator A_ij (band == true).
struct BraidGen {
  bool band = false;
  int i = 1;
  int j = 2;
  long exp = 1;
};

class BraidWord {
 public:
  explicit BraidWord(int r) : r_(r) {}
  BraidWord(int r, std::vector<BraidGen> gens) : r_(r) {
    for (const auto& g : gens) push(g);
  }

  static BraidWord sigma(int r, int i, long e = 1) { return BraidWord(r, {{false, i, i + 1, e}}); }
  static BraidWord band(int r, int i, int j, long e = 1) { return BraidWord(r, {{true, i, j, e}}); }

  int r() const { return r_; }
  const std::vector<BraidGen>& gens() const { return gens_; }

  void push(const BraidGen& g) {
    if (g.band ? !(1 <= g.i && g.i < g.j && g.j <= r_) : !(1 <= g.i && g.i < r_))
      throw IndexError("braid generator out of range");
    if (g.exp != 0) gens_.push_back(g);
  }

  BraidWord inverse() const {
    BraidWord b(r_);
    for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) b.gens_.push_back({it->band, it->i, it->j, -it->exp});
    return b;
  }

  friend BraidWord operator*(BraidWord a, const BraidWord& b) {
    for (const auto& g : b.gens_) a.push(g);
    return a;
  }

  // A_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^{-1} ... s_{j-1}^{-1}, expanded.
  std::vector<std::pair<int, int>> sigma_letters() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& g : gens_) {
      std::vector<std::pair<int, int>> one;
      if (!g.band) {
        one.push_back({g.i, 1});
      } else {
        for (int k = g.j - 1; k > g.i; --k) one.push_back({k, 1});
        one.push_back({g.i, 1});
        one.push_back({g.i, 1});
        for (int k = g.i + 1; k <= g.j - 1; ++k) one.push_back({k, -1});
      }
      for (long t = 0; t < std::abs(g.exp); ++t) {
        if (g.exp > 0) {
          out.insert(out.end(), one.begin(), one.end());
        } else {
          for (auto it = one.rbegin(); it != one.rend(); ++it) out.push_back({it->first, -it->second});
        }
      }
    }
    return out;
  }

  std::string str() const {
    if (gens_.empty()) return "1";
    std::string s;
    for (const auto& g : gens_) {
      if (!s.empty()) s += ' ';
      s += g.band ? "A" + std::to_string(g.i) + std::to_string(g.j) : "s" + std::to_string(g.i);
      if (g.exp != 1) s += "^" + std::to_string(g.exp);
    }
    return s;
  }

 private:
  int r_;
  std::vector<BraidGen> gens_;
};

// Tokens "s<i>[^e]" or "A<i><j>[^e]" separated by whitespace or '*'; "1" is empty.
inline BraidWord parse_braid(const std::string& text, int r) {
  BraidWord b(r);
  std::string norm = text;
  for (char& c : norm)
    if (c == '*') c = ' ';
  std::istringstream in(norm);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string head = tok, ex;
    if (auto p = tok.find('^'); p != std::string::npos) {
      head = tok.substr(0, p);
      ex = tok.substr(p + 1);
      if (!ex.empty() && ex.front() == '(' && ex.back() == ')') ex = ex.substr(1, ex.size() - 2);
    }
    long e = 1;
    try {
      if (!ex.empty()) e = std::stol(ex);
    } catch (const std::exception&) {
      throw ParseError("bad exponent in braid token \"" + tok + "\"");
    }
    if (head.size() >= 2 && (head[0] == 's' || head[0] == 'S')) {
      b.push({false, std::stoi(head.substr(1)), std::stoi(head.substr(1)) + 1, e});
    } else if (head.size() >= 3 && head[0] == 'A') {
      std::string digits = head.substr(1);
      int i, j;
      if (auto c = digits.find(','); c != std::string::npos) {
        i = std::stoi(digits.substr(0, c));
        j = std::stoi(digits.substr(c + 1));
      } else if (digits.size() == 2) {
        i = digits[0] - '0';
        j = digits[1] - '0';
      } else {
        throw ParseError("ambiguous band generator \"" + tok + "\"; use A<i>,<j>");
      }
      b.push({true, i, j, e});
    } else {
      throw ParseError("unknown braid token \"" + tok + "\"");
    }
  }
  return b;
}

inline FreeAut artin_sigma(int r, int i, int sign) {
  std::vector<Word> im, inv;
  for (int k = 1; k <= r; ++k) {
    im.push_back(Word::gen(r, k));
    inv.push_back(Word::gen(r, k));
  }
  Word xi = Word::gen(r, i), xj = Word::gen(r, i + 1);
  im[i - 1] = xi * xj * xi.inverse();
  im[i] = xi;
  inv[i - 1] = xj;
  inv[i] = xj.inverse() * xi * xj;
  return sign > 0 ? FreeAut(r, im, inv) : FreeAut(r, inv, im);
}

// phi_{b1 b2} = phi_{b1} o phi_{b2}.
inline FreeAut artin(const BraidWord& b) {
  FreeAut phi = FreeAut::identity(b.r());
  for (const auto& [i, s] : b.sigma_letters()) phi = phi * artin_sigma(b.r(), i, s);
  return phi;
}

// Theta(phi_b(x_i)) up to degree D, composed one generator at a time.
inline std::vector<TruncNC> braid_magnus_images(const BraidWord& b, int D, const Ring& ring) {
  int r = b.r();
  std::vector<TruncNC> acc;
  for (int i = 1; i <= r; ++i) acc.push_back(magnus(Word::gen(r, i), D, ring));
  for (const auto& [i, s] : b.sigma_letters()) {
    FreeAut sg = artin_sigma(r, i, s);
    std::vector<TruncNC> shifted;
    for (auto t : acc) {
      t.add_to(mono::kOne, -1);
      shifted.push_back(std::move(t));
    }
    std::vector<TruncNC> next;
    for (int k = 1; k <= r; ++k) next.push_back(magnus(sg.image(k), D, ring).substitute(shifted));
    acc = std::move(next);
  }
  return acc;
}

// Strand permutation: perm[k] is where strand k ends.
inline std::vector<int> braid_permutation(const BraidWord& b) {
  std::vector<int> pos(b.r());
  std::iota(pos.begin(), pos.end(), 1);
  for (const auto& [i, s] : b.sigma_letters())
    for (int& p : pos) {
      if (p == i) {
        p = i + 1;
      } else if (p == i + 1) {
        p = i;
      }
    }
  return pos;
}

inline bool is_pure(const BraidWord& b) {
  auto p = braid_permutation(b);
  for (int k = 0; k < b.r(); ++k)
    if (p[k] != k + 1) return false;
  return true;
}

inline AutP braid_autp(const BraidWord& b) {
  if (!is_pure(b)) throw NotPure("braid is not pure");
  return longitudes(artin(b));
}

inline std::pair<Int, Ideal> braid_milnor(const BraidWord& b, const MultiIndex& I,
                                          DeltaMode mode = DeltaMode::extended) {
  MilnorTable t(braid_autp(b), static_cast<int>(I.size()), Ring::integers(), mode);
  return {t.mu(I), t.delta(I)};
}

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

// theta(pi(d phi(x_j) / d x_i)) with t_k the image of x_k.
inline LaurentMatrix fox_jacobian_exact(const FreeAut& phi) {
  int r = phi.r();
  LaurentMatrix M(r, std::vector<LaurentPoly>(r, LaurentPoly(r)));
  for (int j = 1; j <= r; ++j) {
    std::vector<int> prefix(r, 0);
    for (const auto& l : phi.image(j).letters()) {
      long e = to_long(l.exp);
      LaurentPoly geo(r);
      std::vector<int> m = prefix;
      if (e > 0) {
        for (long t = 0; t < e; ++t, ++m[l.gen - 1]) geo.add_to(m, 1);
      } else {
        for (long t = 1; t <= -e; ++t) {
          --m[l.gen - 1];
          geo.add_to(m, -1);
        }
      }
      M[l.gen - 1][j - 1] += geo;
      prefix[l.gen - 1] += static_cast<int>(e);
    }
  }
  return M;
}

inline LaurentMatrix braid_gassner_exact(const BraidWord& b) {
  if (!is_pure(b)) throw NotPure("braid is not pure");
  return fox_jacobian_exact(artin(b));
}

inline LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  std::size_t n = a.size();
  int r = a[0][0].r();
  LaurentMatrix c(n, std::vector<LaurentPoly>(n, LaurentPoly(r)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace prol
