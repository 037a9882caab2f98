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

#include <string>
#include <unordered_map>
#include <vector>

#include "prol/aut.hpp"
#include "prol/comm_series.hpp"
#include "prol/johnson.hpp"

namespace prol {

using NCMatrix = std::vector<std::vector<TruncNC>>;
using CommMatrix = std::vector<std::vector<TruncComm>>;

// Exponent vector of u_I.
inline Expo counts(const MultiIndex& I, int r) {
  std::vector<int> e(r, 0);
  for (int i : I) ++e[i - 1];
  return expo::from_vector(e);
}

// Theta(d w / d x_i), letter by letter: prefix * ((1+X)^e - 1) / X.
inline TruncNC fox_magnus(const Word& w, int i, int D, const Ring& ring) {
  TruncNC out(w.r(), D, ring), prefix = TruncNC::one(w.r(), D, ring);
  for (const auto& l : w.letters()) {
    if (l.gen == i) {
      TruncNC q(w.r(), D, ring);
      Mono run = mono::kOne;
      for (int k = 0; k <= D; ++k) {
        q.add_to(run, binom(l.exp, static_cast<unsigned>(k + 1)));
        run = mono::concat(run, mono::single(i));
      }
      out += prefix * q;
    }
    prefix = prefix * magnus(Word::gen(w.r(), l.gen, l.exp), D, ring);
  }
  return out;
}

// (theta o pi)(d w / d x_i), tracking the abelianized prefix.
inline TruncComm fox_abelian(const Word& w, int i, int D, const Ring& ring) {
  TruncComm out(w.r(), D, ring), prefix = TruncComm::one(w.r(), D, ring);
  for (const auto& l : w.letters()) {
    TruncComm u = TruncComm::var(w.r(), D, ring, l.gen);
    if (l.gen == i) {
      TruncComm q(w.r(), D, ring);
      for (int k = 0; k <= D; ++k) q.add_to(expo::unit(i, k), binom(l.exp, static_cast<unsigned>(k + 1)));
      out += prefix * q;
    }
    prefix = prefix * binomial_pow(u, l.exp);
  }
  return out;
}

inline CommMatrix comm_identity(int n, int r, int D, const Ring& ring) {
  CommMatrix m(n, std::vector<TruncComm>(n, TruncComm(r, D, ring)));
  for (int i = 0; i < n; ++i) m[i][i] = TruncComm::one(r, D, ring);
  return m;
}

inline NCMatrix nc_identity(int n, int r, int D, const Ring& ring) {
  NCMatrix m(n, std::vector<TruncNC>(n, TruncNC(r, D, ring)));
  for (int i = 0; i < n; ++i) m[i][i] = TruncNC::one(r, D, ring);
  return m;
}

template <class T>
std::vector<std::vector<T>> matmul(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b) {
  if (a.empty() || a[0].size() != b.size()) throw ShapeMismatch("matrix shapes do not compose");
  std::vector<std::vector<T>> c(a.size(), std::vector<T>(b[0].size(), a[0][0].zero_like()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

template <class T, class F>
std::vector<std::vector<T>> map_entries(const std::vector<std::vector<T>>& a, F f) {
  std::vector<std::vector<T>> out;
  for (const auto& row : a) {
    std::vector<T> o;
    for (const auto& e : row) o.push_back(f(e));
    out.push_back(std::move(o));
  }
  return out;
}

// Determinant by cofactor expansion over column subsets.
inline TruncComm determinant(const CommMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) throw ShapeMismatch("empty matrix");
  std::unordered_map<unsigned, TruncComm> memo;
  // Minor on rows k..n-1 and the columns not in mask.
  auto rec = [&](auto&& self, std::size_t k, unsigned mask) -> TruncComm {
    if (k == n) return m[0][0].one_like();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    TruncComm acc = m[0][0].zero_like();
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) continue;
      if (!m[k][j].is_zero()) {
        TruncComm t = m[k][j] * self(self, k + 1, mask | (1u << j));
        acc += sign > 0 ? t : -t;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0, 0);
}

// (i, j) entry: bar Theta(d phi(x_j) / d x_i).
inline NCMatrix magnus_cocycle(const FreeAut& phi, int D, const Ring& ring) {
  int r = phi.r();
  NCMatrix m(r, std::vector<TruncNC>(r, TruncNC(r, D, ring)));
  for (int j = 1; j <= r; ++j)
    for (int i = 1; i <= r; ++i) m[i - 1][j - 1] = fox_magnus(phi.image(j), i, D, ring).bar();
  return m;
}

inline NCMatrix magnus_cocycle(const AutP& g, int D, const Ring& ring) { return magnus_cocycle(g.free_aut(), D, ring); }

// Ih(g) applied entrywise.
inline NCMatrix act_on(const FreeAut& phi, const NCMatrix& m) {
  return map_entries(m, [&](const TruncNC& s) { return phi.act(s); });
}

// I + bar ||tau||, truncated at degree m.
inline NCMatrix magnus_from_johnson(const JohnsonValue& tau) {
  int r = static_cast<int>(tau.comps.size());
  const Ring& ring = tau.comps.at(0).ring();
  NCMatrix out = nc_identity(r, r, tau.m, ring);
  for (int j = 1; j <= r; ++j)
    for (int i = 1; i <= r; ++i)
      out[i - 1][j - 1] += strip_right(tau.comps[j - 1], i).with_D(tau.m).bar();
  return out;
}

inline NCMatrix truncate_matrix(const NCMatrix& m, int D) {
  return map_entries(m, [&](const TruncNC& s) { return s.with_D(D); });
}

// u_i -> (1 + u_i)^chi - 1.
inline TruncComm chi_action(const TruncComm& s, const Int& chi) {
  std::vector<TruncComm> images;
  for (int i = 1; i <= s.r(); ++i) {
    TruncComm t = binomial_pow(s.var_like(i), chi);
    t.add_to(0, -1);
    images.push_back(std::move(t));
  }
  return s.substitute(images);
}

inline CommMatrix chi_action(const CommMatrix& m, const Int& chi) {
  return map_entries(m, [&](const TruncComm& s) { return chi_action(s, chi); });
}

inline CommMatrix gassner(const FreeAut& phi, int D, const Ring& ring) {
  int r = phi.r();
  CommMatrix m(r, std::vector<TruncComm>(r, TruncComm(r, D, ring)));
  for (int j = 1; j <= r; ++j)
    for (int i = 1; i <= r; ++i) m[i - 1][j - 1] = fox_abelian(phi.image(j), i, D, ring);
  return m;
}

inline CommMatrix gassner(const AutP& g, int D, const Ring& ring) { return gassner(g.free_aut(), D, ring); }

// Entry formula in Milnor numbers of g; needs a table of depth D + 1.
inline CommMatrix gassner_from_milnor(const MilnorTable& t, int D) {
  if (t.D() < D + 1) throw Error("Milnor table too short");
  int r = t.g().r;
  const Ring& ring = t.ring();
  const Int& chi = t.g().chi;
  CommMatrix out(r, std::vector<TruncComm>(r, TruncComm(r, D, ring)));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      TruncComm chi_u = binomial_pow(TruncComm::var(r, D, ring, j), chi);
      chi_u.add_to(0, -1);
      TruncComm sum(r, D, ring);
      if (i == j) {
        TruncComm top = binomial_pow(TruncComm::var(r, D + 1, ring, i), chi);
        top.add_to(0, -1);
        TruncComm ratio = top.divide_monomial(expo::unit(i)).with_D(D);
        sum.add_to(0, 1);
        for (int n = 1; n <= D; ++n)
          for (const auto& I : all_indices(r, n)) {
            if (I.back() == i) continue;
            MultiIndex Ii = I;
            Ii.push_back(i);
            sum.add_to(counts(I, r), t.mu(Ii));
          }
        out[i - 1][j - 1] = ratio * sum;
      } else {
        for (int n = 0; n < D; ++n)
          for (const auto& I : all_indices(r, n)) {
            MultiIndex Iij = I;
            Iij.push_back(i);
            Iij.push_back(j);
            sum.add_to(counts(I, r), t.mu(Iij));
          }
        out[i - 1][j - 1] = -(chi_u * sum);
      }
    }
  }
  return out;
}

// Blanchfield-Lyndon coordinates of f' in F_r'.
inline std::vector<TruncComm> crowell_nu1(const Word& f, int D, const Ring& ring) {
  for (int i = 1; i <= f.r(); ++i)
    if (f.exponent_sum(i) != 0) throw NotInCommutatorSubgroup("word has nonzero abelianization");
  std::vector<TruncComm> out;
  for (int i = 1; i <= f.r(); ++i) out.push_back(fox_abelian(f, i, D, ring));
  return out;
}

// sum_i lambda_i u_i, which vanishes on the image of nu_1.
inline TruncComm crowell_nu2(const std::vector<TruncComm>& v) {
  TruncComm acc = v.at(0).zero_like();
  for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * v[i].var_like(static_cast<int>(i) + 1);
  return acc;
}

inline std::vector<TruncComm> matvec(const CommMatrix& m, const std::vector<TruncComm>& v) {
  std::vector<TruncComm> out;
  for (const auto& row : m) {
    TruncComm acc = v.at(0).zero_like();
    for (std::size_t k = 0; k < v.size(); ++k) acc += row[k] * v[k];
    out.push_back(std::move(acc));
  }
  return out;
}

inline bool meta_action_check(const AutP& g, const Word& f, int D, const Ring& ring) {
  FreeAut phi = g.free_aut();
  std::vector<TruncComm> lhs = crowell_nu1(phi.apply(f), D, ring);
  std::vector<TruncComm> v = crowell_nu1(f, D, ring);
  for (auto& e : v) e = chi_action(e, g.chi);
  return lhs == matvec(gassner(phi, D, ring), v);
}

// w / u_j.
inline Expo primitive_monomial(int r, int j) {
  std::vector<int> e(r, 1);
  e[j - 1] = 0;
  return expo::from_vector(e);
}

// v_j = -w/u_j e_j + w/u_{j+1} e_{j+1}.
inline std::vector<TruncComm> primitive_basis_vector(int r, int j, int D, const Ring& ring) {
  std::vector<TruncComm> v(r, TruncComm(r, D, ring));
  v[j - 1].add_to(primitive_monomial(r, j), -1);
  v[j].add_to(primitive_monomial(r, j + 1), 1);
  return v;
}

// Coordinates of a primitive vector in the basis v_1..v_{r-1}: a_i = -(c_1 + ... + c_i).
inline std::vector<TruncComm> primitive_coordinates(const std::vector<TruncComm>& vec) {
  int r = static_cast<int>(vec.size());
  std::vector<TruncComm> c, a;
  TruncComm total = vec[0].zero_like();
  for (int k = 1; k <= r; ++k) {
    c.push_back(vec[k - 1].divide_monomial(primitive_monomial(r, k)));
    total += c.back();
  }
  if (!total.truncated(vec[0].D() - (r - 1)).is_zero())
    throw DivisionObstruction("coefficients do not sum to zero");
  TruncComm run = vec[0].zero_like();
  for (int i = 1; i < r; ++i) {
    run += c[i - 1];
    a.push_back(-run);
  }
  return a;
}

inline CommMatrix gassner_reduced(const AutP& g, int D, const Ring& ring) {
  int r = g.r;
  if (r < 2) throw ShapeMismatch("reduced Gassner needs r >= 2");
  int Dg = D + r - 1;
  CommMatrix G = gassner(g, Dg, ring);
  CommMatrix out(r - 1, std::vector<TruncComm>(r - 1, TruncComm(r, D, ring)));
  for (int j = 1; j < r; ++j) {
    std::vector<TruncComm> v = primitive_basis_vector(r, j, Dg, ring);
    for (auto& e : v) e = chi_action(e, g.chi);
    std::vector<TruncComm> a = primitive_coordinates(matvec(G, v));
    for (int i = 1; i < r; ++i) out[i - 1][j - 1] = a[i - 1].with_D(D);
  }
  return out;
}

// u_i -> u.
inline TruncComm collapse_variables(const TruncComm& s) {
  std::vector<TruncComm> images(s.r(), TruncComm::var(1, s.D(), s.ring(), 1));
  return s.substitute(images);
}

inline CommMatrix burau(const AutP& g, int D, const Ring& ring) {
  return map_entries(gassner(g, D, ring), [](const TruncComm& s) { return collapse_variables(s); });
}

inline CommMatrix burau_reduced(const AutP& g, int D, const Ring& ring) {
  return map_entries(gassner_reduced(g, D, ring), [](const TruncComm& s) { return collapse_variables(s); });
}

inline CommMatrix expand_laurent(const LaurentMatrix& m, int D, const Ring& ring) {
  CommMatrix out;
  for (const auto& row : m) {
    std::vector<TruncComm> o;
    for (const auto& p : row) o.push_back(p.expand(D, ring));
    out.push_back(std::move(o));
  }
  return out;
}

template <class T>
std::string matrix_str(const std::vector<std::vector<T>>& m) {
  std::string s;
  for (const auto& row : m) {
    s += "[";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + row[j].str();
    s += "]\n";
  }
  return s;
}

}  // namespace prol
