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
#include <string>
#include <utility>
#include <vector>

#include "prol/gassner.hpp"

namespace prol {

// Monomials u^e with |e| <= D, lowest degree first.
inline std::vector<Expo> monomials_up_to(int r, int D) {
  std::vector<Expo> out;
  std::vector<int> e(r, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == r) {
      out.push_back(expo::from_vector(e));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, D);
  std::sort(out.begin(), out.end(), [](Expo a, Expo b) {
    int da = expo::total(a), db = expo::total(b);
    return da != db ? da < db : a > b;
  });
  return out;
}

// An ideal of the truncated Iwasawa algebra, kept as a Hermite-reduced
// Z-lattice on the monomial basis (plus l^N Z^n over Z/l^N).
class TruncIdeal {
 public:
  TruncIdeal(int r, int D, Ring ring, const std::vector<TruncComm>& gens)
      : r_(r), D_(D), ring_(std::move(ring)), monos_(monomials_up_to(r, D)) {
    for (std::size_t k = 0; k < monos_.size(); ++k) index_[monos_[k]] = static_cast<int>(k);
    std::vector<std::vector<Int>> rows;
    for (const auto& g : gens) {
      if (g.r() != r_ || g.D() != D_ || !(g.ring() == ring_)) throw ShapeMismatch("ideal generator shape");
      if (g.is_zero()) continue;
      for (Expo a : monos_) {
        TruncComm t = g * monomial(a);
        if (!t.is_zero()) rows.push_back(to_vector(t));
      }
    }
    if (ring_.is_mod())
      for (std::size_t c = 0; c < monos_.size(); ++c) {
        std::vector<Int> row(monos_.size(), 0);
        row[c] = ring_.modulus();
        rows.push_back(std::move(row));
      }
    hermite(rows);
  }

  TruncComm reduce(const TruncComm& f) const {
    std::vector<Int> v = to_vector(f);
    for (const auto& [c, row] : basis_) {
      Int q = floor_div(v[c], row[c]);
      if (q == 0) continue;
      for (std::size_t k = c; k < v.size(); ++k) v[k] -= q * row[k];
    }
    TruncComm out(r_, D_, ring_);
    for (std::size_t k = 0; k < v.size(); ++k) out.add_to(monos_[k], v[k]);
    return out;
  }

  bool contains(const TruncComm& f) const { return reduce(f).is_zero(); }
  int r() const { return r_; }
  int D() const { return D_; }
  const Ring& ring() const { return ring_; }

 private:
  static Int floor_div(const Int& a, const Int& b) { return (a - floor_mod(a, b)) / b; }

  TruncComm monomial(Expo a) const {
    TruncComm t(r_, D_, ring_);
    t.add_to(a, 1);
    return t;
  }

  std::vector<Int> to_vector(const TruncComm& f) const {
    std::vector<Int> v(monos_.size(), 0);
    for (const auto& [e, c] : f.terms()) v[index_.at(e)] = c;
    return v;
  }

  void hermite(std::vector<std::vector<Int>> rows) {
    std::size_t n = monos_.size(), start = 0;
    for (std::size_t c = 0; c < n && start < rows.size(); ++c) {
      while (true) {
        std::size_t best = rows.size();
        for (std::size_t k = start; k < rows.size(); ++k)
          if (rows[k][c] != 0 && (best == rows.size() || abs(rows[k][c]) < abs(rows[best][c]))) best = k;
        if (best == rows.size()) break;
        std::swap(rows[start], rows[best]);
        bool clean = true;
        for (std::size_t k = start + 1; k < rows.size(); ++k) {
          if (rows[k][c] == 0) continue;
          Int q = rows[k][c] / rows[start][c];
          for (std::size_t j = c; j < n; ++j) rows[k][j] -= q * rows[start][j];
          if (rows[k][c] != 0) clean = false;
        }
        if (clean) break;
      }
      if (start >= rows.size() || rows[start][c] == 0) continue;
      if (rows[start][c] < 0)
        for (auto& x : rows[start]) x = -x;
      for (auto& [pc, prow] : basis_) {
        Int q = floor_div(prow[c], rows[start][c]);
        if (q != 0)
          for (std::size_t j = c; j < n; ++j) prow[j] -= q * rows[start][j];
      }
      basis_.push_back({c, rows[start]});
      ++start;
    }
  }

  int r_;
  int D_;
  Ring ring_;
  std::vector<Expo> monos_;
  std::map<Expo, int> index_;
  std::vector<std::pair<std::size_t, std::vector<Int>>> basis_;
};

// Relators of the link group: x_i^{1-chi} [x_i^{-1}, y_i^{-1}].
struct LinkPresentation {
  int r = 0;
  Int chi = 1;
  std::vector<Word> relators;
};

inline LinkPresentation link_presentation(const AutP& g) {
  LinkPresentation p{g.r, g.chi, {}};
  for (int i = 1; i <= g.r; ++i) {
    Word x = Word::gen(g.r, i);
    p.relators.push_back(Word::gen(g.r, i, 1 - g.chi) * commutator(x.inverse(), g.longitude(i).inverse()));
  }
  return p;
}

// y_i x_i^chi y_i^{-1} x_i^{-1}, the form differentiated for Q.
inline Word jacobian_relator(const AutP& g, int i) {
  return conjugate(g.longitude(i), Word::gen(g.r, i, g.chi)) * Word::gen(g.r, i, -1);
}

// (1 + u_i)^{chi - 1} - 1, generating the kernel of Lambda_r -> Lambda_r(g).
inline std::vector<TruncComm> link_relations(int r, const Int& chi, int D, const Ring& ring) {
  std::vector<TruncComm> gens;
  for (int i = 1; i <= r; ++i) {
    TruncComm t = binomial_pow(TruncComm::var(r, D, ring, i), chi - 1);
    t.add_to(0, -1);
    gens.push_back(std::move(t));
  }
  return gens;
}

inline TruncIdeal link_relation_ideal(int r, const Int& chi, int D, const Ring& ring) {
  return TruncIdeal(r, D, ring, link_relations(r, chi, D, ring));
}

// Ideal of Lambda_r(g) generated by gens, pulled back to Lambda_r.
inline TruncIdeal link_ideal(int r, const Int& chi, int D, const Ring& ring, const std::vector<TruncComm>& gens) {
  std::vector<TruncComm> all = link_relations(r, chi, D, ring);
  all.insert(all.end(), gens.begin(), gens.end());
  return TruncIdeal(r, D, ring, all);
}

inline CommMatrix reduce_matrix(const TruncIdeal& ideal, const CommMatrix& m) {
  return map_entries(m, [&](const TruncComm& s) { return ideal.reduce(s); });
}

inline CommMatrix minus_identity(CommMatrix m) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i].add_to(0, -1);
  return m;
}

inline CommMatrix submatrix(const CommMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  CommMatrix out;
  for (int i : rows) {
    std::vector<TruncComm> row;
    for (int j : cols) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Generators of E^(n): all (r - n)-minors, or the unit ideal.
inline std::vector<TruncComm> fitting_ideals(const CommMatrix& Q, int n) {
  if (n < 0) throw Error("Fitting index must be >= 0");
  int r = static_cast<int>(Q.size());
  if (r - n <= 0) return {Q[0][0].one_like()};
  std::vector<TruncComm> out;
  auto sets = subsets_of_size(r, r - n);
  for (const auto& rows : sets)
    for (const auto& cols : sets) out.push_back(determinant(submatrix(Q, rows, cols)));
  return out;
}

inline CommMatrix matrix_inverse(const CommMatrix& m) {
  int n = static_cast<int>(m.size());
  TruncComm det_inv = determinant(m).inverse();
  CommMatrix out(n, std::vector<TruncComm>(n, m[0][0].zero_like()));
  std::vector<int> all(n);
  for (int k = 0; k < n; ++k) all[k] = k;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      TruncComm cof = m[0][0].one_like();
      if (n > 1) {
        std::vector<int> rows, cols;
        for (int k : all) {
          if (k != j) rows.push_back(k);
          if (k != i) cols.push_back(k);
        }
        cof = determinant(submatrix(m, rows, cols));
      }
      out[i][j] = ((i + j) % 2 ? -cof : cof) * det_inv;
    }
  return out;
}

// Unit normalization: the first term of the lowest graded piece gets
// coefficient l^v (or a positive integer over Z).
inline TruncComm normalize_unit(const TruncComm& f, const TruncIdeal& rel) {
  if (f.is_zero()) return f;
  Int c = f.sorted_terms().front().second;
  const Ring& ring = f.ring();
  if (!ring.is_mod()) return rel.reduce(c < 0 ? -f : f);
  Int unit = c;
  while (unit % ring.l() == 0) unit /= ring.l();
  return rel.reduce(f.scaled(ring.inv(unit)));
}

struct AlexanderData {
  Int chi;
  Ring ring = Ring::integers();
  int D = 0;
  bool chi_trivial = true;
  CommMatrix Q;
  std::vector<std::vector<TruncComm>> fitting;
  TruncComm A = TruncComm(1, 0, Ring::integers());
  bool A_vanishes_to_D = false;
};

// Q by the Fox Jacobian of the relators, reduced into Lambda_r(g).
inline CommMatrix alexander_matrix_fox(const AutP& g, const TruncIdeal& rel, int D, const Ring& ring) {
  CommMatrix Q(g.r, std::vector<TruncComm>(g.r, TruncComm(g.r, D, ring)));
  for (int j = 1; j <= g.r; ++j) {
    Word w = jacobian_relator(g, j);
    for (int i = 1; i <= g.r; ++i) Q[i - 1][j - 1] = rel.reduce(fox_abelian(w, i, D, ring));
  }
  return Q;
}

inline CommMatrix alexander_matrix_gassner(const AutP& g, const TruncIdeal& rel, int D, const Ring& ring) {
  return reduce_matrix(rel, minus_identity(gassner(g, D, ring)));
}

inline AlexanderData alexander_matrix(const AutP& g, int D, const Ring& ring) {
  TruncIdeal rel = link_relation_ideal(g.r, g.chi, D, ring);
  AlexanderData out;
  out.chi = g.chi;
  out.ring = ring;
  out.D = D;
  out.chi_trivial = chi_is_one(g.chi, ring);
  out.Q = alexander_matrix_fox(g, rel, D, ring);
  if (out.Q != alexander_matrix_gassner(g, rel, D, ring)) throw Error("Alexander matrix routes disagree");
  out.A = normalize_unit(rel.reduce(determinant(out.Q)), rel);
  out.A_vanishes_to_D = out.A.is_zero();
  if (out.chi_trivial)
    for (int n = 0; n <= g.r; ++n) {
      std::vector<TruncComm> gens;
      for (const auto& m : fitting_ideals(out.Q, n)) gens.push_back(rel.reduce(m));
      out.fitting.push_back(std::move(gens));
    }
  return out;
}

// A(g) = phi_g(det(Gass(g) - I)), normalized.
inline TruncComm alexander_invariant(const AutP& g, int D, const Ring& ring) {
  TruncIdeal rel = link_relation_ideal(g.r, g.chi, D, ring);
  return normalize_unit(rel.reduce(determinant(minus_identity(gassner(g, D, ring)))), rel);
}

// E^(n) inside E^(n+1), tested on generators.
inline bool fitting_chain_ok(const AlexanderData& a) {
  if (a.fitting.empty()) return true;
  int r = static_cast<int>(a.Q.size());
  for (std::size_t n = 0; n + 1 < a.fitting.size(); ++n) {
    TruncIdeal next = link_ideal(r, a.chi, a.D, a.ring, a.fitting[n + 1]);
    for (const auto& m : a.fitting[n])
      if (!next.contains(m)) return false;
  }
  return true;
}

// The first minor generating E^(n), if some minor does; the truncated g.c.d.
inline std::optional<TruncComm> alexander_invariant_n(const AlexanderData& a, int n) {
  int r = static_cast<int>(a.Q.size());
  if (r - n <= 0) return a.Q[0][0].one_like();
  if (n >= static_cast<int>(a.fitting.size())) throw Error("Fitting ideals only available for trivial chi");
  TruncIdeal rel = link_relation_ideal(r, a.chi, a.D, a.ring);
  const auto& gens = a.fitting[n];
  for (const auto& m : gens) {
    TruncIdeal one = link_ideal(r, a.chi, a.D, a.ring, {m});
    bool ok = true;
    for (const auto& other : gens)
      if (!one.contains(other)) {
        ok = false;
        break;
      }
    if (ok) return normalize_unit(m, rel);
  }
  return std::nullopt;
}

}  // namespace prol
