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
#include <utility>
#include <vector>

#include "prol/aut.hpp"
#include "prol/cyclotomic.hpp"
#include "prol/gassner.hpp"

namespace prol {

// Coefficient of u1^n1 u2^n2 in sum_I mu(I) u_I over indices ending in 12 or 21.
inline Int mu_nn(const MilnorTable& t, int n1, int n2) {
  if (t.g().r != 2) throw ShapeMismatch("two-variable Milnor numbers need r = 2");
  if (n1 < 0 || n2 < 0 || n1 + n2 < 1) throw IndexError("need n1 + n2 >= 1");
  if (n1 + n2 + 1 > t.D()) throw LevelTooLow("Milnor table too short");
  Int acc = 0;
  int len = n1 + n2 - 1;
  for (const auto& I : all_indices(2, len)) {
    long ones = std::count(I.begin(), I.end(), 1);
    long twos = len - ones;
    if (ones == n1 - 1 && twos == n2) {
      MultiIndex J = I;
      J.push_back(1);
      J.push_back(2);
      acc += t.mu(J);
    }
    if (ones == n1 && twos == n2 - 1) {
      MultiIndex J = I;
      J.push_back(2);
      J.push_back(1);
      acc += t.mu(J);
    }
  }
  return t.ring().reduce(acc);
}

struct IharaRoutes {
  TruncComm reduced_gassner;
  TruncComm crowell_first;
  TruncComm crowell_second;
  TruncComm milnor_series;
  bool agree() const {
    return reduced_gassner == crowell_first && reduced_gassner == crowell_second && reduced_gassner == milnor_series;
  }
};

// chi_Lambda(u1 u2) / (u1 u2) with chi_Lambda(u) = (1 + u)^chi - 1.
inline TruncComm ihara_prefactor(const Int& chi, int D, const Ring& ring) {
  TruncComm a = binomial_pow(TruncComm::var(2, D + 2, ring, 1), chi);
  TruncComm b = binomial_pow(TruncComm::var(2, D + 2, ring, 2), chi);
  a.add_to(0, -1);
  b.add_to(0, -1);
  return (a * b).divide_monomial(expo::unit(1) + expo::unit(2)).with_D(D);
}

inline IharaRoutes ihara_series_symbolic(const AutP& g, int D, const Ring& ring) {
  if (g.r != 2) throw ShapeMismatch("Ihara series needs r = 2");
  IharaRoutes out{TruncComm(2, D, ring), TruncComm(2, D, ring), TruncComm(2, D, ring), TruncComm(2, D, ring)};
  out.reduced_gassner = gassner_reduced(g, D, ring)[0][0];

  auto nu = crowell_nu1(g.free_aut().apply(parse_word("[x1,x2]", 2)), D + 1, ring);
  out.crowell_first = (-nu[0]).divide_monomial(expo::unit(2)).with_D(D);
  out.crowell_second = nu[1].divide_monomial(expo::unit(1)).with_D(D);

  MilnorTable t(g, D + 1, ring);
  TruncComm sum = TruncComm::one(2, D, ring);
  for (int d = 1; d <= D; ++d)
    for (int n1 = 0; n1 <= d; ++n1) sum.add_to(expo::unit(1, n1) + expo::unit(2, d - n1), mu_nn(t, n1, d - n1));
  out.milnor_series = ihara_prefactor(g.chi, D, ring) * sum;
  return out;
}

inline Rational factorial_q(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Coefficient of U^N in (exp(U) - 1)^n: sum over compositions of N into n
// positive parts of 1 / prod e_i!.
inline Rational expansion_coeff(int n, int N) {
  if (n < 0 || N < 0) throw IndexError("negative index");
  if (n == 0) return N == 0 ? Rational(1) : Rational(0);
  Rational acc = 0;
  for (int e = 1; e <= N - (n - 1); ++e) acc += expansion_coeff(n - 1, N - e) / factorial_q(e);
  return acc;
}

using CTable = std::map<std::pair<int, int>, Rational>;

// Coefficient of U1^N1 U2^N2 in exp(sum c(m1, m2) U1^m1 U2^m2).
inline Rational exp_compose(const CTable& c, int N1, int N2) {
  // f[n][(a,b)] = sum over ordered n-tuples of parts summing to (a,b)
  std::vector<std::map<std::pair<int, int>, Rational>> f(1);
  f[0][{0, 0}] = 1;
  Rational total = N1 == 0 && N2 == 0 ? Rational(1) : Rational(0);
  for (int n = 1; n <= N1 + N2; ++n) {
    std::map<std::pair<int, int>, Rational> next;
    for (const auto& [ab, v] : f.back())
      for (const auto& [m, cv] : c) {
        if (cv == 0 || m.first + m.second == 0) continue;
        int a = ab.first + m.first, b = ab.second + m.second;
        if (a <= N1 && b <= N2) next[{a, b}] += v * cv;
      }
    if (next.empty()) break;
    auto it = next.find({N1, N2});
    if (it != next.end()) total += it->second / factorial_q(n);
    f.push_back(std::move(next));
  }
  return total;
}

// Coefficient of U1^N1 U2^N2 after u_i = exp(U_i) - 1 in 1 + sum b(n1, n2) u1^n1 u2^n2.
inline Rational substitute_exp(const std::map<std::pair<int, int>, Rational>& coeffs, int N1, int N2) {
  Rational acc = N1 == 0 && N2 == 0 ? Rational(1) : Rational(0);
  for (const auto& [n, v] : coeffs)
    if (n.first <= N1 && n.second <= N2) acc += v * expansion_coeff(n.first, N1) * expansion_coeff(n.second, N2);
  return acc;
}

inline int rational_valuation(const Rational& x, long l) {
  if (x == 0) return kInfiniteValuation;
  return valuation(Int(boost::multiprecision::numerator(x)), l) -
         valuation(Int(boost::multiprecision::denominator(x)), l);
}

// Solutions of A x = b over Z / l^K by local Smith reduction.
struct LocalSolution {
  bool consistent = true;
  std::vector<long> x;
  std::vector<int> precision;  // x_c is determined mod l^precision[c]
};

inline LocalSolution solve_local(std::vector<std::vector<long>> A, std::vector<long> b, long l, int K) {
  long L = ipow_long(l, K);
  std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  auto vl = [&](long x) {
    x = mod_long(x, L);
    if (x == 0) return K;
    int v = 0;
    while (x % l == 0) {
      x /= l;
      ++v;
    }
    return v;
  };
  std::vector<std::vector<long>> R(cols, std::vector<long>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) R[i][i] = 1;
  std::vector<int> piv_v;
  std::size_t rank = 0;
  while (rank < rows && rank < cols) {
    int best = K;
    std::size_t br = 0, bc = 0;
    for (std::size_t i = rank; i < rows && best > 0; ++i)
      for (std::size_t j = rank; j < cols; ++j) {
        int v = vl(A[i][j]);
        if (v < best) {
          best = v;
          br = i;
          bc = j;
          if (v == 0) break;
        }
      }
    if (best == K) break;
    std::swap(A[rank], A[br]);
    std::swap(b[rank], b[br]);
    if (bc != rank) {
      for (auto& row : A) std::swap(row[rank], row[bc]);
      for (auto& row : R) std::swap(row[rank], row[bc]);
    }
    long pl = ipow_long(l, best);
    long unit = mod_long(A[rank][rank], L) / pl;
    long uinv = static_cast<long>(inverse_mod(Int(unit), Int(L)));
    for (auto& a : A[rank]) a = mulmod(mod_long(a, L), uinv, L);
    b[rank] = mulmod(mod_long(b[rank], L), uinv, L);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      long c = mod_long(A[i][rank], L);
      if (!c) continue;
      c /= pl;
      for (std::size_t j = rank; j < cols; ++j) A[i][j] = mod_long(A[i][j] - mulmod(c, A[rank][j], L), L);
      b[i] = mod_long(b[i] - mulmod(c, b[rank], L), L);
    }
    for (std::size_t j = rank + 1; j < cols; ++j) {
      long c = mod_long(A[rank][j], L);
      if (!c) continue;
      c /= pl;
      A[rank][j] = 0;
      for (std::size_t k = 0; k < cols; ++k) R[k][j] = mod_long(R[k][j] - mulmod(c, R[k][rank], L), L);
    }
    piv_v.push_back(best);
    ++rank;
  }
  LocalSolution out;
  std::vector<long> z(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    long bi = mod_long(b[i], L);
    if (i < rank) {
      if (vl(bi) < piv_v[i]) out.consistent = false;
      else z[i] = bi / ipow_long(l, piv_v[i]);
    } else if (bi != 0) {
      out.consistent = false;
    }
  }
  out.x.assign(cols, 0);
  out.precision.assign(cols, K);
  for (std::size_t c = 0; c < cols; ++c) {
    long acc = 0;
    for (std::size_t i = 0; i < cols; ++i) acc = mod_long(acc + mulmod(R[c][i], z[i], L), L);
    out.x[c] = acc;
    for (std::size_t i = 0; i < cols; ++i) {
      long scale = i < rank ? ipow_long(l, K - piv_v[i]) : 1;
      out.precision[c] = std::min(out.precision[c], vl(mulmod(R[c][i], scale, L)));
    }
  }
  return out;
}

struct JacobiConvention {
  int zeta_sign = 1;
  bool negate = false;
  std::string str() const {
    return std::string("zeta->omega") + (zeta_sign < 0 ? "^-1" : "") + (negate ? ", J negated" : ", J as summed");
  }
};

// Calibration order.
inline std::vector<JacobiConvention> jacobi_conventions() { return {{1, false}, {1, true}, {-1, false}, {-1, true}}; }

inline std::vector<std::pair<long, long>> jacobi_pairs(long l, int n) {
  long ln = ipow_long(l, n);
  std::vector<std::pair<long, long>> out;
  for (long a = 1; a < ln; ++a)
    for (long b = 1; b < ln; ++b)
      if ((a + b) % ln != 0 && !(a % l == 0 && b % l == 0)) out.emplace_back(a, b);
  return out;
}

struct MuEntry {
  Int value;      // representative in [0, l^precision)
  int precision;  // known mod l^precision
};

struct MuNNTable {
  FrobeniusInput frob;
  JacobiConvention convention;
  int Dmax = 0;
  int M = 0;  // pi-adic working precision
  std::map<std::pair<int, int>, MuEntry> entries;
  bool consistent = false;
  bool self_check = false;
  bool low_degree_vanishes = false;

  const MuEntry& at(int n1, int n2) const {
    auto it = entries.find({n1, n2});
    if (it == entries.end()) throw PrecisionError("Milnor entry outside the recovered range");
    return it->second;
  }
};

inline int default_pi_precision(const FrobeniusInput& fr, int Dmax) {
  long phi = ipow_long(fr.l, fr.n) / fr.l * (fr.l - 1);
  return std::max<int>(Dmax + 1, static_cast<int>(fr.e * phi) + 1);
}

// Recover mu(sigma^f; n1, n2) from all Jacobi sums J^(a,b) of level l^n via
// J = 1 + sum mu(n1, n2) (zeta^a - 1)^n1 (zeta^b - 1)^n2 modulo pi^M.
inline MuNNTable mu_from_jacobi(const FrobeniusInput& fr, int Dmax, const JacobiConvention& conv, int M = 0) {
  if (Dmax < 1) throw IndexError("need Dmax >= 1");
  if (M == 0) M = default_pi_precision(fr, Dmax);
  if (M < Dmax + 1) throw PrecisionError("pi-adic precision below the requested degree");
  long l = fr.l;
  int n = fr.n;
  long phi = ipow_long(l, n) / l * (l - 1);
  int K = static_cast<int>((M + phi - 1) / phi);
  long L = ipow_long(l, K);
  ResidueField F = build_residue_field(fr, conv.zeta_sign);

  std::vector<std::pair<int, int>> unknowns;
  for (int d = 1; d < M; ++d)
    for (int n1 = d; n1 >= 0; --n1) unknowns.emplace_back(n1, d - n1);

  auto pairs = jacobi_pairs(l, n);
  long ln = ipow_long(l, n);
  std::vector<std::vector<CycloInt>> powers(ln);
  CycloInt one = CycloInt::constant(l, n, 1);
  for (long a = 1; a < ln; ++a) {
    powers[a].push_back(one);
    CycloInt base = CycloInt::zeta_power(l, n, a) - one;
    for (int k = 1; k < M; ++k) powers[a].push_back(powers[a].back() * base);
  }

  std::vector<std::vector<long>> A;
  std::vector<long> rhs;
  std::vector<CycloInt> targets;
  for (auto [a, b] : pairs) {
    CycloInt J = jacobi_sum(F, a, b, conv.negate);
    targets.push_back(J - one);
    auto jc = targets.back().pi_coordinates();
    std::vector<std::vector<Int>> cols;
    for (auto [n1, n2] : unknowns) cols.push_back((powers[a][n1] * powers[b][n2]).pi_coordinates());
    for (long k = 0; k < phi && k < M; ++k) {
      int ek = static_cast<int>((M - k + phi - 1) / phi);
      long scale = ipow_long(l, K - ek);
      std::vector<long> row;
      for (const auto& c : cols) row.push_back(mulmod(static_cast<long>(floor_mod(c[k], Int(L))), scale, L));
      A.push_back(std::move(row));
      rhs.push_back(mulmod(static_cast<long>(floor_mod(jc[k], Int(L))), scale, L));
    }
  }
  LocalSolution sol = solve_local(A, rhs, l, K);

  MuNNTable out;
  out.frob = fr;
  out.convention = conv;
  out.Dmax = Dmax;
  out.M = M;
  out.consistent = sol.consistent;
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    auto [n1, n2] = unknowns[c];
    if (n1 + n2 > Dmax) continue;
    int prec = std::min(sol.precision[c], fr.e);
    Int mod = ipow(Int(l), static_cast<unsigned>(prec));
    out.entries[{n1, n2}] = MuEntry{floor_mod(Int(sol.x[c]), mod), prec};
  }

  // Rebuild every J from the full solution vector and compare modulo pi^M.
  out.self_check = sol.consistent;
  for (std::size_t t = 0; t < pairs.size() && out.self_check; ++t) {
    auto [a, b] = pairs[t];
    CycloInt acc(l, n);
    for (std::size_t c = 0; c < unknowns.size(); ++c)
      if (sol.x[c]) acc += (powers[a][unknowns[c].first] * powers[b][unknowns[c].second]).scaled(sol.x[c]);
    if ((acc - targets[t]).pi_valuation() < M) out.self_check = false;
  }

  out.low_degree_vanishes = true;
  for (auto nn : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
    if (nn.first + nn.second > Dmax) continue;
    const MuEntry& e = out.entries.at(nn);
    if (e.precision < 1 || e.value != 0) out.low_degree_vanishes = false;
  }
  return out;
}

// First convention in calibration order whose table is consistent and has
// vanishing degree <= 2 entries.
inline MuNNTable mu_from_jacobi_calibrated(const FrobeniusInput& fr, int Dmax, int M = 0) {
  std::vector<MuNNTable> tried;
  for (const auto& conv : jacobi_conventions()) {
    MuNNTable t = mu_from_jacobi(fr, Dmax, conv, M);
    if (t.self_check && t.low_degree_vanishes) return t;
    tried.push_back(std::move(t));
  }
  return tried.front();
}

struct SouleCheck {
  int N1 = 0, N2 = 0;
  Rational lhs, rhs, residual;
  int certified = 0;  // residual must vanish mod l^certified
  bool ok = false;
};

// sum mu(n1, n2) a_n1(N1) a_n2(N2) against the exponential of the Soule
// characters, with kappa_m known mod l^n.
inline SouleCheck soule_identity_check(const MuNNTable& t, const std::map<int, long>& kappa, int N1, int N2) {
  long l = t.frob.l;
  SouleCheck out;
  out.N1 = N1;
  out.N2 = N2;
  int cert = kInfiniteValuation;
  for (int n1 = 0; n1 <= N1; ++n1)
    for (int n2 = 0; n2 <= N2; ++n2) {
      if (n1 + n2 == 0) continue;
      Rational c = expansion_coeff(n1, N1) * expansion_coeff(n2, N2);
      if (c == 0) continue;
      const MuEntry& e = t.at(n1, n2);
      out.lhs += c * Rational(e.value);
      cert = std::min(cert, rational_valuation(c, l) + e.precision);
    }
  CTable table;
  for (int m1 = 1; m1 <= N1; ++m1)
    for (int m2 = 1; m2 <= N2; ++m2) {
      int m = m1 + m2;
      if (m < 3 || m % 2 == 0) continue;
      auto it = kappa.find(m);
      if (it == kappa.end()) throw PrecisionError("missing Soule character");
      Rational w = 1 / (factorial_q(m1) * factorial_q(m2));
      table[{m1, m2}] = -Rational(it->second) * w;
      cert = std::min(cert, rational_valuation(w, l) + t.frob.n);
    }
  out.rhs = exp_compose(table, N1, N2);
  out.residual = out.lhs - out.rhs;
  out.certified = cert == kInfiniteValuation ? 0 : cert;
  out.ok = out.certified >= 1 && rational_valuation(out.residual, l) >= out.certified;
  return out;
}

}  // namespace prol
