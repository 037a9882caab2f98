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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "prol/prol.hpp"

using namespace prol;

namespace {
const Ring Z = Ring::integers();
const Ring R5 = Ring::mod(5, 4);

// Dense rational series in two variables, truncated at total degree D.
using QSeries = std::map<std::pair<int, int>, Rational>;

QSeries qmul(const QSeries& a, const QSeries& b, int D) {
  QSeries out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      if (ea.first + eb.first + ea.second + eb.second <= D) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  return out;
}

QSeries qexp(const QSeries& s, int D) {
  QSeries out{{{0, 0}, 1}}, term{{{0, 0}, 1}};
  for (int k = 1; k <= D; ++k) {
    term = qmul(term, s, D);
    for (auto& [e, c] : term) out[e] += c / factorial_q(k);
  }
  return out;
}

// exp(U_i) - 1 as a series.
QSeries expm1_var(int i, int D) {
  QSeries s;
  for (int k = 1; k <= D; ++k) s[i == 1 ? std::pair{k, 0} : std::pair{0, k}] = 1 / factorial_q(k);
  return s;
}

Rational coeff(const QSeries& s, int a, int b) {
  auto it = s.find({a, b});
  return it == s.end() ? Rational(0) : it->second;
}
}  // namespace

TEST_CASE("two-variable Milnor numbers") {
  AutP g = braid_autp(parse_braid("s1^2", 2));
  MilnorTable t(g, 4, Z);
  CHECK(mu_nn(t, 1, 0) == t.mu({1, 2}));
  CHECK(mu_nn(t, 0, 1) == t.mu({2, 1}));
  CHECK(mu_nn(t, 1, 1) == t.mu({2, 1, 2}) + t.mu({1, 2, 1}));
  CHECK(mu_nn(t, 2, 0) == t.mu({1, 1, 2}));
  CHECK(mu_nn(t, 2, 1) == t.mu({1, 2, 1, 2}) + t.mu({2, 1, 1, 2}) + t.mu({1, 1, 2, 1}));
  CHECK_THROWS_AS(mu_nn(t, 2, 2), LevelTooLow);
  CHECK_THROWS_AS(mu_nn(t, 0, 0), IndexError);
}

TEST_CASE("Ihara series routes agree") {
  AutP s = braid_autp(parse_braid("s1^2", 2));
  IharaRoutes base = ihara_series_symbolic(s, 3, Z);
  CHECK(base.agree());
  CHECK(ihara_series_symbolic(AutP::identity(2), 4, Z).reduced_gassner == TruncComm::one(2, 4, Z));
  std::mt19937_64 rng(81);
  for (int t = 0; t < 15; ++t) {
    CHECK(ihara_series_symbolic(oracle::random_autp(rng, 2, 1, 4), 4, Z).agree());
    CHECK(ihara_series_symbolic(oracle::random_autp(rng, 2, 6, 4), 4, R5).agree());
  }
}

TEST_CASE("prefactor is one when chi is one") {
  CHECK(ihara_prefactor(1, 5, Z) == TruncComm::one(2, 5, Z));
  TruncComm p = ihara_prefactor(2, 3, Z);
  CHECK(p.str() == "4 + 2*u1 + 2*u2 + u1*u2");
}

TEST_CASE("exponential expansion coefficients") {
  const int D = 7;
  QSeries u = expm1_var(1, D), pw{{{0, 0}, 1}};
  for (int n = 0; n <= D; ++n) {
    for (int N = 0; N <= D; ++N) CHECK(expansion_coeff(n, N) == coeff(pw, N, 0));
    pw = qmul(pw, u, D);
  }
  CHECK(expansion_coeff(1, 2) == Rational(1, 2));
  CHECK(expansion_coeff(2, 3) == 1);
  CHECK(expansion_coeff(0, 0) == 1);
  CHECK(expansion_coeff(0, 3) == 0);
}

TEST_CASE("exponential composition and substitution") {
  const int D = 7;
  std::mt19937_64 rng(82);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int t = 0; t < 5; ++t) {
    CTable c;
    QSeries s;
    for (int m1 = 0; m1 <= 3; ++m1)
      for (int m2 = 0; m2 <= 3; ++m2)
        if (m1 + m2 >= 1) {
          Rational v(val(rng), 1 + (m1 + m2) % 3);
          c[{m1, m2}] = v;
          s[{m1, m2}] = v;
        }
    QSeries e = qexp(s, D);
    for (int N1 = 0; N1 <= 4; ++N1)
      for (int N2 = 0; N2 + N1 <= D && N2 <= 3; ++N2) CHECK(exp_compose(c, N1, N2) == coeff(e, N1, N2));

    std::map<std::pair<int, int>, Rational> b;
    QSeries f{{{0, 0}, 1}};
    QSeries u1 = expm1_var(1, D), u2 = expm1_var(2, D);
    for (int n1 = 0; n1 <= 3; ++n1)
      for (int n2 = 0; n2 <= 3; ++n2) {
        if (n1 + n2 == 0) continue;
        Rational v(val(rng));
        b[{n1, n2}] = v;
        QSeries m{{{0, 0}, v}};
        for (int k = 0; k < n1; ++k) m = qmul(m, u1, D);
        for (int k = 0; k < n2; ++k) m = qmul(m, u2, D);
        for (auto& [ex, cv] : m) f[ex] += cv;
      }
    for (int N1 = 0; N1 <= 3; ++N1)
      for (int N2 = 0; N2 <= 3; ++N2) CHECK(substitute_exp(b, N1, N2) == coeff(f, N1, N2));
  }
}

TEST_CASE("local linear solver") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 30; ++t) {
    const long l = 3;
    const int K = 3;
    long L = 27;
    std::uniform_int_distribution<long> any(0, L - 1), small(0, 2);
    std::size_t rows = 3 + t % 4, cols = 4;
    std::vector<std::vector<long>> A(rows, std::vector<long>(cols));
    std::vector<long> xs(cols), b(rows, 0);
    for (auto& v : xs) v = any(rng);
    for (auto& row : A)
      for (auto& a : row) a = small(rng) * ipow_long(l, static_cast<int>(small(rng)));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) b[i] = (b[i] + A[i][j] * xs[j]) % L;
    LocalSolution s = solve_local(A, b, l, K);
    REQUIRE(s.consistent);
    for (std::size_t i = 0; i < rows; ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < cols; ++j) acc = (acc + A[i][j] * s.x[j]) % L;
      CHECK(acc == b[i]);
    }
    // Brute force: the precision of x_c is the largest power of l dividing
    // every difference between solutions.
    std::vector<int> brute(cols, K);
    std::vector<long> y(cols, 0);
    for (long code = 0; code < L * L * L * L; ++code) {
      long c = code;
      for (auto& v : y) {
        v = c % L;
        c /= L;
      }
      bool ok = true;
      for (std::size_t i = 0; i < rows && ok; ++i) {
        long acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc = (acc + A[i][j] * y[j]) % L;
        ok = acc == b[i];
      }
      if (!ok) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        long d = mod_long(y[j] - xs[j], L);
        int v = 0;
        while (d && d % l == 0 && v < K) {
          d /= l;
          ++v;
        }
        if (d) brute[j] = std::min(brute[j], v);
      }
    }
    CHECK(s.precision == brute);
  }
  LocalSolution bad = solve_local({{3, 0}}, {1}, 3, 2);
  CHECK_FALSE(bad.consistent);
}

TEST_CASE("Milnor numbers recovered from Jacobi sums") {
  auto fr = frobenius_input(19, 3, 2);
  MuNNTable plain = mu_from_jacobi(fr, 4, {1, false});
  CHECK_FALSE(plain.consistent);
  MuNNTable t = mu_from_jacobi_calibrated(fr, 4);
  CHECK(t.convention.zeta_sign == 1);
  CHECK(t.convention.negate);
  CHECK(t.self_check);
  CHECK(t.low_degree_vanishes);
  CHECK(t.M == 13);
  for (const auto& [nn, e] : t.entries) {
    CHECK(e.precision == 1);
    if (nn.first == 0 || nn.second == 0) CHECK(e.value == 0);
  }
  for (const auto& [a, ea] : t.entries)
    for (const auto& [b, eb] : t.entries)
      if (a.first + a.second < b.first + b.second) CHECK(ea.precision >= eb.precision);
  CHECK(t.at(2, 1).value == 1);
  CHECK(t.at(1, 2).value == 1);
  CHECK(t.at(2, 2).value == 2);
  CHECK(t.at(3, 1).value == 2);
  CHECK(t.at(1, 3).value == 2);
  CHECK_THROWS_AS(t.at(4, 1), PrecisionError);

  // Rebuild one Jacobi sum from the recovered digits at a higher degree cut.
  MuNNTable wide = mu_from_jacobi(fr, 6, t.convention, 19);
  CHECK(wide.self_check);
  for (const auto& [nn, e] : t.entries) CHECK(wide.at(nn.first, nn.second).value == e.value);

  MuNNTable inv = mu_from_jacobi(fr, 4, {-1, true});
  CHECK(inv.self_check);
  CHECK(inv.at(2, 1).value == 2);
}

TEST_CASE("Soule identity at low degree") {
  for (long p : {19L, 37L}) {
    auto fr = frobenius_input(p, 3, 2);
    for (int s : {1, -1}) {
      MuNNTable t = mu_from_jacobi(fr, 4, {s, true});
      ResidueField F = build_residue_field(fr, s);
      std::map<int, long> twisted{{3, soule_kappa(3, F, UnitForm::twisted)}};
      std::map<int, long> literal{{3, soule_kappa(3, F, UnitForm::literal)}};
      for (auto [N1, N2] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
        SouleCheck c = soule_identity_check(t, twisted, N1, N2);
        CHECK(c.certified == 1);
        CHECK(c.ok);
      }
      CHECK_FALSE(soule_identity_check(t, literal, 2, 1).ok);
    }
  }
  auto fr = frobenius_input(19, 3, 2);
  MuNNTable t = mu_from_jacobi(fr, 4, {1, true});
  CHECK_THROWS_AS(soule_identity_check(t, {}, 2, 1), PrecisionError);
  SouleCheck c = soule_identity_check(t, {{3, 1}}, 2, 1);
  CHECK(c.lhs == 1);
  CHECK(c.rhs == Rational(-1, 2));
}
