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

#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "prol/prol.hpp"

using namespace prol;

namespace {
using cplx = std::complex<double>;

cplx evaluate(const CycloInt& z) {
  const double pi = std::acos(-1.0);
  cplx zeta = std::polar(1.0, 2 * pi / static_cast<double>(z.order())), w = 1, acc = 0;
  for (const auto& c : z.coeffs()) {
    acc += static_cast<double>(c) * w;
    w *= zeta;
  }
  return acc;
}

CycloInt random_cyclo(std::mt19937_64& rng, long l, int n) {
  CycloInt z(l, n);
  std::uniform_int_distribution<long> c(-4, 4), k(0, 3 * ipow_long(l, n));
  for (int t = 0; t < 5; ++t) z += CycloInt::zeta_power(l, n, k(rng), c(rng));
  return z;
}

// Jacobi sum over F_p from a brute-force generator search, as a complex number.
cplx jacobi_oracle(long p, long ln, long a, long b, int zeta_sign) {
  long g = 2;
  for (;; ++g) {
    long x = 1, ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) break;
  }
  std::vector<long> lg(p, 0);
  long x = 1;
  for (long k = 0; k < p - 1; ++k) {
    lg[x] = k;
    x = x * g % p;
  }
  const double pi = std::acos(-1.0);
  cplx acc = 0;
  for (long s = 1; s < p; ++s)
    for (long t = 1; t < p; ++t)
      if ((s + t + 1) % p == 0) {
        long e = zeta_sign * (a * lg[s] + b * lg[t]);
        acc += std::polar(1.0, 2 * pi * static_cast<double>(mod_long(e, ln)) / static_cast<double>(ln));
      }
  return acc;
}
}  // namespace

TEST_CASE("cyclotomic integers reduce modulo the cyclotomic polynomial") {
  for (auto [l, n] : {std::pair<long, int>{3, 1}, {3, 2}, {5, 1}, {2, 3}}) {
    long ln = ipow_long(l, n);
    CycloInt s(l, n);
    for (long k = 0; k < l; ++k) s += CycloInt::zeta_power(l, n, k * ln / l);
    CHECK(s.is_zero());
    CHECK(CycloInt::zeta_power(l, n, ln) == CycloInt::constant(l, n, 1));
    CHECK(CycloInt::zeta_power(l, n, -1) * CycloInt::zeta_power(l, n, 1) == CycloInt::constant(l, n, 1));
  }
  std::mt19937_64 rng(71);
  for (int t = 0; t < 40; ++t) {
    CycloInt a = random_cyclo(rng, 3, 2), b = random_cyclo(rng, 3, 2);
    CHECK(std::abs(evaluate(a * b) - evaluate(a) * evaluate(b)) < 1e-6);
    CHECK(std::abs(evaluate(a.conj()) - std::conj(evaluate(a))) < 1e-6);
    CHECK((a * b).sigma(2) == a.sigma(2) * b.sigma(2));
  }
}

TEST_CASE("pi-adic valuation") {
  CycloInt pi = CycloInt::zeta_power(3, 2, 1) - CycloInt::constant(3, 2, 1);
  CHECK(pi.pi_valuation() == 1);
  CHECK(pi.pow(5).pi_valuation() == 5);
  CHECK(CycloInt::constant(3, 2, 3).pi_valuation() == 6);
  CHECK(CycloInt::constant(3, 2, 2).pi_valuation() == 0);
  CHECK((CycloInt::zeta_power(3, 2, 3) - CycloInt::constant(3, 2, 1)).pi_valuation() == 3);
}

TEST_CASE("Frobenius data") {
  auto a = frobenius_input(19, 3, 2);
  CHECK(a.f == 1);
  CHECK(a.e == 2);
  auto b = frobenius_input(2, 3, 1);
  CHECK(b.f == 2);
  CHECK(b.e == 1);
  auto c = frobenius_input(7, 3, 1);
  CHECK(c.e == 1);
  auto d = frobenius_input(2, 3, 2);
  CHECK(d.f == 6);
  CHECK(d.e == 2);
  CHECK_THROWS_AS(frobenius_input(3, 3, 1), FieldError);
}

TEST_CASE("residue fields") {
  ResidueField F7(7, 1, 3, 1), F19(19, 1, 3, 2), F4(2, 2, 3, 1);
  CHECK(F7.generator() == 3);
  CHECK(F19.generator() == 2);
  CHECK(F4.modulus() == std::vector<long>{1, 1, 1});
  CHECK(F4.generator() == 2);
  for (const ResidueField* F : {&F7, &F19, &F4}) {
    CHECK(F->pow(F->omega(), F->ln()) == 1);
    for (long d = 1; d < F->ln(); ++d)
      if (F->ln() % d == 0) CHECK(F->pow(F->omega(), d) != 1);
    for (long x = 1; x < F->q(); ++x) {
      CHECK(F->mul(x, F->inv(x)) == 1);
      for (long y = 1; y < F->q(); ++y) {
        CHECK(F->symbol(F->mul(x, y)) == mod_long(F->symbol(x) + F->symbol(y), F->ln()));
        CHECK(F->mul(x, F->add(y, 1)) == F->add(F->mul(x, y), x));
      }
    }
  }
  CHECK(F19.symbol(F19.generator()) == 1);
  CHECK(F19.symbol(F19.pow(F19.generator(), 9)) == 0);
  ResidueField G(19, 1, 3, 2, -1);
  CHECK(G.omega() == F19.inv(F19.omega()));
  for (long x = 1; x < 19; ++x) CHECK(G.symbol(x) == mod_long(-F19.symbol(x), 9));
  CHECK_THROWS_AS(ResidueField(7, 1, 3, 2), FieldError);
}

TEST_CASE("Jacobi sums") {
  for (auto [l, n, p] : {std::tuple<long, int, long>{3, 1, 7}, {3, 2, 19}, {3, 2, 37}, {5, 1, 11}}) {
    auto fr = frobenius_input(p, l, n);
    long ln = ipow_long(l, n);
    for (int s : {1, -1}) {
      ResidueField F = build_residue_field(fr, s);
      for (auto [a, b] : jacobi_pairs(l, n)) {
        CycloInt J = jacobi_sum(F, a, b);
        CHECK(J * J.conj() == CycloInt::constant(l, n, p));
        CHECK(std::abs(evaluate(J) - jacobi_oracle(p, ln, a, b, s)) < 1e-6);
        CHECK(jacobi_sum(F, a, b, true) == -J);
        for (long t = 1; t < ln; ++t)
          if (t % l) CHECK(jacobi_sum(F, t * a, t * b) == J.sigma(t));
      }
    }
  }
  ResidueField F4(2, 2, 3, 1);
  CHECK(jacobi_sum(F4, 1, 1) * jacobi_sum(F4, 1, 1).conj() == CycloInt::constant(3, 1, 4));
  CHECK(jacobi_sum(F4, 1, 1).str() == "[2, 0]");
  CHECK(jacobi_sum(ResidueField(7, 1, 3, 1), 1, 1).str() == "[-1, -3]");
  CHECK_THROWS_AS(jacobi_sum(F4, 3, 1), FieldError);
}

TEST_CASE("cyclotomic units and Kummer characters") {
  CycloInt pi = CycloInt::zeta_power(3, 1, 1) - CycloInt::constant(3, 1, 1);
  CHECK(cyclotomic_unit(3, 3, 1, UnitForm::literal) == pi.pow(2));
  CHECK(cyclotomic_unit(3, 3, 1, UnitForm::twisted) == CycloInt::constant(3, 1, 3));
  CHECK(cyclotomic_unit(1, 3, 2, UnitForm::twisted) == CycloInt::constant(3, 2, 3));
  CHECK(cyclotomic_unit(1, 3, 2, UnitForm::literal) ==
        (CycloInt::zeta_power(3, 2, 1) - CycloInt::constant(3, 2, 1)).pow(6));
  for (auto [l, n, p] : {std::tuple<long, int, long>{3, 2, 19}, {3, 2, 37}, {3, 1, 7}, {3, 1, 2}, {5, 1, 11}}) {
    auto fr = frobenius_input(p, l, n);
    ResidueField F = build_residue_field(fr);
    long ln = F.ln();
    for (int m : {3, 5})
      for (UnitForm u : {UnitForm::literal, UnitForm::twisted}) {
        long c = soule_chi(m, F, u);
        CHECK(soule_chi(m, F, u, 2) == mulmod(c, mod_long(1 + F.q(), ln), ln));
        CHECK(soule_chi(m, F, u, 3) == mulmod(c, mod_long(1 + F.q() + F.q() * F.q(), ln), ln));
        long k = soule_kappa(m, F, u);
        CHECK(mulmod(k, mod_long(1 - powmod_long(l, m - 1, ln), ln), ln) == c);
      }
  }
  ResidueField F19(19, 1, 3, 2);
  CHECK(soule_kappa(3, F19, UnitForm::twisted) == 1);
  CHECK(soule_kappa(3, F19, UnitForm::literal) == 6);
}
