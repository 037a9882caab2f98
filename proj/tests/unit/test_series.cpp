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

TruncNC random_series(std::mt19937_64& rng, int r, int D, const Ring& ring, int terms, bool unit_const = false) {
  TruncNC s(r, D, ring);
  for (int k = 0; k < terms; ++k) {
    int len = static_cast<int>(rng() % (D + 1));
    std::vector<int> idx;
    for (int t = 0; t < len; ++t) idx.push_back(static_cast<int>(rng() % r) + 1);
    s.add_to(mono::from_indices(idx), Int(static_cast<long>(rng() % 11) - 5));
  }
  if (unit_const) {
    s.add_to(mono::kOne, -s.constant_term() + 1);
  }
  return s;
}

}  // namespace

TEST_CASE("ring reduction and inverses") {
  Ring z = Ring::integers(), m = Ring::mod(3, 4);
  CHECK(m.reduce(-1) == 80);
  CHECK(m.inv(2) * 2 % 81 == 1);
  CHECK_THROWS_AS(m.inv(3), NotUnit);
  CHECK(z.inv(-1) == -1);
  CHECK_THROWS_AS(z.inv(2), NotUnit);
  CHECK(m.valuation_of(18) == 2);
  CHECK(m.valuation_of(81) == 4);
}

TEST_CASE("series multiplication examples") {
  Ring z = Ring::integers();
  auto X1 = TruncNC::var(2, 3, z, 1), X2 = TruncNC::var(2, 3, z, 2), one = TruncNC::one(2, 3, z);
  CHECK(((one + X1) * (one + X2)).str() == "1 + X1 + X2 + X1*X2");
  // (1+X1)(1+X2)(1+X1)^{-1}(1+X2)^{-1} at D = 2
  auto a = TruncNC::var(2, 2, z, 1), b = TruncNC::var(2, 2, z, 2), o = TruncNC::one(2, 2, z);
  auto prod = (o + a) * (o + b) * (o + a).inverse() * (o + b).inverse();
  CHECK(prod.str() == "1 + X1*X2 - X2*X1");
  CHECK(((one + X1).inverse()).str() == "1 - X1 + X1*X1 - X1*X1*X1");
  CHECK(one.inverse() == one);
}

TEST_CASE("series multiplication matches the naive oracle") {
  std::mt19937_64 rng(11);
  Ring z = Ring::integers();
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_series(rng, 3, 4, z, 12), b = random_series(rng, 3, 4, z, 12);
    CHECK(oracle::from_series(a * b) == oracle::mul(oracle::from_series(a), oracle::from_series(b), 4));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(5);
  for (const Ring& ring : {Ring::integers(), Ring::mod(3, 3)}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_series(rng, 3, 4, ring, 10), b = random_series(rng, 3, 4, ring, 10),
           c = random_series(rng, 3, 4, ring, 10);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * a.one_like() == a);
      if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() >= a.degree() + b.degree());
    }
  }
}

TEST_CASE("degree is additive on monomial leading forms over Z") {
  Ring z = Ring::integers();
  auto a = TruncNC::monomial(2, 6, z, {1, 2}, 3) + TruncNC::monomial(2, 6, z, {2, 2, 1});
  auto b = TruncNC::monomial(2, 6, z, {2}, -2) + TruncNC::monomial(2, 6, z, {1, 1, 1});
  CHECK((a * b).degree() == a.degree() + b.degree());
}

TEST_CASE("inverse of units") {
  std::mt19937_64 rng(17);
  for (const Ring& ring : {Ring::integers(), Ring::mod(5, 2)}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_series(rng, 2, 5, ring, 9, true);
      CHECK(a * a.inverse() == a.one_like());
      CHECK(a.inverse() * a == a.one_like());
    }
  }
  Ring z = Ring::integers();
  CHECK_THROWS_AS(TruncNC::constant(2, 3, z, 2).inverse(), NotUnit);
}

TEST_CASE("binomial powers") {
  Ring z = Ring::integers();
  auto X1 = TruncNC::var(2, 3, z, 1);
  CHECK(binomial_pow(X1, 2).str() == "1 + 2*X1 + X1*X1");
  CHECK(binomial_pow(X1.with_D(2), -1).str() == "1 - X1 + X1*X1");
  Ring m = Ring::mod(3, 2);
  auto s = binomial_pow(TruncNC::var(2, 3, m, 1), 19);
  CHECK(s.coeff({1}) == 19 % 9);
  CHECK(s.coeff({1, 1}) == 171 % 9);
  CHECK(s.coeff({1, 1, 1}) == 969 % 9);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = random_series(rng, 2, 4, z, 6);
    t.add_to(mono::kOne, -t.constant_term());
    long al = static_cast<long>(rng() % 41) - 20, be = static_cast<long>(rng() % 41) - 20;
    CHECK(binomial_pow(t, al + be) == binomial_pow(t, al) * binomial_pow(t, be));
  }
}

TEST_CASE("bar involution") {
  Ring z = Ring::integers();
  auto X1 = TruncNC::var(2, 2, z, 1), one = TruncNC::one(2, 2, z);
  CHECK((one + X1).bar().str() == "1 - X1 + X1*X1");
  auto X12 = TruncNC::monomial(2, 3, z, {1, 2});
  CHECK(X12.bar().homogeneous(2).str() == "X2*X1");
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, 3, 4, z, 10), b = random_series(rng, 3, 4, z, 10);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == b.bar() * a.bar());
    Word w = oracle::random_word(rng, 3, 6, 3);
    CHECK(magnus(w, 5, z).bar() == magnus(w.inverse(), 5, z));
  }
}

TEST_CASE("commutative series and Laurent expansion") {
  Ring z = Ring::integers();
  auto u1 = TruncComm::var(2, 3, z, 1), u2 = TruncComm::var(2, 3, z, 2);
  auto one = u1.one_like();
  CHECK(((one + u1) * (one + u2)).str() == "1 + u1 + u2 + u1*u2");
  CHECK((u1 * u1 * u2).str() == "u1^2*u2");
  CHECK(((one + u1).inverse() * (one + u1)) == one);
  auto t = LaurentPoly::monomial(2, 1, -1);
  CHECK(t.expand(3, z) == (one + u1).inverse());
  CHECK((u1 * u2 * u2).divide_monomial(expo::unit(2)) == u1 * u2);
  CHECK_THROWS_AS((u1 + u2).divide_monomial(expo::unit(2)), DivisionObstruction);
}
