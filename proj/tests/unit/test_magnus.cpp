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
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "prol/prol.hpp"

using namespace prol;

namespace {
const Ring Z = Ring::integers();
}

TEST_CASE("magnus expansion examples") {
  CHECK(magnus(parse_word("x1", 2), 3, Z).str() == "1 + X1");
  CHECK(magnus(Word(2), 3, Z).str() == "1");
  TruncNC c = magnus(parse_word("[x1,x2]", 2), 3, Z);
  CHECK(c.truncated(2).str() == "1 + X1*X2 - X2*X1");
  CHECK(oracle::from_series(c) == oracle::magnus(parse_word("[x1,x2]", 2), 3));
  CHECK(magnus(parse_word("[x1,x2]", 2), 2, Z).str() == "1 + X1*X2 - X2*X1");
}

TEST_CASE("magnus agrees with the naive expansion oracle") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    Word w = oracle::random_word(rng, 3, 8, 3);
    CHECK(oracle::from_series(magnus(w, 5, Z)) == oracle::magnus(w, 5));
  }
}

TEST_CASE("Milnor coefficients") {
  CHECK(milnor_coeff({1}, parse_word("x1^3", 2), Z) == 3);
  CHECK(milnor_coeff({2}, parse_word("x1 x2 x1^-1", 2), Z) == 1);
  CHECK(milnor_coeff({1, 2}, parse_word("[x1,x2]", 2), Z) == 1);
  CHECK(milnor_coeff({2, 1}, parse_word("[x1,x2]", 2), Z) == -1);
}

TEST_CASE("product formula and multiplicativity") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    Word u = oracle::random_word(rng, 3, 6), v = oracle::random_word(rng, 3, 6);
    TruncNC tu = magnus(u, 4, Z), tv = magnus(v, 4, Z), tuv = magnus(u * v, 4, Z);
    CHECK(tuv == tu * tv);
    for (const auto& I : all_indices(3, 3)) {
      Int s = 0;
      for (std::size_t k = 0; k <= I.size(); ++k) {
        MultiIndex A(I.begin(), I.begin() + k), B(I.begin() + k, I.end());
        s += tu.coeff(A) * tv.coeff(B);
      }
      CHECK(s == tuv.coeff(I));
    }
  }
}

TEST_CASE("shuffle combinatorics") {
  auto s = proper_shuffles({1}, {2});
  CHECK(s.size() == 2);
  CHECK(std::set<MultiIndex>(s.begin(), s.end()) == std::set<MultiIndex>{{1, 2}, {2, 1}});
  CHECK(shuffles({1}, {2}).size() == 2);
  CHECK(proper_shuffles({1, 2}, {3}).size() == 3);
  CHECK(proper_shuffles({1, 2, 3}, {1, 2}).size() == 10);
  CHECK(shuffles({1}, {1}).size() == 2);
  CHECK(quasi_shuffles({1}, {1}) == std::vector<MultiIndex>{{1, 1}, {1, 1}, {1}});
  for (const auto& I : all_indices(3, 3))
    for (const auto& J : all_indices(3, 2)) CHECK(shuffles(I, J).size() == 10);
  CHECK_THROWS(proper_shuffles({}, {1}));
  // distinct letters: quasi-shuffle equals shuffle
  Word w = parse_word("[x1,x2] x3 [x2,x3]^2", 3);
  TruncNC th = magnus(w, 4, Z);
  Int sum = 0;
  for (const auto& A : proper_shuffles({1, 2}, {3})) sum += th.coeff(A);
  CHECK(sum == th.coeff({1, 2}) * th.coeff({3}));
}

namespace {
// Quasi-shuffles: riffles where an adjacent pair of equal letters may merge.
void quasi(const MultiIndex& I, std::size_t a, const MultiIndex& J, std::size_t b, MultiIndex& cur,
           std::vector<MultiIndex>& out) {
  if (a == I.size() && b == J.size()) {
    out.push_back(cur);
    return;
  }
  if (a < I.size()) {
    cur.push_back(I[a]);
    quasi(I, a + 1, J, b, cur, out);
    cur.pop_back();
  }
  if (b < J.size()) {
    cur.push_back(J[b]);
    quasi(I, a, J, b + 1, cur, out);
    cur.pop_back();
  }
  if (a < I.size() && b < J.size() && I[a] == J[b]) {
    cur.push_back(I[a]);
    quasi(I, a + 1, J, b + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

TEST_CASE("riffle shuffle relation for disjoint letters") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 30; ++t) {
    Word f = oracle::random_word(rng, 4, 10);
    TruncNC th = magnus(f, 5, Z);
    for (const auto& I : all_indices(2, 2))
      for (const auto& J0 : all_indices(2, 2)) {
        MultiIndex J = J0;
        for (int& j : J) j += 2;
        Int s = 0;
        for (const auto& A : shuffles(I, J)) s += th.coeff(A);
        CHECK(s == th.coeff(I) * th.coeff(J));
      }
  }
}

TEST_CASE("quasi-shuffle relation on random words") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    Word f = oracle::random_word(rng, 3, 10);
    TruncNC th = magnus(f, 6, Z);
    for (int li = 1; li <= 2; ++li)
      for (int lj = 1; lj <= 2; ++lj)
        for (const auto& I : all_indices(3, li))
          for (const auto& J : all_indices(3, lj)) {
            Int s = 0;
            std::vector<MultiIndex> qs;
            MultiIndex cur;
            quasi(I, 0, J, 0, cur, qs);
            for (const auto& A : qs) s += th.coeff(A);
            CHECK(s == th.coeff(I) * th.coeff(J));
            std::multiset<MultiIndex> lib;
            for (const auto& A : quasi_shuffles(I, J)) lib.insert(A);
            CHECK(lib == std::multiset<MultiIndex>(qs.begin(), qs.end()));
          }
  }
}

TEST_CASE("lower central series detection") {
  Word x1 = Word::gen(3, 1), x2 = Word::gen(3, 2), x3 = Word::gen(3, 3);
  Word c = commutator(x1, x2);
  for (int d = 2; d <= 5; ++d) {
    TruncNC t = magnus(c, 6, Z);
    t.add_to(mono::kOne, -1);
    CHECK(t.degree() == d);
    c = commutator(d % 2 ? x3 : x1, c);
  }
}

TEST_CASE("Fox derivatives") {
  Word x1 = Word::gen(2, 1), x2 = Word::gen(2, 2);
  CHECK(fox_derivative(x1, 1).str() == "1");
  CHECK(fox_derivative(x1, 2).is_zero());
  CHECK(fox_derivative(x1 * x2, 2).str() == "x1");
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    Word w = oracle::random_word(rng, 3, 7, 3);
    GroupRingElt e = GroupRingElt::of(w);
    // fundamental formula
    GroupRingElt rhs = GroupRingElt::of(Word(3), e.augmentation());
    for (int j = 1; j <= 3; ++j)
      rhs += fox_derivative(e, j) * (GroupRingElt::of(Word::gen(3, j)) - GroupRingElt::of(Word(3)));
    CHECK(rhs == e);
    // inverse rule
    for (int j = 1; j <= 3; ++j)
      CHECK(fox_derivative(w.inverse(), j) == (GroupRingElt::of(w.inverse()) * fox_derivative(w, j)).scaled(-1));
    // product rule
    Word v = oracle::random_word(rng, 3, 5, 2);
    for (int j = 1; j <= 3; ++j)
      CHECK(fox_derivative(w * v, j) == fox_derivative(w, j) + GroupRingElt::of(w) * fox_derivative(v, j));
    // right stripping in the Magnus algebra
    for (int j = 1; j <= 3; ++j)
      CHECK(strip_right(magnus(w, 5, Z), j).truncated(4) == magnus(fox_derivative(w, j), 5, Z).truncated(4));
  }
  CHECK(strip_right(TruncNC::one(2, 3, Z) + TruncNC::monomial(2, 3, Z, {1, 2}), 2).str() == "X1");
  CHECK(strip_right(magnus(x2, 3, Z), 2).str() == "1");
}

TEST_CASE("Magnus map is injective on short words") {
  std::mt19937_64 rng(8);
  std::set<Word> words;
  std::set<std::map<std::vector<int>, Int>> images;
  for (int t = 0; t < 300; ++t) {
    Word w(2);
    for (int k = 0; k < 8; ++k) w.push(static_cast<int>(rng() % 2) + 1, rng() % 2 ? 1 : -1);
    if (!words.insert(w).second) continue;
    images.insert(oracle::from_series(magnus(w, 8, Z)));
  }
  CHECK(images.size() == words.size());
}

TEST_CASE("Witt ranks") {
  CHECK(witt_rank(2, 1) == 2);
  CHECK(witt_rank(2, 2) == 1);
  CHECK(witt_rank(3, 2) == 3);
  // Lyndon word count as an independent oracle.
  for (int r = 2; r <= 3; ++r)
    for (int n = 1; n <= 6; ++n) {
      long count = 0;
      for (const auto& w : all_indices(r, n)) {
        bool lyndon = true;
        for (int k = 1; k < n && lyndon; ++k) {
          MultiIndex rot(w.begin() + k, w.end());
          rot.insert(rot.end(), w.begin(), w.begin() + k);
          if (!(w < rot)) lyndon = false;
        }
        count += lyndon;
      }
      CHECK(witt_rank(r, n) == count);
    }
}
