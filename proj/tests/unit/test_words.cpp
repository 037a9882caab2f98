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

TEST_CASE("free reduction") {
  CHECK(parse_word("x1*x1^-1", 2).is_identity());
  CHECK(parse_word("x1*x1^2", 2).str() == "x1^3");
  CHECK(parse_word("x1 x2 x2^-1 x1", 2).str() == "x1^2");
  CHECK_THROWS_AS(Word::gen(2, 3), IndexError);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    Word w = oracle::random_word(rng, 3, 10);
    CHECK((w * w.inverse()).is_identity());
    Word u = oracle::random_word(rng, 3, 6), v = oracle::random_word(rng, 3, 6);
    CHECK((w * u) * v == w * (u * v));
    CHECK(Word(3, w.letters()) == w);
  }
}

TEST_CASE("word parsing") {
  Word w = parse_word("x1*x2^-1", 2);
  REQUIRE(w.size() == 2);
  CHECK(w.letters()[0] == Letter{1, 1});
  CHECK(w.letters()[1] == Letter{2, -1});
  CHECK(parse_word("[x1,x2]", 2).str() == "x1*x2*x1^-1*x2^-1");
  CHECK(parse_word("(x1*x2)^3", 2).str() == "x1*x2*x1*x2*x1*x2");
  CHECK(parse_word("x1^0 x2", 2).str() == "x2");
  CHECK(parse_word(" x1 ^ ( -2 ) ", 2).str() == "x1^-2");
  CHECK(parse_word("1", 3).is_identity());
  CHECK_THROWS_AS(parse_word("x1*", 2), ParseError);
  CHECK_THROWS_AS(parse_word("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_word("[x1 x2]", 2), ParseError);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    Word u = oracle::random_word(rng, 3, 8, 4);
    CHECK(parse_word(u.str(), 3) == u);
  }
}

TEST_CASE("cyclic decomposition") {
  auto [z1, c1] = cyclic_decompose(parse_word("x1 x2 x1^-1", 2));
  CHECK(z1.str() == "x1");
  CHECK(c1.str() == "x2");
  auto [z2, c2] = cyclic_decompose(parse_word("x2^3", 2));
  CHECK(z2.is_identity());
  CHECK(c2.str() == "x2^3");
  auto [z3, c3] = cyclic_decompose(Word(2));
  CHECK(z3.is_identity());
  CHECK(c3.is_identity());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Word u = oracle::random_word(rng, 3, 6), v = oracle::random_word(rng, 3, 6);
    auto [zv, cv] = cyclic_decompose(v);
    Word w = conjugate(u, cv);
    auto [z, c] = cyclic_decompose(w);
    CHECK(conjugate(z, c) == w);
    CHECK(c.is_identity() == w.is_identity());
    // z is a prefix of w
    CHECK(z.size() <= w.size());
    // cyclically reduced: first and last syllables differ, or a single syllable
    if (c.size() >= 2) CHECK(c.letters().front().gen != c.letters().back().gen);
    // c agrees with cv as a cyclic word
    if (!cv.is_identity()) CHECK(rotation_conjugator(c, cv).has_value());
  }
}

TEST_CASE("word powers") {
  Word w = parse_word("x1 x2 x1^-1", 2);
  CHECK(power(w, Int("1000000000000")).str() == "x1*x2^1000000000000*x1^-1");
  CHECK(power(parse_word("x1 x2", 2), -2).str() == "x2^-1*x1^-1*x2^-1*x1^-1");
  CHECK(power(w, 0).is_identity());
}

TEST_CASE("group ring arithmetic") {
  Word a = parse_word("x1", 2), b = parse_word("x2", 2);
  GroupRingElt e = GroupRingElt::of(a) - GroupRingElt::of(Word(2));
  GroupRingElt f = GroupRingElt::of(b, 2);
  CHECK((e * f).augmentation() == 0);
  CHECK((e * f).str() == "2*x1*x2 - 2*x2");
}
