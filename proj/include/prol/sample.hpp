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

// Random samplers for property suites.

#pragma once

#include <random>

#include "prol/aut.hpp"
#include "prol/braid.hpp"
#include "prol/word.hpp"

namespace prol::sample {

inline Word random_word(std::mt19937_64& rng, int r, int max_len, int max_exp = 2) {
  Word w(r);
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int k = 0; k < len; ++k) {
    int g = static_cast<int>(rng() % r) + 1;
    long e = static_cast<long>(rng() % max_exp) + 1;
    if (rng() % 2) e = -e;
    w.push(g, e);
  }
  return w;
}

// Product of 1..max_len band generators A_ij^{+-1}.
inline BraidWord random_pure_braid(std::mt19937_64& rng, int r, int max_len) {
  BraidWord b(r);
  int len = static_cast<int>(rng() % max_len) + 1;
  for (int k = 0; k < len; ++k) {
    int i = static_cast<int>(rng() % (r - 1)) + 1;
    int j = i + 1 + static_cast<int>(rng() % (r - i));
    b.push({true, i, j, rng() % 2 ? 1L : -1L});
  }
  return b;
}

// Iterated commutator of single band generators; its Artin image lies in the
// m-th Milnor filtration term.
inline BraidWord random_level_braid(std::mt19937_64& rng, int r, int m) {
  BraidWord b = random_pure_braid(rng, r, 1);
  for (int k = 1; k < m; ++k) {
    BraidWord a = random_pure_braid(rng, r, 1);
    b = a * b * a.inverse() * b.inverse();
  }
  return b;
}

// Normalized synthetic datum with the given norm: each y_i has zero X_i exponent.
inline AutP random_autp(std::mt19937_64& rng, int r, const Int& chi, int max_len) {
  AutP g{r, chi, {}};
  for (int i = 1; i <= r; ++i) {
    Word y = random_word(rng, r, max_len);
    y *= Word::gen(r, i, -y.exponent_sum(i));
    g.y.push_back(y);
  }
  return g;
}

}  // namespace prol::sample
