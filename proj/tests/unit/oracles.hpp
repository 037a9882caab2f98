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

// Slow reference implementations used only by the tests.

#pragma once

#include <map>
#include <random>
#include <vector>

#include "prol/prol.hpp"
#include "prol/sample.hpp"

namespace oracle {

using prol::Int;

// Noncommutative polynomial as an ordered map of index vectors.
using Poly = std::map<std::vector<int>, Int>;

inline void add(Poly& p, const std::vector<int>& m, const Int& c) {
  p[m] += c;
  if (p[m] == 0) p.erase(m);
}

inline Poly mul(const Poly& a, const Poly& b, int D) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma.size() + mb.size() > static_cast<std::size_t>(D)) continue;
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      add(out, m, ca * cb);
    }
  return out;
}

// Pascal-row binomials C(e, k) for k <= D, e any integer, via the recurrence
// C(e, k) = C(e, k-1) * (e - k + 1) / k kept exact in rationals.
inline std::vector<Int> binomial_row(long e, int D) {
  std::vector<Int> row{1};
  prol::Rational c = 1;
  for (int k = 1; k <= D; ++k) {
    c = c * prol::Rational(e - k + 1) / prol::Rational(k);
    row.push_back(boost::multiprecision::numerator(c));
  }
  return row;
}

inline Poly magnus(const prol::Word& w, int D) {
  Poly acc{{{}, 1}};
  for (const auto& l : w.letters()) {
    Poly f;
    auto row = binomial_row(prol::to_long(l.exp), D);
    for (int k = 0; k <= D; ++k)
      if (row[k] != 0) f[std::vector<int>(k, l.gen)] = row[k];
    acc = mul(acc, f, D);
  }
  return acc;
}

inline Poly from_series(const prol::TruncNC& s) {
  Poly p;
  for (const auto& [m, c] : s.terms()) p[prol::mono::to_indices(m)] = c;
  return p;
}

inline prol::Word random_word(std::mt19937_64& rng, int r, int max_len, int max_exp = 2) {
  return prol::sample::random_word(rng, r, max_len, max_exp);
}

inline prol::BraidWord random_pure_braid(std::mt19937_64& rng, int r, int max_len) {
  return prol::sample::random_pure_braid(rng, r, max_len);
}

inline prol::BraidWord random_level_braid(std::mt19937_64& rng, int r, int m) {
  return prol::sample::random_level_braid(rng, r, m);
}

inline prol::AutP random_autp(std::mt19937_64& rng, int r, const Int& chi, int max_len) {
  return prol::sample::random_autp(rng, r, chi, max_len);
}

}  // namespace oracle
