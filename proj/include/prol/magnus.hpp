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

#include <vector>

#include "prol/comm_series.hpp"
#include "prol/nc_series.hpp"
#include "prol/word.hpp"

namespace prol {

using MultiIndex = std::vector<int>;

// Theta(w), x_i -> 1 + X_i.
inline TruncNC magnus(const Word& w, int D, const Ring& ring) {
  TruncNC acc = TruncNC::one(w.r(), D, ring);
  for (const auto& l : w.letters()) {
    // acc * (1 + X_g)^e, appending k copies of X_g on the right.
    TruncNC next = acc;
    Mono run = mono::kOne;
    for (int k = 1; k <= D; ++k) {
      run = mono::concat(run, mono::single(l.gen));
      Int b = ring.reduce(binom(l.exp, static_cast<unsigned>(k)));
      if (b == 0) continue;
      for (const auto& [m, c] : acc.terms())
        if (mono::length(m) + k <= D) next.add_to(mono::concat(m, run), c * b);
    }
    acc = std::move(next);
  }
  return acc;
}

inline TruncNC magnus(const GroupRingElt& e, int D, const Ring& ring) {
  TruncNC acc(e.r(), D, ring);
  for (const auto& [w, c] : e.terms()) acc += magnus(w, D, ring).scaled(c);
  return acc;
}

inline Int milnor_coeff(const MultiIndex& I, const Word& w, const Ring& ring) {
  if (I.empty()) throw Error("multi-index must be nonempty");
  return magnus(w, static_cast<int>(I.size()), ring).coeff(I);
}

// d(x_g^e)/dx_g as a finite group-ring sum.
inline GroupRingElt fox_power(int r, int g, const Int& e, const Ring& ring) {
  GroupRingElt out(r, ring);
  if (abs(e) > kMaxWordPower) throw Error("exponent too large for group-ring expansion");
  long n = to_long(e);
  if (n > 0) {
    for (long t = 0; t < n; ++t) out.add(Word::gen(r, g, t), 1);
  } else {
    for (long t = 1; t <= -n; ++t) out.add(Word::gen(r, g, -t), -1);
  }
  return out;
}

inline GroupRingElt fox_derivative(const Word& w, int j, const Ring& ring = Ring::integers()) {
  GroupRingElt out(w.r(), ring);
  Word prefix(w.r());
  for (const auto& l : w.letters()) {
    if (l.gen == j) out += GroupRingElt::of(prefix, 1, ring) * fox_power(w.r(), j, l.exp, ring);
    prefix.push(l.gen, l.exp);
  }
  return out;
}

inline GroupRingElt fox_derivative(const GroupRingElt& e, int j) {
  GroupRingElt out(e.r(), e.ring());
  for (const auto& [w, c] : e.terms()) out += fox_derivative(w, j, e.ring()).scaled(c);
  return out;
}

// Coefficient of X_{I j} moved to X_I.
inline TruncNC strip_right(const TruncNC& s, int j) {
  TruncNC out = s.zero_like();
  for (const auto& [m, c] : s.terms())
    if (mono::length(m) > 0 && mono::last(m) == j) out.add_to(mono::drop_last(m), c);
  return out;
}

namespace detail {
inline void shuffle_rec(const MultiIndex& I, std::size_t a, const MultiIndex& J, std::size_t b, bool merge,
                        MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (a == I.size() && b == J.size()) {
    out.push_back(cur);
    return;
  }
  auto step = [&](int letter, std::size_t na, std::size_t nb) {
    cur.push_back(letter);
    shuffle_rec(I, na, J, nb, merge, cur, out);
    cur.pop_back();
  };
  if (a < I.size()) step(I[a], a + 1, b);
  if (b < J.size()) step(J[b], a, b + 1);
  if (merge && a < I.size() && b < J.size() && I[a] == J[b]) step(I[a], a + 1, b + 1);
}
}  // namespace detail

// Riffle shuffles of I and J, with multiplicity.
inline std::vector<MultiIndex> shuffles(const MultiIndex& I, const MultiIndex& J) {
  std::vector<MultiIndex> out;
  MultiIndex cur;
  detail::shuffle_rec(I, 0, J, 0, false, cur, out);
  return out;
}

inline std::vector<MultiIndex> proper_shuffles(const MultiIndex& I, const MultiIndex& J) {
  if (I.empty() || J.empty()) throw Error("proper shuffles need nonempty indices");
  return shuffles(I, J);
}

// Riffles plus identifications of an equal letter of I with one of J; these
// index the exact product rule mu(I) mu(J) = sum mu(A) for group elements.
inline std::vector<MultiIndex> quasi_shuffles(const MultiIndex& I, const MultiIndex& J) {
  std::vector<MultiIndex> out;
  MultiIndex cur;
  detail::shuffle_rec(I, 0, J, 0, true, cur, out);
  return out;
}

inline int moebius(long n) {
  int m = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

// Rank of the degree-n part of the free Lie algebra on r generators.
inline Int witt_rank(int r, int n) {
  if (r < 1 || n < 1) throw Error("witt_rank needs r >= 1, n >= 1");
  Int s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += moebius(d) * ipow(Int(r), static_cast<unsigned>(n / d));
  return s / n;
}

// All multi-indices over 1..r of the given length.
inline std::vector<MultiIndex> all_indices(int r, int len) {
  std::vector<MultiIndex> out;
  MultiIndex cur(len, 1);
  if (len == 0) return {cur};
  while (true) {
    out.push_back(cur);
    int k = len - 1;
    while (k >= 0 && cur[k] == r) cur[k--] = 1;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

inline std::string index_str(const MultiIndex& I) {
  bool wide = false;
  for (int i : I) wide |= i >= 10;
  std::string s;
  for (std::size_t k = 0; k < I.size(); ++k) s += (wide && k ? "," : "") + std::to_string(I[k]);
  return s;
}

inline MultiIndex parse_index(const std::string& text) {
  MultiIndex I;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      I.push_back(std::stoi(text.substr(pos, next - pos)));
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("bad multi-index \"" + text + "\"");
      I.push_back(c - '0');
    }
  }
  return I;
}

}  // namespace prol
