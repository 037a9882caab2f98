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

#include <string>
#include <vector>

#include "prol/aut.hpp"
#include "prol/comm_series.hpp"

namespace prol {

// Component i is the image of X_i.
using SeriesTuple = std::vector<TruncNC>;

// Homogeneous element of Hom(H, H^{m+1}).
struct JohnsonValue {
  int m = 1;
  SeriesTuple comps;

  bool is_zero() const {
    for (const auto& c : comps)
      if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const JohnsonValue& o) const { return m == o.m && comps == o.comps; }
};

inline SeriesTuple homogeneous_part(const SeriesTuple& t, int n) {
  SeriesTuple out;
  for (const auto& s : t) out.push_back(s.homogeneous(n));
  return out;
}

// tau(g)(X_i) = chi^{-1} (Theta(phi(x_i)) - 1) - X_i.
inline SeriesTuple johnson_map(const AutP& g, int D, const Ring& ring) {
  if (!ring.is_unit(g.chi)) throw NotUnit("chi is not a unit in the coefficient ring");
  Int ci = ring.inv(g.chi);
  FreeAut phi = g.free_aut();
  SeriesTuple out;
  for (int i = 1; i <= g.r; ++i) {
    TruncNC s = magnus(phi.image(i), D, ring);
    s.add_to(mono::kOne, -1);
    s = s.scaled(ci);
    s.add_to(mono::single(i), -1);
    out.push_back(std::move(s));
  }
  return out;
}

// tau^{(m)}: the degree m+1 part of the Johnson map.
inline JohnsonValue johnson_component(const AutP& g, int m, const Ring& ring) {
  return {m, homogeneous_part(johnson_map(g, m + 1, ring), m + 1)};
}

// eta(g) on X_i, i.e. X_i + tau(g)(X_i), as substitution images.
inline SeriesTuple eta_images(const SeriesTuple& tau) {
  SeriesTuple out;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    TruncNC s = tau[i];
    s.add_to(mono::single(static_cast<int>(i) + 1), 1);
    out.push_back(std::move(s));
  }
  return out;
}

// Johnson map of g1 g2 from those of g1 and g2:
// eta(g1 g2) = eta(g1) o [g1] o eta(g2) o [g1]^{-1}.
inline SeriesTuple johnson_compose(const SeriesTuple& tau1, const Int& chi1, const SeriesTuple& tau2,
                                   const Ring& ring) {
  Int ci = ring.inv(chi1);
  SeriesTuple e1 = eta_images(tau1), e2 = eta_images(tau2), out;
  for (std::size_t i = 0; i < e2.size(); ++i) {
    TruncNC s = e2[i].scale_by_degree(chi1).scaled(ci).substitute(e1);
    s.add_to(mono::single(static_cast<int>(i) + 1), -1);
    out.push_back(std::move(s));
  }
  return out;
}

// D_t(X_a X_b ...) = sum over positions of X.. t(X_k) X..
inline TruncNC apply_derivation(const SeriesTuple& t, const TruncNC& s) {
  TruncNC out = s.zero_like();
  for (const auto& [m, c] : s.terms()) {
    int n = mono::length(m);
    for (int k = 0; k < n; ++k) {
      Mono left = mono::kOne, right = mono::kOne;
      for (int a = 0; a < k; ++a) left = mono::concat(left, mono::single(mono::letter(m, a)));
      for (int a = k + 1; a < n; ++a) right = mono::concat(right, mono::single(mono::letter(m, a)));
      for (const auto& [tm, tc] : t[mono::letter(m, k) - 1].terms()) {
        Mono full = mono::concat(mono::concat(left, tm), right);
        if (mono::length(full) <= s.D()) out.add_to(full, c * tc);
      }
    }
  }
  return out;
}

// Coboundary formulas for tau^{(1)}, tau^{(2)} of a product.
inline JohnsonValue tau1_of_product(const JohnsonValue& t1g1, const Int& chi1, const JohnsonValue& t1g2) {
  JohnsonValue out{1, {}};
  for (std::size_t i = 0; i < t1g1.comps.size(); ++i) out.comps.push_back(t1g1.comps[i] + t1g2.comps[i].scaled(chi1));
  return out;
}

inline JohnsonValue tau2_of_product(const JohnsonValue& t1g1, const JohnsonValue& t2g1, const Int& chi1,
                                    const JohnsonValue& t1g2, const JohnsonValue& t2g2) {
  JohnsonValue out{2, {}};
  for (std::size_t i = 0; i < t2g1.comps.size(); ++i) {
    TruncNC a = t1g2.comps[i].scaled(chi1).with_D(3);
    SeriesTuple d;
    for (const auto& c : t1g1.comps) d.push_back(c.with_D(3));
    out.comps.push_back(t2g1.comps[i] + apply_derivation(d, a) + t2g2.comps[i].scaled(chi1 * chi1));
  }
  return out;
}

// tau^{[m]}(g)(X_i) = Theta_{m+1}(phi(x_i) x_i^{-1}), for g at level >= m.
inline JohnsonValue johnson_hom(const AutP& g, int m, const Ring& ring) {
  if (m < 1) throw Error("Johnson degree must be >= 1");
  FiltrationLevel lv = filtration_level(g, m + 1, ring);
  if (lv.level < m) throw LevelTooLow("element is not in the m-th filtration term");
  FreeAut phi = g.free_aut();
  JohnsonValue out{m, {}};
  for (int i = 1; i <= g.r; ++i)
    out.comps.push_back(magnus(phi.image(i) * Word::gen(g.r, i, -1), m + 1, ring).homogeneous(m + 1));
  return out;
}

// The Milnor-number formula: tau(X_i) = -sum_{|J|=m+1} mu(J) X_J.
inline TruncNC johnson_from_milnor(const MilnorTable& t, int m, int i) {
  if (t.D() < m + 1) throw Error("Milnor table too short");
  int r = t.g().r;
  TruncNC out(r, m + 1, t.ring());
  for (const auto& J : all_indices(r, m + 1)) {
    int j1 = J.front(), jl = J.back();
    MultiIndex rot(J.begin() + 1, J.end());
    rot.push_back(j1);
    Int mu;
    if (i == j1) {
      mu = t.mu(rot) - (j1 == jl ? t.mu(J) : Int(0));
    } else if (i == jl) {
      mu = (j1 == jl ? t.mu(rot) : Int(0)) - t.mu(J);
    } else {
      continue;
    }
    out.add_to(mono::from_indices(J), -mu);
  }
  return out;
}

inline JohnsonValue johnson_from_milnor(const MilnorTable& t, int m) {
  JohnsonValue out{m, {}};
  for (int i = 1; i <= t.g().r; ++i) out.comps.push_back(johnson_from_milnor(t, m, i));
  return out;
}

// q: H^{m} -> S^m(H).
inline TruncComm symmetrize(const TruncNC& s) {
  TruncComm out(s.r(), s.D(), s.ring());
  for (const auto& [m, c] : s.terms()) {
    Expo e = 0;
    for (int k = 0; k < mono::length(m); ++k) e += expo::unit(mono::letter(m, k));
    out.add_to(e, c);
  }
  return out;
}

// Contraction at the last slot, then q.
inline TruncComm morita_trace(const JohnsonValue& v) {
  TruncNC acc = v.comps.at(0).zero_like();
  for (std::size_t i = 0; i < v.comps.size(); ++i) acc += strip_right(v.comps[i], static_cast<int>(i) + 1);
  return symmetrize(acc.homogeneous(v.m).with_D(v.m));
}

// Same trace through group-ring lifts: tr(||tau||) = sum_i d(Theta^{-1}_{m+1} tau(X_i))/dx_i.
inline TruncComm morita_trace_fox(const JohnsonValue& v) {
  int r = static_cast<int>(v.comps.size());
  const Ring& ring = v.comps.at(0).ring();
  TruncNC acc(r, v.m, ring);
  for (int i = 1; i <= r; ++i) {
    GroupRingElt lift(r, ring);
    for (const auto& [m, c] : v.comps[i - 1].terms()) {
      GroupRingElt prod = GroupRingElt::of(Word(r), 1, ring);
      for (int k = 0; k < mono::length(m); ++k)
        prod = prod * (GroupRingElt::of(Word::gen(r, mono::letter(m, k)), 1, ring) - GroupRingElt::of(Word(r), 1, ring));
      lift += prod.scaled(c);
    }
    acc += magnus(fox_derivative(lift, i), v.m, ring).homogeneous(v.m);
  }
  return symmetrize(acc);
}

struct DerivationCheck {
  bool ok = true;
  SeriesTuple Y;
  std::string witness;
};

// tau^{[m]}(g)(X_i) = [Y_i, X_i] with Y_i = Theta_m(y_i), and sum_i [Y_i, X_i] = 0.
inline DerivationCheck derivation_check(const AutP& g, int m, const Ring& ring) {
  JohnsonValue tau = johnson_hom(g, m, ring);
  DerivationCheck out;
  TruncNC total(g.r, m + 1, ring);
  for (int i = 1; i <= g.r; ++i) {
    TruncNC Y = magnus(g.longitude(i), m + 1, ring).homogeneous(m);
    TruncNC X = TruncNC::var(g.r, m + 1, ring, i);
    TruncNC br = Y * X - X * Y;
    if (br != tau.comps[i - 1]) {
      out.ok = false;
      if (out.witness.empty()) out.witness = "component " + std::to_string(i) + " is not [Y_i, X_i]";
    }
    total += br;
    out.Y.push_back(Y.with_D(m));
  }
  if (!total.is_zero()) {
    out.ok = false;
    if (out.witness.empty()) out.witness = "sum of [Y_i, X_i] is " + total.str();
  }
  return out;
}

// Theta_{m+n+1}( psi(a) a^{-1} - phi(b) b^{-1} ), a = phi(f) f^{-1}, b = psi(f) f^{-1}, f = x_i.
inline JohnsonValue commutator_johnson_formula(const FreeAut& psi, const FreeAut& phi, int degree,
                                               const Ring& ring) {
  int r = psi.r();
  JohnsonValue out{degree, {}};
  for (int i = 1; i <= r; ++i) {
    Word f = Word::gen(r, i);
    Word a = phi.apply(f) * f.inverse(), b = psi.apply(f) * f.inverse();
    TruncNC s = magnus(psi.apply(a) * a.inverse(), degree + 1, ring) - magnus(phi.apply(b) * b.inverse(), degree + 1, ring);
    out.comps.push_back(s.homogeneous(degree + 1));
  }
  return out;
}

}  // namespace prol
