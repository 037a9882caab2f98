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

// Property suites shared by the verify subcommand and the acceptance driver.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "prol/prol.hpp"

namespace prol::suites {

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
  bool ok() const { return checks > 0 && failures == 0; }
  std::string summary() const {
    std::string s = std::to_string(checks - failures) + "/" + std::to_string(checks) + " checks";
    if (failures) s += "; first failure: " + first_failure;
    return s;
  }
};

struct Result {
  int id = 0;
  std::string name;
  std::string tag;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;
  std::vector<std::string> notes;
};

struct Suite {
  int id;
  std::string name;
  std::string tag;
  double budget;
  std::function<void(std::mt19937_64&, Tally&, std::vector<std::string>&)> body;
};

inline const Ring& integers_ring() {
  static const Ring Z = Ring::integers();
  return Z;
}

inline void shuffle_suite(std::mt19937_64& rng, Tally& t, std::vector<std::string>& notes) {
  const Ring& Z = integers_ring();
  std::vector<MultiIndex> idx;
  for (int n = 1; n <= 3; ++n)
    for (const auto& I : all_indices(3, n)) idx.push_back(I);
  long riffle_total = 0, riffle_fail = 0, riffle_disjoint_fail = 0;
  for (int k = 0; k < 500; ++k) {
    Word f = sample::random_word(rng, 3, 12);
    TruncNC th = magnus(f, 6, Z);
    for (const auto& I : idx)
      for (const auto& J : idx) {
        Int prod = th.coeff(I) * th.coeff(J);
        Int q = 0, s = 0;
        for (const auto& A : quasi_shuffles(I, J)) q += th.coeff(A);
        for (const auto& A : shuffles(I, J)) s += th.coeff(A);
        t.check(q == prod, "word " + f.str() + " I=" + index_str(I) + " J=" + index_str(J));
        ++riffle_total;
        if (s != prod) {
          ++riffle_fail;
          bool disjoint = true;
          for (int a : I)
            for (int b : J) disjoint = disjoint && a != b;
          if (disjoint) ++riffle_disjoint_fail;
        }
      }
  }
  notes.push_back("riffle-only reading: " + std::to_string(riffle_fail) + "/" + std::to_string(riffle_total) +
                  " pairs fail, " + std::to_string(riffle_disjoint_fail) + " of them with disjoint letters");
}

inline void lcs_suite(std::mt19937_64& rng, Tally& t, std::vector<std::string>&) {
  const Ring& Z = integers_ring();
  for (int k = 0; k < 40; ++k) {
    Word c = Word::gen(3, static_cast<int>(rng() % 3) + 1);
    for (int d = 2; d <= 5; ++d) {
      Word a = k % 2 ? Word::gen(3, static_cast<int>(rng() % 3) + 1) : sample::random_word(rng, 3, 3);
      c = commutator(a, c);
      TruncNC th = magnus(c, 6, Z);
      th.add_to(mono::kOne, -1);
      t.check(th.is_zero() || th.degree() >= d, "depth " + std::to_string(d) + " word " + c.str());
    }
  }
  Word c = commutator(Word::gen(3, 1), Word::gen(3, 2));
  for (int d = 2; d <= 5; ++d) {
    TruncNC th = magnus(c, 6, Z);
    th.add_to(mono::kOne, -1);
    t.check(th.degree() == d, "left-normed depth " + std::to_string(d));
    c = commutator(d % 2 ? Word::gen(3, 3) : Word::gen(3, 1), c);
  }
}

inline void longitude_suite(std::mt19937_64& rng, Tally& t, std::vector<std::string>&) {
  for (int k = 0; k < 100; ++k) {
    BraidWord b1 = sample::random_pure_braid(rng, 3, 3), b2 = sample::random_pure_braid(rng, 3, 3);
    AutP h = braid_autp(b1), g = braid_autp(b2);
    std::string tag = "pair " + b1.str() + " / " + b2.str();
    t.check(longitude_cocycle(h, g) == longitudes(artin(b1) * artin(b2)), tag);
    AutP hinv = longitude_inverse(h, artin(b1).inverse());
    t.check(hinv == braid_autp(b1.inverse()), "inverse " + tag);
    t.check(longitude_cocycle(h, hinv) == AutP::identity(3), "h h^-1 " + tag);
  }
}

inline void conjugation_suite(std::mt19937_64& rng, Tally& t, std::vector<std::string>&) {
  const Ring& Z = integers_ring();
  for (int k = 0; k < 50; ++k) {
    BraidWord g = sample::random_pure_braid(rng, 3, 3), h = sample::random_pure_braid(rng, 3, 3);
    MilnorTable a(braid_autp(g), 4, Z, DeltaMode::extended);
    MilnorTable b(braid_autp(h * g * h.inverse()), 4, Z, DeltaMode::extended);
    for (int n = 2; n <= 4; ++n)
      for (const auto& I : all_indices(3, n)) {
        Ideal d = a.delta(I);
        std::string tag = "g=" + g.str() + " h=" + h.str() + " I=" + index_str(I);
        t.check(b.delta(I) == d, "delta " + tag);
        t.check(d.contains(b.mu(I) - a.mu(I)), "mu " + tag);
      }
  }
}

inline void johnson_suite(std::mt19937_64& rng, Tally& t, std::vector<std::string>&) {
  const Ring& Z = integers_ring();
  for (int k = 0; k < 50; ++k) {
    int m = 1 + k % 3;
    BraidWord a = sample::random_level_braid(rng, 3, m), b = sample::random_level_braid(rng, 3, m);
    AutP ga = braid_autp(a), gb = braid_autp(b);
    JohnsonValue ta = johnson_hom(ga, m, Z);
    t.check(ta == johnson_from_milnor(MilnorTable(ga, m + 1, Z), m), "Milnor route " + a.str());
    t.check(ta == johnson_component(ga, m, Z), "component route " + a.str());
    JohnsonValue tb = johnson_hom(gb, m, Z);
    std::vector<TruncNC> img = braid_magnus_images(a * b, m + 1, Z);
    bool add = true;
    for (int i = 0; i < 3; ++i) {
      TruncNC tab = (img[i] * magnus(Word::gen(3, i + 1, -1), m + 1, Z)).homogeneous(m + 1);
      add = add && tab == ta.comps[i] + tb.comps[i];
    }
    t.check(add, "additivity " + a.str() + " , " + b.str());
  }
}

inline void coboundary_suite(std::mt19937_64& rng, Tally& t, std::vector<std::string>&) {
  Ring R = Ring::mod(5, 3);
  for (int k = 0; k < 50; ++k) {
    AutP g1 = k % 2 ? sample::random_autp(rng, 3, 6, 3) : braid_autp(sample::random_pure_braid(rng, 3, 3));
    AutP g2 = k % 3 ? sample::random_autp(rng, 3, 11, 3) : braid_autp(sample::random_pure_braid(rng, 3, 3));
    AutP g12 = longitude_cocycle(g1, g2);
    JohnsonValue a1 = johnson_component(g1, 1, R), a2 = johnson_component(g1, 2, R);
    JohnsonValue b1 = johnson_component(g2, 1, R), b2 = johnson_component(g2, 2, R);
    t.check(johnson_component(g12, 1, R) == tau1_of_product(a1, g1.chi, b1), "tau1 pair " + std::to_string(k));
    t.check(johnson_component(g12, 2, R) == tau2_of_product(a1, a2, g1.chi, b1, b2), "tau2 pair " + std::to_string(k));
  }
}

inline void cocycle_suite(std::mt19937_64& rng, Tally& t, std::vector<std::string>&) {
  const Ring& Z = integers_ring();
  Ring R = Ring::mod(5, 4);
  const int D = 4;
  for (int k = 0; k < 50; ++k) {
    BraidWord a = sample::random_pure_braid(rng, 3, 2), b = sample::random_pure_braid(rng, 3, 2);
    FreeAut pa = artin(a), pb = artin(b), pab = artin(a * b);
    std::string tag = a.str() + " , " + b.str();
    t.check(magnus_cocycle(pab, D, Z) == matmul(magnus_cocycle(pa, D, Z), act_on(pa, magnus_cocycle(pb, D, Z))),
            "Magnus " + tag);
    t.check(gassner(pab, D, Z) == matmul(gassner(pa, D, Z), gassner(pb, D, Z)), "Gassner " + tag);
    AutP g = longitudes(pa), h = longitudes(pb);
    t.check(gassner_reduced(longitude_cocycle(g, h), D, Z) == matmul(gassner_reduced(g, D, Z), gassner_reduced(h, D, Z)),
            "reduced Gassner " + tag);
  }
  for (int k = 0; k < 10; ++k) {
    AutP g = sample::random_autp(rng, 3, 6, 3), h = sample::random_autp(rng, 3, 6, 3);
    AutP gh = longitude_cocycle(g, h);
    std::string tag = "synthetic " + std::to_string(k);
    t.check(magnus_cocycle(gh, D, R) == matmul(magnus_cocycle(g, D, R), act_on(g.free_aut(), magnus_cocycle(h, D, R))),
            "Magnus " + tag);
    t.check(gassner(gh, D, R) == matmul(gassner(g, D, R), chi_action(gassner(h, D, R), g.chi)), "Gassner " + tag);
    t.check(gassner_reduced(gh, D, R) == matmul(gassner_reduced(g, D, R), chi_action(gassner_reduced(h, D, R), g.chi)),
            "reduced Gassner " + tag);
  }
}

inline void matrix_props_suite(std::mt19937_64& rng, Tally& t, std::vector<std::string>&) {
  const Ring& Z = integers_ring();
  Ring R = Ring::mod(5, 4);
  for (int k = 0; k < 21; ++k) {
    int m = 1 + k % 3;
    AutP g = braid_autp(sample::random_level_braid(rng, 3, m));
    t.check(truncate_matrix(magnus_cocycle(g, m + 1, Z), m) == magnus_from_johnson(johnson_hom(g, m, Z)),
            "Magnus truncation level " + std::to_string(m));
    JohnsonValue v = johnson_hom(g, m, Z);
    t.check(morita_trace(v) == morita_trace_fox(v), "trace routes level " + std::to_string(m));
  }
  for (int k = 0; k < 20; ++k) {
    AutP g = k % 2 ? braid_autp(sample::random_pure_braid(rng, 3, 3)) : sample::random_autp(rng, 3, 6, 3);
    const Ring& ring = k % 2 ? Z : R;
    t.check(gassner_from_milnor(MilnorTable(g, 4, ring), 3) == gassner(g, 3, ring), "Gassner entries " + std::to_string(k));
  }
  Word c12 = parse_word("[x1,x2]", 3);
  for (int k = 0; k < 20; ++k) {
    Word a = sample::random_word(rng, 3, 4), b = sample::random_word(rng, 3, 4), c = sample::random_word(rng, 3, 3);
    Word f = commutator(a, b) * conjugate(c, commutator(b, c));
    t.check(crowell_nu2(crowell_nu1(f, 4, Z)).is_zero(), "kernel relation " + f.str());
    AutP g = k % 2 ? braid_autp(sample::random_pure_braid(rng, 3, 3)) : sample::random_autp(rng, 3, 6, 3);
    const Ring& ring = k % 2 ? Z : R;
    t.check(meta_action_check(g, f, 3, ring) && meta_action_check(g, c12, 3, ring), "intertwining " + std::to_string(k));
  }
  for (int k = 0; k < 20; ++k) {
    AutP g = k % 2 ? braid_autp(sample::random_pure_braid(rng, 3, 3)) : sample::random_autp(rng, 3, 6, 3);
    const Ring& ring = k % 2 ? Z : R;
    bool ok = true;
    try {
      AlexanderData a = alexander_matrix(g, 3, ring);
      TruncIdeal rel = link_relation_ideal(3, g.chi, 3, ring);
      ok = a.Q == reduce_matrix(rel, minus_identity(gassner_from_milnor(MilnorTable(g, 4, ring), 3)));
    } catch (const Error&) {
      ok = false;
    }
    t.check(ok, "Alexander matrix routes " + std::to_string(k));
  }
  for (int k = 0; k < 20; ++k) {
    BraidWord g = sample::random_pure_braid(rng, 3, 3), h = sample::random_pure_braid(rng, 3, 2);
    CommMatrix Qg = alexander_matrix(braid_autp(g), 3, Z).Q;
    CommMatrix Qc = alexander_matrix(braid_autp(h * g * h.inverse()), 3, Z).Q;
    CommMatrix P = gassner(braid_autp(h), 3, Z);
    t.check(Qc == matmul(matmul(P, Qg), matrix_inverse(P)), "similarity " + g.str() + " by " + h.str());
  }
}

inline void ihara_suite(std::mt19937_64& rng, Tally& t, std::vector<std::string>&) {
  const Ring& Z = integers_ring();
  Ring R = Ring::mod(5, 4);
  t.check(ihara_series_symbolic(AutP::identity(2), 5, Z).reduced_gassner == TruncComm::one(2, 5, Z), "identity");
  t.check(ihara_series_symbolic(braid_autp(parse_braid("s1^2", 2)), 5, Z).agree(), "s1^2");
  for (int k = 0; k < 24; ++k) {
    AutP g = k % 2 ? sample::random_autp(rng, 2, 6, 4) : sample::random_autp(rng, 2, 1, 4);
    t.check(ihara_series_symbolic(g, 5, k % 2 ? R : Z).agree(), "automorphism " + std::to_string(k));
  }
}

struct NumberTheoryCase {
  long l;
  int n;
  long p;
};

inline void jacobi_suite(std::mt19937_64&, Tally& t, std::vector<std::string>&) {
  for (auto c : {NumberTheoryCase{3, 1, 7}, {3, 2, 19}, {3, 2, 37}, {5, 1, 11}}) {
    auto fr = frobenius_input(c.p, c.l, c.n);
    ResidueField F = build_residue_field(fr);
    Int q = ipow(Int(c.p), static_cast<unsigned>(fr.f));
    for (auto [a, b] : jacobi_pairs(c.l, c.n)) {
      CycloInt J = jacobi_sum(F, a, b);
      t.check(J * J.conj() == CycloInt::constant(c.l, c.n, q),
              "p=" + std::to_string(c.p) + " (a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
}

inline void recovery_suite(std::mt19937_64&, Tally& t, std::vector<std::string>& notes) {
  for (long p : {19L, 37L}) {
    MuNNTable m = mu_from_jacobi_calibrated(frobenius_input(p, 3, 2), 4);
    std::string tag = "p=" + std::to_string(p);
    t.check(m.self_check, "reconstruction " + tag);
    t.check(m.low_degree_vanishes, "degree <= 2 vanishing " + tag);
    int lo = kInfiniteValuation;
    for (const auto& [nn, e] : m.entries) lo = std::min(lo, e.precision);
    notes.push_back(tag + ": convention " + m.convention.str() + ", M=" + std::to_string(m.M) +
                    ", attained precision 3^" + std::to_string(lo) + " of e(p)=" + std::to_string(m.frob.e));
  }
}

inline void soule_suite(std::mt19937_64&, Tally& t, std::vector<std::string>& notes) {
  for (long p : {19L, 37L}) {
    auto fr = frobenius_input(p, 3, 2);
    MuNNTable m = mu_from_jacobi_calibrated(fr, 4);
    ResidueField F = build_residue_field(fr, m.convention.zeta_sign);
    std::map<int, long> twisted{{3, soule_kappa(3, F, UnitForm::twisted)}};
    std::map<int, long> literal{{3, soule_kappa(3, F, UnitForm::literal)}};
    int literal_fail = 0;
    for (auto [N1, N2] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
      SouleCheck c = soule_identity_check(m, twisted, N1, N2);
      std::ostringstream tag;
      tag << "p=" << p << " (" << N1 << "," << N2 << ") lhs=" << c.lhs << " rhs=" << c.rhs;
      t.check(c.ok, tag.str());
      if (!soule_identity_check(m, literal, N1, N2).ok) ++literal_fail;
    }
    notes.push_back("p=" + std::to_string(p) + ": kappa_3 = " + std::to_string(twisted[3]) +
                    " mod 9 (twisted unit); literal unit gives " + std::to_string(literal[3]) + " and fails " +
                    std::to_string(literal_fail) + "/3 identities");
  }
}

inline long mobius_independent(long n) {
  long result = 1;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  return n > 1 ? -result : result;
}

inline void witt_suite(std::mt19937_64&, Tally& t, std::vector<std::string>&) {
  for (auto [r, nmax] : {std::pair{2, 6}, {3, 4}}) {
    for (int n = 1; n <= nmax; ++n) {
      Int sum = 0;
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) sum += mobius_independent(n / d) * ipow(Int(r), static_cast<unsigned>(d));
      t.check(witt_rank(r, n) == sum / n, "r=" + std::to_string(r) + " n=" + std::to_string(n));
    }
  }
}

inline std::vector<Suite> all_suites() {
  return {
      {1, "shuffle", "Magnus coefficient product formula", 10, shuffle_suite},
      {2, "lcs", "lower central series detection", 5, lcs_suite},
      {3, "longitude", "longitude cocycle and inverse", 30, longitude_suite},
      {4, "conjugation", "Milnor invariant conjugation invariance", 60, conjugation_suite},
      {5, "johnson", "Johnson homomorphism dual routes and additivity", 60, johnson_suite},
      {6, "coboundary", "Johnson coboundary laws", 60, coboundary_suite},
      {7, "cocycle", "Magnus, Gassner and reduced Gassner cocycle laws", 120, cocycle_suite},
      {8, "matrix", "Magnus, Gassner, Crowell and Alexander matrix identities", 120, matrix_props_suite},
      {9, "ihara", "Ihara series three routes", 30, ihara_suite},
      {10, "jacobi", "Jacobi sum norms", 10, jacobi_suite},
      {11, "recovery", "Milnor numbers from Jacobi sums", 30, recovery_suite},
      {12, "soule", "Soule character identity", 30, soule_suite},
      {13, "witt", "Witt ranks", 1, witt_suite},
  };
}

inline Result run_suite(const Suite& s, std::uint64_t seed) {
  Result r;
  r.id = s.id;
  r.name = s.name;
  r.tag = s.tag;
  r.budget = s.budget;
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(s.id));
  Tally t;
  auto start = std::chrono::steady_clock::now();
  try {
    s.body(rng, t, r.notes);
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = t.ok() && r.seconds <= r.budget;
  r.detail = t.summary();
  if (r.seconds > r.budget) r.detail += "; over time budget";
  return r;
}

}  // namespace prol::suites
