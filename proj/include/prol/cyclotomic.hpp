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

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "prol/core.hpp"

namespace prol {

inline long ipow_long(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline long mod_long(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long mulmod(long a, long b, long m) {
  return static_cast<long>((static_cast<__int128>(a) * b) % m);
}

inline long powmod_long(long b, long e, long m) {
  long r = 1 % m;
  b = mod_long(b, m);
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

inline std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Element of Z[zeta_{l^n}] in the power basis 1, zeta, ..., zeta^{phi-1}.
class CycloInt {
 public:
  CycloInt(long l, int n) : l_(l), n_(n), order_(ipow_long(l, n)), phi_(order_ / l * (l - 1)) {
    if (!is_prime(l) || n < 1) throw FieldError("cyclotomic ring needs prime l and n >= 1");
    c_.assign(phi_, 0);
  }

  static CycloInt constant(long l, int n, const Int& c) {
    CycloInt z(l, n);
    z.c_[0] = c;
    return z;
  }

  // c * zeta^k for any integer k.
  static CycloInt zeta_power(long l, int n, long k, const Int& c = 1) {
    CycloInt z(l, n);
    std::vector<Int> full(z.order_, 0);
    full[mod_long(k, z.order_)] = c;
    z.fold(full);
    return z;
  }

  long l() const { return l_; }
  int n() const { return n_; }
  long order() const { return order_; }
  long phi() const { return phi_; }
  const std::vector<Int>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_constant() const {
    for (long k = 1; k < phi_; ++k)
      if (c_[k] != 0) return false;
    return true;
  }

  CycloInt& operator+=(const CycloInt& o) {
    check(o);
    for (long k = 0; k < phi_; ++k) c_[k] += o.c_[k];
    return *this;
  }
  CycloInt& operator-=(const CycloInt& o) {
    check(o);
    for (long k = 0; k < phi_; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  CycloInt operator-() const { return scaled(-1); }

  friend CycloInt operator*(const CycloInt& a, const CycloInt& b) {
    a.check(b);
    std::vector<Int> full(a.order_, 0);
    for (long i = 0; i < a.phi_; ++i) {
      if (a.c_[i] == 0) continue;
      for (long j = 0; j < a.phi_; ++j)
        if (b.c_[j] != 0) full[(i + j) % a.order_] += a.c_[i] * b.c_[j];
    }
    CycloInt z(a.l_, a.n_);
    z.fold(full);
    return z;
  }

  CycloInt scaled(const Int& k) const {
    CycloInt z = *this;
    for (auto& x : z.c_) x *= k;
    return z;
  }

  CycloInt pow(unsigned e) const {
    CycloInt acc = constant(l_, n_, 1), b = *this;
    while (e) {
      if (e & 1) acc = acc * b;
      b = b * b;
      e >>= 1;
    }
    return acc;
  }

  // zeta -> zeta^t.
  CycloInt sigma(long t) const {
    if (mod_long(t, l_) == 0) throw FieldError("Galois twist needs t prime to l");
    std::vector<Int> full(order_, 0);
    for (long k = 0; k < phi_; ++k) full[mulmod(k, mod_long(t, order_), order_)] += c_[k];
    CycloInt z(l_, n_);
    z.fold(full);
    return z;
  }

  CycloInt conj() const { return sigma(-1); }

  bool operator==(const CycloInt& o) const { return l_ == o.l_ && n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const CycloInt& o) const { return !(*this == o); }

  // Coordinates in 1, pi, ..., pi^{phi-1} with pi = zeta - 1.
  std::vector<Int> pi_coordinates() const {
    std::vector<Int> out(phi_, 0);
    for (long j = 0; j < phi_; ++j) {
      if (c_[j] == 0) continue;
      for (long k = 0; k <= j; ++k) out[k] += c_[j] * binom(Int(j), static_cast<unsigned>(k));
    }
    return out;
  }

  // v_pi; kInfiniteValuation for zero.
  int pi_valuation() const {
    auto v = pi_coordinates();
    int best = kInfiniteValuation;
    for (long k = 0; k < phi_; ++k)
      if (v[k] != 0) best = std::min<long>(best, phi_ * valuation(v[k], l_) + k);
    return best;
  }

  std::string str() const {
    std::string s = "[";
    for (long k = 0; k < phi_; ++k) s += (k ? ", " : "") + c_[k].str();
    return s + "]";
  }

 private:
  void check(const CycloInt& o) const {
    if (l_ != o.l_ || n_ != o.n_) throw ShapeMismatch("cyclotomic ring mismatch");
  }

  // Reduce an exponent-indexed array of length l^n modulo Phi_{l^n}.
  void fold(std::vector<Int>& full) {
    long step = order_ / l_;
    for (long d = order_ - 1; d >= phi_; --d) {
      if (full[d] == 0) continue;
      Int c = full[d];
      full[d] = 0;
      // zeta^{phi + s} = -sum_{k < l-1} zeta^{k step + s}
      long s = d - phi_;
      for (long k = 0; k < l_ - 1; ++k) full[k * step + s] -= c;
    }
    c_.assign(full.begin(), full.begin() + phi_);
  }

  long l_;
  int n_;
  long order_;
  long phi_;
  std::vector<Int> c_;
};

struct FrobeniusInput {
  long p = 0;
  long l = 0;
  int n = 0;
  int f = 0;  // order of p mod l^n
  int e = 0;  // max e with p^f = 1 mod l^e
};

inline FrobeniusInput frobenius_input(long p, long l, int n) {
  if (!is_prime(p) || !is_prime(l) || p == l) throw FieldError("need distinct primes p, l");
  FrobeniusInput fr{p, l, n, 0, 0};
  long ln = ipow_long(l, n);
  long x = p % ln;
  fr.f = 1;
  while (x != 1 % ln) {
    x = mulmod(x, p, ln);
    ++fr.f;
  }
  Int q = ipow(Int(p), static_cast<unsigned>(fr.f)) - 1;
  fr.e = valuation(q, l);
  return fr;
}

// F_{p^f} with a fixed generator, discrete-log tables, and the image of zeta.
// Elements are encoded as integers whose base-p digits are the polynomial
// coefficients (lowest first).
class ResidueField {
 public:
  static constexpr long kMaxOrder = 100000000;

  ResidueField(long p, int f, long l, int n, int zeta_sign = 1)
      : p_(p), f_(f), l_(l), n_(n), ln_(ipow_long(l, n)), zeta_sign_(zeta_sign) {
    if (!is_prime(p) || !is_prime(l) || p == l || f < 1) throw FieldError("bad residue field parameters");
    if (zeta_sign != 1 && zeta_sign != -1) throw FieldError("zeta sign must be +-1");
    Int qq = ipow(Int(p), static_cast<unsigned>(f));
    if (qq > kMaxOrder) throw FieldError("field too large for a discrete-log table");
    q_ = static_cast<long>(qq);
    if ((q_ - 1) % ln_ != 0) throw FieldError("l^n does not divide p^f - 1");
    pick_modulus();
    pick_generator();
    log_.assign(q_, -1);
    exp_.assign(q_ - 1, 0);
    long x = 1;
    for (long k = 0; k < q_ - 1; ++k) {
      exp_[k] = x;
      log_[x] = k;
      x = slow_mul(x, gen_);
    }
    omega_ = pow(gen_, (q_ - 1) / ln_);
    if (zeta_sign_ < 0) omega_ = inv(omega_);
  }

  long p() const { return p_; }
  int f() const { return f_; }
  long q() const { return q_; }
  long l() const { return l_; }
  int n() const { return n_; }
  long ln() const { return ln_; }
  int zeta_sign() const { return zeta_sign_; }
  long generator() const { return gen_; }
  const std::vector<long>& modulus() const { return modulus_; }
  long omega() const { return omega_; }

  long from_int(long k) const { return mod_long(k, p_); }

  long add(long a, long b) const {
    long out = 0, place = 1;
    for (int i = 0; i < f_; ++i) {
      out += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }

  long neg(long a) const {
    long out = 0, place = 1;
    for (int i = 0; i < f_; ++i) {
      out += ((p_ - a % p_) % p_) * place;
      a /= p_;
      place *= p_;
    }
    return out;
  }

  long mul(long a, long b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }

  long inv(long a) const {
    if (a == 0) throw FieldError("zero has no inverse");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  long pow(long a, long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    long k = static_cast<long>((static_cast<__int128>(log_[a]) * mod_long(e, q_ - 1)) % (q_ - 1));
    return exp_[k];
  }

  long dlog(long a) const {
    if (a <= 0 || a >= q_) throw FieldError("discrete log of zero");
    return log_[a];
  }

  // c with x^{(q-1)/l^n} = omega^c.
  long symbol(long x) const {
    if (x == 0) throw FieldError("power residue symbol of zero");
    return mod_long(zeta_sign_ * (dlog(x) % ln_), ln_);
  }

  // Image of a cyclotomic integer under zeta -> omega.
  long reduce(const CycloInt& z) const {
    if (z.order() != ln_) throw ShapeMismatch("cyclotomic level does not match the field");
    long acc = 0, w = 1;
    for (long k = 0; k < z.phi(); ++k) {
      Int c = floor_mod(z.coeffs()[k], Int(p_));
      acc = add(acc, mul(from_int(static_cast<long>(c)), w));
      w = mul(w, omega_);
    }
    return acc;
  }

 private:
  // Product of encoded polynomials modulo the monic modulus.
  long slow_mul(long a, long b) const {
    std::vector<long> x(f_), y(f_), z(2 * f_, 0);
    for (int i = 0; i < f_; ++i) {
      x[i] = a % p_;
      a /= p_;
      y[i] = b % p_;
      b /= p_;
    }
    for (int i = 0; i < f_; ++i)
      for (int j = 0; j < f_; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p_;
    for (int d = 2 * f_ - 1; d >= f_; --d) {
      long c = z[d];
      if (!c) continue;
      for (int k = 0; k <= f_; ++k) z[d - f_ + k] = mod_long(z[d - f_ + k] - c * modulus_[k], p_);
    }
    long out = 0, place = 1;
    for (int i = 0; i < f_; ++i) {
      out += z[i] * place;
      place *= p_;
    }
    return out;
  }

  long slow_pow(long a, long e) const {
    long r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  // Remainder of the monic polynomial m by the monic d, coefficients mod p.
  bool divides(const std::vector<long>& d, std::vector<long> m) const {
    int dd = static_cast<int>(d.size()) - 1;
    for (int k = static_cast<int>(m.size()) - 1; k >= dd; --k) {
      long c = m[k];
      if (!c) continue;
      for (int j = 0; j <= dd; ++j) m[k - dd + j] = mod_long(m[k - dd + j] - c * d[j], p_);
    }
    for (int k = 0; k < dd; ++k)
      if (m[k]) return false;
    return true;
  }

  // Smallest monic irreducible of degree f, ordered by the encoding of its
  // lower coefficients.
  void pick_modulus() {
    long count = ipow_long(p_, f_);
    for (long code = 0; code < count; ++code) {
      std::vector<long> m(f_ + 1);
      long c = code;
      for (int i = 0; i < f_; ++i) {
        m[i] = c % p_;
        c /= p_;
      }
      m[f_] = 1;
      bool irreducible = true;
      for (int deg = 1; deg <= f_ / 2 && irreducible; ++deg) {
        long dcount = ipow_long(p_, deg);
        for (long dc = 0; dc < dcount && irreducible; ++dc) {
          std::vector<long> d(deg + 1);
          long t = dc;
          for (int i = 0; i < deg; ++i) {
            d[i] = t % p_;
            t /= p_;
          }
          d[deg] = 1;
          if (divides(d, m)) irreducible = false;
        }
      }
      if (irreducible) {
        modulus_ = m;
        return;
      }
    }
    throw FieldError("no irreducible polynomial found");
  }

  // Smallest encoded element of multiplicative order q - 1.
  void pick_generator() {
    auto primes = prime_factors(q_ - 1);
    for (long g = 2; g < q_ + 1; ++g) {
      long cand = g % q_;
      if (cand == 0) continue;
      bool ok = true;
      for (long r : primes)
        if (slow_pow(cand, (q_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen_ = cand;
        return;
      }
    }
    if (q_ == 2) {
      gen_ = 1;
      return;
    }
    throw FieldError("no generator found");
  }

  long p_;
  int f_;
  long l_;
  int n_;
  long ln_;
  int zeta_sign_;
  long q_ = 0;
  std::vector<long> modulus_;
  long gen_ = 1;
  long omega_ = 1;
  std::vector<long> log_;
  std::vector<long> exp_;
};

inline ResidueField build_residue_field(const FrobeniusInput& fr, int zeta_sign = 1) {
  return ResidueField(fr.p, fr.f, fr.l, fr.n, zeta_sign);
}

// Sum over x + y = -1, x, y != 0, of zeta^{a s(x) + b s(y)}; sign flips the whole sum.
inline CycloInt jacobi_sum(const ResidueField& F, long a, long b, bool negate = false) {
  long ln = F.ln();
  a = mod_long(a, ln);
  b = mod_long(b, ln);
  if (a == 0 || b == 0) throw FieldError("Jacobi sum needs a, b nonzero mod l^n");
  if (a % F.l() == 0 && b % F.l() == 0) throw FieldError("Jacobi sum needs (a, b, l) = 1");
  std::vector<Int> count(ln, 0);
  long minus_one = F.neg(1);
  for (long x = 1; x < F.q(); ++x) {
    long y = F.add(minus_one, F.neg(x));
    if (y == 0) continue;
    long k = mod_long(a * F.symbol(x) + b * F.symbol(y), ln);
    count[k] += 1;
  }
  CycloInt J(F.l(), F.n());
  for (long k = 0; k < ln; ++k)
    if (count[k] != 0) J += CycloInt::zeta_power(F.l(), F.n(), k, count[k]);
  if (F.l() == 2) J = J * CycloInt::zeta_power(2, F.n(), a * F.symbol(minus_one));
  return negate ? -J : J;
}

enum class UnitForm { literal, twisted };

inline std::string unit_form_name(UnitForm u) { return u == UnitForm::literal ? "literal" : "twisted"; }

// literal: prod_a (zeta - 1)^{<a^{m-1}>}; twisted: prod_a (zeta^a - 1)^{<a^{m-1}>}.
inline CycloInt cyclotomic_unit(int m, long l, int n, UnitForm form = UnitForm::twisted) {
  if (m < 1) throw Error("cyclotomic unit needs m >= 1");
  long ln = ipow_long(l, n);
  CycloInt acc = CycloInt::constant(l, n, 1);
  CycloInt one = CycloInt::constant(l, n, 1);
  for (long a = 1; a < ln; ++a) {
    if (a % l == 0) continue;
    long ex = powmod_long(a, m - 1, ln);
    CycloInt base = CycloInt::zeta_power(l, n, form == UnitForm::literal ? 1 : a) - one;
    acc = acc * base.pow(static_cast<unsigned>(ex));
  }
  return acc;
}

// chi^(m)(sigma^{k f}) mod l^n: the exponent of eps^{(q^k - 1)/l^n} against omega.
inline long soule_chi(int m, const ResidueField& F, UnitForm form = UnitForm::twisted, int k = 1) {
  long e = F.reduce(cyclotomic_unit(m, F.l(), F.n(), form));
  if (e == 0) throw FieldError("cyclotomic unit vanishes in the residue field");
  Int qk = ipow(Int(F.q()), static_cast<unsigned>(k));
  Int ex = (qk - 1) / F.ln();
  long ex_mod = static_cast<long>(ex % Int(F.q() - 1));
  long v = F.pow(e, ex_mod);
  // v is an l^n-th root of unity; find c with omega^c = v.
  long w = 1;
  for (long c = 0; c < F.ln(); ++c) {
    if (w == v) return c;
    w = F.mul(w, F.omega());
  }
  throw FieldError("Kummer value is not a power of omega");
}

// kappa_m = chi^(m) / (1 - l^{m-1}) mod l^n.
inline long soule_kappa(int m, const ResidueField& F, UnitForm form = UnitForm::twisted) {
  long ln = F.ln();
  long chi = soule_chi(m, F, form);
  long d = mod_long(1 - powmod_long(F.l(), m - 1, ln), ln);
  long dinv = static_cast<long>(inverse_mod(Int(d), Int(ln)));
  return mulmod(chi, dinv, ln);
}

}  // namespace prol
