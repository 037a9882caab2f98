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

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prol {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PROL_ERROR(Name)                       \
  struct Name : Error {                        \
    using Error::Error;                        \
  }

PROL_ERROR(ShapeMismatch);
PROL_ERROR(NotUnit);
PROL_ERROR(ParseError);
PROL_ERROR(IndexError);
PROL_ERROR(NotConjugateToPower);
PROL_ERROR(NormMismatch);
PROL_ERROR(NotInPTilde);
PROL_ERROR(ChiNotOne);
PROL_ERROR(LevelTooLow);
PROL_ERROR(DivisionObstruction);
PROL_ERROR(NotPure);
PROL_ERROR(NotInCommutatorSubgroup);
PROL_ERROR(FieldError);
PROL_ERROR(PrecisionError);

#undef PROL_ERROR

inline constexpr int kInfiniteValuation = INT_MAX;

inline Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Int ipow(Int b, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

inline Int powmod(Int b, Int e, const Int& m) {
  Int r = 1 % m;
  b = floor_mod(b, m);
  while (e > 0) {
    if ((e & 1) != 0) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

// v_l(x); kInfiniteValuation for x = 0.
inline int valuation(Int x, long l) {
  if (x == 0) return kInfiniteValuation;
  if (x < 0) x = -x;
  int v = 0;
  while (x % l == 0) {
    x /= l;
    ++v;
  }
  return v;
}

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a < 0 ? Int(-a) : a, b < 0 ? Int(-b) : b);
}

// Inverse of a modulo m, or throws NotUnit.
inline Int inverse_mod(const Int& a, const Int& m) {
  Int old_r = floor_mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw NotUnit("element is not invertible modulo " + m.str());
  return floor_mod(old_s, m);
}

// C(a, k) for an arbitrary integer a.
inline Int binom(const Int& a, unsigned k) {
  Int num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= a - i;
    den *= i + 1;
  }
  return num / den;
}

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline long to_long(const Int& x) {
  if (x > LONG_MAX || x < LONG_MIN) throw Error("integer out of machine range");
  return x.convert_to<long>();
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::string render_coeff_term(const Int& c, const std::string& mon, bool first) {
  std::string s;
  Int a = c;
  if (a < 0) {
    s += first ? "-" : " - ";
    a = -a;
  } else if (!first) {
    s += " + ";
  }
  if (mon.empty()) return s + a.str();
  if (a != 1) s += a.str() + "*";
  return s + mon;
}

}  // namespace prol
