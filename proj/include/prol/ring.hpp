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

#include "prol/core.hpp"

namespace prol {

// Coefficient ring: Z, Z/l^N, or Q. Elements are carried as Int (Rational
// only for the rational kind, which never enters series).
class Ring {
 public:
  enum class Kind { integer, mod_prime_power, rational };

  static Ring integers() { return Ring(Kind::integer, 0, 0); }
  static Ring rationals() { return Ring(Kind::rational, 0, 0); }
  static Ring mod(long l, int N) {
    if (!is_prime(l)) throw Error("modulus base must be prime");
    if (N < 1) throw Error("precision must be positive");
    return Ring(Kind::mod_prime_power, l, N);
  }

  Kind kind() const { return kind_; }
  long l() const { return l_; }
  int N() const { return N_; }
  const Int& modulus() const { return modulus_; }
  bool is_mod() const { return kind_ == Kind::mod_prime_power; }
  bool is_integer() const { return kind_ == Kind::integer; }

  Int reduce(const Int& x) const {
    return is_mod() ? floor_mod(x, modulus_) : x;
  }

  bool is_zero(const Int& x) const { return reduce(x) == 0; }

  bool is_unit(const Int& x) const {
    switch (kind_) {
      case Kind::integer:
        return x == 1 || x == -1;
      case Kind::mod_prime_power:
        return x % l_ != 0;
      case Kind::rational:
        return x != 0;
    }
    return false;
  }

  Int inv(const Int& x) const {
    if (!is_unit(x)) throw NotUnit("not a unit in " + describe());
    if (is_mod()) return inverse_mod(x, modulus_);
    return x;  // +-1
  }

  // v_l of x inside the ring; N for the zero class of Z/l^N.
  int valuation_of(const Int& x) const {
    if (!is_mod()) throw Error("valuation needs Z/l^N");
    Int y = reduce(x);
    return y == 0 ? N_ : valuation(y, l_);
  }

  bool operator==(const Ring& o) const {
    return kind_ == o.kind_ && l_ == o.l_ && N_ == o.N_;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  std::string describe() const {
    switch (kind_) {
      case Kind::integer:
        return "Z";
      case Kind::rational:
        return "Q";
      case Kind::mod_prime_power:
        return "Z/" + std::to_string(l_) + "^" + std::to_string(N_);
    }
    return "?";
  }

 private:
  Ring(Kind k, long l, int N) : kind_(k), l_(l), N_(N) {
    if (k == Kind::mod_prime_power) modulus_ = ipow(Int(l), static_cast<unsigned>(N));
  }

  Kind kind_;
  long l_;
  int N_;
  Int modulus_ = 0;
};

}  // namespace prol
