// Copyright 2026 The zkrb Authors.
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

#ifndef ZKRB_R1CS_MIMC_HPP_
#define ZKRB_R1CS_MIMC_HPP_

#include <array>
#include <string_view>

#include "zkrb/algebra/fields.hpp"
#include "zkrb/common/random.hpp"

namespace zkrb::r1cs {

/// MiMC-style keyed permutation over Fr and its two-to-one compression.
///
///   E_k(x):  x <- (x + k + c_i)^5 for i = 0..109, then return x + k
///   H(l, r) = E_l(r) + l + r            (Miyaguchi-Preneel with key l)
///
/// 5 is the smallest prime e >= 3 with gcd(e, r - 1) = 1 (gcd(3, r - 1) = 3),
/// and 110 = ceil(254 / log2(5)). Round constants come from a SHA-256 counter
/// generator seeded with kSeed.
struct Mimc {
  static constexpr unsigned kExponent = 5;
  static constexpr unsigned kRounds = 110;
  static constexpr std::string_view kSeed = "zkrb/mimc/bn254-fr/e5/r110/v1";

  static const std::array<algebra::Fr, kRounds>& constants() {
    static const auto kConstants = [] {
      std::array<algebra::Fr, kRounds> c;
      Drbg rng(kSeed);
      for (auto& x : c) x = algebra::Fr::random(rng);
      return c;
    }();
    return kConstants;
  }

  static algebra::Fr encrypt(algebra::Fr x, const algebra::Fr& key) {
    const auto& c = constants();
    for (unsigned i = 0; i < kRounds; ++i) {
      algebra::Fr t = x + key + c[i];
      algebra::Fr t2 = t.square();
      x = t2.square() * t;
    }
    return x + key;
  }

  static algebra::Fr hash2(const algebra::Fr& left, const algebra::Fr& right) {
    return encrypt(right, left) + left + right;
  }
};

inline algebra::Fr hash2(const algebra::Fr& left, const algebra::Fr& right) {
  return Mimc::hash2(left, right);
}

}  // namespace zkrb::r1cs

#endif  // ZKRB_R1CS_MIMC_HPP_
