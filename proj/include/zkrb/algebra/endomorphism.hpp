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

#ifndef ZKRB_ALGEBRA_ENDOMORPHISM_HPP_
#define ZKRB_ALGEBRA_ENDOMORPHISM_HPP_

#include <array>
#include <cstdint>
#include <utility>

#include "zkrb/algebra/fields.hpp"

namespace zkrb::algebra::endo {

/// A scalar split into ~128-bit halves, each with a sign.
struct SplitScalar {
  Uint256 k0, k1;
  bool neg0 = false, neg1 = false;
};

namespace detail {

/// floor(k * g / 2^256) for a three-limb constant g.
inline Uint256 mul_shift256(const Uint256& k, const std::array<std::uint64_t, 3>& g) {
  std::uint64_t prod[7] = {0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    u128 carry = 0;
    for (int j = 0; j < 3; ++j) {
      u128 t = static_cast<u128>(k.limb[i]) * g[j] + prod[i + j] + carry;
      prod[i + j] = static_cast<std::uint64_t>(t);
      carry = t >> 64;
    }
    prod[i + 3] = static_cast<std::uint64_t>(carry);
  }
  return Uint256(prod[4], prod[5], prod[6], 0);
}

inline std::pair<Uint256, bool> to_signed(const Fr& v) {
  Uint256 x = v.to_uint();
  if (x.num_bits() <= 129) return {x, false};
  Uint256 m = Fr::kModulus;
  m.sub_in_place(x);
  if (m.num_bits() > 129) throw ArithmeticError("scalar decomposition out of range");
  return {m, true};
}

}  // namespace detail

/// G1 GLV: k = k0 + k1 * lambda (mod r) with lambda the eigenvalue of
/// (x, y) -> (beta x, y). Babai rounding against the reduced lattice basis
/// (a1, b1) = (9931322734385697763, -147946756881789319000765030803803410728),
/// (a2, b2) = (147946756881789319010696353538189108491, 9931322734385697763).
inline SplitScalar split_g1(const Fr& k) {
  static constexpr std::array<std::uint64_t, 3> kG1{0xd91d232ec7e0b3d7ULL, 0x2ULL, 0x0ULL};
  static constexpr std::array<std::uint64_t, 3> kG2{0x7a7bd9d4391eb18dULL,
                                                   0x4ccef014a773d2cfULL, 0x2ULL};
  static const Fr a1 = Fr::from_uint(Uint256(0x89d3256894d213e3ULL, 0, 0, 0));
  static const Fr neg_b1 =
      Fr::from_uint(Uint256(0x8211bbeb7d4f1128ULL, 0x6f4d8248eeb859fcULL, 0, 0));
  static const Fr a2 =
      Fr::from_uint(Uint256(0x0be4e1541221250bULL, 0x6f4d8248eeb859fdULL, 0, 0));
  static const Fr b2 = a1;
  Uint256 kk = k.to_uint();
  Fr c1 = Fr::from_uint(detail::mul_shift256(kk, kG1));
  Fr c2 = Fr::from_uint(detail::mul_shift256(kk, kG2));
  Fr k0 = k - c1 * a1 - c2 * a2;
  Fr k1 = c1 * neg_b1 - c2 * b2;
  SplitScalar s;
  std::tie(s.k0, s.neg0) = detail::to_signed(k0);
  std::tie(s.k1, s.neg1) = detail::to_signed(k1);
  return s;
}

/// G2: psi acts as multiplication by 6u^2 (127 bits), so plain division
/// splits k into two non-negative ~127-bit halves.
inline SplitScalar split_g2(const Fr& k) {
  static const u128 kLambda =
      (static_cast<u128>(0x6f4d8248eeb859fbULL) << 64) | 0xf83e9682e87cfd46ULL;
  Uint256 kk = k.to_uint();
  // Long division of a 254-bit value by a 127-bit divisor.
  Uint256 q;
  u128 rem = 0;
  for (int i = 255; i >= 0; --i) {
    rem = (rem << 1) | (kk.bit(static_cast<unsigned>(i)) ? 1 : 0);
    if (rem >= kLambda) {
      rem -= kLambda;
      q.limb[static_cast<unsigned>(i) / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  SplitScalar s;
  s.k0 = Uint256(static_cast<std::uint64_t>(rem), static_cast<std::uint64_t>(rem >> 64), 0, 0);
  s.k1 = q;
  return s;
}

}  // namespace zkrb::algebra::endo

#endif  // ZKRB_ALGEBRA_ENDOMORPHISM_HPP_
