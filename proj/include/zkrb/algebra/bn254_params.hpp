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

// BN-254 ("alt_bn128") parameters. Every curve constant used by the library
// lives in this file.
//
//   base field      p = 36u^4 + 36u^3 + 24u^2 + 6u + 1
//   scalar field    r = 36u^4 + 36u^3 + 18u^2 + 6u + 1
//   u               = 4965661367192848881
//   G1              y^2 = x^3 + 3 over F_p, generator (1, 2)
//   G2              y^2 = x^3 + 3 / (9 + i) over F_p^2 = F_p[i] / (i^2 + 1)
//   GT              order-r subgroup of F_p^12
//
// r - 1 is divisible by 2^28, so radix-2 evaluation domains up to 2^28 exist.

#ifndef ZKRB_ALGEBRA_BN254_PARAMS_HPP_
#define ZKRB_ALGEBRA_BN254_PARAMS_HPP_

#include <cstdint>

#include "zkrb/algebra/uint256.hpp"

namespace zkrb::algebra::bn254 {

struct FpParams {
  static constexpr Uint256 kModulus{0x3c208c16d87cfd47ULL, 0x97816a916871ca8dULL,
                                    0xb85045b68181585dULL, 0x30644e72e131a029ULL};
};

struct FrParams {
  static constexpr Uint256 kModulus{0x43e1f593f0000001ULL, 0x2833e84879b97091ULL,
                                    0xb85045b68181585dULL, 0x30644e72e131a029ULL};
};

inline constexpr std::uint64_t kCurveU = 4965661367192848881ULL;

/// 6u + 2, the optimal-ate Miller loop length (65 bits).
inline constexpr unsigned __int128 kAteLoopCount =
    static_cast<unsigned __int128>(6) * kCurveU + 2;

inline constexpr std::uint64_t kCurveB = 3;

/// Fr multiplicative generator (quadratic non-residue); also the coset shift
/// used by the quotient computation.
inline constexpr std::uint64_t kFrGenerator = 5;

inline constexpr const char* kG2GenX0 =
    "10857046999023057135944570762232829481370756359578518086990519993285655852781";
inline constexpr const char* kG2GenX1 =
    "11559732032986387107991004021392285783925812861821192530917403151452391805634";
inline constexpr const char* kG2GenY0 =
    "8495653923123431417604973247489272438418190587263600148770280649306958101930";
inline constexpr const char* kG2GenY1 =
    "4082367875863433681332203403145435568316851327593401208105741076214120093531";

/// (p^4 - p^2 + 1) / r, the hard part of the final exponentiation.
inline constexpr const char* kFinalExpHardHex =
    "1baaa710b0759ad331ec15183177faf6c0eb522d5b122784e529a5861876f6b3b1b1355d1"
    "89227d79581e16f3fd90c66b887d56d5095f23aaa441e3954bcf8adcc7b44c87cdbacff11"
    "54e7e1da014fd5abf5cc4f49c36d4e81bb482ccdf42b1";

}  // namespace zkrb::algebra::bn254

#endif  // ZKRB_ALGEBRA_BN254_PARAMS_HPP_
