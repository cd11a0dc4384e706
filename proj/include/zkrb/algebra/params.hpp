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

#ifndef ZKRB_ALGEBRA_PARAMS_HPP_
#define ZKRB_ALGEBRA_PARAMS_HPP_

#include <sstream>
#include <string>

#include "zkrb/algebra/bn254.hpp"
#include "zkrb/algebra/fields.hpp"

namespace zkrb::algebra {

/// Text dump of every curve constant, one "key = value" per line.
inline std::string curve_params_text() {
  std::ostringstream out;
  const auto& g1 = G1Params::generator();
  const auto& g2 = G2Params::generator();
  Uint256 e = Fr::kModulus;
  e.sub_in_place(Uint256(1));
  for (unsigned i = 0; i < Fr::kTwoAdicity; ++i) e.shr1();
  Fr root = Fr::from_u64(bn254::kFrGenerator).pow(e);
  out << "curve = bn254\n"
      << "base_field_modulus = " << Fp::kModulus.to_decimal() << "\n"
      << "base_field_bits = " << Fp::kBits << "\n"
      << "scalar_field_modulus = " << Fr::kModulus.to_decimal() << "\n"
      << "scalar_field_bits = " << Fr::kBits << "\n"
      << "scalar_field_two_adicity = " << Fr::kTwoAdicity << "\n"
      << "scalar_field_generator = " << bn254::kFrGenerator << "\n"
      << "scalar_field_max_root_of_unity = " << root.to_decimal() << "\n"
      << "curve_u = " << bn254::kCurveU << "\n"
      << "g1_equation = y^2 = x^3 + " << bn254::kCurveB << "\n"
      << "g1_generator_x = " << g1.x.to_decimal() << "\n"
      << "g1_generator_y = " << g1.y.to_decimal() << "\n"
      << "g2_equation = y^2 = x^3 + " << bn254::kCurveB << " / (9 + i)\n"
      << "g2_twist_b_c0 = " << G2Params::b().c0.to_decimal() << "\n"
      << "g2_twist_b_c1 = " << G2Params::b().c1.to_decimal() << "\n"
      << "g2_generator_x_c0 = " << g2.x.c0.to_decimal() << "\n"
      << "g2_generator_x_c1 = " << g2.x.c1.to_decimal() << "\n"
      << "g2_generator_y_c0 = " << g2.y.c0.to_decimal() << "\n"
      << "g2_generator_y_c1 = " << g2.y.c1.to_decimal() << "\n"
      << "extension_tower = Fp2[i]/(i^2+1), Fp6[v]/(v^3-(9+i)), Fp12[w]/(w^2-v)\n"
      << "pairing = optimal ate, loop 6u+2\n"
      << "field_encoding = 32 bytes little-endian canonical\n"
      << "g1_encoding = x (32 bytes LE) || flags (bit0 y odd, bit1 identity)\n"
      << "g2_encoding = x.c0 || x.c1 (32 bytes LE each) || flags (bit0 y odd, bit1 identity)\n";
  return out.str();
}

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_PARAMS_HPP_
