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

#ifndef ZKRB_GROTH16_VERIFIER_HPP_
#define ZKRB_GROTH16_VERIFIER_HPP_

#include <span>
#include <vector>

#include "zkrb/algebra/msm.hpp"
#include "zkrb/algebra/pairing.hpp"
#include "zkrb/groth16/keys.hpp"

namespace zkrb::groth16 {

/// Accepts iff e(A, B) = e(alpha, beta) e(IC, gamma) e(C, delta), checked as
/// one four-term pairing product. Points outside the prime-order groups
/// are rejected.
inline bool verify(const VerifyingKey& vk, std::span<const Fr> public_inputs, const Proof& proof) {
  using algebra::G1Params;
  if (public_inputs.size() != vk.num_public()) {
    throw UsageError("expected " + std::to_string(vk.num_public()) + " public inputs, got " +
                     std::to_string(public_inputs.size()));
  }
  if (!algebra::in_subgroup(proof.a) || !algebra::in_subgroup(proof.c) ||
      !algebra::in_subgroup(proof.b)) {
    return false;
  }
  std::vector<Fr> scalars;
  scalars.reserve(public_inputs.size() + 1);
  scalars.push_back(Fr::one());
  scalars.insert(scalars.end(), public_inputs.begin(), public_inputs.end());
  const G1Affine ic = algebra::msm<G1Params>(scalars, vk.ic).to_affine();
  const G1Affine ps[4] = {proof.a, -vk.alpha_g1, -ic, -proof.c};
  const G2Affine qs[4] = {proof.b, vk.beta_g2, vk.gamma_g2, vk.delta_g2};
  return algebra::multi_pairing(ps, qs).is_identity();
}

}  // namespace zkrb::groth16

#endif  // ZKRB_GROTH16_VERIFIER_HPP_
