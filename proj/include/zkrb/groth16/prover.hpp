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

#ifndef ZKRB_GROTH16_PROVER_HPP_
#define ZKRB_GROTH16_PROVER_HPP_

#include <span>
#include <string>
#include <vector>

#include "zkrb/algebra/msm.hpp"
#include "zkrb/common/random.hpp"
#include "zkrb/groth16/keys.hpp"
#include "zkrb/groth16/qap.hpp"
#include "zkrb/r1cs/constraint_system.hpp"

namespace zkrb::groth16 {

/// Groth16 prover. Refuses, before any group work, when the witness does
/// not satisfy the circuit. Blinding scalars are drawn from randomness.
inline Proof prove(const ProvingKey& pk, const r1cs::ConstraintSystem& cs, const r1cs::Witness& w,
                   std::span<const std::uint8_t> randomness, unsigned workers = 1) {
  using algebra::G1Params;
  using algebra::G2Params;
  if (!cs.finalized()) throw UsageError("prove requires a finalized constraint system");
  if (pk.num_variables() != cs.num_variables() || pk.num_public() != cs.num_public() ||
      pk.domain_size != qap_domain_size(cs)) {
    throw UsageError("proving key does not match the circuit");
  }
  if (w.size() != cs.num_variables()) throw UsageError("witness length does not match circuit");
  if (auto bad = cs.first_unsatisfied(w, workers)) {
    throw ProofRefused("witness does not satisfy constraint " + std::to_string(*bad));
  }

  std::vector<Fr> h = compute_h(cs, w, workers);
  auto vals = w.values();
  auto priv = vals.subspan(cs.num_public() + 1);

  Zeroizing<Fr> r, s;
  {
    Drbg rng(derive_seed("zkrb/groth16/prove", randomness));
    *r = Fr::random_nonzero(rng);
    *s = Fr::random_nonzero(rng);
  }

  const G1 delta1 = pk.delta_g1.to_jacobian();
  G1 a = algebra::msm<G1Params>(vals, pk.a_query, workers) + pk.vk.alpha_g1 + delta1 * *r;
  G1 b1 = algebra::msm<G1Params>(vals, pk.b_g1_query, workers) + pk.beta_g1 + delta1 * *s;
  G2 b2 = algebra::msm<G2Params>(vals, pk.b_g2_query, workers) + pk.vk.beta_g2 +
          pk.vk.delta_g2.to_jacobian() * *s;
  Zeroizing<Fr> rs(*r * *s);
  G1 c = algebra::msm<G1Params>(priv, pk.l_query, workers) +
         algebra::msm<G1Params>(h, pk.h_query, workers) + a * *s + b1 * *r - delta1 * *rs;
  secure_zero(h.data(), h.size() * sizeof(Fr));
  return Proof{a.to_affine(), b2.to_affine(), c.to_affine()};
}

}  // namespace zkrb::groth16

#endif  // ZKRB_GROTH16_PROVER_HPP_
