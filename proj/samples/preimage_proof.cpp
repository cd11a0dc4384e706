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

// Proves knowledge of a MiMC preimage with a freshly run ceremony.

#include <cstdio>

#include "zkrb/groth16/ceremony.hpp"
#include "zkrb/groth16/groth16.hpp"
#include "zkrb/r1cs/gadgets.hpp"

using namespace zkrb;
using algebra::Fr;

namespace {

/// Public digest = hash2(secret, salt), with secret and salt private.
r1cs::ConstraintSystem preimage_circuit(const Fr* secret, const Fr* salt) {
  const bool witness = secret != nullptr;
  r1cs::ConstraintSystem cs(witness ? r1cs::ConstraintSystem::Mode::kWitness
                                    : r1cs::ConstraintSystem::Mode::kShape);
  std::optional<Fr> digest, s, t;
  if (witness) {
    digest = r1cs::hash2(*secret, *salt);
    s = *secret;
    t = *salt;
  }
  auto out = cs.alloc_public(digest);
  auto a = cs.alloc_private(s);
  auto b = cs.alloc_private(t);
  auto h = r1cs::hash2(cs, a, b);
  cs.enforce(h, r1cs::LC::constant(1), out);
  cs.finalize();
  return cs;
}

}  // namespace

int main() {
  const Fr secret = Fr::from_u64(123456789), salt = Fr::from_u64(42);
  auto shape = preimage_circuit(nullptr, nullptr);
  const unsigned n = groth16::required_tau_n(groth16::qap_domain_size(shape));
  std::printf("constraints %zu, ceremony size n=%u\n", shape.num_constraints(), n);

  auto acc = groth16::tau_init(n);
  acc = groth16::tau_contribute(acc, to_bytes("alice"));
  acc = groth16::tau_contribute(acc, to_bytes("bob"));
  std::printf("ceremony chain valid: %s\n", groth16::tau_verify_chain(acc) ? "yes" : "no");

  auto keys = groth16::setup(acc, shape, to_bytes("preimage"));
  auto cs = preimage_circuit(&secret, &salt);
  auto w = cs.witness();
  auto proof = groth16::prove(keys.pk, cs, w, to_bytes("blinding"));
  auto publics = w.public_inputs(cs.num_public());
  std::printf("proof %zu bytes, verifies: %s\n", proof.to_bytes().size(),
              groth16::verify(keys.vk, publics, proof) ? "yes" : "no");

  std::vector<Fr> wrong(publics.begin(), publics.end());
  wrong[0] += Fr::one();
  std::printf("wrong digest verifies: %s\n", groth16::verify(keys.vk, wrong, proof) ? "yes" : "no");
}
