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

#ifndef ZKRB_ROLLUP_AGGREGATOR_HPP_
#define ZKRB_ROLLUP_AGGREGATOR_HPP_

#include <chrono>
#include <cstdint>
#include <span>

#include "zkrb/circuits/batch.hpp"
#include "zkrb/circuits/withdrawal.hpp"
#include "zkrb/groth16/prover.hpp"
#include "zkrb/rollup/batch.hpp"

namespace zkrb::rollup {

using Duration = std::chrono::nanoseconds;

struct ProvenBatch {
  groth16::Proof proof;
  circuits::BatchPublicInputs publics;
  std::uint64_t sequence_number = 0;
  /// Witness generation plus proving (PrfGenB).
  Duration duration{};
};

struct ProvenWithdrawal {
  groth16::Proof proof;
  circuits::WithdrawalPublicInputs publics;
  /// Witness generation plus proving (PrfGenW).
  Duration duration{};
};

/// Proves one sealed batch against the state it starts from.
inline ProvenBatch aggregator_prove(const Batch& batch, const StateTree& state,
                                    const circuits::BatchCircuitParams& params,
                                    const groth16::ProvingKey& pk,
                                    std::span<const std::uint8_t> randomness, unsigned workers = 1) {
  if (!(batch.pre_root == state.root())) {
    throw SequencingError("batch " + std::to_string(batch.sequence_number) +
                          " does not start at the given state");
  }
  const auto t0 = std::chrono::steady_clock::now();
  auto assignment = circuits::assign_batch_witness(params, state, batch.txs);
  if (!(assignment.publics.new_state_root == batch.post_root)) {
    throw IntegrityError("batch post root does not match the witness");
  }
  ProvenBatch out;
  out.proof = groth16::prove(pk, assignment.cs, assignment.witness, randomness, workers);
  out.duration = std::chrono::steady_clock::now() - t0;
  out.publics = assignment.publics;
  out.sequence_number = batch.sequence_number;
  return out;
}

/// Proves ownership of `amount` in account `index` under the current root.
/// Withdrawing more than the balance is refused before any proving work.
inline ProvenWithdrawal withdrawal_prove(const StateTree& state, std::size_t index,
                                         const Fr& secret, std::uint64_t amount,
                                         const Fr& recipient_tag, const groth16::ProvingKey& pk,
                                         std::span<const std::uint8_t> randomness,
                                         unsigned workers = 1) {
  if (index >= state.capacity()) throw WitnessError("account index out of range");
  if (state.account(index).balance < amount) {
    throw ProofRefused("withdrawal of " + std::to_string(amount) + " exceeds balance " +
                       std::to_string(state.account(index).balance));
  }
  const auto t0 = std::chrono::steady_clock::now();
  auto assignment = circuits::assign_withdrawal_witness(state, index, secret, amount, recipient_tag);
  ProvenWithdrawal out;
  out.proof = groth16::prove(pk, assignment.cs, assignment.witness, randomness, workers);
  out.duration = std::chrono::steady_clock::now() - t0;
  out.publics = assignment.publics;
  return out;
}

}  // namespace zkrb::rollup

#endif  // ZKRB_ROLLUP_AGGREGATOR_HPP_
