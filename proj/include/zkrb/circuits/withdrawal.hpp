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

#ifndef ZKRB_CIRCUITS_WITHDRAWAL_HPP_
#define ZKRB_CIRCUITS_WITHDRAWAL_HPP_

#include <optional>
#include <vector>

#include "zkrb/circuits/batch.hpp"

namespace zkrb::circuits {

/// Public inputs of a withdrawal proof, in circuit order.
struct WithdrawalPublicInputs {
  Fr state_root;
  Fr recipient_tag;
  Fr amount;
  Fr nullifier;

  std::vector<Fr> to_vector() const { return {state_root, recipient_tag, amount, nullifier}; }
  bool operator==(const WithdrawalPublicInputs&) const = default;
};

/// One-time tag of an (account secret, index) pair: H(secret, index).
inline Fr withdrawal_nullifier(const Fr& secret, std::size_t index) {
  return r1cs::hash2(secret, Fr::from_u64(index));
}

inline constexpr unsigned kWithdrawalAmountBits = 64;

constexpr std::size_t withdrawal_constraints(unsigned depth) {
  return 4 * r1cs::kHash2Constraints                        // key, two leaf hashes, nullifier
         + depth                                            // index bits
         + depth * r1cs::kMerkleLevelConstraints + 1        // inclusion
         + 2 * r1cs::range_check_constraints(kWithdrawalAmountBits)
         + 1;                                               // nullifier equality
}

namespace detail {

struct WithdrawalWitness {
  Fr secret;
  std::size_t index;
  rollup::Account account;
  std::vector<Fr> path;
};

inline void synthesize_withdrawal(ConstraintSystem& cs, unsigned depth,
                                  const WithdrawalPublicInputs* pub, const WithdrawalWitness* w) {
  const bool wit = w != nullptr;
  auto pv = [&](const Fr WithdrawalPublicInputs::*field) {
    return pub ? std::optional<Fr>(pub->*field) : std::nullopt;
  };
  Variable root = cs.alloc_public(pv(&WithdrawalPublicInputs::state_root));
  cs.alloc_public(pv(&WithdrawalPublicInputs::recipient_tag));
  Variable amount = cs.alloc_public(pv(&WithdrawalPublicInputs::amount));
  Variable nullifier = cs.alloc_public(pv(&WithdrawalPublicInputs::nullifier));

  Variable secret = cs.alloc_private(opt(wit, wit ? w->secret : Fr{}));
  Variable key_hash = r1cs::hash2(cs, secret, LC());
  Variable balance = cs.alloc_private(opt(wit, wit ? Fr::from_u64(w->account.balance) : Fr{}));
  Variable nonce = cs.alloc_private(opt(wit, wit ? Fr::from_u64(w->account.nonce) : Fr{}));
  Variable leaf = r1cs::hash2(cs, key_hash, r1cs::hash2(cs, balance, nonce));

  Fr index_v = wit ? Fr::from_u64(w->index) : Fr{};
  auto bits = r1cs::alloc_bits(cs, wit ? &index_v : nullptr, depth);
  auto siblings = alloc_fields(cs, wit ? &w->path : nullptr, depth);
  Variable computed = r1cs::merkle_root(cs, leaf, siblings, bits);
  cs.enforce(computed, Fr::one(), root);

  r1cs::range_check(cs, amount, kWithdrawalAmountBits);
  r1cs::range_check(cs, LC(balance) - amount, kWithdrawalAmountBits);

  Variable tag = r1cs::hash2(cs, secret, r1cs::pack_bits(bits));
  cs.enforce(tag, Fr::one(), nullifier);
}

}  // namespace detail

/// Withdrawal circuit; depends only on the tree depth.
inline ConstraintSystem build_withdrawal_circuit(unsigned depth = rollup::kDefaultTreeDepth) {
  if (depth == 0 || depth > rollup::kMaxTreeDepth) throw UsageError("tree depth out of range");
  ConstraintSystem cs(ConstraintSystem::Mode::kShape);
  detail::synthesize_withdrawal(cs, depth, nullptr, nullptr);
  cs.finalize();
  return cs;
}

struct WithdrawalAssignment {
  ConstraintSystem cs;
  r1cs::Witness witness;
  WithdrawalPublicInputs publics;
};

/// Witness for withdrawing `amount` from account `index`. The nullifier is
/// derived here; an explicit override lets tests plant a wrong one.
inline WithdrawalAssignment assign_withdrawal_witness(const rollup::StateTree& state,
                                                      std::size_t index, const Fr& secret,
                                                      std::uint64_t amount,
                                                      const Fr& recipient_tag,
                                                      std::optional<Fr> nullifier = std::nullopt) {
  if (index >= state.capacity()) throw WitnessError("account index out of range");
  const rollup::Account& acct = state.account(index);
  if (!(rollup::key_hash_of(secret) == acct.key_hash)) {
    throw WitnessError("secret does not match the account key");
  }
  detail::WithdrawalWitness w{secret, index, acct, state.path(index)};
  WithdrawalPublicInputs pub{state.root(), recipient_tag, Fr::from_u64(amount),
                             nullifier.value_or(withdrawal_nullifier(secret, index))};
  ConstraintSystem cs(ConstraintSystem::Mode::kWitness);
  detail::synthesize_withdrawal(cs, state.depth(), &pub, &w);
  cs.finalize();
  r1cs::Witness witness = cs.witness();
  return {std::move(cs), std::move(witness), pub};
}

}  // namespace zkrb::circuits

#endif  // ZKRB_CIRCUITS_WITHDRAWAL_HPP_
