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

#ifndef ZKRB_CIRCUITS_BATCH_HPP_
#define ZKRB_CIRCUITS_BATCH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zkrb/r1cs/gadgets.hpp"
#include "zkrb/rollup/state.hpp"

namespace zkrb::circuits {

using algebra::Fr;
using r1cs::ConstraintSystem;
using r1cs::LC;
using r1cs::Variable;

struct BatchCircuitParams {
  std::size_t batch_size = 4;
  unsigned tree_depth = rollup::kDefaultTreeDepth;
  unsigned balance_bits = 64;

  void validate() const {
    if (batch_size == 0) throw UsageError("batch size must be at least 1");
    if (tree_depth == 0 || tree_depth > rollup::kMaxTreeDepth) {
      throw UsageError("tree depth out of range");
    }
    if (tree_depth < 64 && batch_size > (std::size_t{1} << tree_depth)) {
      throw UsageError("batch size exceeds the number of accounts");
    }
    if (balance_bits == 0 || balance_bits > 64) throw UsageError("balance bits must be in [1, 64]");
  }
};

/// Public inputs of a batch proof, in circuit order.
struct BatchPublicInputs {
  Fr old_state_root;
  Fr new_state_root;

  std::vector<Fr> to_vector() const { return {old_state_root, new_state_root}; }
  bool operator==(const BatchPublicInputs&) const = default;
};

/// Constraints contributed by one transaction.
constexpr std::size_t batch_tx_constraints(unsigned depth, unsigned balance_bits) {
  return 3 * r1cs::range_check_constraints(balance_bits)  // amount, debit, credit
         + 2 * depth                                      // index bits
         + 9 * r1cs::kHash2Constraints                    // auth + four leaves
         + 4 * depth * r1cs::kMerkleLevelConstraints      // two reads, two writes
         + 2                                              // read-root equalities
         + 2 * r1cs::kIsZeroConstraints + 1;              // no-op flag
}

constexpr std::size_t batch_constraints(std::size_t m, unsigned depth, unsigned balance_bits) {
  return m * batch_tx_constraints(depth, balance_bits) + 1;
}

namespace detail {

struct TxWitness {
  Fr secret;
  std::uint64_t amount;
  std::size_t from, to;
  rollup::Account sender, receiver;
  std::vector<Fr> sender_path, receiver_path;
};

inline std::vector<Variable> alloc_fields(ConstraintSystem& cs, const std::vector<Fr>* values,
                                          std::size_t count) {
  std::vector<Variable> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(values ? cs.alloc_private((*values)[i]) : cs.alloc_private());
  }
  return out;
}

inline std::optional<Fr> opt(bool has, const Fr& v) {
  return has ? std::optional<Fr>(v) : std::nullopt;
}

/// Emits one transaction's constraints and returns the new running root.
inline Variable synthesize_tx(ConstraintSystem& cs, const BatchCircuitParams& p, const LC& root,
                              const TxWitness* w) {
  const bool wit = w != nullptr;
  const unsigned d = p.tree_depth;
  auto u64 = [](std::uint64_t v) { return Fr::from_u64(v); };

  Variable secret = cs.alloc_private(opt(wit, wit ? w->secret : Fr{}));
  Variable amount = cs.alloc_private(opt(wit, wit ? u64(w->amount) : Fr{}));
  r1cs::range_check(cs, amount, p.balance_bits);

  // Sender authorization and current leaf.
  Variable key_hash = r1cs::hash2(cs, secret, LC());
  Variable balance = cs.alloc_private(opt(wit, wit ? u64(w->sender.balance) : Fr{}));
  Variable nonce = cs.alloc_private(opt(wit, wit ? u64(w->sender.nonce) : Fr{}));
  Variable leaf = r1cs::hash2(cs, key_hash, r1cs::hash2(cs, balance, nonce));

  Fr from_v = wit ? u64(w->from) : Fr{}, to_v = wit ? u64(w->to) : Fr{};
  auto from_bits = r1cs::alloc_bits(cs, wit ? &from_v : nullptr, d);
  auto to_bits = r1cs::alloc_bits(cs, wit ? &to_v : nullptr, d);
  auto sender_sib = alloc_fields(cs, wit ? &w->sender_path : nullptr, d);
  Variable read_root = r1cs::merkle_root(cs, leaf, sender_sib, from_bits);
  cs.enforce(read_root, Fr::one(), root);

  // Debit: balance - amount must stay in range.
  LC debited = LC(balance) - amount;
  r1cs::range_check(cs, debited, p.balance_bits);

  // A zero-amount self-transfer leaves the nonce unchanged.
  Variable amount_zero = r1cs::is_zero(cs, amount);
  Variable same_index = r1cs::is_zero(cs, r1cs::pack_bits(from_bits) - r1cs::pack_bits(to_bits));
  Variable noop = cs.alloc_private_with([&] { return cs.value(amount_zero) * cs.value(same_index); });
  cs.enforce(amount_zero, same_index, noop);
  LC new_nonce = LC(nonce) + LC(Fr::one()) - noop;

  Variable new_leaf = r1cs::hash2(cs, key_hash, r1cs::hash2(cs, debited, new_nonce));
  Variable mid_root = r1cs::merkle_root(cs, new_leaf, sender_sib, from_bits);

  // Receiver read under the intermediate root, then credit.
  Variable r_key = cs.alloc_private(opt(wit, wit ? w->receiver.key_hash : Fr{}));
  Variable r_balance = cs.alloc_private(opt(wit, wit ? u64(w->receiver.balance) : Fr{}));
  Variable r_nonce = cs.alloc_private(opt(wit, wit ? u64(w->receiver.nonce) : Fr{}));
  Variable r_leaf = r1cs::hash2(cs, r_key, r1cs::hash2(cs, r_balance, r_nonce));
  auto receiver_sib = alloc_fields(cs, wit ? &w->receiver_path : nullptr, d);
  Variable r_read_root = r1cs::merkle_root(cs, r_leaf, receiver_sib, to_bits);
  cs.enforce(r_read_root, Fr::one(), mid_root);

  LC credited = LC(r_balance) + amount;
  r1cs::range_check(cs, credited, p.balance_bits);
  Variable r_new_leaf = r1cs::hash2(cs, r_key, r1cs::hash2(cs, credited, r_nonce));
  return r1cs::merkle_root(cs, r_new_leaf, receiver_sib, to_bits);
}

inline void synthesize_batch(ConstraintSystem& cs, const BatchCircuitParams& p,
                             const BatchPublicInputs* publics,
                             const std::vector<TxWitness>* txs) {
  Variable old_root = cs.alloc_public(publics ? std::optional(publics->old_state_root) : std::nullopt);
  Variable new_root = cs.alloc_public(publics ? std::optional(publics->new_state_root) : std::nullopt);
  LC running = old_root;
  for (std::size_t i = 0; i < p.batch_size; ++i) {
    running = synthesize_tx(cs, p, running, txs ? &(*txs)[i] : nullptr);
  }
  cs.enforce(running, Fr::one(), new_root);
}

}  // namespace detail

/// Batch-transfer circuit for m transactions; returned finalized.
inline ConstraintSystem build_batch_circuit(const BatchCircuitParams& p) {
  p.validate();
  ConstraintSystem cs(ConstraintSystem::Mode::kShape);
  detail::synthesize_batch(cs, p, nullptr, nullptr);
  cs.finalize();
  return cs;
}

struct BatchAssignment {
  ConstraintSystem cs;
  r1cs::Witness witness;
  BatchPublicInputs publics;
};

/// Replays txs on a copy of pre_state while synthesizing the circuit with
/// values. Throws WitnessError naming the first invalid transaction.
inline BatchAssignment assign_batch_witness(const BatchCircuitParams& p,
                                            const rollup::StateTree& pre_state,
                                            std::span<const rollup::Tx> txs) {
  p.validate();
  if (txs.size() != p.batch_size) {
    throw WitnessError("batch must contain exactly " + std::to_string(p.batch_size) +
                       " transactions");
  }
  if (pre_state.depth() != p.tree_depth) throw WitnessError("state tree depth does not match circuit");
  rollup::StateTree state = pre_state;
  std::vector<detail::TxWitness> ws;
  ws.reserve(txs.size());
  for (std::size_t i = 0; i < txs.size(); ++i) {
    const rollup::Tx& tx = txs[i];
    auto status = rollup::check_tx(state, tx);
    if (status != rollup::TxStatus::kOk) {
      throw WitnessError("transaction " + std::to_string(i) + ": " + rollup::tx_status_text(status), i);
    }
    detail::TxWitness w;
    w.secret = tx.auth_secret;
    w.amount = tx.amount_u64();
    w.from = tx.from_index;
    w.to = tx.to_index;
    w.sender = state.account(tx.from_index);
    w.sender_path = state.path(tx.from_index);
    // The receiver is read after the sender update, as in the circuit.
    rollup::Account sender = w.sender;
    if (!tx.is_noop()) {
      sender.balance -= w.amount;
      sender.nonce += 1;
    }
    state.set_account(tx.from_index, sender);
    w.receiver = state.account(tx.to_index);
    w.receiver_path = state.path(tx.to_index);
    rollup::Account receiver = w.receiver;
    receiver.balance += w.amount;
    state.set_account(tx.to_index, receiver);
    ws.push_back(std::move(w));
  }
  BatchPublicInputs publics{pre_state.root(), state.root()};
  ConstraintSystem cs(ConstraintSystem::Mode::kWitness);
  detail::synthesize_batch(cs, p, &publics, &ws);
  cs.finalize();
  r1cs::Witness witness = cs.witness();
  return {std::move(cs), std::move(witness), publics};
}

}  // namespace zkrb::circuits

#endif  // ZKRB_CIRCUITS_BATCH_HPP_
