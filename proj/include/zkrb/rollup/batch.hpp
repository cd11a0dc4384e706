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

#ifndef ZKRB_ROLLUP_BATCH_HPP_
#define ZKRB_ROLLUP_BATCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "zkrb/rollup/pool.hpp"
#include "zkrb/rollup/state.hpp"

namespace zkrb::rollup {

/// Account the sequencer pads batches from; its owner is the operator.
inline constexpr std::size_t kOperatorAccount = 0;

struct Batch {
  std::vector<Tx> txs;
  Fr pre_root;
  Fr post_root;
  std::uint64_t sequence_number = 0;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["sequence_number"] = sequence_number;
    j["pre_root"] = fr_hex(pre_root);
    j["post_root"] = fr_hex(post_root);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& tx : txs) arr.push_back(tx_to_json(tx));
    j["txs"] = std::move(arr);
    return j;
  }
  bool operator==(const Batch&) const = default;
};

struct SkippedTx {
  Ticket ticket = 0;
  Tx tx;
  TxStatus status = TxStatus::kOk;
};

struct SequencedBatch {
  Batch batch;
  std::vector<SkippedTx> skipped;
};

/// The zero-amount self-transfer used to fill a batch.
inline Tx padding_tx(const StateTree& state, const Fr& operator_secret) {
  Tx tx;
  tx.from_index = kOperatorAccount;
  tx.to_index = kOperatorAccount;
  tx.nonce = state.account(kOperatorAccount).nonce;
  tx.auth_secret = operator_secret;
  return tx;
}

/// Takes transactions from the pool in FIFO order until m are valid against
/// the evolving state; invalid ones are dropped and reported. Short batches
/// are padded with operator no-ops. The state is not modified.
inline SequencedBatch sequencer_create_batch(Pool& pool, const StateTree& state, std::size_t m,
                                             const Fr& operator_secret,
                                             std::uint64_t sequence_number = 0) {
  if (m == 0) throw UsageError("batch size must be at least 1");
  if (!(key_hash_of(operator_secret) == state.account(kOperatorAccount).key_hash)) {
    throw UsageError("operator secret does not own the padding account");
  }
  SequencedBatch out;
  out.batch.pre_root = state.root();
  out.batch.sequence_number = sequence_number;
  StateTree work = state;
  while (out.batch.txs.size() < m) {
    auto entry = pool.pop();
    if (!entry) break;
    TxStatus s = check_tx(work, entry->tx);
    if (s != TxStatus::kOk) {
      out.skipped.push_back({entry->ticket, entry->tx, s});
      continue;
    }
    apply_tx_unchecked(work, entry->tx);
    out.batch.txs.push_back(entry->tx);
  }
  while (out.batch.txs.size() < m) out.batch.txs.push_back(padding_tx(work, operator_secret));
  out.batch.post_root = work.root();
  return out;
}

/// State after the batch. A root mismatch is a sequencing error; an invalid
/// transaction or a wrong post root means the batch is corrupt.
inline StateTree apply_batch(const StateTree& state, const Batch& batch) {
  if (!(batch.pre_root == state.root())) {
    throw SequencingError("batch " + std::to_string(batch.sequence_number) +
                          " does not start at the current state root");
  }
  StateTree next = state;
  for (std::size_t i = 0; i < batch.txs.size(); ++i) {
    TxStatus s = check_tx(next, batch.txs[i]);
    if (s != TxStatus::kOk) {
      throw IntegrityError("batch " + std::to_string(batch.sequence_number) + " transaction " +
                           std::to_string(i) + ": " + tx_status_text(s));
    }
    apply_tx_unchecked(next, batch.txs[i]);
  }
  if (!(next.root() == batch.post_root)) {
    throw IntegrityError("batch " + std::to_string(batch.sequence_number) +
                         " post root does not match replay");
  }
  return next;
}

/// Privileged credit outside the proof path, mirroring an L1 deposit. An
/// empty account is claimed for key_hash; an owned one must match it.
inline void apply_deposit(StateTree& state, std::size_t index, const Fr& key_hash,
                          std::uint64_t amount) {
  if (index >= state.capacity()) throw UsageError("deposit index out of range");
  Account a = state.account(index);
  if (a.key_hash.is_zero()) {
    a.key_hash = key_hash;
  } else if (!(a.key_hash == key_hash)) {
    throw UsageError("deposit key does not match the account owner");
  }
  if (a.balance > std::numeric_limits<std::uint64_t>::max() - amount) {
    throw UsageError("deposit overflows the account balance");
  }
  a.balance += amount;
  state.set_account(index, a);
}

}  // namespace zkrb::rollup

#endif  // ZKRB_ROLLUP_BATCH_HPP_
