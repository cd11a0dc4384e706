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

#ifndef ZKRB_BENCH_WORKLOAD_HPP_
#define ZKRB_BENCH_WORKLOAD_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "zkrb/common/random.hpp"
#include "zkrb/rollup/batch.hpp"

namespace zkrb::bench {

using algebra::Fr;

/// Genesis state with an operator at account 0 and funded users after it.
struct Workload {
  rollup::StateTree state;
  Fr operator_secret;
  /// Secret per account index; zero for empty accounts.
  std::vector<Fr> secrets;
};

struct WorkloadOptions {
  unsigned depth = rollup::kDefaultTreeDepth;
  std::size_t users = 16;
  std::uint64_t min_balance = 1000;
  std::uint64_t max_balance = 1000000;
};

inline Workload make_workload(Drbg& rng, const WorkloadOptions& opt = {}) {
  Workload w{rollup::StateTree(opt.depth), Fr::random_nonzero(rng), {}};
  const std::size_t cap = w.state.capacity();
  if (opt.users + 1 > cap) throw UsageError("too many users for the tree depth");
  if (opt.min_balance > opt.max_balance) throw UsageError("min balance exceeds max balance");
  w.secrets.assign(cap, Fr::zero());
  w.secrets[rollup::kOperatorAccount] = w.operator_secret;
  w.state.set_account(rollup::kOperatorAccount, {rollup::key_hash_of(w.operator_secret), 0, 0});
  for (std::size_t i = 1; i <= opt.users; ++i) {
    w.secrets[i] = Fr::random_nonzero(rng);
    const std::uint64_t bal = opt.min_balance + rng.uniform(opt.max_balance - opt.min_balance + 1);
    w.state.set_account(i, {rollup::key_hash_of(w.secrets[i]), bal, 0});
  }
  return w;
}

/// count transactions valid in sequence from `state`: random funded
/// senders, receivers anywhere among the owned accounts (self included),
/// amounts from zero up to the full balance.
inline std::vector<rollup::Tx> random_valid_txs(Drbg& rng, const rollup::StateTree& state,
                                                const std::vector<Fr>& secrets, std::size_t count) {
  std::vector<std::size_t> owned;
  for (std::size_t i = 0; i < secrets.size(); ++i) {
    if (!secrets[i].is_zero()) owned.push_back(i);
  }
  if (owned.empty()) throw UsageError("workload has no accounts");
  rollup::StateTree work = state;
  std::vector<rollup::Tx> txs;
  txs.reserve(count);
  while (txs.size() < count) {
    rollup::Tx tx;
    tx.from_index = owned[rng.uniform(owned.size())];
    tx.to_index = owned[rng.uniform(owned.size())];
    const auto& from = work.account(tx.from_index);
    const std::uint64_t to_bal = work.account(tx.to_index).balance;
    std::uint64_t limit = from.balance;
    if (tx.from_index != tx.to_index) limit = std::min(limit, ~std::uint64_t{0} - to_bal);
    tx.amount = algebra::Uint256(limit == ~std::uint64_t{0} ? rng.next_u64() : rng.uniform(limit + 1));
    tx.nonce = from.nonce;
    tx.auth_secret = secrets[tx.from_index];
    if (rollup::check_tx(work, tx) != rollup::TxStatus::kOk) continue;
    rollup::apply_tx_unchecked(work, tx);
    txs.push_back(tx);
  }
  return txs;
}

/// Deterministic generator for a labelled workload under the process
/// randomness policy.
inline Drbg workload_rng(const std::string& label) {
  return Drbg(derive_seed("zkrb/bench/workload", to_bytes(label)));
}

}  // namespace zkrb::bench

#endif  // ZKRB_BENCH_WORKLOAD_HPP_
