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

#ifndef ZKRB_ROLLUP_NODE_HPP_
#define ZKRB_ROLLUP_NODE_HPP_

#include <deque>
#include <optional>
#include <span>
#include <utility>

#include "zkrb/rollup/aggregator.hpp"
#include "zkrb/rollup/batch.hpp"
#include "zkrb/rollup/pool.hpp"

namespace zkrb::rollup {

/// L2 node: pool, sequencer and aggregator behind one object. The sequencer
/// advances the state as it seals batches; the aggregator proves sealed
/// batches in order from the state snapshot each one started at. Only the
/// pool is safe to use from several threads.
class Node {
 public:
  Node(StateTree genesis, const Fr& operator_secret, circuits::BatchCircuitParams params)
      : state_(std::move(genesis)),
        operator_secret_(operator_secret),
        params_(params),
        pool_(state_.capacity()) {
    params_.validate();
    if (state_.depth() != params_.tree_depth) throw UsageError("genesis depth does not match circuit");
  }

  Pool& pool() { return pool_; }
  const StateTree& state() const { return state_; }
  const circuits::BatchCircuitParams& params() const { return params_; }
  std::uint64_t next_sequence_number() const { return next_seq_; }
  std::size_t sealed_pending() const { return sealed_.size(); }

  SequencedBatch seal_batch() {
    auto sb = sequencer_create_batch(pool_, state_, params_.batch_size, *operator_secret_, next_seq_);
    StateTree next = apply_batch(state_, sb.batch);
    sealed_.push_back({sb.batch, std::move(state_)});
    state_ = std::move(next);
    ++next_seq_;
    return sb;
  }

  /// Proves the oldest sealed batch, if any.
  std::optional<ProvenBatch> prove_next(const groth16::ProvingKey& pk,
                                        std::span<const std::uint8_t> randomness,
                                        unsigned workers = 1) {
    if (sealed_.empty()) return std::nullopt;
    auto [batch, pre] = std::move(sealed_.front());
    sealed_.pop_front();
    return aggregator_prove(batch, pre, params_, pk, randomness, workers);
  }

  void deposit(std::size_t index, const Fr& key_hash, std::uint64_t amount) {
    apply_deposit(state_, index, key_hash, amount);
  }

 private:
  StateTree state_;
  Zeroizing<Fr> operator_secret_;
  circuits::BatchCircuitParams params_;
  Pool pool_;
  std::deque<std::pair<Batch, StateTree>> sealed_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace zkrb::rollup

#endif  // ZKRB_ROLLUP_NODE_HPP_
