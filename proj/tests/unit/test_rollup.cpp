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

#include <gtest/gtest.h>

#include <sstream>

#include "zkrb/bench/workload.hpp"
#include "zkrb/rollup/batch.hpp"
#include "zkrb/rollup/pool.hpp"

namespace zkrb::rollup {
namespace {

struct Fixture {
  Drbg rng{std::string("zkrb/test/rollup")};
  bench::Workload w = bench::make_workload(rng, {4, 5});

  Tx transfer(std::size_t from, std::size_t to, std::uint64_t amount) const {
    Tx tx;
    tx.from_index = from;
    tx.to_index = to;
    tx.amount = Uint256(amount);
    tx.nonce = w.state.account(from).nonce;
    tx.auth_secret = w.secrets[from];
    return tx;
  }
};

TEST(StateTreeTest, PathsFoldToRoot) {
  Fixture f;
  for (std::size_t i = 0; i < f.w.state.capacity(); ++i) {
    auto p = f.w.state.path(i);
    EXPECT_EQ(StateTree::fold_path(f.w.state.leaf(i), i, p), f.w.state.root());
  }
}

TEST(StateTreeTest, EmptyRootDependsOnDepth) {
  EXPECT_NE(StateTree(3).root(), StateTree(4).root());
  StateTree t(3);
  const Fr before = t.root();
  t.set_account(5, {Fr::from_u64(1), 0, 0});
  EXPECT_NE(t.root(), before);
  EXPECT_THROW(StateTree(0), UsageError);
  EXPECT_THROW(t.set_account(8, {}), UsageError);
}

TEST(StateTreeTest, JsonRoundTrip) {
  Fixture f;
  auto j = f.w.state.to_json();
  auto back = StateTree::from_json(j);
  EXPECT_EQ(back.root(), f.w.state.root());
  j["accounts"][0]["balance"] = 1;
  EXPECT_THROW(StateTree::from_json(j), IntegrityError);
}

TEST(TxTest, Statuses) {
  Fixture f;
  const auto& s = f.w.state;
  EXPECT_EQ(check_tx(s, f.transfer(1, 2, 10)), TxStatus::kOk);
  auto tx = f.transfer(1, 2, 10);
  tx.nonce = 5;
  EXPECT_EQ(check_tx(s, tx), TxStatus::kNonceMismatch);
  tx = f.transfer(1, 2, s.account(1).balance + 1);
  EXPECT_EQ(check_tx(s, tx), TxStatus::kInsufficientBalance);
  tx = f.transfer(1, 2, 10);
  tx.auth_secret = f.w.secrets[2];
  EXPECT_EQ(check_tx(s, tx), TxStatus::kBadAuthorization);
  tx = f.transfer(1, 16, 10);
  EXPECT_EQ(check_tx(s, tx), TxStatus::kIndexOutOfRange);
  tx = f.transfer(1, 2, 10);
  tx.amount = Uint256::from_decimal("18446744073709551616");
  EXPECT_EQ(check_tx(s, tx), TxStatus::kAmountTooLarge);
}

TEST(TxTest, ReceiverOverflow) {
  Fixture f;
  f.w.state.set_account(2, {f.w.state.account(2).key_hash, ~std::uint64_t{0}, 0});
  EXPECT_EQ(check_tx(f.w.state, f.transfer(1, 2, 1)), TxStatus::kBalanceOverflow);
}

TEST(TxTest, NoopLeavesStateUnchanged) {
  Fixture f;
  const Fr before = f.w.state.root();
  auto tx = f.transfer(1, 1, 0);
  ASSERT_TRUE(tx.is_noop());
  apply_tx_unchecked(f.w.state, tx);
  EXPECT_EQ(f.w.state.root(), before);
  EXPECT_EQ(f.w.state.account(1).nonce, 0u);
  auto self = f.transfer(1, 1, 5);
  apply_tx_unchecked(f.w.state, self);
  EXPECT_EQ(f.w.state.account(1).nonce, 1u);
}

TEST(PoolTest, FifoAndDuplicates) {
  Fixture f;
  Pool pool(f.w.state.capacity());
  auto t0 = pool.submit(f.transfer(1, 2, 1));
  auto t1 = pool.submit(f.transfer(2, 1, 1));
  EXPECT_LT(t0, t1);
  EXPECT_THROW(pool.submit(f.transfer(1, 3, 2)), PoolRejected);
  EXPECT_THROW(pool.submit(f.transfer(1, 99, 2)), PoolRejected);
  EXPECT_EQ(pool.size(), 2u);
  EXPECT_EQ(pool.pop()->ticket, t0);
  EXPECT_NO_THROW(pool.submit(f.transfer(1, 3, 2)));
}

TEST(PoolTest, JsonLines) {
  Fixture f;
  Pool pool(f.w.state.capacity());
  std::ostringstream good;
  good << tx_to_json(f.transfer(1, 2, 7)).dump() << "\n\n";
  good << "{\"from\":2,\"to\":3,\"amount\":\"9\",\"nonce\":0,\"secret\":\""
       << f.w.secrets[2].to_decimal() << "\"}\n";
  good << "{\"from\":2,\"to\":3,\"amount\":1,\"nonce\":1,\"secret\":1,\"memo\":\"x\"}\n";
  good << "not json\n";
  good << "{\"from\":-1,\"to\":3,\"amount\":1,\"nonce\":0,\"secret\":1}\n";
  std::istringstream in(good.str());
  auto r = pool.submit_json_lines(in);
  EXPECT_EQ(r.accepted.size(), 2u);
  ASSERT_EQ(r.rejected.size(), 3u);
  EXPECT_EQ(r.rejected[0].first, 4u);
  auto first = pool.pop();
  EXPECT_EQ(first->tx, f.transfer(1, 2, 7));
  EXPECT_EQ(pool.pop()->tx.amount_u64(), 9u);
}

TEST(SequencerTest, SkipsInvalidAndPads) {
  Fixture f;
  Pool pool(f.w.state.capacity());
  pool.submit(f.transfer(1, 2, 5));
  auto bad = f.transfer(2, 3, 5);
  bad.auth_secret = Fr::from_u64(1);
  pool.submit(bad);
  auto sb = sequencer_create_batch(pool, f.w.state, 4, f.w.operator_secret, 7);
  ASSERT_EQ(sb.skipped.size(), 1u);
  EXPECT_EQ(sb.skipped[0].status, TxStatus::kBadAuthorization);
  ASSERT_EQ(sb.batch.txs.size(), 4u);
  for (std::size_t i = 1; i < 4; ++i) {
    EXPECT_TRUE(sb.batch.txs[i].is_noop());
    EXPECT_EQ(sb.batch.txs[i].from_index, kOperatorAccount);
  }
  EXPECT_EQ(sb.batch.sequence_number, 7u);
  auto next = apply_batch(f.w.state, sb.batch);
  EXPECT_EQ(next.root(), sb.batch.post_root);
  EXPECT_EQ(next.account(2).balance, f.w.state.account(2).balance + 5);
  EXPECT_THROW(apply_batch(next, sb.batch), SequencingError);
  auto corrupt = sb.batch;
  corrupt.post_root += Fr::one();
  EXPECT_THROW(apply_batch(f.w.state, corrupt), IntegrityError);
}

TEST(SequencerTest, OperatorMustOwnAccountZero) {
  Fixture f;
  Pool pool;
  EXPECT_THROW(sequencer_create_batch(pool, f.w.state, 2, Fr::from_u64(3)), UsageError);
}

TEST(SequencerTest, ConservationOverRandomBatches) {
  Fixture f;
  const auto total = f.w.state.total_balance();
  StateTree state = f.w.state;
  for (int b = 0; b < 20; ++b) {
    Pool pool;
    for (const auto& tx : bench::random_valid_txs(f.rng, state, f.w.secrets, 3)) pool.submit(tx);
    state = apply_batch(state, sequencer_create_batch(pool, state, 4, f.w.operator_secret).batch);
    EXPECT_EQ(state.total_balance(), total);
  }
}

TEST(DepositTest, ClaimsAndCredits) {
  Fixture f;
  const Fr key = key_hash_of(Fr::from_u64(99));
  apply_deposit(f.w.state, 10, key, 50);
  EXPECT_EQ(f.w.state.account(10).balance, 50u);
  apply_deposit(f.w.state, 10, key, 5);
  EXPECT_EQ(f.w.state.account(10).balance, 55u);
  EXPECT_THROW(apply_deposit(f.w.state, 10, Fr::from_u64(1), 5), UsageError);
  EXPECT_THROW(apply_deposit(f.w.state, 10, key, ~std::uint64_t{0}), UsageError);
}

}  // namespace
}  // namespace zkrb::rollup
