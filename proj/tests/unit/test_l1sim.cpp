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
#include <vector>

#include "support/oracles.hpp"
#include "zkrb/groth16/groth16.hpp"
#include "zkrb/l1sim/contract.hpp"

namespace zkrb::l1sim {
namespace {

TEST(GasTest, ReferenceSubmission) {
  GasSchedule g;
  Bytes calldata(320, 0x5a);
  EXPECT_EQ(gas_for_submission(2, calldata, g), 224420u);
  calldata[0] = 0;
  EXPECT_EQ(gas_for_submission(2, calldata, g), 224408u);
}

TEST(GasTest, PerTxCost) {
  PriceConfig price;
  auto four = per_tx_cost(224420, 4, price);
  EXPECT_EQ(four.gas_per_tx.to_string(), "56105");
  EXPECT_EQ(four.usd_per_tx.to_string(6), "3.366300");
  auto sixteen = per_tx_cost(224420, 16, price);
  EXPECT_EQ(sixteen.gas_per_tx.to_string(), "14026.25");
  EXPECT_EQ(sixteen.usd_per_tx.to_string(6), "0.841575");
  EXPECT_LT(sixteen.gas_per_tx, four.gas_per_tx);
  EXPECT_EQ(Rational::make(10, 3).to_string(), "3.333333");
  EXPECT_THROW(per_tx_cost(1, 0, price), UsageError);
}

TEST(GasTest, UsdScalesWithPrice) {
  PriceConfig price;
  price.gas_price_gwei = Decimal::parse("40");
  EXPECT_EQ(per_tx_cost(224420, 4, price).usd_per_tx.to_string(6), "6.732600");
  price.eth_usd = Decimal::parse("1500.5");
  EXPECT_EQ(per_tx_cost(1000000, 1, price).usd_per_tx.to_string(6), "60.020000");
}

TEST(GasTest, DecimalParsing) {
  EXPECT_EQ(Decimal::parse("3000").to_string(2), "3000.00");
  EXPECT_EQ(Decimal::parse("0.125").to_string(3), "0.125");
  EXPECT_THROW(Decimal::parse("1.2.3"), UsageError);
  EXPECT_THROW(Decimal::parse("-1"), UsageError);
  EXPECT_THROW(Decimal::parse(""), UsageError);
}

TEST(ConfigTest, ParsesScheduleAndPrice) {
  auto cfg = KeyValueConfig::parse(
      "# costs\n[gas]\ntx_base = 1\npairing_per_pair=2 \n[price]\neth_usd = \"2500.5\"\n");
  auto cc = CostConfig::from_config(cfg);
  EXPECT_EQ(cc.schedule.tx_base, 1u);
  EXPECT_EQ(cc.schedule.pairing_per_pair, 2u);
  EXPECT_EQ(cc.schedule.pairing_base, 45000u);
  EXPECT_EQ(cc.price.eth_usd.to_string(1), "2500.5");
  EXPECT_THROW(CostConfig::from_config(KeyValueConfig::parse("bogus = 1\n")), UsageError);
  EXPECT_THROW(KeyValueConfig::parse("a = 1\na = 2\n"), UsageError);
  EXPECT_THROW(CostConfig::from_config(KeyValueConfig::parse("tx_base = x\n")), UsageError);
}

TEST(ConfigTest, ScheduleRoundTrip) {
  GasSchedule g;
  g.storage_update = 1234;
  EXPECT_EQ(GasSchedule::from_config(KeyValueConfig::parse(g.to_config())), g);
}

TEST(ConfigTest, ShippedDefaultsMatchBuiltIns) {
  auto cc = CostConfig::load(ZKRB_CONFIG_DIR "/cost.conf");
  EXPECT_EQ(cc.schedule, GasSchedule{});
  EXPECT_EQ(cc.price.gas_price_gwei.to_string(0), "20");
  EXPECT_EQ(cc.price.eth_usd.to_string(0), "3000");
  auto cheap = CostConfig::load(ZKRB_CONFIG_DIR "/cheap-calldata.conf");
  EXPECT_EQ(cheap.schedule.calldata_nonzero_byte, 4u);
  EXPECT_EQ(cheap.price.gas_price_gwei.to_string(1), "0.5");
}

/// Stand-in circuits with the batch (2) and withdrawal (4) public input
/// counts; the contract only sees keys, proofs and publics.
class ContractTest : public ::testing::Test {
 protected:
  struct Toy {
    testing::RandomCircuit rc;
    groth16::KeyPair keys;
    std::vector<Fr> publics;
  };

  static Toy make(const char* label, std::size_t publics) {
    static const auto acc = groth16::tau_contribute(groth16::tau_init(7), to_bytes("toy"));
    Drbg rng(label);
    auto rc = testing::random_circuit(rng, 20, publics);
    auto keys = groth16::setup(acc, rc.cs, to_bytes(label));
    auto p = rc.witness.public_inputs(publics);
    return {std::move(rc), std::move(keys), {p.begin(), p.end()}};
  }

  static void SetUpTestSuite() {
    batch_ = new Toy(make("zkrb/test/contract/batch", 2));
    withdraw_ = new Toy(make("zkrb/test/contract/withdraw", 4));
  }
  static void TearDownTestSuite() {
    delete batch_;
    delete withdraw_;
  }

  static groth16::Proof prove(const Toy& t) {
    return groth16::prove(t.keys.pk, t.rc.cs, t.rc.witness, to_bytes("p"));
  }
  static circuits::BatchPublicInputs batch_publics() {
    return {batch_->publics[0], batch_->publics[1]};
  }
  static circuits::WithdrawalPublicInputs withdraw_publics() {
    const auto& p = withdraw_->publics;
    return {p[0], p[1], p[2], p[3]};
  }

  static inline Toy* batch_ = nullptr;
  static inline Toy* withdraw_ = nullptr;
  GasSchedule schedule;
};

TEST_F(ContractTest, AcceptsValidBatchAndAdvancesRoot) {
  auto c = RollupContract::deploy(batch_->keys.vk, withdraw_->keys.vk, batch_->publics[0]);
  const auto proof = prove(*batch_);
  auto r = c.submit_batch(proof, batch_publics(), schedule, 0);
  EXPECT_TRUE(r.accepted) << r.reason.value_or("");
  EXPECT_EQ(r.calldata_bytes, groth16::kProofBytes + 2 * 32);
  auto calldata = submission_calldata(proof, batch_publics().to_vector());
  EXPECT_EQ(r.gas_used, gas_for_submission(2, calldata, schedule));
  EXPECT_EQ(c.current_root(), batch_->publics[1]);
  ASSERT_EQ(c.verified_batches().size(), 1u);
  auto again = c.submit_batch(prove(*batch_), batch_publics(), schedule, 1);
  EXPECT_FALSE(again.accepted);
  EXPECT_EQ(again.reason, kReasonRootMismatch);
}

TEST_F(ContractTest, RejectsInvalidProof) {
  auto c = RollupContract::deploy(batch_->keys.vk, withdraw_->keys.vk, batch_->publics[0]);
  auto proof = prove(*batch_);
  proof.c = proof.a;
  auto r = c.submit_batch(proof, batch_publics(), schedule);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.reason, kReasonProofInvalid);
  EXPECT_EQ(c.current_root(), batch_->publics[0]);
}

TEST_F(ContractTest, JsonSubmission) {
  auto c = RollupContract::deploy(batch_->keys.vk, withdraw_->keys.vk, batch_->publics[0]);
  auto j = groth16::proof_to_json(prove(*batch_), batch_->publics);
  auto bad = j;
  bad["a"] = "zz";
  EXPECT_EQ(c.submit_batch_json(bad, schedule).reason, kReasonProofInvalid);
  EXPECT_TRUE(c.submit_batch_json(j, schedule).accepted);
}

TEST_F(ContractTest, WithdrawalNullifierAndRoots) {
  auto c = RollupContract::deploy(batch_->keys.vk, withdraw_->keys.vk, withdraw_->publics[0]);
  auto proof = prove(*withdraw_);
  auto r = c.submit_withdrawal(proof, withdraw_publics(), schedule);
  EXPECT_TRUE(r.accepted) << r.reason.value_or("");
  auto replay = c.submit_withdrawal(proof, withdraw_publics(), schedule);
  EXPECT_EQ(replay.reason, kReasonNullifierSpent);
  auto pub = withdraw_publics();
  pub.state_root += Fr::one();
  EXPECT_EQ(c.submit_withdrawal(proof, pub, schedule).reason, kReasonUnknownRoot);
}

TEST_F(ContractTest, ReceiptJsonLine) {
  Receipt r;
  r.accepted = true;
  r.gas_used = 5;
  r.calldata_bytes = 3;
  r.batch_seq = 2;
  std::ostringstream out;
  write_receipt_line(out, r);
  auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j.at("accepted"), true);
  EXPECT_EQ(j.at("gas_used"), 5);
  EXPECT_EQ(out.str().back(), '\n');
}

}  // namespace
}  // namespace zkrb::l1sim
