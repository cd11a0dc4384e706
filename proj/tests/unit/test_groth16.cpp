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

#include <filesystem>
#include <vector>

#include "support/oracles.hpp"
#include "zkrb/algebra/counters.hpp"
#include "zkrb/groth16/groth16.hpp"

namespace zkrb::groth16 {
namespace {

using testing::random_circuit;

const TauAccumulator& small_accumulator() {
  static const TauAccumulator acc = [] {
    auto a = tau_contribute(tau_init(8), to_bytes("first"));
    return tau_contribute(a, to_bytes("second"));
  }();
  return acc;
}

TEST(CeremonyTest, FreshAccumulatorIsValid) {
  auto acc = tau_init(4);
  EXPECT_EQ(acc.g1.size(), 15u);
  EXPECT_EQ(acc.g2.size(), 16u);
  EXPECT_TRUE(tau_verify_chain(acc));
  EXPECT_TRUE(acc.contributions.empty());
}

TEST(CeremonyTest, ContributionsCompose) {
  auto acc = tau_init(4);
  const Fr s1 = Fr::from_u64(7), s2 = Fr::from_u64(11);
  auto two = contribute_with_secret(contribute_with_secret(acc, s1), s2);
  auto one = contribute_with_secret(acc, s1 * s2);
  EXPECT_EQ(two.g1, one.g1);
  EXPECT_EQ(two.g2, one.g2);
  EXPECT_EQ(two.contributions.size(), 2u);
  EXPECT_TRUE(tau_verify_chain(two));
  Fr t = Fr::one();
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(G1(two.g1[i].to_jacobian()), G1::generator() * t);
    t *= Fr::from_u64(77);
  }
}

TEST(CeremonyTest, TamperingDetected) {
  auto acc = contribute_with_secret(tau_init(4), Fr::from_u64(5));
  auto bad1 = acc;
  bad1.g1[3] = (G1(bad1.g1[3].to_jacobian()) + G1::generator()).to_affine();
  EXPECT_FALSE(tau_verify_chain(bad1));
  auto bad2 = acc;
  bad2.g2[5] = bad2.g2[4];
  EXPECT_FALSE(tau_verify_chain(bad2));
  auto bad3 = acc;
  bad3.g1[0] = bad3.g1[1];
  EXPECT_FALSE(tau_verify_chain(bad3));
  EXPECT_THROW(contribute_with_secret(bad1, Fr::from_u64(3)), IntegrityError);
}

TEST(CeremonyTest, ZeroSecretRefused) {
  EXPECT_THROW(contribute_with_secret(tau_init(3), Fr::zero()), UsageError);
}

TEST(CeremonyTest, RangeAndBudget) {
  EXPECT_THROW(tau_init(1), UsageError);
  EXPECT_THROW(tau_init(kMaxTauN + 1), UsageError);
  try {
    tau_init(20, 1 << 20);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.projected_bytes(), tau_projected_bytes(20));
    EXPECT_EQ(e.budget_bytes(), std::size_t{1} << 20);
  }
  EXPECT_THROW(tau_init(kMaxTauN), BudgetExceeded);
}

TEST(CeremonyTest, ByteSizes) {
  EXPECT_EQ(parse_byte_size("512"), 512u);
  EXPECT_EQ(parse_byte_size("4K"), 4096u);
  EXPECT_EQ(parse_byte_size("2G"), std::size_t{2} << 30);
  EXPECT_THROW(parse_byte_size("lots"), UsageError);
}

TEST(CeremonyTest, SerializationRoundTrip) {
  const auto& acc = small_accumulator();
  auto bytes = acc.to_bytes();
  auto back = TauAccumulator::from_bytes(bytes);
  EXPECT_EQ(back.g1, acc.g1);
  EXPECT_EQ(back.g2, acc.g2);
  EXPECT_EQ(back.fingerprint(), acc.fingerprint());
  bytes[0] ^= 1;
  EXPECT_THROW(TauAccumulator::from_bytes(bytes), IntegrityError);
}

TEST(CapacityTest, RequiredN) {
  EXPECT_EQ(required_tau_n(1), 2u);
  EXPECT_EQ(required_tau_n(64), 7u);
  EXPECT_EQ(required_tau_n(8192), 14u);
  Drbg rng("zkrb/test/groth16/capacity");
  auto rc = random_circuit(rng, 200, 1);
  try {
    setup(tau_init(6), rc.cs, to_bytes("x"));
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.required_n(), 9u);
  }
}

TEST(PreparedTest, SerializationAndChecksum) {
  auto prep = compute_prepared(small_accumulator(), 16);
  EXPECT_EQ(prep.lagrange_g1.size(), 16u);
  auto bytes = prep.to_bytes();
  auto back = PreparedPowers::from_bytes(bytes);
  EXPECT_EQ(back.lagrange_g1, prep.lagrange_g1);
  EXPECT_EQ(back.lagrange_g2, prep.lagrange_g2);
  bytes[bytes.size() / 2] ^= 1;
  EXPECT_THROW(PreparedPowers::from_bytes(bytes), IntegrityError);
}

TEST(PreparedTest, DiskCacheReusesFile) {
  auto dir = std::filesystem::temp_directory_path() / "zkrb-unit-prepared";
  std::filesystem::remove_all(dir);
  auto& cache = PreparedCache::instance();
  const auto saved = cache.directory();
  cache.set_directory(dir.string());
  cache.clear();
  auto first = cache.get(small_accumulator(), 32);
  cache.clear();
  auto second = cache.get(small_accumulator(), 32);
  EXPECT_EQ(first->lagrange_g1, second->lagrange_g1);
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir), {}), 1);
  cache.set_directory(saved);
  cache.clear();
  std::filesystem::remove_all(dir);
}

class Groth16Test : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    Drbg rng("zkrb/test/groth16/circuit");
    circuit_ = new testing::RandomCircuit(random_circuit(rng, 40, 3));
    keys_ = new KeyPair(setup(small_accumulator(), circuit_->cs, to_bytes("setup")));
  }
  static void TearDownTestSuite() {
    delete keys_;
    delete circuit_;
  }
  static std::vector<Fr> publics() {
    auto p = circuit_->witness.public_inputs(3);
    return {p.begin(), p.end()};
  }
  static inline testing::RandomCircuit* circuit_ = nullptr;
  static inline KeyPair* keys_ = nullptr;
};

TEST_F(Groth16Test, ProveVerify) {
  auto proof = prove(keys_->pk, circuit_->cs, circuit_->witness, to_bytes("r1"));
  EXPECT_TRUE(verify(keys_->vk, publics(), proof));
  auto other = prove(keys_->pk, circuit_->cs, circuit_->witness, to_bytes("r2"));
  EXPECT_FALSE(proof == other);
  EXPECT_TRUE(verify(keys_->vk, publics(), other));
}

TEST_F(Groth16Test, VerifyUsesFourPairings) {
  auto proof = prove(keys_->pk, circuit_->cs, circuit_->witness, to_bytes("r1"));
  algebra::counters().reset();
  EXPECT_TRUE(verify(keys_->vk, publics(), proof));
  EXPECT_EQ(algebra::counters().miller_loops, 4u);
  EXPECT_EQ(algebra::counters().last_msm_length, 4u);
}

TEST_F(Groth16Test, WrongPublicsRejected) {
  auto proof = prove(keys_->pk, circuit_->cs, circuit_->witness, to_bytes("r1"));
  auto pub = publics();
  pub[1] += Fr::one();
  EXPECT_FALSE(verify(keys_->vk, pub, proof));
  pub.pop_back();
  EXPECT_THROW(verify(keys_->vk, pub, proof), UsageError);
}

TEST_F(Groth16Test, TamperedProofRejected) {
  auto proof = prove(keys_->pk, circuit_->cs, circuit_->witness, to_bytes("r1"));
  auto bad = proof;
  bad.a = (G1(bad.a.to_jacobian()) + G1::generator()).to_affine();
  EXPECT_FALSE(verify(keys_->vk, publics(), bad));
  bad = proof;
  std::swap(bad.a, bad.c);
  EXPECT_FALSE(verify(keys_->vk, publics(), bad));
  bad = proof;
  bad.b = (G2(bad.b.to_jacobian()).doubled()).to_affine();
  EXPECT_FALSE(verify(keys_->vk, publics(), bad));
}

TEST_F(Groth16Test, UnsatisfiedWitnessRefused) {
  auto w = circuit_->witness;
  w[circuit_->outputs[5]] += Fr::one();
  EXPECT_THROW(prove(keys_->pk, circuit_->cs, w, to_bytes("r")), ProofRefused);
}

TEST_F(Groth16Test, KeyMismatchIsUsageError) {
  Drbg rng("zkrb/test/groth16/other");
  auto other = random_circuit(rng, 10, 1);
  EXPECT_THROW(prove(keys_->pk, other.cs, other.witness, to_bytes("r")), UsageError);
}

TEST_F(Groth16Test, KeyAndProofSerialization) {
  auto proof = prove(keys_->pk, circuit_->cs, circuit_->witness, to_bytes("r1"));
  auto pbytes = proof.to_bytes();
  EXPECT_EQ(pbytes.size(), kProofBytes);
  EXPECT_EQ(kProofBytes, 131u);
  EXPECT_EQ(Proof::from_bytes(pbytes), proof);
  auto vk = VerifyingKey::from_bytes(keys_->vk.to_bytes());
  EXPECT_EQ(vk, keys_->vk);
  auto pk = ProvingKey::from_bytes(keys_->pk.to_bytes());
  EXPECT_TRUE(verify(pk.vk, publics(), prove(pk, circuit_->cs, circuit_->witness, to_bytes("r3"))));
  auto j = proof_to_json(proof, publics());
  auto back = proof_from_json(j);
  EXPECT_EQ(back.proof, proof);
  EXPECT_EQ(back.public_inputs, publics());
}

TEST_F(Groth16Test, DeterministicSetup) {
  auto again = setup(small_accumulator(), circuit_->cs, to_bytes("setup"));
  auto other = setup(small_accumulator(), circuit_->cs, to_bytes("other"));
  if (RandomnessPolicy::instance().deterministic_seed()) {
    EXPECT_EQ(again.vk, keys_->vk);
  }
  EXPECT_FALSE(other.vk == keys_->vk);
}

TEST(QapTest, QuotientMatchesLongDivision) {
  Drbg rng("zkrb/test/groth16/qap");
  for (int round = 0; round < 10; ++round) {
    auto rc = random_circuit(rng, 1 + rng.uniform(20), 1 + rng.uniform(2));
    auto naive = testing::naive_qap(rc.cs, rc.witness);
    ASSERT_TRUE(naive.divisible());
    auto h = compute_h(rc.cs, rc.witness);
    testing::Poly hp(h.begin(), h.end());
    testing::trim(hp);
    EXPECT_EQ(hp, naive.division.quotient);
    rc.witness[rc.outputs[0]] += Fr::one();
    EXPECT_FALSE(testing::naive_qap(rc.cs, rc.witness).divisible());
  }
}

}  // namespace
}  // namespace zkrb::groth16
