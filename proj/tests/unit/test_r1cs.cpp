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

#include "zkrb/bench/workload.hpp"
#include "zkrb/circuits/batch.hpp"
#include "zkrb/circuits/withdrawal.hpp"
#include "zkrb/r1cs/gadgets.hpp"

namespace zkrb::r1cs {
namespace {

// Reference values from tests/oracles/mimc_oracle.py.
TEST(MimcTest, PinnedValues) {
  EXPECT_EQ(hash2(Fr::zero(), Fr::zero()).to_decimal(),
            "13229594959700030822139574117522659549150615605206782425810173435805674877261");
  EXPECT_EQ(hash2(Fr::from_u64(3), Fr::from_u64(4)).to_decimal(),
            "7144898507953914450424886241552357170601888816285195564882467194579425983172");
  EXPECT_EQ(hash2(Fr::from_u64(1), Fr::from_u64(2)).to_decimal(),
            "16938878965694743187624109257965207343237420223886401462872872831002294569898");
}

TEST(MimcTest, NotSymmetric) {
  EXPECT_NE(hash2(Fr::from_u64(1), Fr::from_u64(2)), hash2(Fr::from_u64(2), Fr::from_u64(1)));
}

TEST(ConstraintSystemTest, SquareCircuit) {
  ConstraintSystem cs(ConstraintSystem::Mode::kWitness);
  Variable y = cs.alloc_public(Fr::from_u64(9));
  Variable x = cs.alloc_private(Fr::from_u64(3));
  cs.enforce(x, x, y);
  auto stats = cs.finalize();
  EXPECT_EQ(stats.num_constraints, 1u);
  Witness w = cs.witness();
  EXPECT_TRUE(cs.is_satisfied(w));
  w[x.index] = Fr::from_u64(4);
  EXPECT_FALSE(cs.is_satisfied(w));
  EXPECT_EQ(cs.first_unsatisfied(w), std::optional<std::size_t>(0));
}

TEST(ConstraintSystemTest, PublicAfterPrivateRejected) {
  ConstraintSystem cs;
  cs.alloc_private();
  EXPECT_THROW(cs.alloc_public(), UsageError);
}

TEST(ConstraintSystemTest, FinalizedIsClosed) {
  ConstraintSystem cs;
  Variable x = cs.alloc_private();
  cs.finalize();
  EXPECT_THROW(cs.enforce(x, x, x), UsageError);
}

TEST(ConstraintSystemTest, WitnessSlotZeroIsOne) {
  EXPECT_THROW(Witness(std::vector<Fr>{Fr::zero()}), UsageError);
}

std::size_t count_of(void (*build)(ConstraintSystem&)) {
  ConstraintSystem cs(ConstraintSystem::Mode::kWitness);
  build(cs);
  cs.finalize();
  EXPECT_TRUE(cs.is_satisfied(cs.witness()));
  return cs.num_constraints();
}

TEST(GadgetTest, ConstraintCounts) {
  EXPECT_EQ(kHash2Constraints, 330u);
  EXPECT_EQ(kMerkleLevelConstraints, 331u);
  EXPECT_EQ(count_of([](ConstraintSystem& cs) {
              Variable l = cs.alloc_private(Fr::from_u64(3));
              Variable r = cs.alloc_private(Fr::from_u64(4));
              Variable h = hash2(cs, l, r);
              EXPECT_EQ(cs.value(h), hash2(Fr::from_u64(3), Fr::from_u64(4)));
            }),
            330u);
  EXPECT_EQ(count_of([](ConstraintSystem& cs) {
              Variable x = cs.alloc_private(Fr::from_u64(200));
              range_check(cs, x, 8);
            }),
            range_check_constraints(8));
  EXPECT_EQ(count_of([](ConstraintSystem& cs) {
              Variable x = cs.alloc_private(Fr::from_u64(5));
              EXPECT_TRUE(cs.value(is_zero(cs, x)).is_zero());
              Variable z = cs.alloc_private(Fr::zero());
              EXPECT_EQ(cs.value(is_zero(cs, z)), Fr::one());
            }),
            2 * kIsZeroConstraints);
}

TEST(GadgetTest, RangeCheckRejectsOverflow) {
  ConstraintSystem cs(ConstraintSystem::Mode::kWitness);
  Variable x = cs.alloc_private(Fr::from_u64(256));
  range_check(cs, x, 8);
  cs.finalize();
  EXPECT_FALSE(cs.is_satisfied(cs.witness()));
}

void build_merkle(ConstraintSystem& cs, unsigned depth, std::size_t index, bool corrupt) {
  rollup::StateTree tree(depth);
  tree.set_account(index, {Fr::from_u64(77), 10, 1});
  const Fr leaf_value = tree.account(index).leaf_hash();
  Variable leaf = cs.alloc_private(leaf_value);
  std::vector<PathElement> path;
  auto sibs = tree.path(index);
  for (unsigned l = 0; l < depth; ++l) {
    Variable s = cs.alloc_private(sibs[l]);
    Variable b = cs.alloc_private(Fr::from_u64((index >> l) & 1));
    path.push_back({s, b});
  }
  Variable root = cs.alloc_private(corrupt ? tree.root() + Fr::one() : tree.root());
  merkle_verify(cs, leaf, path, root);
}

TEST(GadgetTest, MerkleVerify) {
  for (unsigned depth : {1u, 3u, 5u}) {
    ConstraintSystem cs(ConstraintSystem::Mode::kWitness);
    build_merkle(cs, depth, (std::size_t{1} << depth) - 1, false);
    cs.finalize();
    EXPECT_EQ(cs.num_constraints(), merkle_verify_constraints(depth));
    EXPECT_EQ(cs.num_constraints(), 332 * depth + 1);
    EXPECT_TRUE(cs.is_satisfied(cs.witness()));
    ConstraintSystem bad(ConstraintSystem::Mode::kWitness);
    build_merkle(bad, depth, 1, true);
    bad.finalize();
    EXPECT_FALSE(bad.is_satisfied(bad.witness()));
  }
}

TEST(CircuitTest, BatchCountIsAffineInM) {
  for (unsigned depth : {4u, 8u}) {
    for (std::size_t m : {1, 2, 3}) {
      auto cs = circuits::build_batch_circuit({m, depth, 64});
      EXPECT_EQ(cs.num_constraints(), circuits::batch_constraints(m, depth, 64));
      EXPECT_EQ(cs.num_public(), 2u);
    }
  }
  EXPECT_EQ(circuits::batch_tx_constraints(8, 64), 13780u);
  EXPECT_EQ(circuits::batch_constraints(4, 8, 64), 55121u);
}

TEST(CircuitTest, WithdrawalCount) {
  auto cs = circuits::build_withdrawal_circuit(8);
  EXPECT_EQ(cs.num_constraints(), 4108u);
  EXPECT_EQ(cs.num_constraints(), circuits::withdrawal_constraints(8));
  EXPECT_EQ(cs.num_public(), 4u);
}

TEST(CircuitTest, BatchWitnessSatisfiesShape) {
  Drbg rng("zkrb/test/r1cs/batch");
  auto w = bench::make_workload(rng, {4, 6});
  auto txs = bench::random_valid_txs(rng, w.state, w.secrets, 2);
  circuits::BatchCircuitParams p{2, 4, 64};
  auto a = circuits::assign_batch_witness(p, w.state, txs);
  EXPECT_TRUE(a.cs.is_satisfied(a.witness));
  EXPECT_EQ(a.publics.old_state_root, w.state.root());
  auto shape = circuits::build_batch_circuit(p);
  EXPECT_EQ(shape.dump(), a.cs.dump());
}

TEST(CircuitTest, InvalidTxRejectedByWitnessBuilder) {
  Drbg rng("zkrb/test/r1cs/invalid");
  auto w = bench::make_workload(rng, {4, 6});
  auto txs = bench::random_valid_txs(rng, w.state, w.secrets, 1);
  txs[0].nonce += 1;
  EXPECT_THROW(circuits::assign_batch_witness({1, 4, 64}, w.state, txs), WitnessError);
}

TEST(CircuitTest, DumpIsStable) {
  auto a = circuits::build_withdrawal_circuit(3).dump();
  auto b = circuits::build_withdrawal_circuit(3).dump();
  EXPECT_EQ(a, b);
  std::istringstream in(a);
  std::string first;
  std::getline(in, first);
  EXPECT_FALSE(first.empty());
}

}  // namespace
}  // namespace zkrb::r1cs
