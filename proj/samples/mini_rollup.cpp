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

// Two-transaction rollup on a small tree: pool, batch, proof, L1 receipt.

#include <cstdio>
#include <iostream>

#include "zkrb/bench/scenarios.hpp"

using namespace zkrb;

int main() {
  constexpr std::size_t kBatch = 2;
  constexpr unsigned kDepth = 4;
  bench::ScenarioConfig cfg;
  cfg.batch_sizes = {kBatch};
  cfg.tree_depth = kDepth;
  cfg.deterministic_seed = "sample";
  bench::BenchRunner runner(cfg);

  auto rng = bench::workload_rng("sample");
  auto w = bench::make_workload(rng, {kDepth, 8});
  rollup::Node node(w.state, w.operator_secret, {kBatch, kDepth, 64});
  for (const auto& tx : bench::random_valid_txs(rng, node.state(), w.secrets, kBatch)) node.pool().submit(tx);

  const auto& keys = runner.batch_keys(kBatch);
  auto contract = l1sim::RollupContract::deploy(keys.vk, runner.withdrawal_keys().vk, node.state().root());
  node.seal_batch();
  auto proven = node.prove_next(keys.pk, to_bytes("sample"));
  std::printf("batch %llu proven in %lld ms\n", static_cast<unsigned long long>(proven->sequence_number),
              static_cast<long long>(std::chrono::duration_cast<std::chrono::milliseconds>(proven->duration).count()));
  auto receipt = contract.submit_batch(proven->proof, proven->publics, cfg.schedule, proven->sequence_number);
  l1sim::write_receipt_line(std::cout, receipt);
  std::printf("contract root matches node: %s\n", contract.current_root() == node.state().root() ? "yes" : "no");
  return receipt.accepted ? 0 : 1;
}
