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

// Per-transaction L1 cost of a batch submission as the batch size grows.

#include <cstdio>

#include "zkrb/l1sim/gas.hpp"

using namespace zkrb;

int main(int argc, char** argv) {
  l1sim::CostConfig cfg;
  if (argc > 1) cfg = l1sim::CostConfig::load(argv[1]);
  // A batch submission carries a 131-byte proof and two 32-byte public inputs.
  const Bytes calldata(131 + 2 * 32, 0x5a);
  const auto gas = l1sim::gas_for_submission(2, calldata, cfg.schedule);
  std::printf("gas per submission %llu\n", static_cast<unsigned long long>(gas));
  std::printf("%6s %14s %12s\n", "m", "gas/tx", "usd/tx");
  for (std::size_t m = 1; m <= 1024; m *= 2) {
    auto c = l1sim::per_tx_cost(gas, m, cfg.price);
    std::printf("%6zu %14s %12s\n", m, c.gas_per_tx.to_string().c_str(), c.usd_per_tx.to_string(6).c_str());
  }
}
