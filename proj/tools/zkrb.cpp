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

// zkrb: ceremony, benchmark and end-to-end demo driver.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zkrb/algebra/params.hpp"
#include "zkrb/bench/scenarios.hpp"

namespace {

using namespace zkrb;

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw UsageError("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

/// "12..16", "4,8,16" or a single value.
std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    std::uint64_t lo = parse_uint(std::string_view(text).substr(0, dots));
    std::uint64_t hi = parse_uint(std::string_view(text).substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_uint(std::string_view(text).substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::set<bench::Scenario> parse_scenarios(const std::string& text) {
  std::set<bench::Scenario> out;
  if (text == "all") {
    out.insert(std::begin(bench::kAllScenarios), std::end(bench::kAllScenarios));
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string name = text.substr(start, comma - start);
    if (name == "prove_verify") {
      out.insert({bench::Scenario::kProveBatch, bench::Scenario::kProveWithdraw, bench::Scenario::kVerify});
    } else {
      out.insert(bench::scenario_from_name(name));
    }
    start = comma + 1;
  }
  return out;
}

int cmd_params(unsigned depth) {
  std::cout << algebra::curve_params_text();
  std::cout << "hash2_constraints = " << r1cs::kHash2Constraints << "\n";
  std::cout << "merkle_level_constraints = " << r1cs::kMerkleLevelConstraints << "\n";
  std::cout << "tree_depth = " << depth << "\n";
  std::cout << "batch_tx_constraints = " << circuits::batch_tx_constraints(depth, 64) << "\n";
  for (std::size_t m : {4, 8, 16}) {
    const std::size_t nc = circuits::batch_constraints(m, depth, 64);
    const std::size_t domain = std::bit_ceil(nc + 3);
    std::cout << "batch_constraints[" << m << "] = " << nc << " (domain " << domain
              << ", tau n >= " << groth16::required_tau_n(domain) << ")\n";
  }
  std::cout << "withdrawal_constraints = " << circuits::withdrawal_constraints(depth) << "\n";
  return 0;
}

int cmd_tau(const std::string& ns, int reps, const std::string& save_dir, unsigned workers) {
  bench::ScenarioConfig cfg;
  cfg.tau_ns.clear();
  for (auto n : parse_list(ns)) cfg.tau_ns.push_back(static_cast<unsigned>(n));
  cfg.repetitions = reps;
  cfg.workers = workers;
  for (int rep = 0; rep < reps; ++rep) {
    for (unsigned n : cfg.tau_ns) {
      try {
        const auto t0 = std::chrono::steady_clock::now();
        auto acc = groth16::tau_contribute(groth16::tau_init(n, cfg.memory_budget_bytes),
                                           to_bytes("zkrb tau " + std::to_string(n)), {workers, true});
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::printf("n=%u rep=%d time_ms=%.1f g1=%zu g2=%zu\n", n, rep, ms, acc.g1.size(), acc.g2.size());
        if (!save_dir.empty()) {
          std::filesystem::create_directories(save_dir);
          auto path = std::filesystem::path(save_dir) / ("tau-n" + std::to_string(n) + ".ptau");
          acc.save(path.string());
          std::printf("saved %s\n", path.string().c_str());
        }
      } catch (const BudgetExceeded& e) {
        std::printf("n=%u rep=%d budget_exceeded projected=%zu budget=%zu\n", n, rep,
                    e.projected_bytes(), e.budget_bytes());
      }
      std::fflush(stdout);
    }
  }
  return 0;
}

int cmd_tau_verify(const std::string& path, unsigned workers) {
  auto acc = groth16::TauAccumulator::load(path);
  const bool ok = groth16::tau_verify_chain(acc, workers);
  std::printf("%s n=%u contributions=%zu %s\n", path.c_str(), acc.n, acc.contributions.size(),
              ok ? "valid" : "INVALID");
  return ok ? 0 : 1;
}

int cmd_dump(const std::string& circuit, std::size_t m, unsigned depth, const std::string& out) {
  r1cs::ConstraintSystem cs = circuit == "withdrawal"
                                  ? circuits::build_withdrawal_circuit(depth)
                                  : circuits::build_batch_circuit({m, depth, 64});
  if (circuit != "withdrawal" && circuit != "batch") throw UsageError("circuit must be batch or withdrawal");
  if (out.empty() || out == "-") {
    cs.dump(std::cout);
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw IoError("cannot open " + out + " for writing");
    cs.dump(f);
  }
  return 0;
}

struct BenchArgs {
  std::string scenarios = "all";
  std::string sizes = "4,8,16";
  std::string tau_ns = "12..16";
  int reps = 5;
  std::string out = "report";
  std::string seed;
  bool no_timing = false;
  unsigned depth = rollup::kDefaultTreeDepth;
  std::string cache_dir;
  std::string config;
  bool parallel = false;
  std::size_t budget = 0;
};

bench::ScenarioConfig make_config(const BenchArgs& a, unsigned workers) {
  bench::ScenarioConfig cfg;
  cfg.batch_sizes.clear();
  for (auto v : parse_list(a.sizes)) cfg.batch_sizes.push_back(v);
  cfg.tau_ns.clear();
  for (auto v : parse_list(a.tau_ns)) cfg.tau_ns.push_back(static_cast<unsigned>(v));
  cfg.repetitions = a.reps;
  cfg.tree_depth = a.depth;
  cfg.no_timing = a.no_timing;
  cfg.workers = workers;
  cfg.parallel_scenarios = a.parallel;
  if (!a.seed.empty()) cfg.deterministic_seed = a.seed;
  if (!a.cache_dir.empty()) cfg.cache_dir = a.cache_dir;
  if (a.budget) cfg.memory_budget_bytes = a.budget;
  if (!a.config.empty()) {
    auto cc = l1sim::CostConfig::load(a.config);
    cfg.schedule = cc.schedule;
    cfg.price = cc.price;
  }
  return cfg;
}

int cmd_bench(const BenchArgs& a, unsigned workers) {
  auto cfg = make_config(a, workers);
  if (cfg.parallel_scenarios) {
    std::fprintf(stderr, "note: scenarios run concurrently; wall times are not comparable\n");
  }
  bench::BenchRunner runner(cfg);
  auto ms = runner.run(parse_scenarios(a.scenarios));
  std::filesystem::path dir(a.out);
  for (auto fmt : {bench::ReportFormat::kCsv, bench::ReportFormat::kJson, bench::ReportFormat::kSvg}) {
    for (const auto& p : bench::emit_report(ms, fmt, dir)) std::printf("wrote %s\n", p.string().c_str());
  }
  for (bench::Scenario s : bench::kAllScenarios) {
    auto med = bench::medians(ms, s);
    if (med.empty()) continue;
    std::printf("%-15s", std::string(bench::scenario_name(s)).c_str());
    for (const auto& [p, v] : med) std::printf("  %lld: %.1f ms", static_cast<long long>(p), v);
    std::printf("\n");
  }
  return 0;
}

struct DemoArgs {
  std::size_t m = 4;
  unsigned depth = rollup::kDefaultTreeDepth;
  std::string txs;
  std::string receipts;
  std::string cache_dir = "zkrb-cache";
  std::string seed;
  std::string config;
};

/// Pool, sequencer, aggregator and contract in one run.
int cmd_demo(const DemoArgs& a, unsigned workers) {
  bench::ScenarioConfig cfg;
  cfg.batch_sizes = {a.m};
  cfg.tree_depth = a.depth;
  cfg.workers = workers;
  cfg.repetitions = 1;
  if (!a.seed.empty()) cfg.deterministic_seed = a.seed;
  if (!a.cache_dir.empty()) cfg.cache_dir = a.cache_dir;
  if (!a.config.empty()) {
    auto cc = l1sim::CostConfig::load(a.config);
    cfg.schedule = cc.schedule;
    cfg.price = cc.price;
  }
  bench::BenchRunner runner(cfg);
  auto log = [](const std::string& s) { std::fprintf(stderr, "[demo] %s\n", s.c_str()); };

  auto rng = bench::workload_rng("demo");
  auto w = bench::make_workload(rng, {a.depth, 8});
  rollup::Node node(w.state, w.operator_secret, {a.m, a.depth, 64});
  log("genesis root " + algebra::fr_hex(node.state().root()));
  if (!a.txs.empty()) {
    std::ifstream in(a.txs);
    if (!in) throw IoError("cannot open " + a.txs);
    auto r = node.pool().submit_json_lines(in);
    for (const auto& [line, why] : r.rejected) log("line " + std::to_string(line) + " rejected: " + why);
    log("pool accepted " + std::to_string(r.accepted.size()) + " transactions");
  } else {
    for (const auto& tx : bench::random_valid_txs(rng, w.state, w.secrets, a.m + a.m / 2)) {
      node.pool().submit(tx);
    }
    log("pool filled with " + std::to_string(node.pool().size()) + " random transactions");
  }

  log("ceremony and key generation (cached under " + (a.cache_dir.empty() ? std::string("memory") : a.cache_dir) + ")");
  const auto& keys = runner.batch_keys(a.m);
  const auto& wkeys = runner.withdrawal_keys();
  auto contract = l1sim::RollupContract::deploy(keys.vk, wkeys.vk, node.state().root());

  std::ofstream receipts_file;
  if (!a.receipts.empty()) {
    receipts_file.open(a.receipts, std::ios::binary);
    if (!receipts_file) throw IoError("cannot open " + a.receipts);
  }
  auto emit = [&](const l1sim::Receipt& r) {
    l1sim::write_receipt_line(std::cout, r);
    if (receipts_file.is_open()) l1sim::write_receipt_line(receipts_file, r);
  };

  while (!node.pool().empty()) {
    auto sealed = node.seal_batch();
    for (const auto& s : sealed.skipped) {
      log("skipped ticket " + std::to_string(s.ticket) + ": " + rollup::tx_status_text(s.status));
    }
    auto proven = node.prove_next(keys.pk, to_bytes("demo/prove"), workers);
    log("batch " + std::to_string(proven->sequence_number) + " proven in " +
        std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(proven->duration).count()) + " ms");
    auto r = contract.submit_batch(proven->proof, proven->publics, cfg.schedule, proven->sequence_number);
    emit(r);
    auto cost = l1sim::per_tx_cost(r.gas_used, a.m, cfg.price);
    log("gas/tx " + cost.gas_per_tx.to_string() + ", usd/tx " + cost.usd_per_tx.to_string(6));
  }

  std::size_t who = 1;
  const std::uint64_t amount = node.state().account(who).balance / 2;
  auto pw = rollup::withdrawal_prove(node.state(), who, w.secrets[who], amount, algebra::Fr::from_u64(42),
                                     wkeys.pk, to_bytes("demo/withdraw"), workers);
  log("withdrawal of " + std::to_string(amount) + " proven in " +
      std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(pw.duration).count()) + " ms");
  emit(contract.submit_withdrawal(pw.proof, pw.publics, cfg.schedule));
  emit(contract.submit_withdrawal(pw.proof, pw.publics, cfg.schedule));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zkrb: ZK-rollup pipeline and benchmark harness"};
  app.require_subcommand(1);
  unsigned workers = zkrb::default_workers();
  app.add_option("-j,--workers", workers, "Worker threads for MSM, FFT and batch operations");

  unsigned params_depth = zkrb::rollup::kDefaultTreeDepth;
  auto* params = app.add_subcommand("params", "Print curve constants and circuit sizes");
  params->add_option("--depth", params_depth, "State tree depth");

  std::string tau_ns = "12..16", tau_save, tau_verify;
  int tau_reps = 1;
  auto* tau = app.add_subcommand("tau", "Run powers-of-tau ceremonies and time them");
  tau->add_option("--n", tau_ns, "Sizes, e.g. 12..16 or 12,14");
  tau->add_option("--reps", tau_reps, "Repetitions")->check(CLI::PositiveNumber);
  tau->add_option("--save", tau_save, "Directory to write accumulators to");
  tau->add_option("--verify", tau_verify, "Verify an accumulator file instead");

  BenchArgs ba;
  auto* benchc = app.add_subcommand("bench", "Run benchmark scenarios and write reports");
  benchc->add_option("--scenario", ba.scenarios,
                     "all, or a comma list of tau,compile,keygen,prove_verify,prove_batch,prove_withdraw,verify,cost");
  benchc->add_option("--sizes", ba.sizes, "Batch sizes, ascending");
  benchc->add_option("--tau-n", ba.tau_ns, "Ceremony sizes for the tau scenario");
  benchc->add_option("--reps", ba.reps, "Repetitions")->check(CLI::PositiveNumber);
  benchc->add_option("--out", ba.out, "Report directory");
  benchc->add_option("--seed", ba.seed, "Deterministic seed (no system randomness)");
  benchc->add_flag("--no-timing", ba.no_timing, "Zero all wall times for golden comparisons");
  benchc->add_option("--depth", ba.depth, "State tree depth");
  benchc->add_option("--cache", ba.cache_dir, "Cache directory for ceremony output and prepared powers");
  benchc->add_option("--config", ba.config, "key = value file with gas schedule and prices");
  benchc->add_flag("--parallel-scenarios", ba.parallel, "Run independent scenarios concurrently");
  std::string budget_text;
  benchc->add_option("--memory-budget", budget_text, "Ceremony memory budget, e.g. 512M (default: ZKRB_MEMORY_BUDGET or 4G)");

  std::string dump_circuit = "batch", dump_out;
  std::size_t dump_m = 4;
  unsigned dump_depth = zkrb::rollup::kDefaultTreeDepth;
  auto* dump = app.add_subcommand("dump", "Write a circuit's constraint system as text");
  dump->add_option("--circuit", dump_circuit, "batch or withdrawal");
  dump->add_option("--m", dump_m, "Batch size");
  dump->add_option("--depth", dump_depth, "State tree depth");
  dump->add_option("--out", dump_out, "Output file (default stdout)");

  DemoArgs da;
  auto* demo = app.add_subcommand("demo", "End to end: pool, batch, prove, submit, receipts");
  demo->add_option("--m", da.m, "Batch size");
  demo->add_option("--depth", da.depth, "State tree depth");
  demo->add_option("--txs", da.txs, "Transactions as JSON lines {from,to,amount,nonce,secret}");
  demo->add_option("--receipts", da.receipts, "Also write receipts to this file");
  demo->add_option("--cache", da.cache_dir, "Cache directory (empty for none)");
  demo->add_option("--seed", da.seed, "Deterministic seed");
  demo->add_option("--config", da.config, "key = value file with gas schedule and prices");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*params) return cmd_params(params_depth);
    if (*tau) return tau_verify.empty() ? cmd_tau(tau_ns, tau_reps, tau_save, workers)
                                        : cmd_tau_verify(tau_verify, workers);
    if (*benchc) {
      if (!budget_text.empty()) ba.budget = zkrb::groth16::parse_byte_size(budget_text);
      return cmd_bench(ba, workers);
    }
    if (*dump) return cmd_dump(dump_circuit, dump_m, dump_depth, dump_out);
    if (*demo) return cmd_demo(da, workers);
  } catch (const zkrb::Error& e) {
    std::fprintf(stderr, "zkrb: %s\n", e.what());
    return 2;
  }
  return 0;
}
