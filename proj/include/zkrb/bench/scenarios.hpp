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

#ifndef ZKRB_BENCH_SCENARIOS_HPP_
#define ZKRB_BENCH_SCENARIOS_HPP_

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zkrb/bench/measurement.hpp"
#include "zkrb/bench/workload.hpp"
#include "zkrb/circuits/batch.hpp"
#include "zkrb/circuits/withdrawal.hpp"
#include "zkrb/groth16/groth16.hpp"
#include "zkrb/l1sim/contract.hpp"
#include "zkrb/rollup/aggregator.hpp"
#include "zkrb/rollup/node.hpp"

namespace zkrb::bench {

/// Correctness failure inside a benchmark; aborts the scenario.
class ScenarioFailure : public Error {
 public:
  using Error::Error;
};

struct ScenarioConfig {
  std::vector<unsigned> tau_ns = {12, 13, 14, 15, 16};
  std::vector<std::size_t> batch_sizes = {4, 8, 16};
  int repetitions = 5;
  unsigned tree_depth = rollup::kDefaultTreeDepth;
  std::size_t memory_budget_bytes = groth16::default_memory_budget();
  std::optional<std::string> deterministic_seed;
  /// Zero every wall time and drop timing-derived aux values.
  bool no_timing = false;
  unsigned workers = 1;
  /// Disk cache for the ceremony output and prepared powers.
  std::optional<std::string> cache_dir;
  /// Users funded in each generated workload.
  std::size_t workload_users = 32;
  l1sim::GasSchedule schedule;
  l1sim::PriceConfig price;
  /// Run independent scenarios concurrently; timings become unreliable.
  bool parallel_scenarios = false;

  void validate() const {
    if (repetitions < 1) throw UsageError("repetitions must be at least 1");
    if (batch_sizes.empty()) throw UsageError("at least one batch size is required");
    for (std::size_t i = 0; i < batch_sizes.size(); ++i) {
      if (batch_sizes[i] == 0) throw UsageError("batch sizes must be positive");
      if (i > 0 && batch_sizes[i] <= batch_sizes[i - 1]) {
        throw UsageError("batch sizes must be strictly ascending");
      }
    }
    for (unsigned n : tau_ns) {
      if (n < groth16::kMinTauN || n > groth16::kMaxTauN) throw UsageError("tau n out of range");
    }
    circuits::BatchCircuitParams{batch_sizes.back(), tree_depth, 64}.validate();
  }
};

namespace detail {

using Clock = std::chrono::steady_clock;

template <class Fn>
std::chrono::nanoseconds timed(Fn&& fn) {
  const auto t0 = Clock::now();
  fn();
  return Clock::now() - t0;
}

inline Bytes label_bytes(const std::string& s) { return to_bytes(s); }

}  // namespace detail

/// Artifacts shared between scenarios of one run: the ceremony output,
/// keys per batch size and the last proven batch per size.
class BenchRunner {
 public:
  explicit BenchRunner(ScenarioConfig config) : cfg_(std::move(config)) {
    cfg_.validate();
    if (cfg_.deterministic_seed) {
      RandomnessPolicy::instance().set_deterministic_seed(cfg_.deterministic_seed);
    }
    if (cfg_.cache_dir) groth16::PreparedCache::instance().set_directory(cfg_.cache_dir);
  }

  const ScenarioConfig& config() const { return cfg_; }

  std::vector<Measurement> bench_tau() {
    std::vector<Measurement> out;
    for (int rep = 0; rep < cfg_.repetitions; ++rep) {
      for (unsigned n : cfg_.tau_ns) {
        Measurement m{Scenario::kTau, n, rep, {}, {}};
        const std::size_t projected = groth16::tau_projected_bytes(n);
        m.aux["projected_bytes"] = static_cast<std::int64_t>(projected);
        m.aux["budget_bytes"] = static_cast<std::int64_t>(cfg_.memory_budget_bytes);
        try {
          std::optional<groth16::TauAccumulator> acc;
          auto entropy = detail::label_bytes("tau/" + std::to_string(n) + "/" + std::to_string(rep));
          m.elapsed = detail::timed([&] {
            auto fresh = groth16::tau_init(n, cfg_.memory_budget_bytes);
            acc = groth16::tau_contribute(fresh, entropy, {cfg_.workers, true});
          });
          m.aux["status"] = std::string("ok");
          m.aux["g1_points"] = static_cast<std::int64_t>(acc->g1.size());
          m.aux["g2_points"] = static_cast<std::int64_t>(acc->g2.size());
        } catch (const BudgetExceeded&) {
          m.elapsed = {};
          m.aux["status"] = std::string("budget_exceeded");
        }
        out.push_back(finish(std::move(m)));
      }
    }
    return out;
  }

  std::vector<Measurement> bench_compile() {
    std::vector<Measurement> out;
    for (int rep = 0; rep < cfg_.repetitions; ++rep) {
      for (std::size_t mb : cfg_.batch_sizes) {
        Measurement m{Scenario::kCompile, static_cast<std::int64_t>(mb), rep, {}, {}};
        std::optional<r1cs::ConstraintSystem> cs;
        m.elapsed = detail::timed([&] { cs.emplace(circuits::build_batch_circuit(batch_params(mb))); });
        add_circuit_aux(m, "batch", *cs);
        out.push_back(finish(std::move(m)));
      }
      Measurement m{Scenario::kCompile, 0, rep, {}, {}};
      std::optional<r1cs::ConstraintSystem> cs;
      m.elapsed = detail::timed([&] { cs.emplace(circuits::build_withdrawal_circuit(cfg_.tree_depth)); });
      add_circuit_aux(m, "withdrawal", *cs);
      out.push_back(finish(std::move(m)));
    }
    return out;
  }

  std::vector<Measurement> bench_keygen() {
    std::vector<Measurement> out;
    const groth16::TauAccumulator& acc = accumulator();
    std::map<std::size_t, std::chrono::nanoseconds> prepare;
    for (std::size_t mb : cfg_.batch_sizes) {
      const auto& shape = batch_shape(mb);
      prepare[mb] = detail::timed([&] {
        groth16::PreparedCache::instance().get(acc, groth16::qap_domain_size(shape), cfg_.workers);
      });
    }
    const auto& wshape = withdrawal_shape();
    const auto wprepare = detail::timed([&] {
      groth16::PreparedCache::instance().get(acc, groth16::qap_domain_size(wshape), cfg_.workers);
    });
    for (int rep = 0; rep < cfg_.repetitions; ++rep) {
      for (std::size_t mb : cfg_.batch_sizes) {
        Measurement m{Scenario::kKeygen, static_cast<std::int64_t>(mb), rep, {}, {}};
        auto entropy = detail::label_bytes("keygen/" + std::to_string(mb) + "/" + std::to_string(rep));
        std::optional<groth16::KeyPair> kp;
        m.elapsed = detail::timed([&] {
          kp.emplace(groth16::setup(acc, batch_shape(mb), entropy, {cfg_.workers, false}));
        });
        add_key_aux(m, "batch", *kp);
        if (rep == 0 && !cfg_.no_timing) m.aux["prepare_ms"] = to_ms(prepare[mb]);
        batch_keys_[mb] = std::make_shared<const groth16::KeyPair>(std::move(*kp));
        out.push_back(finish(std::move(m)));
      }
      Measurement m{Scenario::kKeygen, 0, rep, {}, {}};
      auto entropy = detail::label_bytes("keygen/withdrawal/" + std::to_string(rep));
      std::optional<groth16::KeyPair> kp;
      m.elapsed = detail::timed([&] {
        kp.emplace(groth16::setup(acc, wshape, entropy, {cfg_.workers, false}));
      });
      add_key_aux(m, "withdrawal", *kp);
      if (rep == 0 && !cfg_.no_timing) m.aux["prepare_ms"] = to_ms(wprepare);
      withdrawal_keys_ = std::make_shared<const groth16::KeyPair>(std::move(*kp));
      out.push_back(finish(std::move(m)));
    }
    return out;
  }

  /// Per batch size and repetition: a random valid batch proven (PrfGenB)
  /// and verified, plus one withdrawal proof (PrfGenW) on the post state.
  std::vector<Measurement> bench_prove_verify() {
    std::vector<Measurement> out;
    for (int rep = 0; rep < cfg_.repetitions; ++rep) {
      for (std::size_t mb : cfg_.batch_sizes) {
        const auto& keys = batch_keys(mb);
        const auto& wkeys = withdrawal_keys();
        const std::string tag = std::to_string(mb) + "/" + std::to_string(rep);
        auto rng = workload_rng("batch/" + tag);
        Workload w = make_workload(rng, {cfg_.tree_depth, cfg_.workload_users});
        auto txs = random_valid_txs(rng, w.state, w.secrets, mb);
        rollup::Node node(w.state, w.operator_secret, batch_params(mb));
        for (const auto& tx : txs) node.pool().submit(tx);
        auto sealed = node.seal_batch();
        if (!sealed.skipped.empty()) throw ScenarioFailure("generated workload had invalid transactions");

        auto proven = node.prove_next(keys.pk, detail::label_bytes("prove/" + tag), cfg_.workers);
        Measurement mp{Scenario::kProveBatch, static_cast<std::int64_t>(mb), rep, proven->duration, {}};
        mp.aux["proof_bytes"] = static_cast<std::int64_t>(proven->proof.to_bytes().size());
        mp.aux["constraints"] = static_cast<std::int64_t>(batch_shape(mb).num_constraints());
        out.push_back(finish(std::move(mp)));

        const auto pub = proven->publics.to_vector();
        bool ok = false;
        algebra::counters().reset();
        Measurement mv{Scenario::kVerify, static_cast<std::int64_t>(mb), rep, {}, {}};
        mv.elapsed = detail::timed([&] { ok = groth16::verify(keys.vk, pub, proven->proof); });
        if (!ok) throw ScenarioFailure("batch proof failed verification (m=" + std::to_string(mb) + ")");
        mv.aux["pairings"] = static_cast<std::int64_t>(algebra::counters().miller_loops);
        mv.aux["msm_length"] = static_cast<std::int64_t>(algebra::counters().last_msm_length);
        out.push_back(finish(std::move(mv)));

        const std::size_t who = 1 + rng.uniform(cfg_.workload_users);
        const auto& acct = node.state().account(who);
        const std::uint64_t amount = acct.balance == 0 ? 0 : rng.uniform(acct.balance + 1);
        auto pw = rollup::withdrawal_prove(node.state(), who, w.secrets[who], amount,
                                           Fr::from_u64(who), wkeys.pk,
                                           detail::label_bytes("withdraw/" + tag), cfg_.workers);
        if (!groth16::verify(wkeys.vk, pw.publics.to_vector(), pw.proof)) {
          throw ScenarioFailure("withdrawal proof failed verification");
        }
        Measurement mw{Scenario::kProveWithdraw, static_cast<std::int64_t>(mb), rep, pw.duration, {}};
        mw.aux["proof_bytes"] = static_cast<std::int64_t>(pw.proof.to_bytes().size());
        mw.aux["constraints"] = static_cast<std::int64_t>(withdrawal_shape().num_constraints());
        out.push_back(finish(std::move(mw)));

        last_batches_[mb] = std::make_shared<const rollup::ProvenBatch>(*proven);
      }
    }
    return out;
  }

  /// Submits a proven batch per size to a fresh contract and converts the
  /// receipt into per-transaction gas and USD.
  std::vector<Measurement> bench_cost() {
    std::vector<Measurement> out;
    for (std::size_t mb : cfg_.batch_sizes) {
      if (!last_batches_.count(mb)) prove_one(mb);
    }
    for (int rep = 0; rep < cfg_.repetitions; ++rep) {
      for (std::size_t mb : cfg_.batch_sizes) {
        const auto& keys = batch_keys(mb);
        const auto& pb = *last_batches_.at(mb);
        auto contract = l1sim::RollupContract::deploy(keys.vk, withdrawal_keys().vk,
                                                      pb.publics.old_state_root);
        l1sim::Receipt r;
        Measurement m{Scenario::kCost, static_cast<std::int64_t>(mb), rep, {}, {}};
        m.elapsed = detail::timed([&] { r = contract.submit_batch(pb.proof, pb.publics, cfg_.schedule, pb.sequence_number); });
        if (!r.accepted) {
          throw ScenarioFailure("batch submission rejected: " + r.reason.value_or("?"));
        }
        auto cost = l1sim::per_tx_cost(r.gas_used, mb, cfg_.price);
        m.aux["gas_used"] = static_cast<std::int64_t>(r.gas_used);
        m.aux["calldata_bytes"] = static_cast<std::int64_t>(r.calldata_bytes);
        m.aux["gas_per_tx"] = cost.gas_per_tx.to_string();
        m.aux["usd_per_tx"] = cost.usd_per_tx.to_string(6);
        out.push_back(finish(std::move(m)));
      }
    }
    return out;
  }

  /// Runs the selected scenarios in dependency order. prove_batch,
  /// prove_withdraw and verify come from one pass.
  std::vector<Measurement> run(const std::set<Scenario>& which) {
    auto has = [&](Scenario s) { return which.count(s) != 0; };
    const bool want_prove = has(Scenario::kProveBatch) || has(Scenario::kProveWithdraw) ||
                            has(Scenario::kVerify);
    std::vector<Measurement> independent, chain;
    auto run_independent = [&] {
      std::vector<Measurement> v;
      if (has(Scenario::kTau)) append(v, bench_tau());
      if (has(Scenario::kCompile)) append(v, bench_compile());
      return v;
    };
    std::future<std::vector<Measurement>> pending;
    if (cfg_.parallel_scenarios) pending = std::async(std::launch::async, run_independent);
    else independent = run_independent();
    if (has(Scenario::kKeygen)) append(chain, bench_keygen());
    if (want_prove) {
      for (auto& m : bench_prove_verify()) {
        if (has(m.scenario)) chain.push_back(std::move(m));
      }
    }
    if (has(Scenario::kCost)) append(chain, bench_cost());
    if (pending.valid()) independent = pending.get();
    append(independent, std::move(chain));
    return independent;
  }

  const groth16::KeyPair& batch_keys(std::size_t mb) {
    if (!batch_keys_.count(mb)) {
      batch_keys_[mb] = std::make_shared<const groth16::KeyPair>(groth16::setup(
          accumulator(), batch_shape(mb), detail::label_bytes("keygen/" + std::to_string(mb)),
          {cfg_.workers, false}));
    }
    return *batch_keys_.at(mb);
  }

  const groth16::KeyPair& withdrawal_keys() {
    if (!withdrawal_keys_) {
      withdrawal_keys_ = std::make_shared<const groth16::KeyPair>(groth16::setup(
          accumulator(), withdrawal_shape(), detail::label_bytes("keygen/withdrawal"),
          {cfg_.workers, false}));
    }
    return *withdrawal_keys_;
  }

  /// Ceremony output large enough for every configured circuit: built once
  /// (one contribution) and cached on disk when a cache directory is set.
  const groth16::TauAccumulator& accumulator() {
    if (acc_) return *acc_;
    std::size_t domain = groth16::qap_domain_size(withdrawal_shape());
    for (std::size_t mb : cfg_.batch_sizes) {
      domain = std::max(domain, groth16::qap_domain_size(batch_shape(mb)));
    }
    const unsigned n = groth16::required_tau_n(domain);
    std::optional<std::filesystem::path> file;
    if (cfg_.cache_dir) {
      const std::string tag = to_hex(sha256(cfg_.deterministic_seed.value_or("random"))).substr(0, 12);
      file = std::filesystem::path(*cfg_.cache_dir) / ("tau-n" + std::to_string(n) + "-" + tag + ".ptau");
    }
    if (file && std::filesystem::exists(*file)) {
      try {
        auto loaded = groth16::TauAccumulator::load(file->string());
        if (loaded.n == n && groth16::tau_verify_chain(loaded, cfg_.workers)) {
          acc_ = std::make_shared<const groth16::TauAccumulator>(std::move(loaded));
          return *acc_;
        }
      } catch (const IntegrityError&) {
      }
    }
    auto fresh = groth16::tau_init(n, cfg_.memory_budget_bytes);
    auto acc = groth16::tau_contribute(fresh, detail::label_bytes("bench/ceremony"), {cfg_.workers, true});
    if (file) {
      std::filesystem::create_directories(file->parent_path());
      auto tmp = *file;
      tmp += ".tmp";
      acc.save(tmp.string());
      std::filesystem::rename(tmp, *file);
    }
    acc_ = std::make_shared<const groth16::TauAccumulator>(std::move(acc));
    return *acc_;
  }

  const r1cs::ConstraintSystem& batch_shape(std::size_t mb) {
    auto it = shapes_.find(mb);
    if (it == shapes_.end()) {
      it = shapes_.emplace(mb, std::make_shared<const r1cs::ConstraintSystem>(
                                   circuits::build_batch_circuit(batch_params(mb)))).first;
    }
    return *it->second;
  }

  const r1cs::ConstraintSystem& withdrawal_shape() {
    if (!withdrawal_shape_) {
      withdrawal_shape_ = std::make_shared<const r1cs::ConstraintSystem>(
          circuits::build_withdrawal_circuit(cfg_.tree_depth));
    }
    return *withdrawal_shape_;
  }

  const std::map<std::size_t, std::shared_ptr<const rollup::ProvenBatch>>& last_batches() const {
    return last_batches_;
  }

 private:
  circuits::BatchCircuitParams batch_params(std::size_t mb) const {
    return {mb, cfg_.tree_depth, 64};
  }

  static std::int64_t to_ms(std::chrono::nanoseconds d) {
    return static_cast<std::int64_t>(std::llround(static_cast<double>(d.count()) / 1e6));
  }

  static void append(std::vector<Measurement>& dst, std::vector<Measurement> src) {
    for (auto& m : src) dst.push_back(std::move(m));
  }

  Measurement finish(Measurement m) const {
    if (cfg_.no_timing) m.elapsed = {};
    return m;
  }

  static void add_circuit_aux(Measurement& m, const char* circuit, const r1cs::ConstraintSystem& cs) {
    m.aux["circuit"] = std::string(circuit);
    m.aux["constraints"] = static_cast<std::int64_t>(cs.num_constraints());
    m.aux["public_inputs"] = static_cast<std::int64_t>(cs.num_public());
    m.aux["private_inputs"] = static_cast<std::int64_t>(cs.num_private());
    m.aux["domain_size"] = static_cast<std::int64_t>(cs.stats().domain_size);
  }

  static void add_key_aux(Measurement& m, const char* circuit, const groth16::KeyPair& kp) {
    m.aux["circuit"] = std::string(circuit);
    m.aux["pk_bytes"] = static_cast<std::int64_t>(kp.pk.to_bytes().size());
    m.aux["vk_bytes"] = static_cast<std::int64_t>(kp.vk.to_bytes().size());
    m.aux["vk_inputs"] = static_cast<std::int64_t>(kp.vk.ic.size());
  }

  void prove_one(std::size_t mb) {
    auto rng = workload_rng("cost/" + std::to_string(mb));
    Workload w = make_workload(rng, {cfg_.tree_depth, cfg_.workload_users});
    auto txs = random_valid_txs(rng, w.state, w.secrets, mb);
    rollup::Node node(w.state, w.operator_secret, batch_params(mb));
    for (const auto& tx : txs) node.pool().submit(tx);
    node.seal_batch();
    auto proven = node.prove_next(batch_keys(mb).pk,
                                  detail::label_bytes("cost/prove/" + std::to_string(mb)), cfg_.workers);
    last_batches_[mb] = std::make_shared<const rollup::ProvenBatch>(*proven);
  }

  ScenarioConfig cfg_;
  std::shared_ptr<const groth16::TauAccumulator> acc_;
  std::map<std::size_t, std::shared_ptr<const r1cs::ConstraintSystem>> shapes_;
  std::shared_ptr<const r1cs::ConstraintSystem> withdrawal_shape_;
  std::map<std::size_t, std::shared_ptr<const groth16::KeyPair>> batch_keys_;
  std::shared_ptr<const groth16::KeyPair> withdrawal_keys_;
  std::map<std::size_t, std::shared_ptr<const rollup::ProvenBatch>> last_batches_;
};

}  // namespace zkrb::bench

#endif  // ZKRB_BENCH_SCENARIOS_HPP_
