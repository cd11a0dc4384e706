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

// Acceptance run: one PASS/FAIL line per criterion, in order.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "support/oracles.hpp"
#include "zkrb/algebra/counters.hpp"
#include "zkrb/algebra/msm.hpp"
#include "zkrb/algebra/pairing.hpp"
#include "zkrb/bench/scenarios.hpp"

namespace {

using namespace zkrb;
using algebra::Fr;
using algebra::G1;
using algebra::G2;
using bench::Measurement;
using bench::Scenario;
using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = false;
  std::string detail;
};

struct Options {
  std::string cache_dir;
  std::string out_dir = "acceptance-report";
  std::string cli;
  unsigned workers = default_workers();
  std::vector<std::size_t> sizes = {4, 8, 16};
  int reps = 5;
  std::size_t batches = 50;
  double suite_limit_minutes = 30;
};

void progress(const std::string& s) {
  std::fprintf(stderr, "[acceptance] %s\n", s.c_str());
  std::fflush(stderr);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

/// Verification that never throws; malformed inputs count as rejected.
bool verifies(const groth16::VerifyingKey& vk, std::span<const Fr> pub, const groth16::Proof& p) {
  try {
    return groth16::verify(vk, pub, p);
  } catch (const Error&) {
    return false;
  }
}

// Criterion 3.
Result algebra_properties() {
  Drbg rng("zkrb/acceptance/algebra");
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    Fr a = Fr::random(rng), b = Fr::random(rng), c = Fr::random(rng);
    bool ok = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) &&
              (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a + Fr::zero() == a &&
              a * Fr::one() == a && (a + (-a)).is_zero() && (a.is_zero() || a * a.inverse() == Fr::one());
    bad += ok ? 0 : 1;
  }
  std::size_t bad_pairing = 0;
  const auto base = algebra::pairing(G1::generator(), G2::generator());
  if (base.is_identity()) ++bad_pairing;
  for (int i = 0; i < 100; ++i) {
    Fr a = Fr::random(rng), b = Fr::random(rng);
    auto lhs = algebra::pairing(G1::generator() * a, G2::generator() * b);
    if (!(lhs == base.pow(a * b))) ++bad_pairing;
  }
  std::size_t bad_fft = 0;
  for (unsigned logn = 0; logn <= 12; ++logn) {
    algebra::EvaluationDomain d(std::size_t{1} << logn);
    std::vector<Fr> v(d.size());
    for (auto& x : v) x = Fr::random(rng);
    auto w = v;
    algebra::fft_in_place<Fr>(std::span<Fr>(w), d, algebra::FftDirection::kForward);
    algebra::fft_in_place<Fr>(std::span<Fr>(w), d, algebra::FftDirection::kInverse);
    if (w != v) ++bad_fft;
  }
  std::size_t bad_msm = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng.uniform(128);
    std::vector<Fr> s(n);
    for (auto& x : s) x = rng.uniform(5) == 0 ? Fr::zero() : Fr::random(rng);
    if (i % 2 == 0) {
      std::vector<algebra::G1Affine> p(n);
      for (auto& x : p) x = (G1::generator() * Fr::random(rng)).to_affine();
      if (!(algebra::msm<algebra::G1Params>(s, p) == algebra::msm_naive<algebra::G1Params>(s, p))) ++bad_msm;
    } else {
      std::vector<algebra::G2Affine> p(n);
      for (auto& x : p) x = (G2::generator() * Fr::random(rng)).to_affine();
      if (!(algebra::msm<algebra::G2Params>(s, p) == algebra::msm_naive<algebra::G2Params>(s, p))) ++bad_msm;
    }
  }
  std::ostringstream d;
  d << "field triples 1000 (" << bad << " bad), bilinearity pairs 100 (" << bad_pairing
    << " bad), fft sizes 1..4096 (" << bad_fft << " bad), msm instances 50 (" << bad_msm << " bad)";
  return {bad + bad_pairing + bad_fft + bad_msm == 0, d.str()};
}

// Criterion 4.
Result qap_oracle() {
  Drbg rng("zkrb/acceptance/qap");
  std::size_t disagreements = 0, valid = 0, invalid = 0;
  for (int i = 0; i < 100; ++i) {
    auto rc = testing::random_circuit(rng, 1 + rng.uniform(28), 1 + rng.uniform(3));
    if (i % 2 == 1) {
      const std::size_t idx = 1 + rng.uniform(rc.witness.size() - 1);
      rc.witness[idx] += Fr::random_nonzero(rng);
    }
    const bool brute = rc.cs.is_satisfied(rc.witness);
    (brute ? valid : invalid)++;
    auto naive = testing::naive_qap(rc.cs, rc.witness);
    // Library quotient checked at a random point: A(t) B(t) - C(t) = H(t) Z(t).
    auto h = groth16::compute_h(rc.cs, rc.witness);
    const Fr t = Fr::random(rng);
    const Fr lhs = testing::poly_eval(naive.a, t) * testing::poly_eval(naive.b, t) -
                   testing::poly_eval(naive.c, t);
    const Fr rhs = testing::poly_eval(testing::Poly(h.begin(), h.end()), t) *
                   algebra::EvaluationDomain(naive.domain_size).vanishing_at(t);
    const bool library = lhs == rhs;
    if (naive.divisible() != brute || library != brute) ++disagreements;
    if (brute) {
      testing::Poly hp(h.begin(), h.end());
      testing::trim(hp);
      if (hp != naive.division.quotient) ++disagreements;
    }
  }
  std::ostringstream d;
  d << "100 assignments (" << valid << " satisfying, " << invalid << " not), " << disagreements
    << " disagreements";
  return {disagreements == 0, d.str()};
}

// Criterion 5.
Result constraint_linearity(const std::vector<std::size_t>& sizes) {
  std::map<std::size_t, std::size_t> count;
  std::set<std::size_t> withdrawal;
  for (std::size_t m : {4, 8, 16}) {
    count[m] = circuits::build_batch_circuit({m, 8, 64}).num_constraints();
    withdrawal.insert(circuits::build_withdrawal_circuit(8).num_constraints());
  }
  for (std::size_t m : sizes) {
    bench::ScenarioConfig cfg;
    cfg.batch_sizes = {m};
    cfg.tree_depth = 8;
    bench::BenchRunner runner(cfg);
    withdrawal.insert(runner.withdrawal_shape().num_constraints());
  }
  const auto d1 = static_cast<long long>(count[8]) - static_cast<long long>(count[4]);
  const auto d2 = static_cast<long long>(count[16]) - static_cast<long long>(count[8]);
  std::ostringstream d;
  d << "count(4)=" << count[4] << " count(8)=" << count[8] << " count(16)=" << count[16]
    << ", differences " << d1 << " and " << d2 << ", withdrawal counts {";
  bool first = true;
  for (auto w : withdrawal) d << (first ? "" : ",") << w, first = false;
  d << "}";
  return {d2 == 2 * d1 && withdrawal.size() == 1, d.str()};
}

// Criterion 9.
Result conservation() {
  Drbg rng("zkrb/acceptance/conservation");
  auto w = bench::make_workload(rng, {8, 40});
  const auto total = w.state.total_balance();
  rollup::StateTree state = w.state;
  std::size_t violations = 0, txs = 0;
  const std::size_t sizes[] = {4, 8, 16};
  for (int b = 0; b < 100; ++b) {
    const std::size_t m = sizes[rng.uniform(3)];
    rollup::Pool pool(state.capacity());
    for (const auto& tx : bench::random_valid_txs(rng, state, w.secrets, m)) pool.submit(tx);
    auto sb = rollup::sequencer_create_batch(pool, state, m, w.operator_secret, b);
    state = rollup::apply_batch(state, sb.batch);
    txs += sb.batch.txs.size();
    unsigned __int128 sum = 0;
    for (std::size_t i = 0; i < state.capacity(); ++i) sum += state.account(i).balance;
    if (sum != total || state.total_balance() != total) ++violations;
  }
  std::ostringstream d;
  d << "100 batches, " << txs << " transactions, total " << static_cast<unsigned long long>(total)
    << ", " << violations << " violations";
  return {violations == 0, d.str()};
}

// Criterion 7.
Result tau_scaling(const Options& opt, std::vector<Measurement>& report) {
  bench::ScenarioConfig cfg;
  cfg.tau_ns = {12, 13, 14, 15, 16};
  cfg.repetitions = opt.reps;
  cfg.workers = opt.workers;
  unsigned over = 0;
  for (unsigned n = 17; n <= groth16::kMaxTauN; ++n) {
    if (groth16::tau_projected_bytes(n) > cfg.memory_budget_bytes) {
      over = n;
      break;
    }
  }
  if (over != 0) cfg.tau_ns.push_back(over);
  bench::BenchRunner runner(cfg);
  auto ms = runner.run({Scenario::kTau});
  auto med = bench::medians(ms, Scenario::kTau);
  bool ok = true;
  std::ostringstream d;
  d << "median ms";
  for (unsigned n = 12; n <= 16; ++n) d << " n" << n << "=" << fmt("%.0f", med.count(n) ? med[n] : -1);
  d << "; ratios";
  for (unsigned n = 13; n <= 16; ++n) {
    if (!med.count(n) || !med.count(n - 1)) {
      ok = false;
      continue;
    }
    const double r = med[n] / med[n - 1];
    d << " " << fmt("%.2f", r);
    ok = ok && r >= 1.6 && r <= 3.0;
  }
  bool clean = false;
  for (const auto& m : ms) {
    if (m.parameter == over && bench::aux_text(m.aux.at("status")) == "budget_exceeded") clean = true;
  }
  d << "; n=" << over << " over budget: " << (clean ? "budget_exceeded record" : "no clean record");
  report.insert(report.end(), ms.begin(), ms.end());
  return {ok && clean && over != 0, d.str()};
}

struct PipelineOutcome {
  Result completeness, soundness, shapes, succinct;
};

bool non_decreasing(const std::map<std::int64_t, double>& med, std::ostringstream& d, const char* name) {
  bool ok = true;
  double prev = -1;
  d << name;
  for (const auto& [p, v] : med) {
    if (p == 0) continue;
    d << " " << p << ":" << fmt("%.1f", v);
    if (v < prev) ok = false;
    prev = v;
  }
  return ok;
}

double spread(const std::map<std::int64_t, double>& med) {
  double lo = 1e300, hi = 0;
  for (const auto& [p, v] : med) {
    if (p == 0) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return lo > 0 ? hi / lo : 1e300;
}

// Criteria 1, 2, 6 and 8 share keys and proofs.
PipelineOutcome pipeline(const Options& opt, std::vector<Measurement>& report) {
  PipelineOutcome out;
  bench::ScenarioConfig cfg;
  cfg.batch_sizes = opt.sizes;
  cfg.repetitions = opt.reps;
  cfg.tree_depth = 8;
  cfg.workers = opt.workers;
  if (!opt.cache_dir.empty()) cfg.cache_dir = opt.cache_dir;
  bench::BenchRunner runner(cfg);

  progress("ceremony, keygen and shape benchmarks");
  auto ms = runner.run({Scenario::kCompile, Scenario::kKeygen, Scenario::kProveBatch,
                        Scenario::kProveWithdraw, Scenario::kVerify, Scenario::kCost});
  report.insert(report.end(), ms.begin(), ms.end());

  std::size_t verifications = 0, wrong_pairings = 0;
  std::set<std::int64_t> pairing_values;
  for (const auto& m : ms) {
    if (m.scenario != Scenario::kVerify) continue;
    ++verifications;
    auto p = std::get<std::int64_t>(m.aux.at("pairings"));
    pairing_values.insert(p);
    if (p != 4) ++wrong_pairings;
  }

  {
    std::ostringstream d;
    bool ok = true;
    auto prove_b = bench::medians(ms, Scenario::kProveBatch);
    double prev = -1;
    d << "PrfGenB";
    for (const auto& [p, v] : prove_b) {
      d << " " << p << ":" << fmt("%.0f", v);
      if (!(v > prev)) ok = false;
      prev = v;
    }
    const double w_spread = spread(bench::medians(ms, Scenario::kProveWithdraw));
    const double v_spread = spread(bench::medians(ms, Scenario::kVerify));
    d << "; PrfGenW max/min " << fmt("%.3f", w_spread) << "; verify max/min " << fmt("%.3f", v_spread) << "; ";
    ok = ok && w_spread < 1.2 && v_spread < 1.5;
    ok = non_decreasing(bench::medians(ms, Scenario::kCompile), d, "compile") && ok;
    d << "; ";
    ok = non_decreasing(bench::medians(ms, Scenario::kKeygen), d, "keygen") && ok;
    std::map<std::int64_t, l1sim::Rational> gas;
    for (const auto& m : ms) {
      if (m.scenario != Scenario::kCost) continue;
      auto used = std::get<std::int64_t>(m.aux.at("gas_used"));
      gas[m.parameter] = l1sim::Rational::make(static_cast<std::uint64_t>(used), static_cast<std::uint64_t>(m.parameter));
    }
    d << "; gas/tx";
    std::optional<l1sim::Rational> last;
    for (const auto& [p, g] : gas) {
      d << " " << p << ":" << g.to_string();
      if (last && !(g < *last)) ok = false;
      last = g;
    }
    out.shapes = {ok && gas.size() == opt.sizes.size(), d.str()};
  }

  progress("completeness: " + std::to_string(opt.batches) + " batches");
  Drbg rng("zkrb/acceptance/completeness");
  std::size_t proven = 0, verified = 0, accepted = 0, withdrawals_ok = 0, withdrawals = 0;
  std::map<std::size_t, std::size_t> per_m, proof_sizes;
  std::vector<std::pair<std::size_t, rollup::ProvenBatch>> corpus;
  std::vector<rollup::ProvenWithdrawal> wcorpus;
  const auto& wkeys = runner.withdrawal_keys();
  for (std::size_t k = 0; k < opt.sizes.size(); ++k) {
    const std::size_t m = opt.sizes[k];
    const std::size_t count = opt.batches / opt.sizes.size() + (k < opt.batches % opt.sizes.size() ? 1 : 0);
    const auto& keys = runner.batch_keys(m);
    auto w = bench::make_workload(rng, {8, 32});
    rollup::Node node(w.state, w.operator_secret, {m, 8, 64});
    auto contract = l1sim::RollupContract::deploy(keys.vk, wkeys.vk, node.state().root());
    for (std::size_t b = 0; b < count; ++b) {
      const std::size_t ntx = b % 5 == 4 ? 1 + rng.uniform(m) : m;
      for (const auto& tx : bench::random_valid_txs(rng, node.state(), w.secrets, ntx)) node.pool().submit(tx);
      auto sealed = node.seal_batch();
      if (!sealed.skipped.empty()) continue;
      auto pb = node.prove_next(keys.pk, to_bytes("acceptance"), opt.workers);
      ++proven;
      ++per_m[m];
      proof_sizes[pb->proof.to_bytes().size()]++;
      algebra::counters().reset();
      if (verifies(keys.vk, pb->publics.to_vector(), pb->proof)) ++verified;
      ++verifications;
      pairing_values.insert(static_cast<std::int64_t>(algebra::counters().miller_loops));
      if (algebra::counters().miller_loops != 4) ++wrong_pairings;
      auto receipt = contract.submit_batch(pb->proof, pb->publics, l1sim::GasSchedule{}, pb->sequence_number);
      if (receipt.accepted) ++accepted;
      corpus.emplace_back(m, *pb);
    }
    const std::size_t who = 1 + rng.uniform(32);
    const std::uint64_t amount = rng.uniform(node.state().account(who).balance + 1);
    auto pw = rollup::withdrawal_prove(node.state(), who, w.secrets[who], amount, Fr::from_u64(who),
                                       wkeys.pk, to_bytes("acceptance/withdraw"), opt.workers);
    ++withdrawals;
    algebra::counters().reset();
    auto r = contract.submit_withdrawal(pw.proof, pw.publics, l1sim::GasSchedule{});
    ++verifications;
    pairing_values.insert(static_cast<std::int64_t>(algebra::counters().miller_loops));
    if (algebra::counters().miller_loops != 4) ++wrong_pairings;
    if (r.accepted) ++withdrawals_ok;
    wcorpus.push_back(pw);
  }
  {
    std::ostringstream d;
    d << proven << "/" << opt.batches << " batches proven (";
    bool first = true;
    for (auto [m, c] : per_m) d << (first ? "" : ", ") << "m=" << m << ": " << c, first = false;
    d << "), " << verified << " verified, " << accepted << " receipts accepted, " << withdrawals_ok << "/"
      << withdrawals << " withdrawals accepted";
    out.completeness = {proven == opt.batches && verified == proven && accepted == proven &&
                            withdrawals_ok == withdrawals,
                        d.str()};
  }

  progress("soundness: 200 mutations");
  std::size_t false_accepts = 0, mutations = 0;
  std::map<std::string, std::size_t> kinds;
  while (mutations < 200) {
    const bool withdraw = mutations % 4 == 3;
    groth16::Proof proof;
    std::vector<Fr> pub;
    const groth16::VerifyingKey* vk;
    groth16::Proof other;
    if (withdraw) {
      const auto& pw = wcorpus[rng.uniform(wcorpus.size())];
      proof = pw.proof;
      pub = pw.publics.to_vector();
      vk = &wkeys.vk;
      other = wcorpus[(rng.uniform(wcorpus.size()))].proof;
    } else {
      const auto& [m, pb] = corpus[rng.uniform(corpus.size())];
      proof = pb.proof;
      pub = pb.publics.to_vector();
      vk = &runner.batch_keys(m).vk;
      other = corpus[rng.uniform(corpus.size())].second.proof;
    }
    const auto orig_proof = proof;
    const auto orig_pub = pub;
    std::string kind;
    switch (rng.uniform(9)) {
      case 0: kind = "public+delta"; pub[rng.uniform(pub.size())] += Fr::random_nonzero(rng); break;
      case 1: kind = "public swap"; std::swap(pub[0], pub[1]); break;
      case 2: kind = "A+G1"; proof.a = (G1(proof.a.to_jacobian()) + G1::generator() * Fr::random_nonzero(rng)).to_affine(); break;
      case 3: kind = "B+G2"; proof.b = (G2(proof.b.to_jacobian()) + G2::generator() * Fr::random_nonzero(rng)).to_affine(); break;
      case 4: kind = "C+G1"; proof.c = (G1(proof.c.to_jacobian()) + G1::generator() * Fr::random_nonzero(rng)).to_affine(); break;
      case 5: kind = "negate A"; proof.a = (-G1(proof.a.to_jacobian())).to_affine(); break;
      case 6: kind = "foreign proof"; proof = other; break;
      case 7: kind = "swap A,C"; std::swap(proof.a, proof.c); break;
      default: {
        kind = "byte flip";
        auto bytes = proof.to_bytes();
        bytes[rng.uniform(bytes.size())] ^= static_cast<std::uint8_t>(1 + rng.uniform(255));
        try {
          proof = groth16::Proof::from_bytes(bytes);
        } catch (const IntegrityError&) {
          ++mutations;
          ++kinds[kind];
          continue;
        }
      }
    }
    if (proof == orig_proof && pub == orig_pub) continue;
    ++mutations;
    ++kinds[kind];
    if (verifies(*vk, pub, proof)) ++false_accepts;
  }
  {
    std::ostringstream d;
    d << mutations << " mutations (";
    bool first = true;
    for (const auto& [k, c] : kinds) d << (first ? "" : ", ") << k << " " << c, first = false;
    d << "), " << false_accepts << " false accepts";
    out.soundness = {false_accepts == 0 && mutations == 200, d.str()};
  }

  {
    std::ostringstream d;
    d << "proof sizes {";
    bool first = true;
    for (auto [s, c] : proof_sizes) d << (first ? "" : ",") << s << " bytes x" << c, first = false;
    std::set<std::size_t> small_large;
    for (const auto& [m, pb] : corpus) {
      if (m == opt.sizes.front() || m == opt.sizes.back()) small_large.insert(pb.proof.to_bytes().size());
    }
    d << "}; " << verifications << " verifications, pairings per verification {";
    first = true;
    for (auto p : pairing_values) d << (first ? "" : ",") << p, first = false;
    d << "}";
    out.succinct = {proof_sizes.size() == 1 && small_large.size() == 1 && wrong_pairings == 0 &&
                        verifications > 0,
                    d.str()};
  }
  return out;
}

std::string read_text(const std::filesystem::path& p) {
  auto b = read_file(p.string());
  return {b.begin(), b.end()};
}

// Criterion 10.
Result golden(const Options& opt, const std::filesystem::path& work) {
  std::ostringstream d;
  bool ok = true;
  const std::uint64_t gas = l1sim::gas_for_submission(2, Bytes(320, 0x01), l1sim::GasSchedule{});
  d << "gas example " << gas;
  ok = ok && gas == 224420;
  if (opt.cli.empty()) return {false, d.str() + "; no CLI path given"};
  auto run = [&](const std::string& args) {
    const std::string cmd = "\"" + opt.cli + "\" " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
  };
  const std::string cache = opt.cache_dir.empty() ? (work / "cache").string() : opt.cache_dir;
  for (const char* tag : {"a", "b"}) {
    const auto dir = work / (std::string("golden-") + tag);
    std::filesystem::remove_all(dir);
    ok = run("bench --scenario all --sizes 1,2 --tau-n 8..10 --reps 2 --depth 8 --seed golden --no-timing --out \"" +
             dir.string() + "\" --cache \"" + cache + "\"") && ok;
    ok = run("dump --circuit batch --m 4 --depth 8 --out \"" + (dir / "batch4.r1cs").string() + "\"") && ok;
    ok = run("dump --circuit withdrawal --depth 8 --out \"" + (dir / "withdrawal.r1cs").string() + "\"") && ok;
  }
  for (const char* f : {"report.csv", "report.json", "batch4.r1cs", "withdrawal.r1cs"}) {
    bool same = false;
    try {
      auto a = read_text(work / "golden-a" / f);
      auto b = read_text(work / "golden-b" / f);
      same = !a.empty() && a == b;
    } catch (const Error&) {
    }
    d << "; " << f << (same ? " identical" : " DIFFERS");
    ok = ok && same;
  }
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"zkrb acceptance run"};
  app.add_option("--cache", opt.cache_dir, "Cache directory for ceremony output and prepared powers");
  app.add_option("--out", opt.out_dir, "Directory for the acceptance benchmark report");
  app.add_option("--cli", opt.cli, "Path to the zkrb executable (golden checks)");
  app.add_option("--workers", opt.workers, "Worker threads");
  app.add_option("--reps", opt.reps, "Repetitions for shape medians");
  app.add_option("--batches", opt.batches, "Batches for the completeness run");
  app.add_option("--limit-minutes", opt.suite_limit_minutes, "Wall time limit for the whole run");
  CLI11_PARSE(app, argc, argv);
  if (opt.cache_dir.empty()) {
    if (const char* env = std::getenv("ZKRB_CACHE_DIR"); env && *env) opt.cache_dir = env;
  }
  const auto t0 = Clock::now();
  std::map<int, Result> results;
  std::vector<Measurement> report;
  const std::filesystem::path work = std::filesystem::absolute(opt.out_dir);
  std::filesystem::create_directories(work);

  auto guarded = [&](int id, const std::function<Result()>& fn) {
    try {
      results[id] = fn();
    } catch (const std::exception& e) {
      results[id] = {false, std::string("error: ") + e.what()};
    }
  };

  progress("algebra properties");
  guarded(3, algebra_properties);
  progress("QAP oracle");
  guarded(4, qap_oracle);
  progress("constraint linearity");
  guarded(5, [&] { return constraint_linearity(opt.sizes); });
  progress("conservation");
  guarded(9, conservation);
  progress("golden files");
  guarded(10, [&] { return golden(opt, work); });
  progress("tau scaling");
  guarded(7, [&] { return tau_scaling(opt, report); });
  try {
    auto p = pipeline(opt, report);
    results[1] = p.completeness;
    results[2] = p.soundness;
    results[6] = p.shapes;
    results[8] = p.succinct;
  } catch (const std::exception& e) {
    for (int id : {1, 2, 6, 8}) results[id] = {false, std::string("error: ") + e.what()};
  }
  const double minutes = std::chrono::duration<double>(Clock::now() - t0).count() / 60;
  results[1].detail += "; suite wall time " + fmt("%.1f", minutes) + " min on " +
                       std::to_string(opt.workers) + " worker(s)";
  if (minutes > opt.suite_limit_minutes) {
    results[1].pass = false;
    results[1].detail += " exceeds " + fmt("%.0f", opt.suite_limit_minutes) + " min";
  }
  if (!report.empty()) {
    for (auto f : {bench::ReportFormat::kCsv, bench::ReportFormat::kJson, bench::ReportFormat::kSvg}) {
      bench::emit_report(report, f, work);
    }
  }

  const char* names[] = {"",
                         "completeness",
                         "soundness smoke",
                         "algebra property suite",
                         "QAP oracle equivalence",
                         "constraint linearity",
                         "batch-size shape reproduction",
                         "tau scaling",
                         "constant proof succinctness",
                         "conservation",
                         "golden files"};
  int failed = 0;
  for (int id = 1; id <= 10; ++id) {
    const auto& r = results[id];
    std::printf("%s criterion %d (%s): %s\n", r.pass ? "PASS" : "FAIL", id, names[id], r.detail.c_str());
    failed += r.pass ? 0 : 1;
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
