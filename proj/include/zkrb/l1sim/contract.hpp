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

#ifndef ZKRB_L1SIM_CONTRACT_HPP_
#define ZKRB_L1SIM_CONTRACT_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "zkrb/circuits/batch.hpp"
#include "zkrb/circuits/withdrawal.hpp"
#include "zkrb/groth16/keys.hpp"
#include "zkrb/groth16/verifier.hpp"
#include "zkrb/l1sim/gas.hpp"

namespace zkrb::l1sim {

using algebra::Fr;

inline constexpr const char* kReasonRootMismatch = "root mismatch";
inline constexpr const char* kReasonProofInvalid = "proof invalid";
inline constexpr const char* kReasonNullifierSpent = "nullifier spent";
inline constexpr const char* kReasonUnknownRoot = "unknown root";

struct Receipt {
  bool accepted = false;
  std::uint64_t gas_used = 0;
  std::size_t calldata_bytes = 0;
  std::optional<std::string> reason;
  std::optional<std::uint64_t> batch_seq;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["accepted"] = accepted;
    j["gas_used"] = gas_used;
    j["calldata_bytes"] = calldata_bytes;
    j["reason"] = reason ? nlohmann::ordered_json(*reason) : nlohmann::ordered_json(nullptr);
    j["batch_seq"] = batch_seq ? nlohmann::ordered_json(*batch_seq) : nlohmann::ordered_json(nullptr);
    return j;
  }
  bool operator==(const Receipt&) const = default;
};

inline void write_receipt_line(std::ostream& out, const Receipt& r) { out << r.to_json().dump() << '\n'; }

/// Verifier call payload: proof bytes followed by the public inputs.
inline Bytes submission_calldata(const groth16::Proof& proof, std::span<const Fr> publics,
                                 std::span<const std::uint8_t> extra = {}) {
  ByteWriter w;
  w.put(proof.to_bytes());
  for (const auto& x : publics) w.put(x.to_bytes());
  w.put(extra);
  return std::move(w).bytes();
}

struct VerifiedBatch {
  std::uint64_t batch_seq = 0;
  Fr old_root;
  Fr new_root;
};

/// Native state machine standing in for the on-chain rollup verifier.
/// Submissions are processed one at a time; every outcome is a receipt.
class RollupContract {
 public:
  static RollupContract deploy(groth16::VerifyingKey vk_batch, groth16::VerifyingKey vk_withdrawal,
                               const Fr& genesis_root) {
    return RollupContract(std::move(vk_batch), std::move(vk_withdrawal), genesis_root);
  }

  const Fr& current_root() const { return current_root_; }
  const Fr& genesis_root() const { return genesis_root_; }
  const std::vector<VerifiedBatch>& verified_batches() const { return verified_; }
  const std::set<std::string>& spent_nullifiers() const { return spent_; }

  /// extra_calldata models posting transaction data alongside the proof.
  Receipt submit_batch(const groth16::Proof& proof, const circuits::BatchPublicInputs& publics,
                       const GasSchedule& schedule, std::optional<std::uint64_t> batch_seq = {},
                       std::span<const std::uint8_t> extra_calldata = {}) {
    const auto pub = publics.to_vector();
    Bytes calldata = submission_calldata(proof, pub, extra_calldata);
    Receipt r;
    r.calldata_bytes = calldata.size();
    r.gas_used = gas_for_submission(pub.size(), calldata, schedule);
    r.batch_seq = batch_seq.value_or(verified_.size());
    if (!(publics.old_state_root == current_root_)) {
      r.reason = kReasonRootMismatch;
    } else if (!verify_quiet(vk_batch_, pub, proof)) {
      r.reason = kReasonProofInvalid;
    } else {
      r.accepted = true;
      verified_.push_back({*r.batch_seq, publics.old_state_root, publics.new_state_root});
      known_roots_.insert(algebra::fr_hex(publics.new_state_root));
      current_root_ = publics.new_state_root;
    }
    return r;
  }

  Receipt submit_withdrawal(const groth16::Proof& proof,
                            const circuits::WithdrawalPublicInputs& publics,
                            const GasSchedule& schedule) {
    const auto pub = publics.to_vector();
    Bytes calldata = submission_calldata(proof, pub);
    Receipt r;
    r.calldata_bytes = calldata.size();
    r.gas_used = gas_for_submission(pub.size(), calldata, schedule);
    const std::string nullifier = algebra::fr_hex(publics.nullifier);
    if (!known_roots_.count(algebra::fr_hex(publics.state_root))) {
      r.reason = kReasonUnknownRoot;
    } else if (spent_.count(nullifier)) {
      r.reason = kReasonNullifierSpent;
    } else if (!verify_quiet(vk_withdrawal_, pub, proof)) {
      r.reason = kReasonProofInvalid;
    } else {
      r.accepted = true;
      spent_.insert(nullifier);
    }
    return r;
  }

  /// Submission in the JSON proof format; malformed input is rejected as an
  /// invalid proof, gas-metered on the bytes that could be decoded.
  Receipt submit_batch_json(const nlohmann::json& j, const GasSchedule& schedule,
                            std::optional<std::uint64_t> batch_seq = {}) {
    try {
      auto p = groth16::proof_from_json(j);
      if (p.public_inputs.size() != 2) throw IntegrityError("batch submissions carry 2 public inputs");
      return submit_batch(p.proof, {p.public_inputs[0], p.public_inputs[1]}, schedule, batch_seq);
    } catch (const IntegrityError&) {
      Receipt r;
      r.gas_used = gas_for_submission(0, {}, schedule);
      r.reason = kReasonProofInvalid;
      r.batch_seq = batch_seq.value_or(verified_.size());
      return r;
    }
  }

 private:
  RollupContract(groth16::VerifyingKey vk_batch, groth16::VerifyingKey vk_withdrawal, const Fr& genesis)
      : vk_batch_(std::move(vk_batch)),
        vk_withdrawal_(std::move(vk_withdrawal)),
        genesis_root_(genesis),
        current_root_(genesis) {
    known_roots_.insert(algebra::fr_hex(genesis));
  }

  static bool verify_quiet(const groth16::VerifyingKey& vk, std::span<const Fr> pub,
                           const groth16::Proof& proof) {
    try {
      return groth16::verify(vk, pub, proof);
    } catch (const UsageError&) {
      return false;
    }
  }

  groth16::VerifyingKey vk_batch_;
  groth16::VerifyingKey vk_withdrawal_;
  Fr genesis_root_;
  Fr current_root_;
  std::vector<VerifiedBatch> verified_;
  std::set<std::string> known_roots_;
  std::set<std::string> spent_;
};

}  // namespace zkrb::l1sim

#endif  // ZKRB_L1SIM_CONTRACT_HPP_
