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

#ifndef ZKRB_ROLLUP_POOL_HPP_
#define ZKRB_ROLLUP_POOL_HPP_

#include <cstdint>
#include <deque>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zkrb/rollup/state.hpp"

namespace zkrb::rollup {

/// A submission the pool refuses to queue.
class PoolRejected : public Error {
 public:
  using Error::Error;
};

using Ticket = std::uint64_t;

struct PoolEntry {
  Ticket ticket = 0;
  Tx tx;
};

/// Transaction as a JSON object {from, to, amount, nonce, secret}. Amount
/// and secret accept a JSON integer or a decimal string. The secret rides
/// along for the aggregator, so this format is for test harnesses only.
inline nlohmann::ordered_json tx_to_json(const Tx& tx) {
  nlohmann::ordered_json j;
  j["from"] = tx.from_index;
  j["to"] = tx.to_index;
  if (tx.amount_fits_u64()) j["amount"] = tx.amount_u64();
  else j["amount"] = tx.amount.to_decimal();
  j["nonce"] = tx.nonce;
  j["secret"] = tx.auth_secret.to_decimal();
  return j;
}

inline Tx tx_from_json(const nlohmann::json& j) {
  auto big = [](const nlohmann::json& v, const char* what) {
    if (v.is_number_unsigned()) return Uint256(v.get<std::uint64_t>());
    if (v.is_string()) return Uint256::from_decimal(v.get<std::string>());
    throw PoolRejected(std::string("field '") + what + "' must be a non-negative integer");
  };
  auto small = [](const nlohmann::json& v, const char* what) {
    if (!v.is_number_unsigned()) {
      throw PoolRejected(std::string("field '") + what + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
  };
  try {
    if (!j.is_object()) throw PoolRejected("transaction must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key != "from" && key != "to" && key != "amount" && key != "nonce" && key != "secret") {
        throw PoolRejected("unknown transaction field '" + key + "'");
      }
    }
    Tx tx;
    tx.from_index = small(j.at("from"), "from");
    tx.to_index = small(j.at("to"), "to");
    tx.amount = big(j.at("amount"), "amount");
    tx.nonce = small(j.at("nonce"), "nonce");
    Uint256 s = big(j.at("secret"), "secret");
    if (!(s < Fr::kModulus)) throw PoolRejected("secret exceeds the field modulus");
    tx.auth_secret = Fr::from_uint(s);
    return tx;
  } catch (const nlohmann::json::exception& e) {
    throw PoolRejected(std::string("malformed transaction: ") + e.what());
  } catch (const UsageError& e) {
    throw PoolRejected(std::string("malformed transaction: ") + e.what());
  }
}

/// In-memory FIFO of pending transactions. Submissions may come from any
/// thread; a (from, nonce) pair can be pending at most once.
class Pool {
 public:
  /// capacity bounds account indices; 0 disables the check.
  explicit Pool(std::size_t capacity = 0) : capacity_(capacity) {}

  Ticket submit(const Tx& tx) {
    if (!tx.amount_fits_u64()) throw PoolRejected("amount must be below 2^64");
    if (capacity_ != 0 && (tx.from_index >= capacity_ || tx.to_index >= capacity_)) {
      throw PoolRejected("account index out of range");
    }
    std::lock_guard lock(mu_);
    if (!pending_keys_.emplace(tx.from_index, tx.nonce).second) {
      throw PoolRejected("duplicate nonce " + std::to_string(tx.nonce) + " for account " +
                         std::to_string(tx.from_index));
    }
    const Ticket t = next_ticket_++;
    queue_.push_back({t, tx});
    return t;
  }

  Ticket submit_json_line(const std::string& line) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw PoolRejected(std::string("invalid JSON: ") + e.what());
    }
    return submit(tx_from_json(j));
  }

  struct LoadResult {
    std::vector<Ticket> accepted;
    std::vector<std::pair<std::size_t, std::string>> rejected;  // line number, reason
  };

  /// Submits one transaction per non-empty line.
  LoadResult submit_json_lines(std::istream& in) {
    LoadResult r;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        r.accepted.push_back(submit_json_line(line));
      } catch (const PoolRejected& e) {
        r.rejected.emplace_back(n, e.what());
      }
    }
    return r;
  }

  /// Pending transactions as JSON lines, oldest first.
  void write_json_lines(std::ostream& out) const {
    std::lock_guard lock(mu_);
    for (const auto& e : queue_) out << tx_to_json(e.tx).dump() << '\n';
  }

  std::optional<PoolEntry> peek() const {
    std::lock_guard lock(mu_);
    if (queue_.empty()) return std::nullopt;
    return queue_.front();
  }

  std::optional<PoolEntry> pop() {
    std::lock_guard lock(mu_);
    if (queue_.empty()) return std::nullopt;
    PoolEntry e = std::move(queue_.front());
    queue_.pop_front();
    pending_keys_.erase({e.tx.from_index, e.tx.nonce});
    return e;
  }

  std::vector<PoolEntry> snapshot() const {
    std::lock_guard lock(mu_);
    return {queue_.begin(), queue_.end()};
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return queue_.size();
  }
  bool empty() const { return size() == 0; }

 private:
  std::size_t capacity_;
  mutable std::mutex mu_;
  std::deque<PoolEntry> queue_;
  std::set<std::pair<std::size_t, std::uint64_t>> pending_keys_;
  Ticket next_ticket_ = 1;
};

}  // namespace zkrb::rollup

#endif  // ZKRB_ROLLUP_POOL_HPP_
