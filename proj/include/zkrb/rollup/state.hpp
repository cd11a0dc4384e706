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

#ifndef ZKRB_ROLLUP_STATE_HPP_
#define ZKRB_ROLLUP_STATE_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "zkrb/algebra/fields.hpp"
#include "zkrb/algebra/serialize.hpp"
#include "zkrb/common/bytes.hpp"
#include "zkrb/common/error.hpp"
#include "zkrb/r1cs/mimc.hpp"

namespace zkrb::rollup {

using algebra::Fr;
using algebra::Uint256;

inline constexpr unsigned kDefaultTreeDepth = 8;
inline constexpr unsigned kMaxTreeDepth = 24;

using algebra::fr_from_hex;
using algebra::fr_hex;

/// Public key of a secret: H(secret, 0).
inline Fr key_hash_of(const Fr& secret) { return r1cs::hash2(secret, Fr::zero()); }

struct Account {
  Fr key_hash;
  std::uint64_t balance = 0;
  std::uint64_t nonce = 0;

  /// H(key_hash, H(balance, nonce))
  Fr leaf_hash() const {
    return r1cs::hash2(key_hash, r1cs::hash2(Fr::from_u64(balance), Fr::from_u64(nonce)));
  }
  bool operator==(const Account&) const = default;
};

/// Dense binary Merkle tree of 2^depth accounts. Leaf index bit k selects the
/// child order at level k (bit set: the running node is the right child).
class StateTree {
 public:
  explicit StateTree(unsigned depth = kDefaultTreeDepth) : depth_(depth) {
    if (depth == 0 || depth > kMaxTreeDepth) {
      throw UsageError("state tree depth must be in [1, " + std::to_string(kMaxTreeDepth) + "]");
    }
    accounts_.resize(std::size_t{1} << depth);
    levels_.resize(depth + 1);
    Fr node = Account{}.leaf_hash();
    for (unsigned l = 0; l <= depth; ++l) {
      levels_[l].assign(std::size_t{1} << (depth - l), node);
      node = r1cs::hash2(node, node);
    }
  }

  unsigned depth() const { return depth_; }
  std::size_t capacity() const { return accounts_.size(); }
  const Fr& root() const { return levels_[depth_][0]; }
  const Account& account(std::size_t index) const { return accounts_.at(index); }
  const Fr& leaf(std::size_t index) const { return levels_[0].at(index); }

  void set_account(std::size_t index, const Account& a) {
    if (index >= accounts_.size()) throw UsageError("account index out of range");
    accounts_[index] = a;
    levels_[0][index] = a.leaf_hash();
    std::size_t i = index;
    for (unsigned l = 0; l < depth_; ++l) {
      std::size_t left = i & ~std::size_t{1};
      i >>= 1;
      levels_[l + 1][i] = r1cs::hash2(levels_[l][left], levels_[l][left + 1]);
    }
  }

  /// Sibling hashes from the leaf level upward.
  std::vector<Fr> path(std::size_t index) const {
    if (index >= accounts_.size()) throw UsageError("account index out of range");
    std::vector<Fr> out;
    out.reserve(depth_);
    std::size_t i = index;
    for (unsigned l = 0; l < depth_; ++l) {
      out.push_back(levels_[l][i ^ 1]);
      i >>= 1;
    }
    return out;
  }

  /// Root recomputed from a leaf and its path (out-of-circuit oracle).
  static Fr fold_path(Fr leaf, std::size_t index, std::span<const Fr> siblings) {
    for (const Fr& s : siblings) {
      leaf = (index & 1) ? r1cs::hash2(s, leaf) : r1cs::hash2(leaf, s);
      index >>= 1;
    }
    return leaf;
  }

  unsigned __int128 total_balance() const {
    unsigned __int128 sum = 0;
    for (const auto& a : accounts_) sum += a.balance;
    return sum;
  }

  /// Snapshot: depth, root, every non-empty account and all leaf hashes.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["depth"] = depth_;
    j["root"] = fr_hex(root());
    auto accounts = nlohmann::ordered_json::array();
    const Account empty{};
    for (std::size_t i = 0; i < accounts_.size(); ++i) {
      if (accounts_[i] == empty) continue;
      accounts.push_back({{"index", i},
                          {"key_hash", fr_hex(accounts_[i].key_hash)},
                          {"balance", accounts_[i].balance},
                          {"nonce", accounts_[i].nonce}});
    }
    j["accounts"] = std::move(accounts);
    auto leaves = nlohmann::ordered_json::array();
    for (const Fr& l : levels_[0]) leaves.push_back(fr_hex(l));
    j["leaves"] = std::move(leaves);
    return j;
  }

  static StateTree from_json(const nlohmann::json& j) {
    StateTree t(j.at("depth").get<unsigned>());
    for (const auto& a : j.at("accounts")) {
      t.set_account(a.at("index").get<std::size_t>(),
                    {fr_from_hex(a.at("key_hash").get<std::string>()),
                     a.at("balance").get<std::uint64_t>(), a.at("nonce").get<std::uint64_t>()});
    }
    if (j.contains("root") && fr_hex(t.root()) != j.at("root").get<std::string>()) {
      throw IntegrityError("state snapshot root does not match its accounts");
    }
    return t;
  }

 private:
  unsigned depth_;
  std::vector<Account> accounts_;
  std::vector<std::vector<Fr>> levels_;
};

/// L2 transfer. auth_secret travels with the transaction because the
/// aggregator checks key ownership inside the circuit.
struct Tx {
  std::size_t from_index = 0;
  std::size_t to_index = 0;
  Uint256 amount;
  std::uint64_t nonce = 0;
  Fr auth_secret;

  bool operator==(const Tx&) const = default;
  bool amount_fits_u64() const {
    return amount.limb[1] == 0 && amount.limb[2] == 0 && amount.limb[3] == 0;
  }
  std::uint64_t amount_u64() const { return amount.limb[0]; }
  /// Zero-amount self-transfer: changes nothing, not even the nonce.
  bool is_noop() const { return from_index == to_index && amount.is_zero(); }
};

enum class TxStatus {
  kOk,
  kIndexOutOfRange,
  kAmountTooLarge,
  kBadAuthorization,
  kNonceMismatch,
  kInsufficientBalance,
  kBalanceOverflow,
};

inline const char* tx_status_text(TxStatus s) {
  switch (s) {
    case TxStatus::kOk: return "ok";
    case TxStatus::kIndexOutOfRange: return "index out of range";
    case TxStatus::kAmountTooLarge: return "amount exceeds 64 bits";
    case TxStatus::kBadAuthorization: return "secret does not match sender key";
    case TxStatus::kNonceMismatch: return "nonce mismatch";
    case TxStatus::kInsufficientBalance: return "insufficient balance";
    case TxStatus::kBalanceOverflow: return "receiver balance overflow";
  }
  return "unknown";
}

/// Validity of tx against the current state. The authorization hash is the
/// costliest check and runs last.
inline TxStatus check_tx(const StateTree& state, const Tx& tx) {
  if (tx.from_index >= state.capacity() || tx.to_index >= state.capacity()) {
    return TxStatus::kIndexOutOfRange;
  }
  if (!tx.amount_fits_u64()) return TxStatus::kAmountTooLarge;
  const Account& from = state.account(tx.from_index);
  const std::uint64_t amount = tx.amount_u64();
  if (tx.nonce != from.nonce) return TxStatus::kNonceMismatch;
  if (from.balance < amount) return TxStatus::kInsufficientBalance;
  if (tx.from_index != tx.to_index &&
      state.account(tx.to_index).balance > std::numeric_limits<std::uint64_t>::max() - amount) {
    return TxStatus::kBalanceOverflow;
  }
  if (!(key_hash_of(tx.auth_secret) == from.key_hash)) return TxStatus::kBadAuthorization;
  return TxStatus::kOk;
}

/// Applies a transaction already accepted by check_tx.
inline void apply_tx_unchecked(StateTree& state, const Tx& tx) {
  if (tx.is_noop()) return;
  const std::uint64_t amount = tx.amount_u64();
  Account from = state.account(tx.from_index);
  from.balance -= amount;
  from.nonce += 1;
  state.set_account(tx.from_index, from);
  Account to = state.account(tx.to_index);
  to.balance += amount;
  state.set_account(tx.to_index, to);
}

}  // namespace zkrb::rollup

#endif  // ZKRB_ROLLUP_STATE_HPP_
