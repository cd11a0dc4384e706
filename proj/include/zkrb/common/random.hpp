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

#ifndef ZKRB_COMMON_RANDOM_HPP_
#define ZKRB_COMMON_RANDOM_HPP_

#include <openssl/crypto.h>

#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "zkrb/common/sha256.hpp"

namespace zkrb {

inline void secure_zero(void* p, std::size_t n) { OPENSSL_cleanse(p, n); }

/// Holds a value whose bytes are wiped on destruction. Used for toxic waste
/// (ceremony and setup secrets, prover blinding factors).
template <class T>
class Zeroizing {
 public:
  Zeroizing() = default;
  explicit Zeroizing(const T& v) : value_(v) {}
  Zeroizing(const Zeroizing&) = delete;
  Zeroizing& operator=(const Zeroizing&) = delete;
  ~Zeroizing() { secure_zero(&value_, sizeof(T)); }

  T& operator*() { return value_; }
  const T& operator*() const { return value_; }
  T* operator->() { return &value_; }
  const T* operator->() const { return &value_; }

 private:
  T value_{};
};

/// SHA-256 in counter mode. Deterministic for a given seed; the seed is wiped
/// on destruction.
class Drbg {
 public:
  explicit Drbg(const Digest& seed) : seed_(seed) {}
  explicit Drbg(std::string_view seed) : seed_(sha256(seed)) {}
  Drbg(const Drbg&) = delete;
  Drbg& operator=(const Drbg&) = delete;
  ~Drbg() {
    secure_zero(seed_.data(), seed_.size());
    secure_zero(block_.data(), block_.size());
  }

  void fill(std::span<std::uint8_t> out) {
    for (auto& b : out) {
      if (used_ == block_.size()) refill();
      b = block_[used_++];
    }
  }

  std::uint64_t next_u64() {
    std::uint8_t b[8];
    fill(b);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = v << 8 | b[i];
    return v;
  }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t uniform(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      std::uint64_t v = next_u64();
      if (v < limit) return v % bound;
    }
  }

 private:
  void refill() {
    block_ = Sha256().update(seed_).update_u64(counter_++).finish();
    used_ = 0;
  }

  Digest seed_;
  Digest block_{};
  std::size_t used_ = 32;
  std::uint64_t counter_ = 0;
};

/// Process-wide randomness policy. With a deterministic seed set (from the
/// ZKRB_DETERMINISTIC_SEED environment variable or set_deterministic_seed),
/// system entropy is never mixed in and every derived seed is a pure function
/// of (seed, label, caller entropy).
class RandomnessPolicy {
 public:
  static RandomnessPolicy& instance() {
    static RandomnessPolicy policy;
    return policy;
  }

  void set_deterministic_seed(std::optional<std::string> seed) {
    std::lock_guard lock(mu_);
    seed_ = std::move(seed);
  }
  std::optional<std::string> deterministic_seed() const {
    std::lock_guard lock(mu_);
    return seed_;
  }

  Digest derive(std::string_view label, std::span<const std::uint8_t> entropy) {
    std::lock_guard lock(mu_);
    Sha256 h;
    h.update("zkrb/seed/v1").update_u64(label.size()).update(label);
    h.update_u64(entropy.size()).update(entropy);
    if (seed_) {
      h.update("deterministic").update_u64(seed_->size()).update(*seed_);
    } else {
      std::random_device rd;
      std::uint8_t sys[32];
      for (std::size_t i = 0; i < sizeof(sys); i += 4) {
        std::uint32_t v = rd();
        for (int j = 0; j < 4; ++j) sys[i + j] = static_cast<std::uint8_t>(v >> (8 * j));
      }
      h.update(sys);
      secure_zero(sys, sizeof(sys));
    }
    return h.finish();
  }

 private:
  RandomnessPolicy() {
    if (const char* env = std::getenv("ZKRB_DETERMINISTIC_SEED"); env && *env) {
      seed_ = env;
    }
  }

  mutable std::mutex mu_;
  std::optional<std::string> seed_;
};

inline Digest derive_seed(std::string_view label,
                          std::span<const std::uint8_t> entropy) {
  return RandomnessPolicy::instance().derive(label, entropy);
}

}  // namespace zkrb

#endif  // ZKRB_COMMON_RANDOM_HPP_
