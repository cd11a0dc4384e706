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

#ifndef ZKRB_GROTH16_PREPARED_HPP_
#define ZKRB_GROTH16_PREPARED_HPP_

#include <bit>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zkrb/algebra/fft.hpp"
#include "zkrb/algebra/group_fft.hpp"
#include "zkrb/groth16/ceremony.hpp"

namespace zkrb::groth16 {

/// Smallest accumulator size able to serve a domain of the given size. The
/// quotient query needs tau^(2N - 2), so N may be at most 2^(n - 1).
inline unsigned required_tau_n(std::size_t domain_size) {
  const auto log_n = static_cast<unsigned>(std::countr_zero(std::bit_ceil(domain_size)));
  return std::max(kMinTauN, log_n + 1);
}

inline void check_capacity(const TauAccumulator& acc, std::size_t domain_size) {
  const unsigned need = required_tau_n(domain_size);
  if (acc.n < need) {
    throw CapacityError("circuit domain of size " + std::to_string(domain_size) +
                            " needs a tau accumulator with n >= " + std::to_string(need) +
                            ", have n = " + std::to_string(acc.n),
                        need);
  }
}

/// Circuit-independent material derived from an accumulator for one domain
/// size: Lagrange basis points L_k(tau) in both groups.
struct PreparedPowers {
  Digest accumulator;
  std::size_t domain_size = 0;
  std::vector<G1Affine> lagrange_g1;
  std::vector<G2Affine> lagrange_g2;

  static constexpr std::string_view kMagic = "ZKRBPREP";
  static constexpr std::uint32_t kVersion = 1;

  /// magic | version u32 | accumulator fingerprint (32) | N u64 | raw G1
  /// points | raw G2 points | SHA-256 of everything before it.
  Bytes to_bytes() const {
    ByteWriter w;
    w.reserve(56 + domain_size * (algebra::kG1RawBytes + algebra::kG2RawBytes) + 32);
    w.put(kMagic);
    w.put_u32(kVersion);
    w.put(accumulator);
    w.put_u64(domain_size);
    for (const auto& p : lagrange_g1) algebra::put_raw(w, p);
    for (const auto& p : lagrange_g2) algebra::put_raw(w, p);
    auto d = sha256(w.bytes());
    w.put(d);
    return std::move(w).bytes();
  }

  /// Cache files are checksummed; points are checked against the curve
  /// equation but not re-verified against the accumulator.
  static PreparedPowers from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 32) throw IntegrityError("prepared powers file truncated");
    auto body = bytes.first(bytes.size() - 32);
    auto sum = sha256(body);
    if (!std::equal(sum.begin(), sum.end(), bytes.end() - 32)) {
      throw IntegrityError("prepared powers checksum mismatch");
    }
    ByteReader r(body);
    r.expect(kMagic);
    if (r.get_u32() != kVersion) throw IntegrityError("unsupported prepared powers version");
    PreparedPowers p;
    auto fp = r.take(32);
    std::copy(fp.begin(), fp.end(), p.accumulator.begin());
    p.domain_size = r.get_u64();
    if (p.domain_size == 0 || !std::has_single_bit(p.domain_size) ||
        r.remaining() != p.domain_size * (algebra::kG1RawBytes + algebra::kG2RawBytes)) {
      throw IntegrityError("prepared powers length does not match header");
    }
    p.lagrange_g1.resize(p.domain_size);
    p.lagrange_g2.resize(p.domain_size);
    for (auto& x : p.lagrange_g1) x = algebra::get_g1_raw(r, false);
    for (auto& x : p.lagrange_g2) x = algebra::get_g2_raw(r, false);
    return p;
  }
};

/// Computes the Lagrange basis by an inverse FFT over the group elements.
inline PreparedPowers compute_prepared(const TauAccumulator& acc, std::size_t domain_size,
                                       unsigned workers = 1) {
  check_capacity(acc, domain_size);
  algebra::EvaluationDomain domain(domain_size);
  PreparedPowers p;
  p.accumulator = acc.fingerprint();
  p.domain_size = domain_size;
  {
    auto l = algebra::lagrange_from_powers<algebra::G1Params>(acc.g1, domain, workers);
    p.lagrange_g1 = algebra::batch_normalize<algebra::G1Params>(l);
  }
  {
    auto l = algebra::lagrange_from_powers<algebra::G2Params>(acc.g2, domain, workers);
    p.lagrange_g2 = algebra::batch_normalize<algebra::G2Params>(l);
  }
  return p;
}

/// Process-wide cache of prepared powers, optionally backed by a directory.
/// The directory defaults to ZKRB_CACHE_DIR when set.
class PreparedCache {
 public:
  static PreparedCache& instance() {
    static PreparedCache cache;
    return cache;
  }

  void set_directory(std::optional<std::string> dir) {
    std::lock_guard lock(mu_);
    dir_ = std::move(dir);
  }
  std::optional<std::string> directory() const {
    std::lock_guard lock(mu_);
    return dir_;
  }

  /// Returns the prepared powers for (acc, domain_size), computing and
  /// storing them on a miss.
  std::shared_ptr<const PreparedPowers> get(const TauAccumulator& acc, std::size_t domain_size,
                                            unsigned workers = 1) {
    check_capacity(acc, domain_size);
    const auto key = std::make_pair(acc.fingerprint(), domain_size);
    std::lock_guard lock(mu_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    std::optional<std::filesystem::path> file;
    if (dir_) file = std::filesystem::path(*dir_) / file_name(key.first, domain_size);
    std::shared_ptr<const PreparedPowers> value;
    if (file && std::filesystem::exists(*file)) {
      try {
        auto p = PreparedPowers::from_bytes(read_file(file->string()));
        if (p.accumulator == key.first && p.domain_size == domain_size) {
          value = std::make_shared<const PreparedPowers>(std::move(p));
        }
      } catch (const IntegrityError&) {
        value.reset();
      }
    }
    if (!value) {
      value = std::make_shared<const PreparedPowers>(compute_prepared(acc, domain_size, workers));
      if (file) {
        std::filesystem::create_directories(file->parent_path());
        auto tmp = *file;
        tmp += ".tmp";
        write_file(tmp.string(), value->to_bytes());
        std::filesystem::rename(tmp, *file);
      }
    }
    entries_.emplace(key, value);
    return value;
  }

  void clear() {
    std::lock_guard lock(mu_);
    entries_.clear();
  }

 private:
  PreparedCache() {
    if (const char* env = std::getenv("ZKRB_CACHE_DIR"); env && *env) dir_ = env;
  }

  static std::string file_name(const Digest& fp, std::size_t n) {
    return "prepared-" + to_hex(fp).substr(0, 16) + "-" + std::to_string(n) + ".bin";
  }

  mutable std::mutex mu_;
  std::optional<std::string> dir_;
  std::map<std::pair<Digest, std::size_t>, std::shared_ptr<const PreparedPowers>> entries_;
};

}  // namespace zkrb::groth16

#endif  // ZKRB_GROTH16_PREPARED_HPP_
