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

#ifndef ZKRB_GROTH16_KEYS_HPP_
#define ZKRB_GROTH16_KEYS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "zkrb/algebra/serialize.hpp"
#include "zkrb/common/bytes.hpp"
#include "zkrb/common/error.hpp"

namespace zkrb::groth16 {

using algebra::Fr;
using algebra::G1;
using algebra::G1Affine;
using algebra::G2;
using algebra::G2Affine;

/// Whether decoding re-checks subgroup membership. Trusted is for files this
/// process wrote itself; curve membership is always checked.
enum class PointCheck { kFull, kTrusted };

namespace detail {

inline void put_g1s(ByteWriter& w, const std::vector<G1Affine>& v) {
  w.put_u64(v.size());
  for (const auto& p : v) algebra::put_compressed(w, p);
}
inline void put_g2s(ByteWriter& w, const std::vector<G2Affine>& v) {
  w.put_u64(v.size());
  for (const auto& p : v) algebra::put_compressed(w, p);
}
inline std::size_t get_count(ByteReader& r, std::size_t item_bytes) {
  std::uint64_t n = r.get_u64();
  if (n > r.remaining() / item_bytes) throw IntegrityError("point list length exceeds input");
  return static_cast<std::size_t>(n);
}
inline std::vector<G1Affine> get_g1s(ByteReader& r, PointCheck check) {
  std::vector<G1Affine> v(get_count(r, algebra::kG1CompressedBytes));
  for (auto& p : v) p = algebra::get_g1_compressed(r, check == PointCheck::kFull);
  return v;
}
inline std::vector<G2Affine> get_g2s(ByteReader& r, PointCheck check) {
  std::vector<G2Affine> v(get_count(r, algebra::kG2CompressedBytes));
  for (auto& p : v) p = algebra::get_g2_compressed(r, check == PointCheck::kFull);
  return v;
}

}  // namespace detail

struct VerifyingKey {
  G1Affine alpha_g1;
  G2Affine beta_g2;
  G2Affine gamma_g2;
  G2Affine delta_g2;
  /// One point per public input, the constant one first.
  std::vector<G1Affine> ic;

  std::size_t num_public() const { return ic.empty() ? 0 : ic.size() - 1; }

  static constexpr std::string_view kMagic = "ZKRBVKEY";
  static constexpr std::uint32_t kVersion = 1;

  Bytes to_bytes() const {
    ByteWriter w;
    w.put(kMagic);
    w.put_u32(kVersion);
    algebra::put_compressed(w, alpha_g1);
    algebra::put_compressed(w, beta_g2);
    algebra::put_compressed(w, gamma_g2);
    algebra::put_compressed(w, delta_g2);
    detail::put_g1s(w, ic);
    return std::move(w).bytes();
  }
  static VerifyingKey from_bytes(std::span<const std::uint8_t> bytes,
                                 PointCheck check = PointCheck::kFull) {
    ByteReader r(bytes);
    r.expect(kMagic);
    if (r.get_u32() != kVersion) throw IntegrityError("unsupported verifying key version");
    const bool full = check == PointCheck::kFull;
    VerifyingKey vk;
    vk.alpha_g1 = algebra::get_g1_compressed(r, full);
    vk.beta_g2 = algebra::get_g2_compressed(r, full);
    vk.gamma_g2 = algebra::get_g2_compressed(r, full);
    vk.delta_g2 = algebra::get_g2_compressed(r, full);
    vk.ic = detail::get_g1s(r, check);
    if (!r.done()) throw IntegrityError("trailing bytes after verifying key");
    if (vk.ic.empty()) throw IntegrityError("verifying key has no input points");
    return vk;
  }
  void save(const std::string& path) const { write_file(path, to_bytes()); }
  static VerifyingKey load(const std::string& path, PointCheck check = PointCheck::kFull) {
    return from_bytes(read_file(path), check);
  }
  bool operator==(const VerifyingKey&) const = default;
};

struct ProvingKey {
  VerifyingKey vk;
  G1Affine beta_g1;
  G1Affine delta_g1;
  /// Per variable: u_i(tau), v_i(tau) in both groups.
  std::vector<G1Affine> a_query;
  std::vector<G1Affine> b_g1_query;
  std::vector<G2Affine> b_g2_query;
  /// tau^j * Z(tau) / delta for j < N - 1.
  std::vector<G1Affine> h_query;
  /// (beta u_i + alpha v_i + w_i)(tau) / delta for private variables.
  std::vector<G1Affine> l_query;
  std::size_t domain_size = 0;

  std::size_t num_variables() const { return a_query.size(); }
  std::size_t num_public() const { return vk.num_public(); }

  static constexpr std::string_view kMagic = "ZKRBPKEY";
  static constexpr std::uint32_t kVersion = 1;

  Bytes to_bytes() const {
    ByteWriter w;
    w.put(kMagic);
    w.put_u32(kVersion);
    w.put_u64(domain_size);
    w.put(vk.to_bytes());
    algebra::put_compressed(w, beta_g1);
    algebra::put_compressed(w, delta_g1);
    detail::put_g1s(w, a_query);
    detail::put_g1s(w, b_g1_query);
    detail::put_g2s(w, b_g2_query);
    detail::put_g1s(w, h_query);
    detail::put_g1s(w, l_query);
    return std::move(w).bytes();
  }
  static ProvingKey from_bytes(std::span<const std::uint8_t> bytes,
                               PointCheck check = PointCheck::kFull) {
    ByteReader r(bytes);
    r.expect(kMagic);
    if (r.get_u32() != kVersion) throw IntegrityError("unsupported proving key version");
    ProvingKey pk;
    pk.domain_size = static_cast<std::size_t>(r.get_u64());
    {
      // Embedded verifying key: parse in place to find its length.
      ByteReader vr(bytes.subspan(bytes.size() - r.remaining()));
      vr.expect(VerifyingKey::kMagic);
      vr.get_u32();
      vr.take(algebra::kG1CompressedBytes + 3 * algebra::kG2CompressedBytes);
      auto n = detail::get_count(vr, algebra::kG1CompressedBytes);
      const std::size_t len = 12 + algebra::kG1CompressedBytes + 3 * algebra::kG2CompressedBytes +
                              8 + n * algebra::kG1CompressedBytes;
      pk.vk = VerifyingKey::from_bytes(r.take(len), check);
    }
    const bool full = check == PointCheck::kFull;
    pk.beta_g1 = algebra::get_g1_compressed(r, full);
    pk.delta_g1 = algebra::get_g1_compressed(r, full);
    pk.a_query = detail::get_g1s(r, check);
    pk.b_g1_query = detail::get_g1s(r, check);
    pk.b_g2_query = detail::get_g2s(r, check);
    pk.h_query = detail::get_g1s(r, check);
    pk.l_query = detail::get_g1s(r, check);
    if (!r.done()) throw IntegrityError("trailing bytes after proving key");
    const std::size_t nv = pk.a_query.size();
    if (pk.b_g1_query.size() != nv || pk.b_g2_query.size() != nv ||
        pk.l_query.size() + pk.vk.ic.size() != nv || pk.domain_size == 0 ||
        pk.h_query.size() + 1 != pk.domain_size) {
      throw IntegrityError("proving key sections have inconsistent sizes");
    }
    return pk;
  }
  void save(const std::string& path) const { write_file(path, to_bytes()); }
  static ProvingKey load(const std::string& path, PointCheck check = PointCheck::kFull) {
    return from_bytes(read_file(path), check);
  }
};

inline constexpr std::size_t kProofBytes =
    2 * algebra::kG1CompressedBytes + algebra::kG2CompressedBytes;

struct Proof {
  G1Affine a;
  G2Affine b;
  G1Affine c;

  /// A | B | C compressed: 131 bytes for every circuit.
  Bytes to_bytes() const {
    ByteWriter w;
    w.reserve(kProofBytes);
    algebra::put_compressed(w, a);
    algebra::put_compressed(w, b);
    algebra::put_compressed(w, c);
    return std::move(w).bytes();
  }
  static Proof from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kProofBytes) {
      throw IntegrityError("proof must be " + std::to_string(kProofBytes) + " bytes");
    }
    ByteReader r(bytes);
    Proof p;
    p.a = algebra::get_g1_compressed(r);
    p.b = algebra::get_g2_compressed(r);
    p.c = algebra::get_g1_compressed(r);
    return p;
  }
  bool operator==(const Proof&) const = default;
};

/// {"a", "b", "c": compressed points as lowercase hex, "public_inputs":
/// field elements as hex of their 32-byte little-endian encoding}.
inline nlohmann::ordered_json proof_to_json(const Proof& proof, std::span<const Fr> publics) {
  nlohmann::ordered_json j;
  j["a"] = to_hex(algebra::compress(proof.a));
  j["b"] = to_hex(algebra::compress(proof.b));
  j["c"] = to_hex(algebra::compress(proof.c));
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : publics) arr.push_back(algebra::fr_hex(x));
  j["public_inputs"] = std::move(arr);
  return j;
}

struct ProofWithInputs {
  Proof proof;
  std::vector<Fr> public_inputs;
};

inline ProofWithInputs proof_from_json(const nlohmann::json& j) {
  try {
    ProofWithInputs out;
    out.proof.a = algebra::decompress_g1(from_hex(j.at("a").get<std::string>()));
    out.proof.b = algebra::decompress_g2(from_hex(j.at("b").get<std::string>()));
    out.proof.c = algebra::decompress_g1(from_hex(j.at("c").get<std::string>()));
    for (const auto& x : j.at("public_inputs")) {
      out.public_inputs.push_back(algebra::fr_from_hex(x.get<std::string>()));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw IntegrityError(std::string("malformed proof json: ") + e.what());
  }
}

}  // namespace zkrb::groth16

#endif  // ZKRB_GROTH16_KEYS_HPP_
