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

#ifndef ZKRB_ALGEBRA_SERIALIZE_HPP_
#define ZKRB_ALGEBRA_SERIALIZE_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "zkrb/algebra/bn254.hpp"
#include "zkrb/common/bytes.hpp"
#include "zkrb/common/error.hpp"

namespace zkrb::algebra {

inline constexpr std::size_t kFieldBytes = 32;
inline constexpr std::size_t kG1CompressedBytes = 33;
inline constexpr std::size_t kG2CompressedBytes = 65;
inline constexpr std::size_t kG1RawBytes = 64;
inline constexpr std::size_t kG2RawBytes = 128;

inline constexpr std::uint8_t kFlagOddY = 0x01;
inline constexpr std::uint8_t kFlagInfinity = 0x02;

template <class F>
void put_field(ByteWriter& w, const F& x) {
  w.put(x.to_bytes());
}
inline void put_field(ByteWriter& w, const Fp2& x) {
  w.put(x.c0.to_bytes());
  w.put(x.c1.to_bytes());
}

template <class F>
F get_field(ByteReader& r) {
  if constexpr (std::is_same_v<F, Fp2>) {
    Fp c0 = get_field<Fp>(r);
    Fp c1 = get_field<Fp>(r);
    return {c0, c1};
  } else {
    return F::from_bytes(r.take(kFieldBytes).template first<kFieldBytes>());
  }
}

namespace detail {

template <class Params>
void put_compressed(ByteWriter& w, const AffinePoint<Params>& p) {
  using Field = typename Params::Field;
  if (p.infinity) {
    put_field(w, Field::zero());
    w.put_u8(kFlagInfinity);
    return;
  }
  put_field(w, p.x);
  w.put_u8(p.y.is_odd() ? kFlagOddY : 0);
}

template <class Params>
AffinePoint<Params> get_compressed(ByteReader& r, bool check_subgroup) {
  using Field = typename Params::Field;
  Field x = get_field<Field>(r);
  std::uint8_t flags = r.get_u8();
  if ((flags & ~(kFlagOddY | kFlagInfinity)) != 0) {
    throw IntegrityError("point encoding has unknown flag bits");
  }
  if (flags & kFlagInfinity) {
    if (flags != kFlagInfinity || !x.is_zero()) {
      throw IntegrityError("non-canonical encoding of the identity");
    }
    return AffinePoint<Params>::identity();
  }
  auto y = (x.square() * x + Params::b()).sqrt();
  if (!y) throw IntegrityError("point not on curve");
  if (y->is_odd() != ((flags & kFlagOddY) != 0)) *y = -*y;
  AffinePoint<Params> p{x, *y, false};
  if (check_subgroup && !in_subgroup(p)) throw IntegrityError("point not in the prime-order subgroup");
  return p;
}

template <class Params>
void put_raw(ByteWriter& w, const AffinePoint<Params>& p) {
  using Field = typename Params::Field;
  // (0, 0) is not on either curve and stands for the identity.
  put_field(w, p.infinity ? Field::zero() : p.x);
  put_field(w, p.infinity ? Field::zero() : p.y);
}

template <class Params>
AffinePoint<Params> get_raw(ByteReader& r, bool check_subgroup) {
  using Field = typename Params::Field;
  Field x = get_field<Field>(r);
  Field y = get_field<Field>(r);
  if (x.is_zero() && y.is_zero()) return AffinePoint<Params>::identity();
  AffinePoint<Params> p{x, y, false};
  if (!p.is_on_curve()) throw IntegrityError("point not on curve");
  if (check_subgroup && !in_subgroup(p)) {
    throw IntegrityError("point not in the prime-order subgroup");
  }
  return p;
}

}  // namespace detail

inline void put_compressed(ByteWriter& w, const G1Affine& p) { detail::put_compressed(w, p); }
inline void put_compressed(ByteWriter& w, const G2Affine& p) { detail::put_compressed(w, p); }
inline G1Affine get_g1_compressed(ByteReader& r, bool check_subgroup = true) {
  return detail::get_compressed<G1Params>(r, check_subgroup);
}
inline G2Affine get_g2_compressed(ByteReader& r, bool check_subgroup = true) {
  return detail::get_compressed<G2Params>(r, check_subgroup);
}

inline void put_raw(ByteWriter& w, const G1Affine& p) { detail::put_raw(w, p); }
inline void put_raw(ByteWriter& w, const G2Affine& p) { detail::put_raw(w, p); }
inline G1Affine get_g1_raw(ByteReader& r, bool check_subgroup = true) {
  return detail::get_raw<G1Params>(r, check_subgroup);
}
inline G2Affine get_g2_raw(ByteReader& r, bool check_subgroup = true) {
  return detail::get_raw<G2Params>(r, check_subgroup);
}

/// Single-value helpers for tests and text formats.
inline Bytes compress(const G1Affine& p) {
  ByteWriter w;
  put_compressed(w, p);
  return std::move(w).bytes();
}
inline Bytes compress(const G2Affine& p) {
  ByteWriter w;
  put_compressed(w, p);
  return std::move(w).bytes();
}
inline G1Affine decompress_g1(std::span<const std::uint8_t> in) {
  if (in.size() != kG1CompressedBytes) throw IntegrityError("G1 encoding must be 33 bytes");
  ByteReader r(in);
  return get_g1_compressed(r);
}
inline G2Affine decompress_g2(std::span<const std::uint8_t> in) {
  if (in.size() != kG2CompressedBytes) throw IntegrityError("G2 encoding must be 65 bytes");
  ByteReader r(in);
  return get_g2_compressed(r);
}
inline Bytes field_bytes(const Fr& x) {
  auto a = x.to_bytes();
  return Bytes(a.begin(), a.end());
}
inline Fr fr_from_bytes(std::span<const std::uint8_t> in) {
  if (in.size() != kFieldBytes) throw IntegrityError("field encoding must be 32 bytes");
  return Fr::from_bytes(in.first<kFieldBytes>());
}

/// Lowercase hex of the 32-byte little-endian encoding.
inline std::string fr_hex(const Fr& x) { return to_hex(x.to_bytes()); }
inline Fr fr_from_hex(std::string_view hex) {
  Bytes b = from_hex(hex);
  return fr_from_bytes(b);
}

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_SERIALIZE_HPP_
