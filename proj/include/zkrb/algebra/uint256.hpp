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

#ifndef ZKRB_ALGEBRA_UINT256_HPP_
#define ZKRB_ALGEBRA_UINT256_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "zkrb/common/error.hpp"

namespace zkrb::algebra {

using u128 = unsigned __int128;

/// Fixed 256-bit unsigned integer, little-endian 64-bit limbs. Used for
/// canonical field representatives and scalar bit access.
struct Uint256 {
  std::array<std::uint64_t, 4> limb{};

  constexpr Uint256() = default;
  constexpr explicit Uint256(std::uint64_t v) : limb{v, 0, 0, 0} {}
  constexpr Uint256(std::uint64_t l0, std::uint64_t l1, std::uint64_t l2,
                    std::uint64_t l3)
      : limb{l0, l1, l2, l3} {}

  constexpr bool is_zero() const {
    return (limb[0] | limb[1] | limb[2] | limb[3]) == 0;
  }
  constexpr bool bit(unsigned i) const {
    return i < 256 && ((limb[i / 64] >> (i % 64)) & 1) != 0;
  }
  /// Bits [lo, lo + width) as an integer; width <= 32.
  constexpr std::uint32_t bits(unsigned lo, unsigned width) const {
    if (lo >= 256) return 0;
    unsigned idx = lo / 64, off = lo % 64;
    std::uint64_t v = limb[idx] >> off;
    if (off + width > 64 && idx + 1 < 4) v |= limb[idx + 1] << (64 - off);
    return static_cast<std::uint32_t>(v & ((std::uint64_t{1} << width) - 1));
  }
  constexpr unsigned num_bits() const {
    for (int i = 3; i >= 0; --i) {
      if (limb[i] != 0) return 64 * i + (64 - static_cast<unsigned>(std::countl_zero(limb[i])));
    }
    return 0;
  }

  constexpr std::strong_ordering operator<=>(const Uint256& o) const {
    for (int i = 3; i >= 0; --i) {
      if (limb[i] != o.limb[i]) return limb[i] <=> o.limb[i];
    }
    return std::strong_ordering::equal;
  }
  constexpr bool operator==(const Uint256&) const = default;

  /// this += o, returns the carry out.
  constexpr bool add_in_place(const Uint256& o) {
    u128 carry = 0;
    for (int i = 0; i < 4; ++i) {
      u128 t = static_cast<u128>(limb[i]) + o.limb[i] + carry;
      limb[i] = static_cast<std::uint64_t>(t);
      carry = t >> 64;
    }
    return carry != 0;
  }
  /// this -= o, returns the borrow out.
  constexpr bool sub_in_place(const Uint256& o) {
    std::uint64_t borrow = 0;
    for (int i = 0; i < 4; ++i) {
      u128 t = static_cast<u128>(limb[i]) - o.limb[i] - borrow;
      limb[i] = static_cast<std::uint64_t>(t);
      borrow = static_cast<std::uint64_t>(t >> 64) & 1;
    }
    return borrow != 0;
  }
  constexpr void shr1() {
    for (int i = 0; i < 4; ++i) {
      limb[i] = (limb[i] >> 1) | (i < 3 ? limb[i + 1] << 63 : 0);
    }
  }
  constexpr bool shl1() {
    bool carry = (limb[3] >> 63) != 0;
    for (int i = 3; i >= 0; --i) {
      limb[i] = (limb[i] << 1) | (i > 0 ? limb[i - 1] >> 63 : 0);
    }
    return carry;
  }

  /// Divides in place by a small divisor, returns the remainder.
  constexpr std::uint64_t divmod_small(std::uint64_t d) {
    u128 rem = 0;
    for (int i = 3; i >= 0; --i) {
      u128 cur = (rem << 64) | limb[i];
      limb[i] = static_cast<std::uint64_t>(cur / d);
      rem = cur % d;
    }
    return static_cast<std::uint64_t>(rem);
  }
  /// this = this * m + a; returns overflow limb.
  constexpr std::uint64_t mul_add_small(std::uint64_t m, std::uint64_t a) {
    u128 carry = a;
    for (int i = 0; i < 4; ++i) {
      u128 t = static_cast<u128>(limb[i]) * m + carry;
      limb[i] = static_cast<std::uint64_t>(t);
      carry = t >> 64;
    }
    return static_cast<std::uint64_t>(carry);
  }

  static constexpr Uint256 from_decimal(std::string_view s) {
    Uint256 v;
    if (s.empty()) throw UsageError("empty decimal string");
    for (char c : s) {
      if (c < '0' || c > '9') throw UsageError("invalid decimal digit");
      if (v.mul_add_small(10, static_cast<std::uint64_t>(c - '0')) != 0) {
        throw UsageError("decimal value exceeds 256 bits");
      }
    }
    return v;
  }

  static constexpr Uint256 from_hex(std::string_view s) {
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
    Uint256 v;
    if (s.empty() || s.size() > 64) throw UsageError("bad hex length");
    for (char c : s) {
      std::uint64_t d = 0;
      if (c >= '0' && c <= '9') d = static_cast<std::uint64_t>(c - '0');
      else if (c >= 'a' && c <= 'f') d = static_cast<std::uint64_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') d = static_cast<std::uint64_t>(c - 'A' + 10);
      else throw UsageError("invalid hex digit");
      v.mul_add_small(16, d);
    }
    return v;
  }

  std::string to_decimal() const {
    if (is_zero()) return "0";
    Uint256 t = *this;
    std::string out;
    while (!t.is_zero()) out.push_back(static_cast<char>('0' + t.divmod_small(10)));
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (int i = 3; i >= 0; --i) {
      for (int s = 60; s >= 0; s -= 4) out.push_back(kDigits[(limb[i] >> s) & 0xf]);
    }
    auto nz = out.find_first_not_of('0');
    return "0x" + (nz == std::string::npos ? std::string("0") : out.substr(nz));
  }

  void to_bytes_le(std::span<std::uint8_t, 32> out) const {
    for (int i = 0; i < 32; ++i) out[i] = static_cast<std::uint8_t>(limb[i / 8] >> (8 * (i % 8)));
  }
  static Uint256 from_bytes_le(std::span<const std::uint8_t, 32> in) {
    Uint256 v;
    for (int i = 0; i < 32; ++i) v.limb[i / 8] |= static_cast<std::uint64_t>(in[i]) << (8 * (i % 8));
    return v;
  }
};

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_UINT256_HPP_
