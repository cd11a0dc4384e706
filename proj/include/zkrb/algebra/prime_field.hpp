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

#ifndef ZKRB_ALGEBRA_PRIME_FIELD_HPP_
#define ZKRB_ALGEBRA_PRIME_FIELD_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "zkrb/algebra/uint256.hpp"
#include "zkrb/common/error.hpp"
#include "zkrb/common/random.hpp"

#if defined(__clang__) && defined(__x86_64__) && defined(__ADX__) && defined(__BMI2__)
#include <immintrin.h>
#define ZKRB_HAVE_ADX_INTRINSICS 1
#else
#define ZKRB_HAVE_ADX_INTRINSICS 0
#endif

namespace zkrb::algebra {

namespace detail {

constexpr std::uint64_t mont_inv64(std::uint64_t q0) {
  // Newton iteration for q0^{-1} mod 2^64, then negate.
  std::uint64_t x = 1;
  for (int i = 0; i < 7; ++i) x *= 2 - q0 * x;
  return ~x + 1;
}

constexpr Uint256 double_mod(Uint256 x, const Uint256& m) {
  bool carry = x.shl1();
  if (carry || x >= m) x.sub_in_place(m);
  return x;
}

constexpr Uint256 pow2_mod(unsigned k, const Uint256& m) {
  Uint256 x(1);
  for (unsigned i = 0; i < k; ++i) x = double_mod(x, m);
  return x;
}

constexpr unsigned two_adicity(Uint256 m) {
  m.sub_in_place(Uint256(1));
  unsigned s = 0;
  while (!m.bit(0)) {
    m.shr1();
    ++s;
  }
  return s;
}

}  // namespace detail

/// Prime field in Montgomery form over four 64-bit limbs. The modulus must
/// leave the top bit of the top limb clear (true for both BN-254 fields),
/// which lets multiplication skip the final carry word.
template <class Params>
class PrimeField {
 public:
  static constexpr Uint256 kModulus = Params::kModulus;
  static constexpr unsigned kBits = kModulus.num_bits();
  static constexpr unsigned kTwoAdicity = detail::two_adicity(kModulus);
  static constexpr std::size_t kByteSize = 32;
  static_assert(kModulus.limb[3] < 0x7fffffffffffffffULL);

  constexpr PrimeField() = default;

  static constexpr PrimeField zero() { return PrimeField(); }
  static constexpr PrimeField one() { return raw(kR); }

  static PrimeField from_u64(std::uint64_t v) { return from_uint(Uint256(v)); }
  static PrimeField from_i64(std::int64_t v) {
    if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
    return -from_u64(static_cast<std::uint64_t>(-(v + 1)) + 1);
  }
  /// Canonical value; throws UsageError when v >= modulus.
  static PrimeField from_uint(const Uint256& v) {
    if (v >= kModulus) throw UsageError("value not reduced modulo field order");
    PrimeField out;
    mont_mul(v.limb, kR2.limb, out.v_.limb);
    return out;
  }
  static PrimeField from_uint_reduce(Uint256 v) {
    while (v >= kModulus) v.sub_in_place(kModulus);
    return from_uint(v);
  }
  static PrimeField from_decimal(std::string_view s) {
    return from_uint(Uint256::from_decimal(s));
  }
  /// Reduces a 512-bit little-endian value (lo + hi * 2^256) modulo p.
  static PrimeField from_wide(const Uint256& lo, const Uint256& hi) {
    return from_uint_reduce(lo) + from_uint_reduce(hi) * raw(kR2);
  }

  /// Uniform sample (bias < 2^-250).
  static PrimeField random(Drbg& rng) {
    std::array<std::uint8_t, 64> buf;
    rng.fill(buf);
    auto lo = Uint256::from_bytes_le(std::span<const std::uint8_t, 32>(buf.data(), 32));
    auto hi = Uint256::from_bytes_le(std::span<const std::uint8_t, 32>(buf.data() + 32, 32));
    secure_zero(buf.data(), buf.size());
    return from_wide(lo, hi);
  }
  static PrimeField random_nonzero(Drbg& rng) {
    for (;;) {
      PrimeField x = random(rng);
      if (!x.is_zero()) return x;
    }
  }

  Uint256 to_uint() const {
    Uint256 out;
    static constexpr Uint256 kOneRaw(1);
    mont_mul(v_.limb, kOneRaw.limb, out.limb);
    return out;
  }
  std::string to_decimal() const { return to_uint().to_decimal(); }

  void to_bytes(std::span<std::uint8_t, 32> out) const { to_uint().to_bytes_le(out); }
  std::array<std::uint8_t, 32> to_bytes() const {
    std::array<std::uint8_t, 32> out;
    to_bytes(out);
    return out;
  }
  /// Strict decoding: non-canonical encodings are rejected.
  static PrimeField from_bytes(std::span<const std::uint8_t, 32> in) {
    Uint256 v = Uint256::from_bytes_le(in);
    if (v >= kModulus) throw IntegrityError("field element encoding not canonical");
    return from_uint(v);
  }

  constexpr bool is_zero() const { return v_.is_zero(); }
  constexpr bool is_one() const { return v_ == kR; }
  constexpr bool operator==(const PrimeField& o) const { return v_ == o.v_; }

  PrimeField operator+(const PrimeField& o) const {
    PrimeField r = *this;
    r += o;
    return r;
  }
  PrimeField operator-(const PrimeField& o) const {
    PrimeField r = *this;
    r -= o;
    return r;
  }
  PrimeField operator*(const PrimeField& o) const {
    PrimeField r;
    mont_mul(v_.limb, o.v_.limb, r.v_.limb);
    return r;
  }
  PrimeField operator-() const {
    PrimeField r;
    sub_mod(r.v_.limb, v_.limb, r.v_.limb);
    return r;
  }
  PrimeField& operator+=(const PrimeField& o) {
    add_mod(v_.limb, o.v_.limb, v_.limb);
    return *this;
  }
  PrimeField& operator-=(const PrimeField& o) {
    sub_mod(v_.limb, o.v_.limb, v_.limb);
    return *this;
  }
  PrimeField& operator*=(const PrimeField& o) {
    mont_mul(v_.limb, o.v_.limb, v_.limb);
    return *this;
  }

  PrimeField square() const { return *this * *this; }
  PrimeField doubled() const { return *this + *this; }

  PrimeField pow(const Uint256& e) const {
    PrimeField acc = one();
    for (int i = static_cast<int>(e.num_bits()) - 1; i >= 0; --i) {
      acc = acc.square();
      if (e.bit(static_cast<unsigned>(i))) acc *= *this;
    }
    return acc;
  }
  PrimeField pow(std::uint64_t e) const { return pow(Uint256(e)); }

  /// Multiplicative inverse via Fermat; zero raises ArithmeticError.
  PrimeField inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    Uint256 e = kModulus;
    e.sub_in_place(Uint256(2));
    return pow(e);
  }

  /// Square root for p = 3 mod 4 fields; nullopt for non-residues.
  std::optional<PrimeField> sqrt() const
    requires((Params::kModulus.limb[0] & 3) == 3)
  {
    Uint256 e = kModulus;
    e.add_in_place(Uint256(1));
    e.shr1();
    e.shr1();
    PrimeField r = pow(e);
    if (r.square() == *this) return r;
    return std::nullopt;
  }

  bool is_odd() const { return to_uint().bit(0); }

  /// Raw Montgomery limbs, for hashing and tables only.
  const Uint256& montgomery_repr() const { return v_; }

  static constexpr PrimeField raw(const Uint256& mont) {
    PrimeField r;
    r.v_ = mont;
    return r;
  }

 private:
  static constexpr std::uint64_t kInv = detail::mont_inv64(kModulus.limb[0]);
  static constexpr Uint256 kR = detail::pow2_mod(256, kModulus);
  static constexpr Uint256 kR2 = detail::pow2_mod(512, kModulus);

  using Limbs = std::array<std::uint64_t, 4>;

  // a + b < 2p < 2^255, so the sum never carries out of four limbs.
  static inline void add_mod(const Limbs& a, const Limbs& b, Limbs& out) {
    std::uint64_t t[4];
    u128 c = 0;
    for (int i = 0; i < 4; ++i) {
      c = static_cast<u128>(a[i]) + b[i] + (c >> 64);
      t[i] = static_cast<std::uint64_t>(c);
    }
    reduce_once(t, out);
  }

  static inline void sub_mod(const Limbs& a, const Limbs& b, Limbs& out) {
    const auto& q = kModulus.limb;
    std::uint64_t t[4];
    std::uint64_t borrow = 0;
    for (int i = 0; i < 4; ++i) {
      u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
      t[i] = static_cast<std::uint64_t>(d);
      borrow = static_cast<std::uint64_t>(d >> 64) & 1;
    }
    const std::uint64_t mask = ~borrow + 1;
    u128 c = 0;
    for (int i = 0; i < 4; ++i) {
      c = static_cast<u128>(t[i]) + (q[i] & mask) + (c >> 64);
      out[i] = static_cast<std::uint64_t>(c);
    }
  }

  // Maps t in [0, 2p) to [0, p).
  static inline void reduce_once(const std::uint64_t (&t)[4], Limbs& out) {
    const auto& q = kModulus.limb;
    std::uint64_t r[4];
    std::uint64_t borrow = 0;
    for (int i = 0; i < 4; ++i) {
      u128 d = static_cast<u128>(t[i]) - q[i] - borrow;
      r[i] = static_cast<std::uint64_t>(d);
      borrow = static_cast<std::uint64_t>(d >> 64) & 1;
    }
    const std::uint64_t keep = ~borrow + 1;  // all ones when t < p
    for (int i = 0; i < 4; ++i) out[i] = (t[i] & keep) | (r[i] & ~keep);
  }

  static inline void mont_mul(const Limbs& a, const Limbs& b, Limbs& out) {
#if ZKRB_HAVE_ADX_INTRINSICS
    mont_mul_adx(a, b, out);
#else
    mont_mul_portable(a, b, out);
#endif
  }

  // CIOS without the final carry word (valid because the modulus top bit is
  // clear).
  static inline void mont_mul_portable(const Limbs& a, const Limbs& b, Limbs& out) {
    const auto& q = kModulus.limb;
    std::uint64_t t[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      u128 acc = static_cast<u128>(a[0]) * b[i] + t[0];
      std::uint64_t lo = static_cast<std::uint64_t>(acc);
      std::uint64_t ac = static_cast<std::uint64_t>(acc >> 64);
      std::uint64_t m = lo * kInv;
      u128 c = static_cast<u128>(m) * q[0] + lo;
      std::uint64_t cc = static_cast<std::uint64_t>(c >> 64);
      for (int j = 1; j < 4; ++j) {
        acc = static_cast<u128>(a[j]) * b[i] + t[j] + ac;
        ac = static_cast<std::uint64_t>(acc >> 64);
        c = static_cast<u128>(m) * q[j] + static_cast<std::uint64_t>(acc) + cc;
        t[j - 1] = static_cast<std::uint64_t>(c);
        cc = static_cast<std::uint64_t>(c >> 64);
      }
      t[3] = cc + ac;
    }
    reduce_once(t, out);
  }

#if ZKRB_HAVE_ADX_INTRINSICS
  static inline void mont_mul_adx(const Limbs& a, const Limbs& b, Limbs& out) {
    using ull = unsigned long long;
    const auto& q = kModulus.limb;
    ull t0 = 0, t1 = 0, t2 = 0, t3 = 0, t4, d;
    for (int i = 0; i < 4; ++i) {
      ull bi = b[i];
      ull h0, h1, h2, h3;
      ull l0 = _mulx_u64(a[0], bi, &h0);
      ull l1 = _mulx_u64(a[1], bi, &h1);
      ull l2 = _mulx_u64(a[2], bi, &h2);
      ull l3 = _mulx_u64(a[3], bi, &h3);
      unsigned char c = _addcarry_u64(0, t0, l0, &t0);
      c = _addcarry_u64(c, t1, l1, &t1);
      c = _addcarry_u64(c, t2, l2, &t2);
      c = _addcarry_u64(c, t3, l3, &t3);
      t4 = h3 + c;
      c = _addcarry_u64(0, t1, h0, &t1);
      c = _addcarry_u64(c, t2, h1, &t2);
      c = _addcarry_u64(c, t3, h2, &t3);
      t4 += c;
      ull m = t0 * kInv;
      l0 = _mulx_u64(m, q[0], &h0);
      l1 = _mulx_u64(m, q[1], &h1);
      l2 = _mulx_u64(m, q[2], &h2);
      l3 = _mulx_u64(m, q[3], &h3);
      c = _addcarry_u64(0, t0, l0, &d);
      c = _addcarry_u64(c, t1, l1, &t1);
      c = _addcarry_u64(c, t2, l2, &t2);
      c = _addcarry_u64(c, t3, l3, &t3);
      t4 += c;
      c = _addcarry_u64(0, t1, h0, &t0);
      c = _addcarry_u64(c, t2, h1, &t1);
      c = _addcarry_u64(c, t3, h2, &t2);
      _addcarry_u64(c, t4, h3, &t3);
    }
    std::uint64_t t[4] = {t0, t1, t2, t3};
    reduce_once(t, out);
  }
#endif

  Uint256 v_{};
};

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_PRIME_FIELD_HPP_
