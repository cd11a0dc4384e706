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

#ifndef ZKRB_ALGEBRA_FIELDS_HPP_
#define ZKRB_ALGEBRA_FIELDS_HPP_

#include <array>
#include <optional>
#include <vector>

#include "zkrb/algebra/bn254_params.hpp"
#include "zkrb/algebra/prime_field.hpp"

namespace zkrb::algebra {

using Fp = PrimeField<bn254::FpParams>;
/// The scalar field; every witness value, coefficient and secret lives here.
using Fr = PrimeField<bn254::FrParams>;

/// F_p^2 = F_p[i] / (i^2 + 1).
struct Fp2 {
  Fp c0, c1;

  static Fp2 zero() { return {}; }
  static Fp2 one() { return {Fp::one(), Fp::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const Fp2&) const = default;

  Fp2 operator+(const Fp2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fp2 operator-(const Fp2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fp2 operator-() const { return {-c0, -c1}; }
  Fp2 operator*(const Fp2& o) const {
    Fp v0 = c0 * o.c0;
    Fp v1 = c1 * o.c1;
    return {v0 - v1, (c0 + c1) * (o.c0 + o.c1) - v0 - v1};
  }
  Fp2 operator*(const Fp& s) const { return {c0 * s, c1 * s}; }
  Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
  Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
  Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

  Fp2 square() const {
    Fp a = c0 + c1, b = c0 - c1, c = c0 * c1;
    return {a * b, c + c};
  }
  Fp2 doubled() const { return {c0 + c0, c1 + c1}; }
  Fp2 conjugate() const { return {c0, -c1}; }
  /// Multiplication by the non-residue xi = 9 + i.
  Fp2 mul_by_xi() const {
    Fp t0 = c0.doubled().doubled().doubled() + c0;  // 9 c0
    Fp t1 = c1.doubled().doubled().doubled() + c1;  // 9 c1
    return {t0 - c1, c0 + t1};
  }
  Fp norm() const { return c0.square() + c1.square(); }
  Fp2 inverse() const {
    Fp n = norm();
    if (n.is_zero()) throw ArithmeticError("inverse of zero in Fp2");
    Fp t = n.inverse();
    return {c0 * t, -(c1 * t)};
  }
  Fp2 pow(const Uint256& e) const {
    Fp2 acc = one();
    for (int i = static_cast<int>(e.num_bits()) - 1; i >= 0; --i) {
      acc = acc.square();
      if (e.bit(static_cast<unsigned>(i))) acc *= *this;
    }
    return acc;
  }

  /// Square root via the norm map; nullopt when none exists.
  std::optional<Fp2> sqrt() const {
    if (is_zero()) return zero();
    if (c1.is_zero()) {
      if (auto r = c0.sqrt()) return Fp2{*r, Fp::zero()};
      // c0 is a non-residue in F_p: sqrt(c0) = i * sqrt(-c0).
      if (auto r = (-c0).sqrt()) return Fp2{Fp::zero(), *r};
      return std::nullopt;
    }
    auto s = norm().sqrt();
    if (!s) return std::nullopt;
    Fp half = Fp::from_u64(2).inverse();
    Fp cand = (c0 + *s) * half;
    auto x0 = cand.sqrt();
    if (!x0) {
      cand = (c0 - *s) * half;
      x0 = cand.sqrt();
      if (!x0) return std::nullopt;
    }
    Fp x1 = c1 * (x0->doubled()).inverse();
    Fp2 r{*x0, x1};
    if (r.square() != *this) return std::nullopt;
    return r;
  }

  /// Sign used by point compression: parity of c0, or of c1 when c0 == 0.
  bool is_odd() const { return c0.is_zero() ? c1.is_odd() : c0.is_odd(); }
};

/// F_p^6 = F_p^2[v] / (v^3 - xi).
struct Fp6 {
  Fp2 c0, c1, c2;

  static Fp6 zero() { return {}; }
  static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }
  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  bool operator==(const Fp6&) const = default;

  Fp6 operator+(const Fp6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  Fp6 operator-(const Fp6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  Fp6 operator-() const { return {-c0, -c1, -c2}; }
  Fp6 operator*(const Fp6& o) const {
    Fp2 t0 = c0 * o.c0, t1 = c1 * o.c1, t2 = c2 * o.c2;
    return {((c1 + c2) * (o.c1 + o.c2) - t1 - t2).mul_by_xi() + t0,
            (c0 + c1) * (o.c0 + o.c1) - t0 - t1 + t2.mul_by_xi(),
            (c0 + c2) * (o.c0 + o.c2) - t0 - t2 + t1};
  }
  Fp6 square() const { return *this * *this; }
  /// Multiplication by v.
  Fp6 mul_by_v() const { return {c2.mul_by_xi(), c0, c1}; }
  Fp6 inverse() const {
    Fp2 a = c0.square() - (c1 * c2).mul_by_xi();
    Fp2 b = c2.square().mul_by_xi() - c0 * c1;
    Fp2 c = c1.square() - c0 * c2;
    Fp2 t = c0 * a + ((c2 * b) + (c1 * c)).mul_by_xi();
    Fp2 ti = t.inverse();
    return {a * ti, b * ti, c * ti};
  }
};

/// F_p^12 = F_p^6[w] / (w^2 - v). GT lives here.
struct Fp12 {
  Fp6 c0, c1;

  static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }
  bool is_one() const { return *this == one(); }
  bool operator==(const Fp12&) const = default;

  Fp12 operator*(const Fp12& o) const {
    Fp6 t0 = c0 * o.c0, t1 = c1 * o.c1;
    return {t0 + t1.mul_by_v(), (c0 + c1) * (o.c0 + o.c1) - t0 - t1};
  }
  Fp12& operator*=(const Fp12& o) { return *this = *this * o; }
  Fp12 square() const {
    Fp6 ab = c0 * c1;
    return {(c0 + c1) * (c0 + c1.mul_by_v()) - ab - ab.mul_by_v(), ab + ab};
  }
  Fp12 conjugate() const { return {c0, -c1}; }
  Fp12 inverse() const {
    Fp6 t = (c0.square() - c1.square().mul_by_v()).inverse();
    return {c0 * t, -(c1 * t)};
  }

  /// Square-and-multiply over a little-endian limb vector.
  Fp12 pow_limbs(const std::vector<std::uint64_t>& e) const {
    Fp12 acc = one();
    for (std::size_t i = e.size(); i-- > 0;) {
      for (int b = 63; b >= 0; --b) {
        acc = acc.square();
        if ((e[i] >> b) & 1) acc *= *this;
      }
    }
    return acc;
  }
  Fp12 pow(const Uint256& e) const {
    return pow_limbs({e.limb[0], e.limb[1], e.limb[2], e.limb[3]});
  }

  /// x -> x^p.
  Fp12 frobenius() const;
};

namespace detail {

/// gamma[k] = xi^(k (p - 1) / 6), k = 0..5.
inline const std::array<Fp2, 6>& frobenius_coeffs() {
  static const std::array<Fp2, 6> coeffs = [] {
    Fp2 xi{Fp::from_u64(9), Fp::one()};
    Uint256 e = Fp::kModulus;
    e.sub_in_place(Uint256(1));
    e.divmod_small(6);
    Fp2 g = xi.pow(e);
    std::array<Fp2, 6> out;
    out[0] = Fp2::one();
    for (int k = 1; k < 6; ++k) out[k] = out[k - 1] * g;
    return out;
  }();
  return coeffs;
}

}  // namespace detail

inline Fp12 Fp12::frobenius() const {
  const auto& g = detail::frobenius_coeffs();
  return {{c0.c0.conjugate(), c0.c1.conjugate() * g[2], c0.c2.conjugate() * g[4]},
          {c1.c0.conjugate() * g[1], c1.c1.conjugate() * g[3],
           c1.c2.conjugate() * g[5]}};
}

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_FIELDS_HPP_
