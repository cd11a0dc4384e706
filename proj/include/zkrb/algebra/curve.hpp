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

#ifndef ZKRB_ALGEBRA_CURVE_HPP_
#define ZKRB_ALGEBRA_CURVE_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "zkrb/algebra/fields.hpp"

namespace zkrb::algebra {

/// Short Weierstrass curve y^2 = x^3 + b (a = 0). `Params` supplies the
/// coordinate field and the b coefficient.
template <class Params>
class CurvePoint;

template <class Params>
struct AffinePoint {
  using Field = typename Params::Field;
  Field x{}, y{};
  bool infinity = true;

  static AffinePoint identity() { return {}; }
  bool is_identity() const { return infinity; }
  bool is_on_curve() const {
    return infinity || y.square() == x.square() * x + Params::b();
  }
  bool operator==(const AffinePoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
  AffinePoint operator-() const {
    AffinePoint r = *this;
    if (!infinity) r.y = -y;
    return r;
  }
  CurvePoint<Params> to_jacobian() const;
};

/// Jacobian coordinates: (X, Y, Z) ~ (X / Z^2, Y / Z^3); Z = 0 is the identity.
template <class Params>
class CurvePoint {
 public:
  using Field = typename Params::Field;
  using Affine = AffinePoint<Params>;

  CurvePoint() : x_(Field::one()), y_(Field::one()), z_() {}
  CurvePoint(const Field& x, const Field& y, const Field& z) : x_(x), y_(y), z_(z) {}

  static CurvePoint identity() { return {}; }
  static CurvePoint generator() { return Params::generator().to_jacobian(); }

  bool is_identity() const { return z_.is_zero(); }

  bool operator==(const CurvePoint& o) const {
    if (is_identity() || o.is_identity()) return is_identity() == o.is_identity();
    Field z1z1 = z_.square(), z2z2 = o.z_.square();
    if (x_ * z2z2 != o.x_ * z1z1) return false;
    return y_ * z2z2 * o.z_ == o.y_ * z1z1 * z_;
  }

  CurvePoint operator-() const { return {x_, -y_, z_}; }

  CurvePoint doubled() const {
    if (is_identity()) return *this;
    Field a = x_.square();
    Field b = y_.square();
    Field c = b.square();
    Field d = ((x_ + b).square() - a - c).doubled();
    Field e = a.doubled() + a;
    Field f = e.square();
    Field x3 = f - d.doubled();
    Field c8 = c.doubled().doubled().doubled();
    Field y3 = e * (d - x3) - c8;
    Field z3 = (y_ * z_).doubled();
    return {x3, y3, z3};
  }

  CurvePoint operator+(const CurvePoint& o) const {
    if (is_identity()) return o;
    if (o.is_identity()) return *this;
    Field z1z1 = z_.square();
    Field z2z2 = o.z_.square();
    Field u1 = x_ * z2z2;
    Field u2 = o.x_ * z1z1;
    Field s1 = y_ * o.z_ * z2z2;
    Field s2 = o.y_ * z_ * z1z1;
    Field h = u2 - u1;
    Field r = (s2 - s1).doubled();
    if (h.is_zero()) {
      if (r.is_zero()) return doubled();
      return identity();
    }
    Field i = h.doubled().square();
    Field j = h * i;
    Field v = u1 * i;
    Field x3 = r.square() - j - v.doubled();
    Field y3 = r * (v - x3) - (s1 * j).doubled();
    Field z3 = ((z_ + o.z_).square() - z1z1 - z2z2) * h;
    return {x3, y3, z3};
  }

  /// Mixed addition with an affine point.
  CurvePoint operator+(const Affine& o) const {
    if (o.infinity) return *this;
    if (is_identity()) return o.to_jacobian();
    Field z1z1 = z_.square();
    Field u2 = o.x * z1z1;
    Field s2 = o.y * z_ * z1z1;
    Field h = u2 - x_;
    Field r = (s2 - y_).doubled();
    if (h.is_zero()) {
      if (r.is_zero()) return doubled();
      return identity();
    }
    Field hh = h.square();
    Field i = hh.doubled().doubled();
    Field j = h * i;
    Field v = x_ * i;
    Field x3 = r.square() - j - v.doubled();
    Field y3 = r * (v - x3) - (y_ * j).doubled();
    Field z3 = (z_ + h).square() - z1z1 - hh;
    return {x3, y3, z3};
  }

  CurvePoint operator-(const CurvePoint& o) const { return *this + (-o); }
  CurvePoint& operator+=(const CurvePoint& o) { return *this = *this + o; }
  CurvePoint& operator+=(const Affine& o) { return *this = *this + o; }
  CurvePoint& operator-=(const CurvePoint& o) { return *this = *this + (-o); }

  /// Fixed 4-bit window scalar multiplication by a canonical integer.
  CurvePoint mul(const Uint256& k) const {
    std::array<CurvePoint, 16> table;
    table[0] = identity();
    table[1] = *this;
    for (int i = 2; i < 16; ++i) table[i] = table[i - 1] + *this;
    CurvePoint acc;
    int top = static_cast<int>((k.num_bits() + 3) / 4);
    for (int w = top - 1; w >= 0; --w) {
      acc = acc.doubled().doubled().doubled().doubled();
      std::uint32_t digit = k.bits(static_cast<unsigned>(4 * w), 4);
      if (digit != 0) acc += table[digit];
    }
    return acc;
  }
  /// Scalar multiplication by a field scalar; curves with an efficient
  /// endomorphism route through Params::scalar_mul.
  CurvePoint operator*(const Fr& k) const {
    if constexpr (requires { Params::scalar_mul(*this, k); }) {
      return Params::scalar_mul(*this, k);
    } else {
      return mul(k.to_uint());
    }
  }

  Affine to_affine() const {
    if (is_identity()) return Affine::identity();
    Field zi = z_.inverse();
    Field zi2 = zi.square();
    return {x_ * zi2, y_ * zi2 * zi, false};
  }

  bool is_on_curve() const { return to_affine().is_on_curve(); }

  const Field& x() const { return x_; }
  const Field& y() const { return y_; }
  const Field& z() const { return z_; }

 private:
  Field x_, y_, z_;
};

template <class Params>
CurvePoint<Params> AffinePoint<Params>::to_jacobian() const {
  if (infinity) return CurvePoint<Params>::identity();
  return {x, y, Field::one()};
}

/// Width-w non-adjacent form, least significant digit first. Digits are odd
/// and lie in (-2^(w-1), 2^(w-1)).
inline std::vector<std::int8_t> wnaf_digits(Uint256 k, unsigned w) {
  std::vector<std::int8_t> out;
  out.reserve(k.num_bits() + 1);
  const std::uint64_t mask = (std::uint64_t{1} << w) - 1;
  const std::int64_t half = std::int64_t{1} << (w - 1);
  while (!k.is_zero()) {
    std::int64_t d = 0;
    if (k.bit(0)) {
      d = static_cast<std::int64_t>(k.limb[0] & mask);
      if (d >= half) d -= std::int64_t{1} << w;
      if (d > 0) {
        k.sub_in_place(Uint256(static_cast<std::uint64_t>(d)));
      } else {
        k.add_in_place(Uint256(static_cast<std::uint64_t>(-d)));
      }
    }
    out.push_back(static_cast<std::int8_t>(d));
    k.shr1();
  }
  return out;
}

/// Odd multiples P, 3P, ..., (2^(w-1) - 1)P in affine form.
template <class Params>
std::vector<AffinePoint<Params>> odd_multiples(const CurvePoint<Params>& p, unsigned w) {
  std::size_t n = std::size_t{1} << (w - 2);
  std::vector<CurvePoint<Params>> pts(n);
  pts[0] = p;
  CurvePoint<Params> twice = p.doubled();
  for (std::size_t i = 1; i < n; ++i) pts[i] = pts[i - 1] + twice;
  return batch_normalize<Params>(pts);
}

/// sum_j digits_j[i] * tables_j over interleaved wNAF expansions
/// (Straus/Shamir). Each table holds odd multiples of its base.
template <class Params>
CurvePoint<Params> wnaf_combine(
    std::span<const std::vector<std::int8_t>> digits,
    std::span<const std::vector<AffinePoint<Params>>> tables) {
  std::size_t len = 0;
  for (const auto& d : digits) len = std::max(len, d.size());
  CurvePoint<Params> acc;
  for (std::size_t i = len; i-- > 0;) {
    acc = acc.doubled();
    for (std::size_t j = 0; j < digits.size(); ++j) {
      if (i >= digits[j].size()) continue;
      int d = digits[j][i];
      if (d > 0) acc += tables[j][static_cast<std::size_t>(d / 2)];
      else if (d < 0) acc += -tables[j][static_cast<std::size_t>(-d / 2)];
    }
  }
  return acc;
}

template <class Params>
CurvePoint<Params> operator*(const Fr& k, const CurvePoint<Params>& p) {
  return p * k;
}

/// Converts many Jacobian points to affine with a single field inversion.
template <class Params>
std::vector<AffinePoint<Params>> batch_normalize(std::span<const CurvePoint<Params>> pts) {
  using Field = typename Params::Field;
  std::vector<AffinePoint<Params>> out(pts.size());
  std::vector<Field> prefix(pts.size());
  Field acc = Field::one();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    prefix[i] = acc;
    if (!pts[i].is_identity()) acc *= pts[i].z();
  }
  Field inv = acc.inverse();
  for (std::size_t i = pts.size(); i-- > 0;) {
    if (pts[i].is_identity()) {
      out[i] = AffinePoint<Params>::identity();
      continue;
    }
    Field zi = inv * prefix[i];
    inv *= pts[i].z();
    Field zi2 = zi.square();
    out[i] = {pts[i].x() * zi2, pts[i].y() * zi2 * zi, false};
  }
  return out;
}

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_CURVE_HPP_
