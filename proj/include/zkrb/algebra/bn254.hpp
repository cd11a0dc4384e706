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

#ifndef ZKRB_ALGEBRA_BN254_HPP_
#define ZKRB_ALGEBRA_BN254_HPP_

#include "zkrb/algebra/curve.hpp"
#include "zkrb/algebra/endomorphism.hpp"
#include "zkrb/algebra/fields.hpp"

namespace zkrb::algebra {

struct G1Params {
  using Field = Fp;
  static CurvePoint<G1Params> scalar_mul(const CurvePoint<G1Params>& p, const Fr& k);
  static const Fp& b() {
    static const Fp kB = Fp::from_u64(bn254::kCurveB);
    return kB;
  }
  static const AffinePoint<G1Params>& generator() {
    static const AffinePoint<G1Params> kGen{Fp::from_u64(1), Fp::from_u64(2), false};
    return kGen;
  }
};

struct G2Params {
  using Field = Fp2;
  static CurvePoint<G2Params> scalar_mul(const CurvePoint<G2Params>& p, const Fr& k);
  /// b' = 3 / (9 + i) for the D-type sextic twist.
  static const Fp2& b() {
    static const Fp2 kB = Fp2{Fp::from_u64(bn254::kCurveB), Fp::zero()} *
                          Fp2{Fp::from_u64(9), Fp::one()}.inverse();
    return kB;
  }
  static const AffinePoint<G2Params>& generator() {
    static const AffinePoint<G2Params> kGen{
        {Fp::from_decimal(bn254::kG2GenX0), Fp::from_decimal(bn254::kG2GenX1)},
        {Fp::from_decimal(bn254::kG2GenY0), Fp::from_decimal(bn254::kG2GenY1)},
        false};
    return kGen;
  }
};

using G1 = CurvePoint<G1Params>;
using G2 = CurvePoint<G2Params>;
using G1Affine = AffinePoint<G1Params>;
using G2Affine = AffinePoint<G2Params>;

/// Twist-Frobenius-untwist endomorphism on G2. On the order-r subgroup it acts
/// as multiplication by p mod r = 6u^2.
inline G2Affine g2_psi(const G2Affine& q) {
  if (q.infinity) return q;
  const auto& g = detail::frobenius_coeffs();
  return {q.x.conjugate() * g[2], q.y.conjugate() * g[3], false};
}

/// Cube root of unity in F_p paired with the GLV eigenvalue used by
/// endo::split_g1.
inline const Fp& g1_beta() {
  static const Fp kBeta = Fp::from_decimal(
      "2203960485148121921418603742825762020974279258880205651966");
  return kBeta;
}

namespace detail {

inline constexpr unsigned kEndoWindow = 5;

template <class Params, class Map>
CurvePoint<Params> endo_mul(const CurvePoint<Params>& p, const endo::SplitScalar& s,
                            Map&& map) {
  if (p.is_identity()) return p;
  auto base = odd_multiples(p, kEndoWindow);
  std::vector<AffinePoint<Params>> mapped(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) mapped[i] = map(base[i]);
  if (s.neg0) for (auto& q : base) q = -q;
  if (s.neg1) for (auto& q : mapped) q = -q;
  std::vector<std::int8_t> d[2] = {wnaf_digits(s.k0, kEndoWindow),
                                   wnaf_digits(s.k1, kEndoWindow)};
  std::vector<AffinePoint<Params>> tables[2] = {std::move(base), std::move(mapped)};
  return wnaf_combine<Params>(d, tables);
}

}  // namespace detail

inline G1 G1Params::scalar_mul(const G1& p, const Fr& k) {
  return detail::endo_mul(p, endo::split_g1(k), [](const G1Affine& a) {
    return a.infinity ? a : G1Affine{a.x * g1_beta(), a.y, false};
  });
}

inline G2 G2Params::scalar_mul(const G2& p, const Fr& k) {
  return detail::endo_mul(p, endo::split_g2(k), [](const G2Affine& a) { return g2_psi(a); });
}

/// Order-r membership. G1 has cofactor 1, so the curve check suffices there.
inline bool in_subgroup(const G1Affine& p) { return p.is_on_curve(); }
inline bool in_subgroup(const G2Affine& q) {
  if (!q.is_on_curve()) return false;
  return q.to_jacobian().mul(Fr::kModulus).is_identity();
}

/// Target group element: the order-r subgroup of F_p^12*, written
/// multiplicatively.
class Gt {
 public:
  Gt() : v_(Fp12::one()) {}
  explicit Gt(const Fp12& v) : v_(v) {}

  static Gt identity() { return Gt(); }
  bool is_identity() const { return v_.is_one(); }
  bool operator==(const Gt&) const = default;

  Gt operator*(const Gt& o) const { return Gt(v_ * o.v_); }
  Gt& operator*=(const Gt& o) { return *this = *this * o; }
  Gt inverse() const { return Gt(v_.conjugate()); }  // unitary after final exp
  Gt pow(const Fr& e) const { return Gt(v_.pow(e.to_uint())); }

  const Fp12& value() const { return v_; }

 private:
  Fp12 v_;
};

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_BN254_HPP_
