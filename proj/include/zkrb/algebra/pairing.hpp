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

#ifndef ZKRB_ALGEBRA_PAIRING_HPP_
#define ZKRB_ALGEBRA_PAIRING_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "zkrb/algebra/bn254.hpp"
#include "zkrb/algebra/counters.hpp"

namespace zkrb::algebra {

namespace detail {

// Line through twisted points, evaluated at P and embedded in F_p^12 via
// (x', y') -> (x' w^2, y' w^3):  l = y_P - lambda x_P w + (lambda x_T - y_T) w^3.
inline Fp12 line_value(const Fp2& lambda, const G2Affine& t, const G1Affine& p) {
  Fp12 l;
  l.c0.c0 = Fp2{p.y, Fp::zero()};
  l.c1.c0 = -(lambda * p.x);
  l.c1.c1 = lambda * t.x - t.y;
  return l;
}

// T <- 2T, returns the tangent line at T evaluated at P.
inline Fp12 double_step(G2Affine& t, const G1Affine& p) {
  Fp2 x2 = t.x.square();
  Fp2 lambda = (x2.doubled() + x2) * t.y.doubled().inverse();
  Fp12 l = line_value(lambda, t, p);
  Fp2 x3 = lambda.square() - t.x.doubled();
  t.y = lambda * (t.x - x3) - t.y;
  t.x = x3;
  return l;
}

// T <- T + Q, returns the chord line evaluated at P.
inline Fp12 add_step(G2Affine& t, const G2Affine& q, const G1Affine& p) {
  if (t.x == q.x) {
    if (t.y == q.y) return double_step(t, p);
    // Vertical line: lies in a proper subfield, erased by the final
    // exponentiation.
    t = G2Affine::identity();
    return Fp12::one();
  }
  Fp2 lambda = (q.y - t.y) * (q.x - t.x).inverse();
  Fp12 l = line_value(lambda, t, p);
  Fp2 x3 = lambda.square() - t.x - q.x;
  t.y = lambda * (t.x - x3) - t.y;
  t.x = x3;
  return l;
}

inline const std::vector<std::uint64_t>& final_exp_hard_limbs() {
  static const std::vector<std::uint64_t> limbs = [] {
    std::string_view hex = bn254::kFinalExpHardHex;
    std::vector<std::uint64_t> out((hex.size() + 15) / 16, 0);
    for (std::size_t i = 0; i < hex.size(); ++i) {
      char c = hex[hex.size() - 1 - i];
      std::uint64_t d = (c >= 'a') ? static_cast<std::uint64_t>(c - 'a' + 10)
                                   : static_cast<std::uint64_t>(c - '0');
      out[i / 16] |= d << (4 * (i % 16));
    }
    return out;
  }();
  return limbs;
}

}  // namespace detail

/// Optimal ate Miller loop f_{6u+2,Q}(P) with the two Frobenius corrections.
inline Fp12 miller_loop(const G1Affine& p, const G2Affine& q) {
  ++counters().miller_loops;
  if (p.infinity || q.infinity) return Fp12::one();
  G2Affine t = q;
  Fp12 f = Fp12::one();
  const auto loop = bn254::kAteLoopCount;
  int top = 127;
  while (((loop >> top) & 1) == 0) --top;
  for (int i = top - 1; i >= 0; --i) {
    f = f.square() * detail::double_step(t, p);
    if ((loop >> i) & 1) f *= detail::add_step(t, q, p);
  }
  G2Affine q1 = g2_psi(q);
  G2Affine q2 = -g2_psi(q1);
  f *= detail::add_step(t, q1, p);
  f *= detail::add_step(t, q2, p);
  return f;
}

/// f^((p^12 - 1) / r), split as (p^6 - 1)(p^2 + 1) * (p^4 - p^2 + 1) / r.
inline Gt final_exponentiation(const Fp12& f) {
  ++counters().final_exponentiations;
  Fp12 f1 = f.conjugate() * f.inverse();
  Fp12 f2 = f1.frobenius().frobenius() * f1;
  return Gt(f2.pow_limbs(detail::final_exp_hard_limbs()));
}

inline Gt pairing(const G1Affine& p, const G2Affine& q) {
  return final_exponentiation(miller_loop(p, q));
}
inline Gt pairing(const G1& p, const G2& q) {
  return pairing(p.to_affine(), q.to_affine());
}

/// Product of pairings with one shared final exponentiation.
inline Gt multi_pairing(std::span<const G1Affine> ps, std::span<const G2Affine> qs) {
  if (ps.size() != qs.size()) throw UsageError("multi_pairing: length mismatch");
  Fp12 f = Fp12::one();
  for (std::size_t i = 0; i < ps.size(); ++i) f *= miller_loop(ps[i], qs[i]);
  return final_exponentiation(f);
}

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_PAIRING_HPP_
