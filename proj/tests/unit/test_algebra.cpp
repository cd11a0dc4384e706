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

#include <gtest/gtest.h>

#include <vector>

#include "zkrb/algebra/batch_mul.hpp"
#include "zkrb/algebra/counters.hpp"
#include "zkrb/algebra/fft.hpp"
#include "zkrb/algebra/group_fft.hpp"
#include "zkrb/algebra/msm.hpp"
#include "zkrb/algebra/pairing.hpp"
#include "zkrb/algebra/serialize.hpp"

namespace zkrb::algebra {
namespace {

Drbg rng_for(const char* label) { return Drbg(std::string("zkrb/test/algebra/") + label); }

TEST(FieldTest, Axioms) {
  auto rng = rng_for("axioms");
  for (int i = 0; i < 200; ++i) {
    Fr a = Fr::random(rng), b = Fr::random(rng), c = Fr::random(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + Fr::zero(), a);
    EXPECT_EQ(a * Fr::one(), a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Fr::one());
  }
}

TEST(FieldTest, ModulusWrapsToZero) {
  Uint256 m = Fr::kModulus;
  EXPECT_TRUE(Fr::from_uint_reduce(m).is_zero());
  m.sub_in_place(Uint256(1));
  EXPECT_EQ(Fr::from_uint(m) + Fr::one(), Fr::zero());
  EXPECT_EQ(Fr::from_i64(-1), -Fr::one());
}

TEST(FieldTest, FermatAndDecimal) {
  auto rng = rng_for("fermat");
  Uint256 e = Fr::kModulus;
  e.sub_in_place(Uint256(1));
  for (int i = 0; i < 10; ++i) {
    Fr a = Fr::random_nonzero(rng);
    EXPECT_EQ(a.pow(e), Fr::one());
    EXPECT_EQ(Fr::from_decimal(a.to_decimal()), a);
  }
  EXPECT_EQ(Fr::from_decimal("12345").to_decimal(), "12345");
}

TEST(FieldTest, ByteRoundTrip) {
  auto rng = rng_for("bytes");
  for (int i = 0; i < 20; ++i) {
    Fr a = Fr::random(rng);
    std::array<std::uint8_t, 32> buf{};
    a.to_bytes(buf);
    EXPECT_EQ(Fr::from_bytes(buf), a);
    EXPECT_EQ(fr_from_hex(fr_hex(a)), a);
  }
  std::array<std::uint8_t, 32> big;
  big.fill(0xff);
  EXPECT_THROW(Fr::from_bytes(big), IntegrityError);
}

TEST(FieldTest, Fp12Inverse) {
  auto rng = rng_for("fp12");
  Fp12 x;
  x.c0.c0 = {Fp::random(rng), Fp::random(rng)};
  x.c1.c2 = {Fp::random(rng), Fp::random(rng)};
  EXPECT_TRUE((x * x.inverse()).is_one());
}

TEST(CurveTest, GeneratorsOnCurveWithOrderR) {
  EXPECT_TRUE(G1::generator().is_on_curve());
  EXPECT_TRUE(G2::generator().is_on_curve());
  EXPECT_TRUE(G1::generator().mul(Fr::kModulus).is_identity());
  EXPECT_TRUE(G2::generator().mul(Fr::kModulus).is_identity());
  EXPECT_TRUE(in_subgroup(G2::generator().to_affine()));
}

TEST(CurveTest, GroupLaw) {
  auto rng = rng_for("group");
  for (int i = 0; i < 10; ++i) {
    Fr a = Fr::random(rng), b = Fr::random(rng);
    G1 p = G1::generator() * a, q = G1::generator() * b;
    EXPECT_EQ(p + q, G1::generator() * (a + b));
    EXPECT_EQ(p + p, p.doubled());
    EXPECT_TRUE((p - p).is_identity());
    EXPECT_EQ(p + G1::identity(), p);
    EXPECT_EQ(G1::generator() * a, G1::generator().mul(a.to_uint()));
    EXPECT_EQ(G2::generator() * a, G2::generator().mul(a.to_uint()));
  }
}

TEST(CurveTest, CompressedRoundTrip) {
  auto rng = rng_for("compress");
  for (int i = 0; i < 10; ++i) {
    Fr a = Fr::random(rng);
    G1Affine p = (G1::generator() * a).to_affine();
    G2Affine q = (G2::generator() * a).to_affine();
    ByteWriter w;
    put_compressed(w, p);
    put_compressed(w, q);
    put_compressed(w, G1Affine::identity());
    Bytes bytes = std::move(w).bytes();
    ASSERT_EQ(bytes.size(), kG1CompressedBytes * 2 + kG2CompressedBytes);
    ByteReader r(bytes);
    EXPECT_EQ(get_g1_compressed(r), p);
    EXPECT_EQ(get_g2_compressed(r), q);
    EXPECT_TRUE(get_g1_compressed(r).is_identity());
  }
}

TEST(CurveTest, CompressedRejectsBadFlags) {
  ByteWriter w;
  put_compressed(w, G1::generator().to_affine());
  Bytes bytes = std::move(w).bytes();
  bytes.back() = 0x80;
  ByteReader r(bytes);
  EXPECT_THROW(get_g1_compressed(r), IntegrityError);
}

TEST(PairingTest, Bilinear) {
  auto rng = rng_for("bilinear");
  const Gt base = pairing(G1::generator(), G2::generator());
  EXPECT_FALSE(base.is_identity());
  for (int i = 0; i < 5; ++i) {
    Fr a = Fr::random(rng), b = Fr::random(rng);
    Gt lhs = pairing(G1::generator() * a, G2::generator() * b);
    EXPECT_EQ(lhs, base.pow(a * b));
    EXPECT_EQ(lhs, pairing(G1::generator() * (a * b), G2::generator()));
  }
}

TEST(PairingTest, MultiPairingCountsMillerLoops) {
  counters().reset();
  std::vector<G1Affine> ps{G1::generator().to_affine(), (-G1::generator()).to_affine()};
  std::vector<G2Affine> qs{G2::generator().to_affine(), G2::generator().to_affine()};
  EXPECT_TRUE(multi_pairing(ps, qs).is_identity());
  EXPECT_EQ(counters().miller_loops, 2u);
  EXPECT_EQ(counters().final_exponentiations, 1u);
}

template <class Params>
void check_msm(Drbg& rng, std::size_t n) {
  using Point = CurvePoint<Params>;
  std::vector<Fr> scalars(n);
  std::vector<AffinePoint<Params>> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    scalars[i] = i % 7 == 3 ? Fr::zero() : Fr::random(rng);
    points[i] = (Point::generator() * Fr::random(rng)).to_affine();
  }
  if (n > 2) points[1] = AffinePoint<Params>::identity();
  Point expect = msm_naive<Params>(scalars, points);
  EXPECT_EQ(msm<Params>(scalars, points), expect) << "n = " << n;
  EXPECT_EQ(msm<Params>(scalars, points, 3), expect) << "n = " << n;
}

TEST(MsmTest, MatchesNaive) {
  auto rng = rng_for("msm");
  for (std::size_t n : {0, 1, 2, 5, 33, 200}) check_msm<G1Params>(rng, n);
  for (std::size_t n : {1, 7, 40}) check_msm<G2Params>(rng, n);
}

TEST(MsmTest, LengthMismatchThrows) {
  std::vector<Fr> s(2);
  std::vector<G1Affine> p(3);
  EXPECT_THROW(msm<G1Params>(s, p), UsageError);
}

TEST(BatchMulTest, MatchesScalarMul) {
  auto rng = rng_for("batch_mul");
  std::vector<G1> pts;
  std::vector<Fr> ks;
  for (int i = 0; i < 300; ++i) {
    pts.push_back(G1::generator() * Fr::random(rng));
    ks.push_back(Fr::random(rng));
  }
  auto out = batch_mul<G1Params>(pts, ks, 2);
  for (std::size_t i = 0; i < pts.size(); i += 37) EXPECT_EQ(out[i], pts[i].mul(ks[i].to_uint()));
}

TEST(FftTest, RoundTripAndNaiveEvaluation) {
  auto rng = rng_for("fft");
  for (std::size_t n : {1, 2, 8, 64, 1024}) {
    EvaluationDomain d(n);
    std::vector<Fr> coeffs(n);
    for (auto& c : coeffs) c = Fr::random(rng);
    auto v = coeffs;
    fft_in_place<Fr>(std::span<Fr>(v), d, FftDirection::kForward);
    if (n <= 64) {
      for (std::size_t i = 0; i < n; ++i) {
        Fr x = d.element(i), acc = Fr::zero();
        for (std::size_t k = n; k-- > 0;) acc = acc * x + coeffs[k];
        EXPECT_EQ(v[i], acc);
      }
    }
    fft_in_place<Fr>(std::span<Fr>(v), d, FftDirection::kInverse);
    EXPECT_EQ(v, coeffs) << "n = " << n;
  }
  EXPECT_THROW(EvaluationDomain(12), UsageError);
}

TEST(FftTest, CosetRoundTrip) {
  auto rng = rng_for("coset");
  EvaluationDomain d(32);
  std::vector<Fr> v(32);
  for (auto& c : v) c = Fr::random(rng);
  auto w = v;
  const Fr shift = Fr::from_u64(5);
  coset_fft_in_place(w, d, shift);
  coset_ifft_in_place(w, d, shift);
  EXPECT_EQ(v, w);
}

TEST(GroupFftTest, LagrangeFromPowers) {
  const std::size_t n = 16;
  const Fr tau = Fr::from_u64(123456789);
  std::vector<G1Affine> powers(n);
  Fr t = Fr::one();
  for (auto& p : powers) {
    p = (G1::generator() * t).to_affine();
    t *= tau;
  }
  EvaluationDomain d(n);
  auto lag = lagrange_from_powers<G1Params>(powers, d);
  auto l = d.lagrange_at(tau);
  for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(lag[i], G1::generator() * l[i]);
}

}  // namespace
}  // namespace zkrb::algebra
