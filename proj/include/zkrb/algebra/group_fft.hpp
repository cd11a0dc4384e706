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

#ifndef ZKRB_ALGEBRA_GROUP_FFT_HPP_
#define ZKRB_ALGEBRA_GROUP_FFT_HPP_

#include <span>
#include <vector>

#include "zkrb/algebra/batch_mul.hpp"
#include "zkrb/algebra/fft.hpp"

namespace zkrb::algebra {

/// Radix-2 transform over group elements; the twiddle multiplications of
/// each stage run as one batch.
template <class Params>
void group_fft_in_place(std::span<CurvePoint<Params>> v, const EvaluationDomain& domain,
                        FftDirection dir, unsigned workers = 1) {
  using Point = CurvePoint<Params>;
  const std::size_t n = domain.size();
  if (v.size() != n) throw UsageError("fft: input length does not match domain size");
  const bool inverse = dir == FftDirection::kInverse;
  const auto& tw = domain.twiddles(inverse);
  detail::bit_reverse(v);
  std::vector<Point> pts;
  std::vector<Fr> scal;
  for (std::size_t half = 1; half < n; half <<= 1) {
    const std::size_t stride = n / (2 * half);
    pts.clear();
    scal.clear();
    for (std::size_t b = 0; b < n / 2; ++b) {
      std::size_t j = b % half;
      if (j == 0) continue;
      std::size_t k = (b / half) * 2 * half + j;
      pts.push_back(v[k + half]);
      scal.push_back(tw[j * stride]);
    }
    std::vector<Point> prod = batch_mul<Params>(pts, scal, workers);
    std::size_t next = 0;
    for (std::size_t b = 0; b < n / 2; ++b) {
      std::size_t j = b % half;
      std::size_t k = (b / half) * 2 * half + j;
      Point t = j == 0 ? v[k + half] : prod[next++];
      v[k + half] = v[k] - t;
      v[k] = v[k] + t;
    }
  }
  if (inverse) {
    std::vector<Point> col(v.begin(), v.end());
    const Fr s = domain.size_inv();
    auto scaled = batch_combine<Params>(std::span<const std::vector<Point>>(&col, 1),
                                        std::span<const Fr>(&s, 1), workers);
    std::copy(scaled.begin(), scaled.end(), v.begin());
  }
}

/// L_i(tau) * G for the domain, from the first domain.size() powers
/// tau^i * G.
template <class Params>
std::vector<CurvePoint<Params>> lagrange_from_powers(std::span<const AffinePoint<Params>> powers,
                                                     const EvaluationDomain& domain,
                                                     unsigned workers = 1) {
  if (powers.size() < domain.size()) throw UsageError("not enough powers for the domain");
  std::vector<CurvePoint<Params>> v(domain.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = powers[i].to_jacobian();
  group_fft_in_place<Params>(v, domain, FftDirection::kInverse, workers);
  return v;
}

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_GROUP_FFT_HPP_
