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

#ifndef ZKRB_ALGEBRA_MSM_HPP_
#define ZKRB_ALGEBRA_MSM_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "zkrb/algebra/bn254.hpp"
#include "zkrb/algebra/counters.hpp"
#include "zkrb/common/error.hpp"
#include "zkrb/common/parallel.hpp"

namespace zkrb::algebra {

/// Bucket window width for an input of n terms.
inline unsigned msm_window(std::size_t n) {
  if (n < 32) return 3;
  unsigned lg = static_cast<unsigned>(std::bit_width(n)) - 1;
  return lg * 69 / 100 + 2;
}

namespace detail {

// Signed base-2^c recoding with digits in (-2^(c-1), 2^(c-1)].
inline void signed_digits(const Uint256& k, unsigned c, unsigned windows, std::int32_t* out) {
  const std::int64_t full = std::int64_t{1} << c;
  const std::int64_t half = full >> 1;
  std::int64_t carry = 0;
  for (unsigned w = 0; w < windows; ++w) {
    std::int64_t d = static_cast<std::int64_t>(k.bits(w * c, c)) + carry;
    if (d > half) {
      d -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    out[w] = static_cast<std::int32_t>(d);
  }
}

template <class Params>
CurvePoint<Params> msm_window_sum(std::span<const AffinePoint<Params>> points,
                                  const std::vector<std::int32_t>& digits, unsigned windows,
                                  unsigned w, unsigned c) {
  using Point = CurvePoint<Params>;
  std::vector<Point> buckets(std::size_t{1} << (c - 1));
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::int32_t d = digits[i * windows + w];
    if (d > 0) {
      buckets[static_cast<std::size_t>(d - 1)] += points[i];
    } else if (d < 0) {
      buckets[static_cast<std::size_t>(-d - 1)] += -points[i];
    }
  }
  Point running, sum;
  for (std::size_t b = buckets.size(); b-- > 0;) {
    running += buckets[b];
    sum += running;
  }
  return sum;
}

}  // namespace detail

/// Multi-scalar multiplication by the bucket method. The result does not
/// depend on the worker count.
template <class Params>
CurvePoint<Params> msm(std::span<const Fr> scalars, std::span<const AffinePoint<Params>> points,
                       unsigned workers = 1) {
  using Point = CurvePoint<Params>;
  if (scalars.size() != points.size()) {
    throw UsageError("msm: scalar and point lists differ in length");
  }
  auto& ctr = counters();
  ++ctr.msm_calls;
  ctr.msm_terms += scalars.size();
  ctr.last_msm_length = scalars.size();
  const std::size_t n = scalars.size();
  if (n == 0) return Point::identity();

  const unsigned c = msm_window(n);
  const unsigned windows = (Fr::kBits + 1 + c - 1) / c;
  std::vector<std::int32_t> digits(n * windows);
  parallel_for(n, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      Uint256 k = points[i].infinity ? Uint256{} : scalars[i].to_uint();
      detail::signed_digits(k, c, windows, &digits[i * windows]);
    }
  });

  std::vector<Point> partial(windows);
  parallel_for(windows, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t w = lo; w < hi; ++w) {
      partial[w] = detail::msm_window_sum<Params>(points, digits, windows,
                                                  static_cast<unsigned>(w), c);
    }
  });

  Point acc;
  for (std::size_t w = windows; w-- > 0;) {
    for (unsigned i = 0; i < c; ++i) acc = acc.doubled();
    acc += partial[w];
  }
  return acc;
}

template <class Params>
CurvePoint<Params> msm(const std::vector<Fr>& scalars,
                       const std::vector<AffinePoint<Params>>& points, unsigned workers = 1) {
  return msm<Params>(std::span<const Fr>(scalars), std::span<const AffinePoint<Params>>(points),
                     workers);
}

/// Reference accumulation used as a test oracle.
template <class Params>
CurvePoint<Params> msm_naive(std::span<const Fr> scalars,
                             std::span<const AffinePoint<Params>> points) {
  if (scalars.size() != points.size()) {
    throw UsageError("msm: scalar and point lists differ in length");
  }
  CurvePoint<Params> acc;
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    acc += points[i].to_jacobian().mul(scalars[i].to_uint());
  }
  return acc;
}

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_MSM_HPP_
