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

#ifndef ZKRB_ALGEBRA_FFT_HPP_
#define ZKRB_ALGEBRA_FFT_HPP_

#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "zkrb/algebra/bn254_params.hpp"
#include "zkrb/algebra/fields.hpp"
#include "zkrb/common/error.hpp"
#include "zkrb/common/parallel.hpp"

namespace zkrb::algebra {

/// Multiplicative subgroup of Fr of power-of-two order.
class EvaluationDomain {
 public:
  explicit EvaluationDomain(std::size_t size) : size_(size) {
    if (size == 0 || !std::has_single_bit(size)) {
      throw UsageError("evaluation domain size must be a power of two");
    }
    log_size_ = static_cast<unsigned>(std::countr_zero(size));
    if (log_size_ > Fr::kTwoAdicity) {
      throw CapacityError("evaluation domain size exceeds the field's two-adicity",
                          log_size_);
    }
    // Generator of the full 2-power subgroup, squared down to this size.
    Uint256 e = Fr::kModulus;
    e.sub_in_place(Uint256(1));
    for (unsigned i = 0; i < Fr::kTwoAdicity; ++i) e.shr1();
    Fr g = Fr::from_u64(bn254::kFrGenerator).pow(e);
    for (unsigned i = log_size_; i < Fr::kTwoAdicity; ++i) g = g.square();
    generator_ = g;
    generator_inv_ = g.inverse();
    size_inv_ = Fr::from_u64(size).inverse();
    std::size_t half = std::max<std::size_t>(size / 2, 1);
    twiddles_.resize(half);
    twiddles_inv_.resize(half);
    Fr w = Fr::one(), wi = Fr::one();
    for (std::size_t j = 0; j < half; ++j) {
      twiddles_[j] = w;
      twiddles_inv_[j] = wi;
      w *= generator_;
      wi *= generator_inv_;
    }
  }

  /// Smallest domain holding at least n points.
  static EvaluationDomain at_least(std::size_t n) {
    return EvaluationDomain(std::bit_ceil(std::max<std::size_t>(n, 1)));
  }

  std::size_t size() const { return size_; }
  unsigned log_size() const { return log_size_; }
  const Fr& generator() const { return generator_; }
  const Fr& generator_inv() const { return generator_inv_; }
  const Fr& size_inv() const { return size_inv_; }
  Fr element(std::size_t i) const { return generator_.pow(Uint256(i % size_)); }

  /// Z(x) = x^size - 1.
  Fr vanishing_at(const Fr& x) const {
    Fr p = x;
    for (unsigned i = 0; i < log_size_; ++i) p = p.square();
    return p - Fr::one();
  }

  /// All Lagrange basis polynomials evaluated at x (x outside the domain).
  std::vector<Fr> lagrange_at(const Fr& x) const;

  const std::vector<Fr>& twiddles(bool inverse) const {
    return inverse ? twiddles_inv_ : twiddles_;
  }

 private:
  std::size_t size_;
  unsigned log_size_ = 0;
  Fr generator_, generator_inv_, size_inv_;
  std::vector<Fr> twiddles_, twiddles_inv_;
};

enum class FftDirection { kForward, kInverse };

namespace detail {

template <class T>
void bit_reverse(std::span<T> v) {
  const std::size_t n = v.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
}

}  // namespace detail

/// Radix-2 transform in place over any type with +, - and * Fr. Used for
/// field vectors and for vectors of group elements.
template <class T>
void fft_in_place(std::span<T> v, const EvaluationDomain& domain, FftDirection dir,
                  unsigned workers = 1) {
  const std::size_t n = domain.size();
  if (v.size() != n) throw UsageError("fft: input length does not match domain size");
  const bool inverse = dir == FftDirection::kInverse;
  const auto& tw = domain.twiddles(inverse);
  detail::bit_reverse(v);
  for (std::size_t half = 1; half < n; half <<= 1) {
    const std::size_t stride = n / (2 * half);
    parallel_for(n / 2, workers, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t b = lo; b < hi; ++b) {
        std::size_t j = b % half;
        std::size_t k = (b / half) * 2 * half + j;
        T t = j == 0 ? v[k + half] : v[k + half] * tw[j * stride];
        v[k + half] = v[k] - t;
        v[k] = v[k] + t;
      }
    });
  }
  if (inverse) {
    const Fr& s = domain.size_inv();
    parallel_for(n, workers, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) v[i] = v[i] * s;
    });
  }
}

template <class T>
std::vector<T> fft(std::vector<T> v, const EvaluationDomain& domain,
                   FftDirection dir = FftDirection::kForward, unsigned workers = 1) {
  fft_in_place<T>(std::span<T>(v), domain, dir, workers);
  return v;
}

template <class T>
std::vector<T> ifft(std::vector<T> v, const EvaluationDomain& domain, unsigned workers = 1) {
  return fft<T>(std::move(v), domain, FftDirection::kInverse, workers);
}

/// Evaluates coefficients on the coset shift * H.
inline void coset_fft_in_place(std::span<Fr> v, const EvaluationDomain& domain, const Fr& shift,
                               unsigned workers = 1) {
  Fr s = Fr::one();
  for (auto& x : v) {
    x *= s;
    s *= shift;
  }
  fft_in_place<Fr>(v, domain, FftDirection::kForward, workers);
}

/// Inverse of coset_fft_in_place.
inline void coset_ifft_in_place(std::span<Fr> v, const EvaluationDomain& domain,
                                const Fr& shift, unsigned workers = 1) {
  fft_in_place<Fr>(v, domain, FftDirection::kInverse, workers);
  Fr si = shift.inverse(), s = Fr::one();
  for (auto& x : v) {
    x *= s;
    s *= si;
  }
}

inline std::vector<Fr> EvaluationDomain::lagrange_at(const Fr& x) const {
  // L_i(x) = w^i (x^n - 1) / (n (x - w^i))
  Fr z = vanishing_at(x);
  if (z.is_zero()) {
    std::vector<Fr> out(size_, Fr::zero());
    Fr w = Fr::one();
    for (std::size_t i = 0; i < size_; ++i, w *= generator_) {
      if (w == x) out[i] = Fr::one();
    }
    return out;
  }
  std::vector<Fr> denom(size_);
  Fr w = Fr::one();
  for (std::size_t i = 0; i < size_; ++i, w *= generator_) denom[i] = x - w;
  std::vector<Fr> prefix(size_);
  Fr acc = Fr::one();
  for (std::size_t i = 0; i < size_; ++i) {
    prefix[i] = acc;
    acc *= denom[i];
  }
  Fr inv = acc.inverse();
  for (std::size_t i = size_; i-- > 0;) {
    Fr d = inv * prefix[i];
    inv *= denom[i];
    denom[i] = d;
  }
  Fr scale = z * size_inv_;
  std::vector<Fr> out(size_);
  w = Fr::one();
  for (std::size_t i = 0; i < size_; ++i, w *= generator_) out[i] = scale * w * denom[i];
  return out;
}

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_FFT_HPP_
