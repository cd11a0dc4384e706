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

#ifndef ZKRB_ALGEBRA_BATCH_MUL_HPP_
#define ZKRB_ALGEBRA_BATCH_MUL_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "zkrb/algebra/bn254.hpp"
#include "zkrb/common/error.hpp"
#include "zkrb/common/parallel.hpp"

namespace zkrb::algebra {

template <class Params>
struct Endomorphism;

template <>
struct Endomorphism<G1Params> {
  static endo::SplitScalar split(const Fr& k) { return endo::split_g1(k); }
  static G1Affine map(const G1Affine& a) {
    return a.infinity ? a : G1Affine{a.x * g1_beta(), a.y, false};
  }
};

template <>
struct Endomorphism<G2Params> {
  static endo::SplitScalar split(const Fr& k) { return endo::split_g2(k); }
  static G2Affine map(const G2Affine& a) { return g2_psi(a); }
};

/// wNAF recoding of both halves of an endomorphism-split scalar.
struct SplitDigits {
  std::vector<std::int8_t> d0, d1;
  bool neg0 = false, neg1 = false;
};

template <class Params>
SplitDigits split_digits(const Fr& k) {
  auto s = Endomorphism<Params>::split(k);
  return {wnaf_digits(s.k0, detail::kEndoWindow), wnaf_digits(s.k1, detail::kEndoWindow), s.neg0,
          s.neg1};
}

namespace detail {

inline constexpr std::size_t kBatchChunk = 128;

/// out[i] = sum_t scalar(i, t) * point(i, t) for t < terms. Lookup tables
/// for a whole chunk share one field inversion.
template <class Params, class PointFn, class DigitsFn>
void batch_mul_chunk(std::size_t lo, std::size_t hi, unsigned terms, PointFn&& point,
                     DigitsFn&& digits, std::vector<CurvePoint<Params>>& out) {
  using Point = CurvePoint<Params>;
  using Affine = AffinePoint<Params>;
  constexpr std::size_t kTable = std::size_t{1} << (kEndoWindow - 2);
  const std::size_t count = (hi - lo) * terms;
  std::vector<Point> jac(count * kTable);
  for (std::size_t i = lo; i < hi; ++i) {
    for (unsigned t = 0; t < terms; ++t) {
      Point* tab = &jac[((i - lo) * terms + t) * kTable];
      const Point& p = point(i, t);
      tab[0] = p;
      if (p.is_identity()) continue;
      Point twice = p.doubled();
      for (std::size_t k = 1; k < kTable; ++k) tab[k] = tab[k - 1] + twice;
    }
  }
  std::vector<Affine> aff = batch_normalize<Params>(jac);
  std::vector<std::vector<std::int8_t>> ds;
  std::vector<std::vector<Affine>> tables;
  ds.reserve(2 * terms);
  tables.reserve(2 * terms);
  for (std::size_t i = lo; i < hi; ++i) {
    ds.clear();
    tables.clear();
    for (unsigned t = 0; t < terms; ++t) {
      const Affine* tab = &aff[((i - lo) * terms + t) * kTable];
      if (tab[0].infinity) continue;
      const SplitDigits& sd = digits(i, t);
      std::vector<Affine> base(tab, tab + kTable), mapped(kTable);
      for (std::size_t k = 0; k < kTable; ++k) mapped[k] = Endomorphism<Params>::map(base[k]);
      if (sd.neg0) for (auto& q : base) q = -q;
      if (sd.neg1) for (auto& q : mapped) q = -q;
      ds.push_back(sd.d0);
      tables.push_back(std::move(base));
      ds.push_back(sd.d1);
      tables.push_back(std::move(mapped));
    }
    out[i] = wnaf_combine<Params>(ds, tables);
  }
}

}  // namespace detail

/// out[i] = scalars[i] * points[i].
template <class Params>
std::vector<CurvePoint<Params>> batch_mul(std::span<const CurvePoint<Params>> points,
                                          std::span<const Fr> scalars, unsigned workers = 1) {
  if (points.size() != scalars.size()) throw UsageError("batch_mul: length mismatch");
  std::vector<CurvePoint<Params>> out(points.size());
  const std::size_t chunks = (points.size() + detail::kBatchChunk - 1) / detail::kBatchChunk;
  parallel_for(chunks, workers, [&](std::size_t c0, std::size_t c1) {
    for (std::size_t c = c0; c < c1; ++c) {
      std::size_t lo = c * detail::kBatchChunk;
      std::size_t hi = std::min(points.size(), lo + detail::kBatchChunk);
      std::vector<SplitDigits> sd(hi - lo);
      for (std::size_t i = lo; i < hi; ++i) sd[i - lo] = split_digits<Params>(scalars[i]);
      detail::batch_mul_chunk<Params>(
          lo, hi, 1, [&](std::size_t i, unsigned) -> const CurvePoint<Params>& { return points[i]; },
          [&](std::size_t i, unsigned) -> const SplitDigits& { return sd[i - lo]; }, out);
    }
  });
  return out;
}

/// out[i] = sum_t scalars[t] * columns[t][i]: a few fixed scalars applied
/// to many points, recoded once.
template <class Params>
std::vector<CurvePoint<Params>> batch_combine(
    std::span<const std::vector<CurvePoint<Params>>> columns, std::span<const Fr> scalars,
    unsigned workers = 1) {
  if (columns.size() != scalars.size() || columns.empty()) {
    throw UsageError("batch_combine: one scalar per column required");
  }
  const std::size_t n = columns[0].size();
  for (const auto& c : columns) {
    if (c.size() != n) throw UsageError("batch_combine: columns differ in length");
  }
  std::vector<SplitDigits> sd;
  for (const Fr& s : scalars) sd.push_back(split_digits<Params>(s));
  std::vector<CurvePoint<Params>> out(n);
  const auto terms = static_cast<unsigned>(columns.size());
  const std::size_t chunks = (n + detail::kBatchChunk - 1) / detail::kBatchChunk;
  parallel_for(chunks, workers, [&](std::size_t c0, std::size_t c1) {
    for (std::size_t c = c0; c < c1; ++c) {
      std::size_t lo = c * detail::kBatchChunk;
      std::size_t hi = std::min(n, lo + detail::kBatchChunk);
      detail::batch_mul_chunk<Params>(
          lo, hi, terms,
          [&](std::size_t i, unsigned t) -> const CurvePoint<Params>& { return columns[t][i]; },
          [&](std::size_t, unsigned t) -> const SplitDigits& { return sd[t]; }, out);
    }
  });
  return out;
}

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_BATCH_MUL_HPP_
