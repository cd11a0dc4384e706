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

#ifndef ZKRB_GROTH16_QAP_HPP_
#define ZKRB_GROTH16_QAP_HPP_

#include <span>
#include <vector>

#include "zkrb/algebra/fft.hpp"
#include "zkrb/common/error.hpp"
#include "zkrb/common/parallel.hpp"
#include "zkrb/r1cs/constraint_system.hpp"

namespace zkrb::groth16 {

using algebra::Fr;

/// Row values of the three QAP polynomials on the evaluation domain. Rows
/// below num_constraints are the constraints; row num_constraints + j adds
/// A = x_j for j <= num_public, which keeps the public-input polynomials
/// linearly independent. Remaining rows are zero.
struct QapRows {
  std::vector<Fr> a, b, c;
};

inline std::size_t qap_domain_size(const r1cs::ConstraintSystem& cs) {
  return cs.stats().domain_size;
}

inline QapRows qap_rows(const r1cs::ConstraintSystem& cs, const r1cs::Witness& w,
                        unsigned workers = 1) {
  if (w.size() != cs.num_variables()) throw UsageError("witness length does not match circuit");
  const std::size_t n = qap_domain_size(cs);
  const std::size_t nc = cs.num_constraints();
  QapRows rows{std::vector<Fr>(n), std::vector<Fr>(n), std::vector<Fr>(n)};
  auto vals = w.values();
  parallel_for(nc, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      auto con = cs.constraint(k);
      rows.a[k] = r1cs::evaluate_terms(con.a, vals);
      rows.b[k] = r1cs::evaluate_terms(con.b, vals);
      rows.c[k] = r1cs::evaluate_terms(con.c, vals);
    }
  });
  for (std::size_t j = 0; j <= cs.num_public(); ++j) rows.a[nc + j] = vals[j];
  return rows;
}

/// Coset shift for the quotient: a generator of Fr*, outside every
/// power-of-two subgroup.
inline Fr qap_coset_shift() { return Fr::from_u64(algebra::bn254::kFrGenerator); }

/// Coefficients h_0 .. h_{N-2} of H = (A B - C) / Z for a satisfying
/// witness. For an unsatisfying witness the division is inexact and the
/// result is meaningless; callers check satisfaction first.
inline std::vector<Fr> compute_h(const r1cs::ConstraintSystem& cs, const r1cs::Witness& w,
                                 unsigned workers = 1) {
  using algebra::FftDirection;
  QapRows rows = qap_rows(cs, w, workers);
  algebra::EvaluationDomain domain(rows.a.size());
  const Fr shift = qap_coset_shift();
  for (auto* v : {&rows.a, &rows.b, &rows.c}) {
    algebra::fft_in_place<Fr>(std::span<Fr>(*v), domain, FftDirection::kInverse, workers);
    algebra::coset_fft_in_place(*v, domain, shift, workers);
  }
  // Z is constant on the coset: (shift * w^k)^N - 1 = shift^N - 1.
  const Fr z_inv = domain.vanishing_at(shift).inverse();
  parallel_for(rows.a.size(), workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      rows.a[k] = (rows.a[k] * rows.b[k] - rows.c[k]) * z_inv;
    }
  });
  algebra::coset_ifft_in_place(rows.a, domain, shift, workers);
  rows.a.resize(rows.a.size() - 1);
  return std::move(rows.a);
}

}  // namespace zkrb::groth16

#endif  // ZKRB_GROTH16_QAP_HPP_
