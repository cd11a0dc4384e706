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

#ifndef ZKRB_GROTH16_SETUP_HPP_
#define ZKRB_GROTH16_SETUP_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "zkrb/algebra/batch_mul.hpp"
#include "zkrb/algebra/msm.hpp"
#include "zkrb/common/parallel.hpp"
#include "zkrb/common/random.hpp"
#include "zkrb/groth16/ceremony.hpp"
#include "zkrb/groth16/keys.hpp"
#include "zkrb/groth16/prepared.hpp"
#include "zkrb/groth16/qap.hpp"
#include "zkrb/r1cs/constraint_system.hpp"

namespace zkrb::groth16 {

struct KeyPair {
  ProvingKey pk;
  VerifyingKey vk;
};

struct SetupOptions {
  unsigned workers = 1;
  /// Re-run tau_verify_chain before use. Off by default since the chain is
  /// normally verified once when the accumulator is loaded.
  bool verify_accumulator = false;
};

namespace detail {

enum class Matrix { kA, kB, kC };

/// Adds coeff * p to acc, using cheap paths for the small coefficients
/// that dominate real circuits. Returns false when the coefficient is
/// large and the term must be deferred to a multi-scalar multiplication.
template <class Params>
bool add_small_multiple(algebra::CurvePoint<Params>& acc, const algebra::AffinePoint<Params>& p,
                        const Fr& coeff) {
  auto small = [](const algebra::Uint256& v) { return v.num_bits() <= 64; };
  algebra::Uint256 k = coeff.to_uint();
  bool negate = false;
  if (!small(k)) {
    k = (-coeff).to_uint();
    if (!small(k)) return false;
    negate = true;
  }
  const std::uint64_t v = k.limb[0];
  algebra::CurvePoint<Params> term;
  if (v == 1) {
    acc += negate ? -p : p;
    return true;
  }
  if (std::has_single_bit(v)) {
    term = p.to_jacobian();
    for (int i = std::countr_zero(v); i > 0; --i) term = term.doubled();
  } else {
    term = p.to_jacobian().mul(k);
  }
  acc += negate ? -term : term;
  return true;
}

/// Per-variable sums sum_k m[k][i] * basis[k] for one matrix, including the
/// public-input rows for A.
template <class Params>
std::vector<algebra::CurvePoint<Params>> evaluate_at_basis(
    const r1cs::ConstraintSystem& cs, Matrix which,
    std::span<const algebra::AffinePoint<Params>> basis, unsigned workers) {
  using Point = algebra::CurvePoint<Params>;
  const std::size_t nv = cs.num_variables();
  const std::size_t nc = cs.num_constraints();
  std::vector<Point> acc(nv);
  std::map<std::uint32_t, std::pair<std::vector<Fr>, std::vector<algebra::AffinePoint<Params>>>>
      deferred;
  for (std::size_t k = 0; k < nc; ++k) {
    auto con = cs.constraint(k);
    auto terms = which == Matrix::kA ? con.a : which == Matrix::kB ? con.b : con.c;
    for (const auto& t : terms) {
      if (!add_small_multiple(acc[t.index], basis[k], t.coeff)) {
        auto& d = deferred[t.index];
        d.first.push_back(t.coeff);
        d.second.push_back(basis[k]);
      }
    }
  }
  if (which == Matrix::kA) {
    for (std::size_t j = 0; j <= cs.num_public(); ++j) acc[j] += basis[nc + j];
  }
  for (auto& [index, d] : deferred) {
    acc[index] += algebra::msm<Params>(d.first, d.second, workers);
  }
  return acc;
}

template <class Params>
std::vector<algebra::CurvePoint<Params>> slice(const std::vector<algebra::CurvePoint<Params>>& v,
                                               std::size_t lo, std::size_t hi) {
  return {v.begin() + static_cast<std::ptrdiff_t>(lo), v.begin() + static_cast<std::ptrdiff_t>(hi)};
}

struct SetupSecrets {
  Fr alpha, beta, gamma, delta;
};

}  // namespace detail

/// Circuit-specific key generation from a powers-of-tau accumulator. The
/// circuit must be finalized; alpha, beta, gamma and delta are derived from
/// setup_entropy (plus system randomness outside deterministic mode) and
/// erased before returning.
inline KeyPair setup(const TauAccumulator& acc, const r1cs::ConstraintSystem& cs,
                     std::span<const std::uint8_t> setup_entropy, const SetupOptions& opt = {}) {
  using algebra::G1Params;
  using algebra::G2Params;
  if (!cs.finalized()) throw UsageError("setup requires a finalized constraint system");
  const std::size_t n = qap_domain_size(cs);
  check_capacity(acc, n);
  if (opt.verify_accumulator && !tau_verify_chain(acc, opt.workers)) {
    throw IntegrityError("accumulator fails chain verification");
  }
  auto prepared = PreparedCache::instance().get(acc, n, opt.workers);
  const unsigned workers = opt.workers;
  const std::size_t nv = cs.num_variables();
  const std::size_t np = cs.num_public();

  Zeroizing<detail::SetupSecrets> sec;
  {
    Drbg rng(derive_seed("zkrb/groth16/setup", setup_entropy));
    sec->alpha = Fr::random_nonzero(rng);
    sec->beta = Fr::random_nonzero(rng);
    sec->gamma = Fr::random_nonzero(rng);
    sec->delta = Fr::random_nonzero(rng);
  }

  std::vector<G1> a_acc, b1_acc, c_acc;
  std::vector<G2> b2_acc;
  parallel_for(4, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t task = lo; task < hi; ++task) {
      switch (task) {
        case 0:
          a_acc = detail::evaluate_at_basis<G1Params>(cs, detail::Matrix::kA,
                                                      prepared->lagrange_g1, 1);
          break;
        case 1:
          b1_acc = detail::evaluate_at_basis<G1Params>(cs, detail::Matrix::kB,
                                                       prepared->lagrange_g1, 1);
          break;
        case 2:
          c_acc = detail::evaluate_at_basis<G1Params>(cs, detail::Matrix::kC,
                                                      prepared->lagrange_g1, 1);
          break;
        default:
          b2_acc = detail::evaluate_at_basis<G2Params>(cs, detail::Matrix::kB,
                                                       prepared->lagrange_g2, 1);
      }
    }
  });

  KeyPair kp;
  ProvingKey& pk = kp.pk;
  VerifyingKey& vk = pk.vk;
  const G1 g1 = G1::generator();
  const G2 g2 = G2::generator();
  vk.alpha_g1 = (g1 * sec->alpha).to_affine();
  vk.beta_g2 = (g2 * sec->beta).to_affine();
  vk.gamma_g2 = (g2 * sec->gamma).to_affine();
  vk.delta_g2 = (g2 * sec->delta).to_affine();
  pk.beta_g1 = (g1 * sec->beta).to_affine();
  pk.delta_g1 = (g1 * sec->delta).to_affine();
  pk.domain_size = n;

  {
    Zeroizing<std::array<Fr, 3>> s;
    const Fr gi = sec->gamma.inverse();
    *s = {sec->beta * gi, sec->alpha * gi, gi};
    const std::vector<G1> cols[3] = {detail::slice(a_acc, 0, np + 1),
                                     detail::slice(b1_acc, 0, np + 1),
                                     detail::slice(c_acc, 0, np + 1)};
    vk.ic = algebra::batch_normalize<G1Params>(
        algebra::batch_combine<G1Params>(cols, std::span<const Fr>(*s), workers));
  }
  {
    Zeroizing<std::array<Fr, 3>> s;
    const Fr di = sec->delta.inverse();
    *s = {sec->beta * di, sec->alpha * di, di};
    std::vector<G1> cols[3] = {detail::slice(a_acc, np + 1, nv), detail::slice(b1_acc, np + 1, nv),
                               detail::slice(c_acc, np + 1, nv)};
    c_acc.clear();
    c_acc.shrink_to_fit();
    pk.l_query = algebra::batch_normalize<G1Params>(
        algebra::batch_combine<G1Params>(cols, std::span<const Fr>(*s), workers));
  }
  pk.a_query = algebra::batch_normalize<G1Params>(a_acc);
  pk.b_g1_query = algebra::batch_normalize<G1Params>(b1_acc);
  pk.b_g2_query = algebra::batch_normalize<G2Params>(b2_acc);
  {
    // tau^j (tau^N - 1) / delta from the raw powers.
    std::vector<G1> z(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) z[j] = acc.g1[j + n].to_jacobian() + (-acc.g1[j]);
    Zeroizing<Fr> di(sec->delta.inverse());
    std::vector<Fr> scal(n - 1, *di);
    pk.h_query =
        algebra::batch_normalize<G1Params>(algebra::batch_mul<G1Params>(z, scal, workers));
    secure_zero(scal.data(), scal.size() * sizeof(Fr));
  }
  kp.vk = vk;
  return kp;
}

}  // namespace zkrb::groth16

#endif  // ZKRB_GROTH16_SETUP_HPP_
