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

#ifndef ZKRB_GROTH16_CEREMONY_HPP_
#define ZKRB_GROTH16_CEREMONY_HPP_

#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "zkrb/algebra/batch_mul.hpp"
#include "zkrb/algebra/msm.hpp"
#include "zkrb/algebra/pairing.hpp"
#include "zkrb/algebra/serialize.hpp"
#include "zkrb/common/bytes.hpp"
#include "zkrb/common/error.hpp"
#include "zkrb/common/random.hpp"
#include "zkrb/common/sha256.hpp"

namespace zkrb::groth16 {

using algebra::Fr;
using algebra::G1;
using algebra::G1Affine;
using algebra::G2;
using algebra::G2Affine;

inline constexpr unsigned kMinTauN = 2;
inline constexpr unsigned kMaxTauN = 28;
inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{4} << 30;

inline std::size_t tau_g1_count(unsigned n) { return (std::size_t{1} << n) - 1; }
inline std::size_t tau_g2_count(unsigned n) { return std::size_t{1} << n; }

/// Peak bytes of a contribution at size n: input and output accumulators
/// plus one chunk of projective temporaries.
inline std::size_t tau_projected_bytes(unsigned n) {
  const std::size_t acc = tau_g1_count(n) * sizeof(G1Affine) + tau_g2_count(n) * sizeof(G2Affine);
  return 2 * acc + tau_g2_count(n) * sizeof(G2);
}

/// Parses a byte count with an optional K/M/G suffix (powers of 1024).
inline std::size_t parse_byte_size(const std::string& text) {
  if (text.empty()) throw UsageError("empty memory budget");
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("invalid memory budget '" + text + "'");
  }
  std::string suffix = text.substr(pos);
  unsigned shift = 0;
  if (suffix == "K" || suffix == "k" || suffix == "KiB") shift = 10;
  else if (suffix == "M" || suffix == "m" || suffix == "MiB") shift = 20;
  else if (suffix == "G" || suffix == "g" || suffix == "GiB") shift = 30;
  else if (!suffix.empty()) throw UsageError("invalid memory budget suffix '" + suffix + "'");
  return static_cast<std::size_t>(v) << shift;
}

/// Budget from ZKRB_MEMORY_BUDGET, else kDefaultMemoryBudget.
inline std::size_t default_memory_budget() {
  if (const char* env = std::getenv("ZKRB_MEMORY_BUDGET"); env && *env) {
    return parse_byte_size(env);
  }
  return kDefaultMemoryBudget;
}

/// Powers-of-tau accumulator: tau^i * G1 for i < 2^n - 1 and tau^i * G2
/// for i < 2^n, plus the digest of every contribution so far.
struct TauAccumulator {
  unsigned n = 0;
  std::vector<G1Affine> g1;
  std::vector<G2Affine> g2;
  std::vector<Digest> contributions;

  /// Identity of this accumulator state.
  Digest fingerprint() const {
    Sha256 h;
    h.update("zkrb/tau/fingerprint").update_u64(n).update_u64(contributions.size());
    for (const auto& d : contributions) h.update(d);
    return h.finish();
  }

  static constexpr std::string_view kMagic = "ZKRBPTAU";
  static constexpr std::uint32_t kVersion = 1;

  /// magic(8) | version u32 | n u32 | contributions u32 | G1 points raw
  /// (64 bytes each) | G2 points raw (128 bytes each) | digests (32 each).
  Bytes to_bytes() const {
    ByteWriter w;
    w.reserve(20 + g1.size() * algebra::kG1RawBytes + g2.size() * algebra::kG2RawBytes +
              32 * contributions.size());
    w.put(kMagic);
    w.put_u32(kVersion);
    w.put_u32(n);
    w.put_u32(static_cast<std::uint32_t>(contributions.size()));
    for (const auto& p : g1) algebra::put_raw(w, p);
    for (const auto& p : g2) algebra::put_raw(w, p);
    for (const auto& d : contributions) w.put(d);
    return std::move(w).bytes();
  }

  /// Strict decoding; points are checked to lie on their curves. G2
  /// subgroup membership is checked in batch by tau_verify_chain.
  static TauAccumulator from_bytes(std::span<const std::uint8_t> bytes) {
    ByteReader r(bytes);
    r.expect(kMagic);
    if (r.get_u32() != kVersion) throw IntegrityError("unsupported accumulator version");
    TauAccumulator acc;
    acc.n = r.get_u32();
    if (acc.n < kMinTauN || acc.n > kMaxTauN) throw IntegrityError("accumulator size out of range");
    std::uint32_t k = r.get_u32();
    const std::size_t need = tau_g1_count(acc.n) * algebra::kG1RawBytes +
                             tau_g2_count(acc.n) * algebra::kG2RawBytes + 32 * std::size_t{k};
    if (r.remaining() != need) throw IntegrityError("accumulator length does not match header");
    acc.g1.resize(tau_g1_count(acc.n));
    acc.g2.resize(tau_g2_count(acc.n));
    for (auto& p : acc.g1) p = algebra::get_g1_raw(r, true);
    for (auto& p : acc.g2) p = algebra::get_g2_raw(r, false);
    acc.contributions.resize(k);
    for (auto& d : acc.contributions) {
      auto s = r.take(32);
      std::copy(s.begin(), s.end(), d.begin());
    }
    return acc;
  }

  void save(const std::string& path) const { write_file(path, to_bytes()); }
  static TauAccumulator load(const std::string& path) { return from_bytes(read_file(path)); }
};

/// Fresh accumulator with tau = 1. Refuses, before allocating, when the
/// projected peak memory exceeds the budget.
inline TauAccumulator tau_init(unsigned n, std::size_t memory_budget = default_memory_budget()) {
  if (n < kMinTauN || n > kMaxTauN) {
    throw UsageError("tau size n must be in [" + std::to_string(kMinTauN) + ", " +
                     std::to_string(kMaxTauN) + "]");
  }
  const std::size_t projected = tau_projected_bytes(n);
  if (projected > memory_budget) {
    throw BudgetExceeded("tau n=" + std::to_string(n) + " needs " + std::to_string(projected) +
                             " bytes, budget is " + std::to_string(memory_budget),
                         projected, memory_budget);
  }
  TauAccumulator acc;
  acc.n = n;
  acc.g1.assign(tau_g1_count(n), algebra::G1Params::generator());
  acc.g2.assign(tau_g2_count(n), algebra::G2Params::generator());
  return acc;
}

namespace detail {

template <class Params>
void scale_by_powers(std::vector<algebra::AffinePoint<Params>>& pts, const Fr& s, unsigned workers) {
  constexpr std::size_t kChunk = std::size_t{1} << 14;
  Fr start = Fr::one();
  for (std::size_t lo = 0; lo < pts.size(); lo += kChunk) {
    const std::size_t hi = std::min(pts.size(), lo + kChunk);
    std::vector<algebra::CurvePoint<Params>> jac(hi - lo);
    std::vector<Fr> pw(hi - lo);
    Fr cur = start;
    for (std::size_t i = lo; i < hi; ++i) {
      jac[i - lo] = pts[i].to_jacobian();
      pw[i - lo] = cur;
      cur *= s;
    }
    start = cur;
    auto out = algebra::batch_mul<Params>(jac, pw, workers);
    auto aff = algebra::batch_normalize<Params>(out);
    std::copy(aff.begin(), aff.end(), pts.begin() + static_cast<std::ptrdiff_t>(lo));
    secure_zero(pw.data(), pw.size() * sizeof(Fr));
  }
  secure_zero(&start, sizeof(start));
}

inline Digest contribution_digest(const TauAccumulator& acc) {
  Sha256 h;
  h.update("zkrb/tau/contribution");
  h.update(acc.fingerprint());
  ByteWriter w;
  for (std::size_t i = 0; i < acc.g1.size(); ++i) {
    algebra::put_raw(w, acc.g1[i]);
    if (w.bytes().size() > (1 << 20)) {
      h.update(w.bytes());
      w = ByteWriter();
    }
  }
  for (std::size_t i = 0; i < acc.g2.size(); ++i) {
    algebra::put_raw(w, acc.g2[i]);
    if (w.bytes().size() > (1 << 20)) {
      h.update(w.bytes());
      w = ByteWriter();
    }
  }
  h.update(w.bytes());
  return h.finish();
}

}  // namespace detail

/// Pairing-consistency of the whole chain, batched with random linear
/// combinations: g1[0] and g2[0] are the generators, the two groups hold
/// the same tau, and both sequences are geometric in tau.
inline bool tau_verify_chain(const TauAccumulator& acc, unsigned workers = 1) {
  using algebra::multi_pairing;
  if (acc.n < kMinTauN || acc.n > kMaxTauN) return false;
  if (acc.g1.size() != tau_g1_count(acc.n) || acc.g2.size() != tau_g2_count(acc.n)) return false;
  if (!(acc.g1[0] == algebra::G1Params::generator())) return false;
  if (!(acc.g2[0] == algebra::G2Params::generator())) return false;
  for (const auto& p : acc.g1) if (p.infinity) return false;
  for (const auto& q : acc.g2) if (q.infinity) return false;

  const G1Affine g1 = algebra::G1Params::generator();
  const G2Affine g2 = algebra::G2Params::generator();
  auto fp = acc.fingerprint();
  Drbg rng(derive_seed("zkrb/tau/verify", fp));
  auto rho = [&](std::size_t count) {
    std::vector<Fr> r(count);
    for (auto& x : r) {
      x = Fr::from_uint(algebra::Uint256(rng.next_u64(), rng.next_u64(), 0, 0));
    }
    return r;
  };

  // Same tau in both groups.
  {
    G1Affine ps[2] = {acc.g1[1], -g1};
    G2Affine qs[2] = {g2, acc.g2[1]};
    if (!multi_pairing(ps, qs).is_identity()) return false;
  }
  // G1 chain: e(sum r_i g1[i+1], G2) = e(sum r_i g1[i], tau G2).
  {
    const std::size_t m = acc.g1.size() - 1;
    auto r = rho(m);
    std::span<const G1Affine> all(acc.g1);
    auto hi = algebra::msm<algebra::G1Params>(r, all.subspan(1, m), workers).to_affine();
    auto lo = algebra::msm<algebra::G1Params>(r, all.subspan(0, m), workers).to_affine();
    G1Affine ps[2] = {hi, -lo};
    G2Affine qs[2] = {g2, acc.g2[1]};
    if (!multi_pairing(ps, qs).is_identity()) return false;
  }
  // G2 chain: e(G1, sum r_i g2[i+1]) = e(tau G1, sum r_i g2[i]).
  {
    const std::size_t m = acc.g2.size() - 1;
    auto r = rho(m);
    std::span<const G2Affine> all(acc.g2);
    auto hi = algebra::msm<algebra::G2Params>(r, all.subspan(1, m), workers).to_affine();
    auto lo = algebra::msm<algebra::G2Params>(r, all.subspan(0, m), workers).to_affine();
    // Random combinations of points outside the order-r subgroup land
    // outside it with overwhelming probability.
    if (!algebra::in_subgroup(hi) || !algebra::in_subgroup(lo)) return false;
    G1Affine ps[2] = {g1, -acc.g1[1]};
    G2Affine qs[2] = {hi, lo};
    if (!multi_pairing(ps, qs).is_identity()) return false;
  }
  return true;
}

struct ContributeOptions {
  unsigned workers = 1;
  /// Check the incoming chain first (the contribution precondition).
  bool verify_input = true;
};

/// Multiplies power i by s^i for an explicit secret s. Exposed for tests
/// that compose contributions; tau_contribute draws s itself.
inline TauAccumulator contribute_with_secret(const TauAccumulator& acc, const Fr& secret,
                                             const ContributeOptions& opt = {}) {
  if (secret.is_zero()) throw UsageError("contribution secret must be nonzero");
  if (opt.verify_input && !tau_verify_chain(acc, opt.workers)) {
    throw IntegrityError("accumulator fails chain verification");
  }
  TauAccumulator out = acc;
  detail::scale_by_powers(out.g1, secret, opt.workers);
  detail::scale_by_powers(out.g2, secret, opt.workers);
  out.contributions.push_back(detail::contribution_digest(out));
  return out;
}

/// One ceremony contribution: a fresh secret is derived from the caller's
/// entropy and the process randomness policy, used, and erased.
inline TauAccumulator tau_contribute(const TauAccumulator& acc, std::span<const std::uint8_t> entropy,
                                     const ContributeOptions& opt = {}) {
  Zeroizing<Fr> secret;
  {
    Drbg rng(derive_seed("zkrb/tau/contribute", entropy));
    *secret = Fr::random_nonzero(rng);
  }
  return contribute_with_secret(acc, *secret, opt);
}

}  // namespace zkrb::groth16

#endif  // ZKRB_GROTH16_CEREMONY_HPP_
