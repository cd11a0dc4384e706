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

#ifndef ZKRB_R1CS_GADGETS_HPP_
#define ZKRB_R1CS_GADGETS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "zkrb/r1cs/constraint_system.hpp"
#include "zkrb/r1cs/mimc.hpp"

namespace zkrb::r1cs {

/// Exact constraint counts of each gadget.
inline constexpr std::size_t kBooleanConstraints = 1;
inline constexpr std::size_t kIsZeroConstraints = 2;
inline constexpr std::size_t kHash2Constraints = 3 * Mimc::kRounds;
/// One Merkle level: the child-order mux plus one compression.
inline constexpr std::size_t kMerkleLevelConstraints = 1 + kHash2Constraints;

constexpr std::size_t merkle_verify_constraints(std::size_t depth) {
  return depth * (kMerkleLevelConstraints + kBooleanConstraints) + 1;
}
constexpr std::size_t range_check_constraints(unsigned bits) { return bits + 1; }

/// b * (1 - b) = 0
inline void enforce_boolean(ConstraintSystem& cs, Variable b) {
  cs.enforce(b, LC(Fr::one()) - b, LC());
}

/// Allocates the low `count` bits of `value` as boolean-constrained private
/// variables, least significant first.
inline std::vector<Variable> alloc_bits(ConstraintSystem& cs, const Fr* value, unsigned count) {
  std::vector<Variable> bits;
  bits.reserve(count);
  algebra::Uint256 v = value != nullptr ? value->to_uint() : algebra::Uint256{};
  for (unsigned i = 0; i < count; ++i) {
    Variable b = cs.has_values() ? cs.alloc_private(Fr::from_u64(v.bit(i) ? 1 : 0))
                                 : cs.alloc_private();
    enforce_boolean(cs, b);
    bits.push_back(b);
  }
  return bits;
}

/// sum 2^i * bits[i]
inline LC pack_bits(std::span<const Variable> bits) {
  LC out;
  Fr pow = Fr::one();
  for (Variable b : bits) {
    out.add(b.index, pow);
    pow = pow.doubled();
  }
  return out;
}

/// Constrains a fresh variable to H(left, right); 330 constraints.
inline Variable hash2(ConstraintSystem& cs, const LC& left, const LC& right) {
  const auto& c = Mimc::constants();
  const bool wit = cs.has_values();
  Fr key_v, x_v;
  if (wit) {
    key_v = cs.value(left);
    x_v = cs.value(right);
  }
  LC x = right;
  for (unsigned i = 0; i < Mimc::kRounds; ++i) {
    LC t = x + left + LC(c[i]);
    Fr t_v;
    if (wit) t_v = x_v + key_v + c[i];
    Variable t2 = wit ? cs.alloc_private(t_v.square()) : cs.alloc_private();
    cs.enforce(t, t, t2);
    Variable t4 = wit ? cs.alloc_private(cs.value(t2).square()) : cs.alloc_private();
    cs.enforce(t2, t2, t4);
    if (i + 1 < Mimc::kRounds) {
      if (wit) x_v = cs.value(t4) * t_v;
      Variable next = wit ? cs.alloc_private(x_v) : cs.alloc_private();
      cs.enforce(t4, t, next);
      x = next;
    } else {
      // out = t4 * t + key + left + right, with key = left.
      Fr out_v;
      if (wit) out_v = cs.value(t4) * t_v + key_v.doubled() + cs.value(right);
      Variable out = wit ? cs.alloc_private(out_v) : cs.alloc_private();
      cs.enforce(t4, t, LC(out) - left * Fr::from_u64(2) - right);
      return out;
    }
  }
  return Variable{};  // unreachable
}

/// Folds `leaf` up a path whose direction bits are already boolean
/// constrained (bit 1: the running node is the right child). Returns the
/// computed root; depth * 331 constraints.
inline Variable merkle_root(ConstraintSystem& cs, const LC& leaf, std::span<const Variable> siblings,
                            std::span<const Variable> bits) {
  if (siblings.size() != bits.size() || siblings.empty()) {
    throw UsageError("merkle path and direction bits must be non-empty and equal in length");
  }
  LC cur = leaf;
  Variable node{};
  for (std::size_t level = 0; level < siblings.size(); ++level) {
    const Variable sib = siblings[level];
    const Variable bit = bits[level];
    // left = cur + bit * (sib - cur); right = cur + sib - left
    Variable left = cs.alloc_private_with([&] {
      return cs.value(bit).is_zero() ? cs.value(cur) : cs.value(sib);
    });
    cs.enforce(bit, LC(sib) - cur, LC(left) - cur);
    LC right = cur + sib - left;
    node = hash2(cs, left, right);
    cur = node;
  }
  return node;
}

struct PathElement {
  Variable sibling;
  Variable direction;
};

/// Constrains `root` to be the fold of `leaf` along `path`, including
/// booleanity of each direction bit; depth * 332 + 1 constraints.
inline void merkle_verify(ConstraintSystem& cs, const LC& leaf, std::span<const PathElement> path,
                          const LC& root) {
  std::vector<Variable> siblings, bits;
  for (const auto& e : path) {
    enforce_boolean(cs, e.direction);
    siblings.push_back(e.sibling);
    bits.push_back(e.direction);
  }
  Variable computed = merkle_root(cs, leaf, siblings, bits);
  cs.enforce(computed, Fr::one(), root);
}

/// Constrains x to [0, 2^bits); returns the bit decomposition.
inline std::vector<Variable> range_check(ConstraintSystem& cs, const LC& x, unsigned bits) {
  if (bits == 0 || bits > Fr::kBits - 2) {
    throw UsageError("range check width must be in [1, field bits - 2]");
  }
  Fr v;
  if (cs.has_values()) v = cs.value(x);
  auto decomposition = alloc_bits(cs, cs.has_values() ? &v : nullptr, bits);
  cs.enforce(pack_bits(decomposition), Fr::one(), x);
  return decomposition;
}

/// Returns a variable equal to 1 when x = 0 and 0 otherwise.
inline Variable is_zero(ConstraintSystem& cs, const LC& x) {
  Fr v;
  if (cs.has_values()) v = cs.value(x);
  Variable inv = cs.alloc_private_with([&] { return v.is_zero() ? Fr::zero() : v.inverse(); });
  Variable out = cs.alloc_private_with([&] { return v.is_zero() ? Fr::one() : Fr::zero(); });
  cs.enforce(x, inv, LC(Fr::one()) - out);
  cs.enforce(x, out, LC());
  return out;
}

}  // namespace zkrb::r1cs

#endif  // ZKRB_R1CS_GADGETS_HPP_
