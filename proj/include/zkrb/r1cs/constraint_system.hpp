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

#ifndef ZKRB_R1CS_CONSTRAINT_SYSTEM_HPP_
#define ZKRB_R1CS_CONSTRAINT_SYSTEM_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zkrb/algebra/fields.hpp"
#include "zkrb/common/error.hpp"
#include "zkrb/common/parallel.hpp"

namespace zkrb::r1cs {

using algebra::Fr;

enum class Visibility : std::uint8_t { kOne, kPublic, kPrivate };

/// Index into the assignment vector. Index 0 is the constant one; public
/// variables occupy 1..num_public.
struct Variable {
  std::uint32_t index = 0;
  Visibility visibility = Visibility::kOne;

  static constexpr Variable one() { return {0, Visibility::kOne}; }
  bool operator==(const Variable& o) const { return index == o.index; }
};

struct Term {
  std::uint32_t index;
  Fr coeff;
};

/// Sparse linear combination, kept sorted by variable index with no zero
/// coefficients.
class LinearCombination {
 public:
  LinearCombination() = default;
  LinearCombination(Variable v) : terms_{{v.index, Fr::one()}} {}  // NOLINT
  LinearCombination(const Fr& constant) {                           // NOLINT
    if (!constant.is_zero()) terms_.push_back({0, constant});
  }
  static LinearCombination constant(std::uint64_t c) { return LinearCombination(Fr::from_u64(c)); }

  LinearCombination& add(std::uint32_t index, const Fr& coeff) {
    if (coeff.is_zero()) return *this;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const Term& t, std::uint32_t i) { return t.index < i; });
    if (it != terms_.end() && it->index == index) {
      it->coeff += coeff;
      if (it->coeff.is_zero()) terms_.erase(it);
    } else {
      terms_.insert(it, {index, coeff});
    }
    return *this;
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& t : o.terms_) add(t.index, t.coeff);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& t : o.terms_) add(t.index, -t.coeff);
    return *this;
  }
  LinearCombination& operator*=(const Fr& k) {
    if (k.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coeff *= k;
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator*(LinearCombination a, const Fr& k) { return a *= k; }
  friend LinearCombination operator*(const Fr& k, LinearCombination a) { return a *= k; }
  LinearCombination operator-() const { return *this * -Fr::one(); }

  Fr evaluate(std::span<const Fr> values) const {
    Fr acc = Fr::zero();
    for (const auto& t : terms_) acc += t.coeff * values[t.index];
    return acc;
  }

  std::span<const Term> terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool operator==(const LinearCombination& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].index != o.terms_[i].index || !(terms_[i].coeff == o.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<Term> terms_;
};

using LC = LinearCombination;

struct ConstraintStats {
  std::size_t num_constraints = 0;
  std::size_t num_public = 0;
  std::size_t num_private = 0;
  std::size_t domain_size = 1;

  std::size_t num_variables() const { return 1 + num_public + num_private; }
  bool operator==(const ConstraintStats&) const = default;
};

/// Full assignment vector; values[0] is always one.
class Witness {
 public:
  Witness() : values_{Fr::one()} {}
  explicit Witness(std::vector<Fr> values) : values_(std::move(values)) {
    if (values_.empty() || !values_[0].is_one()) {
      throw UsageError("witness slot 0 must hold the constant one");
    }
  }
  std::size_t size() const { return values_.size(); }
  const Fr& operator[](std::size_t i) const { return values_.at(i); }
  Fr& operator[](std::size_t i) { return values_.at(i); }
  std::span<const Fr> values() const { return values_; }
  std::span<const Fr> public_inputs(std::size_t num_public) const {
    return std::span<const Fr>(values_).subspan(1, num_public);
  }

 private:
  std::vector<Fr> values_;
};

/// Sparse view of one constraint <a, w> * <b, w> = <c, w>.
struct ConstraintView {
  std::span<const Term> a, b, c;
};

inline Fr evaluate_terms(std::span<const Term> terms, std::span<const Fr> w) {
  Fr acc = Fr::zero();
  for (const auto& t : terms) acc += t.coeff * w[t.index];
  return acc;
}

/// Rank-1 constraint system builder. In witness mode every allocation
/// carries a value, so gadgets compute the assignment while they emit
/// constraints.
class ConstraintSystem {
 public:
  enum class Mode { kShape, kWitness };

  explicit ConstraintSystem(Mode mode = Mode::kShape) : mode_(mode) {
    if (mode_ == Mode::kWitness) values_.push_back(Fr::one());
    offsets_.push_back(0);
  }

  bool has_values() const { return mode_ == Mode::kWitness; }
  bool finalized() const { return finalized_; }

  Variable alloc(Visibility vis, std::optional<Fr> value = std::nullopt) {
    require_open("alloc");
    if (vis == Visibility::kOne) throw UsageError("the constant-one variable is implicit");
    if (vis == Visibility::kPublic && num_private_ > 0) {
      throw UsageError("public variables must be allocated before private ones");
    }
    if (has_values()) {
      if (!value) throw WitnessError("witness-mode allocation without a value");
      values_.push_back(*value);
    }
    if (vis == Visibility::kPublic) {
      ++num_public_;
    } else {
      ++num_private_;
    }
    return {static_cast<std::uint32_t>(1 + num_public_ + num_private_ - 1), vis};
  }
  Variable alloc_public(std::optional<Fr> value = std::nullopt) {
    return alloc(Visibility::kPublic, value);
  }
  Variable alloc_private(std::optional<Fr> value = std::nullopt) {
    return alloc(Visibility::kPrivate, value);
  }
  /// Allocates a private variable whose value is computed lazily only in
  /// witness mode.
  template <class Fn>
  Variable alloc_private_with(Fn&& compute) {
    if (has_values()) return alloc_private(compute());
    return alloc_private();
  }

  void enforce(const LC& a, const LC& b, const LC& c) {
    require_open("enforce");
    const std::size_t nvars = num_variables();
    for (const LC* lc : {&a, &b, &c}) {
      for (const auto& t : lc->terms()) {
        if (t.index >= nvars) throw UsageError("constraint references an unallocated variable");
      }
      terms_.insert(terms_.end(), lc->terms().begin(), lc->terms().end());
      offsets_.push_back(static_cast<std::uint64_t>(terms_.size()));
    }
  }

  /// Value of a linear combination under the witness-in-progress.
  Fr value(const LC& lc) const {
    if (!has_values()) throw UsageError("constraint system carries no witness values");
    return lc.evaluate(values_);
  }
  Fr value(Variable v) const {
    if (!has_values()) throw UsageError("constraint system carries no witness values");
    return values_[v.index];
  }

  ConstraintStats finalize() {
    if (finalized_) throw UsageError("constraint system already finalized");
    finalized_ = true;
    return stats();
  }

  ConstraintStats stats() const {
    ConstraintStats s;
    s.num_constraints = num_constraints();
    s.num_public = num_public_;
    s.num_private = num_private_;
    s.domain_size = std::bit_ceil(s.num_constraints + s.num_public + 1);
    return s;
  }

  std::size_t num_constraints() const { return (offsets_.size() - 1) / 3; }
  std::size_t num_public() const { return num_public_; }
  std::size_t num_private() const { return num_private_; }
  std::size_t num_variables() const { return 1 + num_public_ + num_private_; }
  std::size_t num_terms() const { return terms_.size(); }

  ConstraintView constraint(std::size_t i) const {
    auto span = [&](std::size_t k) {
      return std::span<const Term>(terms_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]);
    };
    return {span(3 * i), span(3 * i + 1), span(3 * i + 2)};
  }

  /// The assignment accumulated in witness mode.
  Witness witness() const {
    if (!has_values()) throw UsageError("constraint system carries no witness values");
    return Witness(values_);
  }

  /// Index of the first violated constraint, if any.
  std::optional<std::size_t> first_unsatisfied(const Witness& w, unsigned workers = 1) const {
    require_finalized("is_satisfied");
    if (w.size() != num_variables()) {
      throw UsageError("witness length does not match the constraint system");
    }
    const std::size_t n = num_constraints();
    std::vector<std::size_t> bad;
    std::mutex mu;
    auto vals = w.values();
    parallel_for(n, workers, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        auto c = constraint(i);
        if (!(evaluate_terms(c.a, vals) * evaluate_terms(c.b, vals) == evaluate_terms(c.c, vals))) {
          std::lock_guard lock(mu);
          bad.push_back(i);
          return;
        }
      }
    });
    if (bad.empty()) return std::nullopt;
    return *std::min_element(bad.begin(), bad.end());
  }

  bool is_satisfied(const Witness& w, unsigned workers = 1) const {
    return !first_unsatisfied(w, workers).has_value();
  }

  /// Line-oriented text dump: a header line, then one line per constraint
  /// of the form "A idx:coeff ... ; B ... ; C ...". Coefficients print as
  /// signed decimals when the negation is shorter.
  void dump(std::ostream& out) const {
    out << "r1cs constraints=" << num_constraints() << " public=" << num_public_
        << " private=" << num_private_ << "\n";
    for (std::size_t i = 0; i < num_constraints(); ++i) {
      auto c = constraint(i);
      const char* names[3] = {"A", "B", "C"};
      std::span<const Term> parts[3] = {c.a, c.b, c.c};
      for (int k = 0; k < 3; ++k) {
        if (k > 0) out << " ;";
        out << (k > 0 ? " " : "") << names[k];
        for (const auto& t : parts[k]) out << ' ' << t.index << ':' << coeff_text(t.coeff);
      }
      out << "\n";
    }
  }
  std::string dump() const {
    std::ostringstream s;
    dump(s);
    return s.str();
  }

  static std::string coeff_text(const Fr& c) {
    std::string pos = c.to_decimal();
    std::string neg = (-c).to_decimal();
    return neg.size() < pos.size() ? "-" + neg : pos;
  }

 private:
  void require_open(const char* what) const {
    if (finalized_) throw UsageError(std::string(what) + " on a finalized constraint system");
  }
  void require_finalized(const char* what) const {
    if (!finalized_) throw UsageError(std::string(what) + " requires a finalized constraint system");
  }

  Mode mode_;
  bool finalized_ = false;
  std::size_t num_public_ = 0;
  std::size_t num_private_ = 0;
  std::vector<Term> terms_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Fr> values_;
};

}  // namespace zkrb::r1cs

#endif  // ZKRB_R1CS_CONSTRAINT_SYSTEM_HPP_
