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

#ifndef ZKRB_COMMON_ERROR_HPP_
#define ZKRB_COMMON_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zkrb {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated an API precondition (bad lengths, finalized system, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Division by zero and similar algebraic impossibilities.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Malformed or tampered bytes / accumulators / sealed batches.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A setup was asked to serve a circuit larger than the ceremony supports.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, unsigned required_n)
      : Error(what), required_n_(required_n) {}
  unsigned required_n() const { return required_n_; }

 private:
  unsigned required_n_;
};

/// Projected allocation exceeds the configured memory budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t projected,
                 std::size_t budget)
      : Error(what), projected_(projected), budget_(budget) {}
  std::size_t projected_bytes() const { return projected_; }
  std::size_t budget_bytes() const { return budget_; }

 private:
  std::size_t projected_;
  std::size_t budget_;
};

/// Witness generation failed; index names the offending transaction when
/// there is one.
class WitnessError : public Error {
 public:
  static constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);
  explicit WitnessError(const std::string& what, std::size_t index = kNoIndex)
      : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// The prover refuses to run on an unsatisfied witness.
class ProofRefused : public Error {
 public:
  using Error::Error;
};

/// Sequencing error: a batch does not chain onto the current state.
class SequencingError : public Error {
 public:
  using Error::Error;
};

}  // namespace zkrb

#endif  // ZKRB_COMMON_ERROR_HPP_
