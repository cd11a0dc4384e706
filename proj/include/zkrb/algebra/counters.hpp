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

#ifndef ZKRB_ALGEBRA_COUNTERS_HPP_
#define ZKRB_ALGEBRA_COUNTERS_HPP_

#include <cstdint>

namespace zkrb::algebra {

/// Per-thread instrumentation. Verification cost claims (pairing count, MSM
/// length) are asserted against these.
struct OpCounters {
  std::uint64_t miller_loops = 0;
  std::uint64_t final_exponentiations = 0;
  std::uint64_t msm_calls = 0;
  std::uint64_t msm_terms = 0;
  std::uint64_t last_msm_length = 0;

  void reset() { *this = OpCounters{}; }
};

inline OpCounters& counters() {
  thread_local OpCounters c;
  return c;
}

}  // namespace zkrb::algebra

#endif  // ZKRB_ALGEBRA_COUNTERS_HPP_
