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

#ifndef ZKRB_GROTH16_GROTH16_HPP_
#define ZKRB_GROTH16_GROTH16_HPP_

#include "zkrb/groth16/ceremony.hpp"
#include "zkrb/groth16/keys.hpp"
#include "zkrb/groth16/prepared.hpp"
#include "zkrb/groth16/prover.hpp"
#include "zkrb/groth16/qap.hpp"
#include "zkrb/groth16/setup.hpp"
#include "zkrb/groth16/verifier.hpp"

#endif  // ZKRB_GROTH16_GROTH16_HPP_
