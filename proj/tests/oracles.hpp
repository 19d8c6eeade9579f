// Copyright 2026 The sloccsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Shared brute-force oracles for the unit and acceptance suites. Everything
// here goes through the dense statevector path and stays independent of the
// closed forms it is used to check.

#ifndef SLOCCSIM_TESTS_ORACLES_HPP
#define SLOCCSIM_TESTS_ORACLES_HPP

#include <vector>

#include "sloccsim/protocol.hpp"
#include "sloccsim/qmath.hpp"
#include "sloccsim/rng.hpp"
#include "sloccsim/statevec.hpp"

namespace sloccsim::oracles {

Mat2 random_unitary(Rng &rng);
Mat2 random_invertible(Rng &rng);
Vec2 random_state(Rng &rng);

/// Teleported operator through a single measurement on a 2-qubit wire with
/// `op` on the measured qubit.
Mat2 extract_single(const Mat2 &op, const MeasurementBasis &basis, int outcome);

/// Born probability of `outcome` when measuring qubit 1 of the 2-qubit wire
/// (input state psi encoded on qubit 1).
double born_single(const Mat2 &op, const MeasurementBasis &basis, int outcome, const Vec2 &psi);

struct WireReplay {
    std::vector<double> probs;   // per-step Born probabilities
    double carrier_fidelity = 0.0;  // remaining state vs tail rebuilt from the engine carrier
};

/// Replays a recorded wire run on the dense simulator (the whole chain,
/// including the unmeasured tail) and compares per-step probabilities plus
/// the final logical content against the engine's carrier.
WireReplay replay_on_dense(const WireSpec &spec, const WireRunResult &run, const Vec2 &psi);

/// First-passage probability of the classical symmetric +-1 walk from 1 to 0
/// within n steps (Catalan numbers).
double classical_first_passage(int n);

}  // namespace sloccsim::oracles

#endif
