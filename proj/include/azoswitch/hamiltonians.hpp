// Copyright 2026 The azoswitch Authors
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

#pragma once

#include "azoswitch/qcore.hpp"

namespace azoswitch {

// Two heteronuclear spins-1/2 in a static field along z.
//
// Units follow the dataset convention: the coupling is the tabulated Hz
// number used directly as an angular rate (hbar = 1, no 2*pi factor), and the
// Zeeman frequencies are in the same units.
struct TwoSpinParameters {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double j = 0.0;
};

// Throws std::invalid_argument unless omega1 != omega2.
void require_heteronuclear(const TwoSpinParameters& p);

// -omega1 Iz(x)I - omega2 I(x)Iz + J (IxIx + IyIy + IzIz)
Operator lab_hamiltonian(const TwoSpinParameters& p);

// J Iz(x)Iz = (J/4) diag(1, -1, -1, 1); what survives of the isotropic
// coupling in the doubly rotating frame once the flip-flop terms are dropped.
Operator secular_hamiltonian(double j);

// Closed-form exp(-i J Iz(x)Iz t) = diag(e^{-iJt/4}, e^{iJt/4}, e^{iJt/4}, e^{-iJt/4}).
Operator u_rot(double j, double t);

// Frame change exp(-i omega1 Iz t) (x) exp(-i omega2 Iz t).
Operator frame_unitary(double omega1, double omega2, double t);

// Evolves `initial` for time t under the full lab Hamiltonian (matrix
// exponential) and maps the result into the rotating frame.
QuantumState rotating_frame_state(const TwoSpinParameters& p, const QuantumState& initial,
                                  double t);

}  // namespace azoswitch
