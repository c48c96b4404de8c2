// Copyright 2026 The fdeq developers
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

#include "fdeq/circuit.hpp"

#include <Eigen/Dense>

namespace fdeq {

/// Amplitude layout: basis index bit k is qubit k, qubit 0 least significant.
using StateVector = Eigen::VectorXcd;

inline constexpr int kStateVectorQubitCap = 20;

StateVector basis_state(int n_qubits, std::uint64_t index);
StateVector plus_state(int n_qubits);
StateVector initial_statevector(const Circuit& c);

void apply_rx(StateVector& psi, int qubit, double theta);
void apply_rz(StateVector& psi, int qubit, double theta);
void apply_cnot(StateVector& psi, int control, int target);

/// Applies the gates in order to `initial`. Throws DimensionMismatch when
/// the state length is not 2^n_qubits, SizeLimit beyond the qubit cap.
StateVector run_statevector(const Circuit& c, StateVector initial);

/// Convenience: run from the circuit's designated initial state.
StateVector run_statevector(const Circuit& c);

} // namespace fdeq
