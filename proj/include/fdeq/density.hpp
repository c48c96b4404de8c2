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

using DensityMatrix = Eigen::MatrixXcd;

inline constexpr int kDensityQubitCap = 8;

/// Depolarizing rates: p1 after every RX, p2 after every CNOT. RZ stays
/// noise-free (frame-shift gates).
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;
};

/// rho -> (1-p) rho + p (I/2 (x) tr_q rho).
void depolarize1(DensityMatrix& rho, int qubit, double p);

/// rho -> (1-p) rho + p (I/4 (x) tr_{q0,q1} rho).
void depolarize2(DensityMatrix& rho, int q0, int q1, double p);

void apply_gate_density(DensityMatrix& rho, const Gate& g);

/// Starts from the circuit's initial state as a pure density matrix, applies
/// each gate as U rho U^dagger, and interleaves the depolarizing channels.
/// Throws SizeLimit beyond the density qubit cap.
DensityMatrix run_density(const Circuit& c, const NoiseModel& noise);

} // namespace fdeq
