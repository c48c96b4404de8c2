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

#include "fdeq/statevector.hpp"

#include "fdeq/errors.hpp"

#include <cmath>
#include <complex>

namespace fdeq {

using cd = std::complex<double>;

StateVector basis_state(int n_qubits, std::uint64_t index) {
    StateVector psi = StateVector::Zero(Eigen::Index{1} << n_qubits);
    psi[static_cast<Eigen::Index>(index)] = 1.0;
    return psi;
}

StateVector plus_state(int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    return StateVector::Constant(dim, cd(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
}

StateVector initial_statevector(const Circuit& c) {
    return c.initial == InitialState::Plus ? plus_state(c.n_qubits) : basis_state(c.n_qubits, 0);
}

void apply_rx(StateVector& psi, int qubit, double theta) {
    const double co = std::cos(theta / 2.0);
    const cd mis(0.0, -std::sin(theta / 2.0));
    const Eigen::Index dim = psi.size();
    const Eigen::Index stride = Eigen::Index{1} << qubit;
    cd* p = psi.data();
    for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
        for (Eigen::Index k = 0; k < stride; ++k) {
            const cd a = p[base + k];
            const cd b = p[base + k + stride];
            p[base + k] = co * a + mis * b;
            p[base + k + stride] = mis * a + co * b;
        }
    }
}

void apply_rz(StateVector& psi, int qubit, double theta) {
    const cd p0 = std::polar(1.0, -theta / 2.0);
    const cd p1 = std::polar(1.0, theta / 2.0);
    const Eigen::Index dim = psi.size();
    const Eigen::Index stride = Eigen::Index{1} << qubit;
    cd* p = psi.data();
    for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
        for (Eigen::Index k = 0; k < stride; ++k) {
            p[base + k] *= p0;
            p[base + k + stride] *= p1;
        }
    }
}

void apply_cnot(StateVector& psi, int control, int target) {
    const Eigen::Index dim = psi.size();
    const Eigen::Index cmask = Eigen::Index{1} << control;
    const Eigen::Index tmask = Eigen::Index{1} << target;
    cd* p = psi.data();
    for (Eigen::Index i = 0; i < dim; ++i) {
        if ((i & cmask) && !(i & tmask)) std::swap(p[i], p[i | tmask]);
    }
}

StateVector run_statevector(const Circuit& c, StateVector initial) {
    if (c.n_qubits > kStateVectorQubitCap)
        throw SizeLimit("run_statevector: circuit exceeds qubit cap");
    if (initial.size() != (Eigen::Index{1} << c.n_qubits))
        throw DimensionMismatch("run_statevector: state length != 2^n");
    for (const Gate& g : c.gates) {
        switch (g.kind) {
        case GateKind::RX:
            apply_rx(initial, g.q0, g.angle);
            break;
        case GateKind::RZ:
            apply_rz(initial, g.q0, g.angle);
            break;
        case GateKind::CNOT:
            apply_cnot(initial, g.q0, g.q1);
            break;
        }
    }
    return initial;
}

StateVector run_statevector(const Circuit& c) {
    return run_statevector(c, initial_statevector(c));
}

} // namespace fdeq
