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

#include "fdeq/density.hpp"

#include "fdeq/errors.hpp"
#include "fdeq/statevector.hpp"

#include <array>
#include <cmath>
#include <complex>

namespace fdeq {

using cd = std::complex<double>;

namespace {

/// rho -> U rho U^dagger for a single-qubit U given as a 2x2 matrix.
void apply_1q_unitary(DensityMatrix& rho, int qubit, const std::array<cd, 4>& u) {
    const Eigen::Index dim = rho.rows();
    const Eigen::Index mask = Eigen::Index{1} << qubit;
    // Left multiply: rows mix within each column.
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            if (i & mask) continue;
            const cd a = rho(i, c);
            const cd b = rho(i | mask, c);
            rho(i, c) = u[0] * a + u[1] * b;
            rho(i | mask, c) = u[2] * a + u[3] * b;
        }
    }
    // Right multiply by U^dagger: columns mix within each row.
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (j & mask) continue;
            const cd a = rho(r, j);
            const cd b = rho(r, j | mask);
            rho(r, j) = a * std::conj(u[0]) + b * std::conj(u[1]);
            rho(r, j | mask) = a * std::conj(u[2]) + b * std::conj(u[3]);
        }
    }
}

void apply_cnot_density(DensityMatrix& rho, int control, int target) {
    const Eigen::Index dim = rho.rows();
    const Eigen::Index cmask = Eigen::Index{1} << control;
    const Eigen::Index tmask = Eigen::Index{1} << target;
    for (Eigen::Index i = 0; i < dim; ++i)
        if ((i & cmask) && !(i & tmask)) rho.row(i).swap(rho.row(i | tmask));
    for (Eigen::Index j = 0; j < dim; ++j)
        if ((j & cmask) && !(j & tmask)) rho.col(j).swap(rho.col(j | tmask));
}

} // namespace

void depolarize1(DensityMatrix& rho, int qubit, double p) {
    if (p == 0.0) return;
    const Eigen::Index dim = rho.rows();
    const Eigen::Index mask = Eigen::Index{1} << qubit;
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (i & mask) continue;
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (j & mask) continue;
            const cd s = 0.5 * (rho(i, j) + rho(i | mask, j | mask));
            rho(i, j) = (1.0 - p) * rho(i, j) + p * s;
            rho(i | mask, j | mask) = (1.0 - p) * rho(i | mask, j | mask) + p * s;
            rho(i, j | mask) *= 1.0 - p;
            rho(i | mask, j) *= 1.0 - p;
        }
    }
}

void depolarize2(DensityMatrix& rho, int q0, int q1, double p) {
    if (p == 0.0) return;
    const Eigen::Index dim = rho.rows();
    const Eigen::Index m0 = Eigen::Index{1} << q0;
    const Eigen::Index m1 = Eigen::Index{1} << q1;
    const std::array<Eigen::Index, 4> sub{0, m0, m1, m0 | m1};
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (i & (m0 | m1)) continue;
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (j & (m0 | m1)) continue;
            cd sigma = 0.0;
            for (Eigen::Index a : sub) sigma += rho(i | a, j | a);
            sigma *= 0.25;
            for (Eigen::Index a : sub)
                for (Eigen::Index b : sub) {
                    if (a == b)
                        rho(i | a, j | a) = (1.0 - p) * rho(i | a, j | a) + p * sigma;
                    else
                        rho(i | a, j | b) *= 1.0 - p;
                }
        }
    }
}

void apply_gate_density(DensityMatrix& rho, const Gate& g) {
    switch (g.kind) {
    case GateKind::RX: {
        const double co = std::cos(g.angle / 2.0);
        const cd mis(0.0, -std::sin(g.angle / 2.0));
        apply_1q_unitary(rho, g.q0, {cd(co, 0), mis, mis, cd(co, 0)});
        break;
    }
    case GateKind::RZ: {
        const cd p0 = std::polar(1.0, -g.angle / 2.0);
        const cd p1 = std::polar(1.0, g.angle / 2.0);
        apply_1q_unitary(rho, g.q0, {p0, cd(0, 0), cd(0, 0), p1});
        break;
    }
    case GateKind::CNOT:
        apply_cnot_density(rho, g.q0, g.q1);
        break;
    }
}

DensityMatrix run_density(const Circuit& c, const NoiseModel& noise) {
    if (c.n_qubits > kDensityQubitCap) throw SizeLimit("run_density: circuit exceeds qubit cap");
    if (noise.p1 < 0 || noise.p1 > 1 || noise.p2 < 0 || noise.p2 > 1)
        throw ConfigError("run_density: depolarizing rates must lie in [0,1]");
    const StateVector psi0 = initial_statevector(c);
    DensityMatrix rho = psi0 * psi0.adjoint();
    for (const Gate& g : c.gates) {
        apply_gate_density(rho, g);
        if (g.kind == GateKind::RX)
            depolarize1(rho, g.q0, noise.p1);
        else if (g.kind == GateKind::CNOT)
            depolarize2(rho, g.q0, g.q1, noise.p2);
    }
    return rho;
}

} // namespace fdeq
