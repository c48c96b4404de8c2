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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdeq/density.hpp"
#include "fdeq/errors.hpp"
#include "fdeq/measure.hpp"
#include "fdeq/rng.hpp"
#include "fdeq/statevector.hpp"

#include <cmath>
#include <map>
#include <sstream>

using namespace fdeq;

namespace {

Circuit random_circuit(Rng& rng, int n, int gates) {
    Circuit c(n);
    for (int g = 0; g < gates; ++g) {
        const double pick = rng.uniform01();
        const int q = static_cast<int>(rng.uniform01() * n);
        if (pick < 0.4) {
            c.rx(q, rng.uniform(-3.14, 3.14));
        } else if (pick < 0.7 || n < 2) {
            c.rz(q, rng.uniform(-3.14, 3.14));
        } else {
            int t = static_cast<int>(rng.uniform01() * (n - 1));
            if (t >= q) ++t;
            c.cnot(q, t);
        }
    }
    return c;
}

} // namespace

TEST_CASE("statevector gate semantics") {
    // RX(pi) |0> = -i |1> under RX(theta) = exp(-i theta X / 2).
    Circuit c(1);
    c.rx(0, 3.141592653589793238462643);
    const StateVector out = run_statevector(c, basis_state(1, 0));
    CHECK(std::abs(out[0]) < 1e-12);
    CHECK(std::abs(out[1] - std::complex<double>(0, -1)) < 1e-12);

    // CNOT(control=1, target=0) on |10> (qubit1 = 1, qubit0 = 0) -> |11>.
    Circuit c2(2);
    c2.cnot(1, 0);
    const StateVector out2 = run_statevector(c2, basis_state(2, 0b10));
    CHECK(std::abs(out2[0b11] - 1.0) < 1e-12);

    // Empty circuit: identity.
    Circuit c3(3);
    StateVector in = plus_state(3);
    CHECK((run_statevector(c3, in) - in).norm() == 0.0);

    CHECK_THROWS_AS(run_statevector(c2, basis_state(3, 0)), DimensionMismatch);
    CHECK_THROWS_AS(run_statevector(Circuit(21), basis_state(1, 0)), SizeLimit);
}

TEST_CASE("unitarity: random circuits up to 13 qubits, 200 gates") {
    Rng rng(0x51AE);
    for (int t = 0; t < 8; ++t) {
        const int n = t < 4 ? 13 : 3 + static_cast<int>(rng.uniform01() * 8);
        const Circuit c = random_circuit(rng, n, 200);
        const StateVector out = run_statevector(c, plus_state(n));
        CHECK(std::abs(out.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("noiseless density equals the statevector outer product") {
    Rng rng(0xDE52);
    for (int t = 0; t < 10; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform01() * 3);
        Circuit c = random_circuit(rng, n, 40);
        c.initial = t % 2 ? InitialState::Plus : InitialState::Zero;
        const DensityMatrix rho = run_density(c, NoiseModel{});
        const StateVector psi = run_statevector(c);
        CHECK((rho - psi * psi.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("full single-qubit depolarization gives I/2") {
    Circuit c(1);
    c.rx(0, 1.2345);
    const DensityMatrix rho = run_density(c, NoiseModel{1.0, 1.0});
    CHECK(std::abs(rho(0, 0) - 0.5) < 1e-12);
    CHECK(std::abs(rho(1, 1) - 0.5) < 1e-12);
    CHECK(std::abs(rho(0, 1)) < 1e-12);
}

TEST_CASE("trace and Hermiticity preserved on 100 random noisy circuits") {
    Rng rng(0x7ACE);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform01() * 3);
        Circuit c = random_circuit(rng, n, 25);
        c.initial = InitialState::Plus;
        const NoiseModel noise{rng.uniform01(), rng.uniform01()};
        const DensityMatrix rho = run_density(c, noise);
        CHECK(std::abs(rho.trace().real() - 1.0) < 1e-10);
        CHECK(std::abs(rho.trace().imag()) < 1e-12);
        CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    }
    CHECK_THROWS_AS(run_density(Circuit(9), NoiseModel{}), SizeLimit);
}

TEST_CASE("maximally mixed state is a fixed point of p=1 RX/CNOT noise") {
    const int n = 3;
    const Eigen::Index dim = 1 << n;
    DensityMatrix rho = DensityMatrix::Identity(dim, dim) / static_cast<double>(dim);
    Rng rng(0xF1ED);
    Circuit c(n);
    for (int g = 0; g < 30; ++g) {
        if (rng.bit())
            c.rx(static_cast<int>(rng.uniform01() * n), rng.uniform(-3.0, 3.0));
        else {
            const int a = static_cast<int>(rng.uniform01() * n);
            c.cnot(a, (a + 1) % n);
        }
    }
    for (const Gate& g : c.gates) {
        apply_gate_density(rho, g);
        if (g.kind == GateKind::RX) depolarize1(rho, g.q0, 1.0);
        if (g.kind == GateKind::CNOT) depolarize2(rho, g.q0, g.q1, 1.0);
        DensityMatrix mixed = DensityMatrix::Identity(dim, dim) / static_cast<double>(dim);
        CHECK((rho - mixed).cwiseAbs().maxCoeff() < 1e-12);
    }
}

namespace {

Qubo identity_qubo(int n) {
    Qubo q;
    q.n_vars = n;
    q.q = Eigen::MatrixXd::Identity(n, n);
    q.roles.assign(static_cast<std::size_t>(n), VarRole::CodewordBit);
    return q;
}

} // namespace

TEST_CASE("expectation: basis states, uniform state, linearity") {
    const Qubo q = identity_qubo(3);
    const StateVector e5 = basis_state(3, 5);
    CHECK(expectation_diag(e5, q) == doctest::Approx(qubo_cost(q, index_to_bits(5, 3))));
    CHECK(expectation_diag(plus_state(3), q) == doctest::Approx(1.5)); // n/2

    // Linearity in the cost matrix.
    Rng rng(0x11EA);
    Qubo a = identity_qubo(3), b = identity_qubo(3), mix = identity_qubo(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a.q(i, j) = rng.uniform(-1, 1);
            b.q(i, j) = rng.uniform(-1, 1);
            mix.q(i, j) = 2.0 * a.q(i, j) + b.q(i, j);
        }
    a.q = (a.q + a.q.transpose()).eval();
    b.q = (b.q + b.q.transpose()).eval();
    mix.q = (mix.q + mix.q.transpose()).eval();
    StateVector psi = run_statevector(random_circuit(rng, 3, 25), plus_state(3));
    CHECK(expectation_diag(psi, mix) ==
          doctest::Approx(2.0 * expectation_diag(psi, a) + expectation_diag(psi, b)));

    CHECK_THROWS_AS(expectation_diag(plus_state(2), q), DimensionMismatch);
}

TEST_CASE("expectation agrees with the shot mean within 3 sigma at 1e5 shots") {
    Rng rng(0x3516);
    const Circuit c = random_circuit(rng, 4, 30);
    const StateVector psi = run_statevector(c, plus_state(4));
    Qubo q = identity_qubo(4);
    const double exact = expectation_diag(psi, q);
    const auto table = qubo_cost_table(q);
    const auto idx = sample_indices(probabilities(psi), 100000, 0xBEEF);
    double mean = 0.0, m2 = 0.0;
    for (auto i : idx) {
        mean += table[i];
        m2 += table[i] * table[i];
    }
    mean /= static_cast<double>(idx.size());
    m2 /= static_cast<double>(idx.size());
    const double sigma = std::sqrt((m2 - mean * mean) / static_cast<double>(idx.size()));
    CHECK(std::abs(mean - exact) < 3.0 * sigma + 1e-12);
}

TEST_CASE("sampling: basis determinism and chi-square consistency") {
    const StateVector e9 = basis_state(4, 9);
    for (const auto& s : sample_bitstrings(e9, 200, 42)) CHECK(bits_to_index(s) == 9);

    const auto a = sample_bitstrings(plus_state(3), 500, 7);
    const auto b = sample_bitstrings(plus_state(3), 500, 7);
    CHECK(a == b);

    Rng rng(0x0C11);
    const Circuit c = random_circuit(rng, 4, 30);
    const StateVector psi = run_statevector(c, plus_state(4));
    const Eigen::VectorXd p = probabilities(psi);
    const int shots = 100000;
    std::map<std::uint64_t, int> counts;
    for (auto i : sample_indices(p, shots, 0xC4158E)) ++counts[i];
    double chi2 = 0.0;
    for (int x = 0; x < 16; ++x) {
        const double expected = p[x] * shots;
        const double observed = counts.count(x) ? counts[x] : 0;
        if (expected > 0) chi2 += (observed - expected) * (observed - expected) / expected;
    }
    CHECK(chi2 < 37.70); // chi-square critical value, 15 dof, alpha = 0.001
}

TEST_CASE("circuit text dump round-trips exactly") {
    Rng rng(0xD0C5);
    const Circuit c = random_circuit(rng, 5, 60);
    const std::string text = dump_circuit(c);
    const Circuit back = parse_circuit(text, 5);
    REQUIRE(back.gates.size() == c.gates.size());
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        CHECK(back.gates[i].kind == c.gates[i].kind);
        CHECK(back.gates[i].q0 == c.gates[i].q0);
        CHECK(back.gates[i].q1 == c.gates[i].q1);
        CHECK(back.gates[i].angle == c.gates[i].angle); // bit-exact
    }
    const Circuit inferred = parse_circuit(text);
    CHECK(inferred.n_qubits <= 5);

    Circuit bad(2);
    CHECK_THROWS_AS(bad.cnot(0, 0), DimensionMismatch);
    CHECK_THROWS_AS(bad.rx(2, 0.1), DimensionMismatch);
    CHECK_THROWS(parse_circuit(std::string("H 0\n")));
}
