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

#include "fdeq/circuit.hpp"

#include "fdeq/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace fdeq {

namespace {

void check_qubit(int q, int n) {
    if (q < 0 || q >= n) throw DimensionMismatch("circuit: qubit index out of range");
}

} // namespace

void Circuit::rx(int q, double theta) {
    check_qubit(q, n_qubits);
    gates.push_back({GateKind::RX, q, 0, theta});
}

void Circuit::rz(int q, double theta) {
    check_qubit(q, n_qubits);
    gates.push_back({GateKind::RZ, q, 0, theta});
}

void Circuit::cnot(int control, int target) {
    check_qubit(control, n_qubits);
    check_qubit(target, n_qubits);
    if (control == target) throw DimensionMismatch("circuit: CNOT control == target");
    gates.push_back({GateKind::CNOT, control, target, 0.0});
}

void dump_circuit(std::ostream& out, const Circuit& c) {
    char buf[64];
    for (const Gate& g : c.gates) {
        switch (g.kind) {
        case GateKind::RX:
            std::snprintf(buf, sizeof buf, "RX %d %.17g\n", g.q0, g.angle);
            out << buf;
            break;
        case GateKind::RZ:
            std::snprintf(buf, sizeof buf, "RZ %d %.17g\n", g.q0, g.angle);
            out << buf;
            break;
        case GateKind::CNOT:
            out << "CNOT " << g.q0 << ' ' << g.q1 << '\n';
            break;
        }
    }
}

std::string dump_circuit(const Circuit& c) {
    std::ostringstream os;
    dump_circuit(os, c);
    return os.str();
}

Circuit parse_circuit(std::istream& in, int n_qubits, InitialState init) {
    struct Parsed {
        GateKind kind;
        int q0, q1;
        double angle;
    };
    std::vector<Parsed> parsed;
    int max_q = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string op;
        ls >> op;
        if (op == "RX" || op == "RZ") {
            int q;
            double theta;
            if (!(ls >> q >> theta)) throw ConfigError("circuit: bad gate line: " + line);
            parsed.push_back({op == "RX" ? GateKind::RX : GateKind::RZ, q, 0, theta});
            max_q = std::max(max_q, q);
        } else if (op == "CNOT") {
            int c, t;
            if (!(ls >> c >> t)) throw ConfigError("circuit: bad gate line: " + line);
            parsed.push_back({GateKind::CNOT, c, t, 0.0});
            max_q = std::max({max_q, c, t});
        } else {
            throw ConfigError("circuit: unknown gate: " + op);
        }
    }
    Circuit c(n_qubits >= 0 ? n_qubits : max_q + 1, init);
    for (const auto& g : parsed) {
        if (g.kind == GateKind::CNOT)
            c.cnot(g.q0, g.q1);
        else if (g.kind == GateKind::RX)
            c.rx(g.q0, g.angle);
        else
            c.rz(g.q0, g.angle);
    }
    return c;
}

Circuit parse_circuit(const std::string& text, int n_qubits, InitialState init) {
    std::istringstream is(text);
    return parse_circuit(is, n_qubits, init);
}

} // namespace fdeq
