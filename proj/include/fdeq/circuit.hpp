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

#include <iosfwd>
#include <string>
#include <vector>

namespace fdeq {

enum class GateKind { RX, RZ, CNOT };

/// RX(theta) = exp(-i theta X / 2), RZ(theta) = exp(-i theta Z / 2).
/// For CNOT, q0 is the control and q1 the target.
struct Gate {
    GateKind kind;
    int q0 = 0;
    int q1 = 0;
    double angle = 0.0;
};

enum class InitialState { Zero, Plus };

struct Circuit {
    int n_qubits = 0;
    InitialState initial = InitialState::Zero;
    std::vector<Gate> gates;

    explicit Circuit(int n = 0, InitialState init = InitialState::Zero)
        : n_qubits(n), initial(init) {}

    void rx(int q, double theta);
    void rz(int q, double theta);
    void cnot(int control, int target);

    std::size_t size() const { return gates.size(); }
};

/// Line-per-gate text: "RX q theta", "RZ q theta", "CNOT c t"; angles at full
/// precision so parsing round-trips exactly.
void dump_circuit(std::ostream& out, const Circuit& c);
std::string dump_circuit(const Circuit& c);

/// Parse a gate list; n_qubits < 0 infers max index + 1.
Circuit parse_circuit(std::istream& in, int n_qubits = -1,
                      InitialState init = InitialState::Zero);
Circuit parse_circuit(const std::string& text, int n_qubits = -1,
                      InitialState init = InitialState::Zero);

} // namespace fdeq
