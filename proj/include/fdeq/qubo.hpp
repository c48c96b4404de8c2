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

#include "fdeq/bits.hpp"
#include "fdeq/ldpc.hpp"
#include "fdeq/polar.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

namespace fdeq {

enum class VarRole { InputBit, CodewordBit, Intermediate, Ancilla };

/// Binary quadratic cost c(x) = x^T Q x + offset with per-variable roles.
/// codeword_map[i] is the variable holding codeword bit i; data_map[j] the
/// variable holding data bit j. `eliminated_vars` counts frozen inputs
/// substituted out at build time (nominal size = n_vars + eliminated_vars).
struct Qubo {
    int n_vars = 0;
    Eigen::MatrixXd q;
    double offset = 0.0;
    std::vector<VarRole> roles;
    std::vector<int> codeword_map;
    std::vector<int> data_map;
    int eliminated_vars = 0;

    int nominal_vars() const { return n_vars + eliminated_vars; }
};

/// Spin form of a Qubo: energy(z) = h.z + sum_{i<j} J_ij z_i z_j + constant,
/// z_i in {-1,+1}, under z_i = 1 - 2 x_i.
struct IsingModel {
    Eigen::VectorXd h;
    Eigen::MatrixXd j; // symmetric, zero diagonal
    double constant = 0.0;

    double energy(const Eigen::VectorXd& z) const {
        return h.dot(z) + 0.5 * z.dot(j * z) + constant;
    }
};

/// Smallest satisfier weight that provably ranks every codeword below every
/// non-codeword: sum|L| + 1.
double default_satisfier_weight(const Eigen::VectorXd& llrs);

/// Decoding QUBO for an LDPC code: N codeword-bit variables plus
/// floor(deg/2) ancillas per check. Each check contributes
/// w_s (sum b - 2 sum a)^2; the distance term adds L_i x_i on codeword bits.
/// Throws WeightTooSmall when w_s <= sum|L| and LengthMismatch on bad llrs.
Qubo build_ldpc_qubo(const ParityCheckMatrix& h, const Eigen::VectorXd& llrs, double w_s);

/// Decoding QUBO for a Polar code: input-bit variables, one fresh variable
/// plus one ancilla per XOR node of the encoding tree ((N/2) log2 N XORs),
/// each XOR z = x ^ y contributing w_s (x + y + z - 2a)^2. Frozen inputs are
/// substituted by the constant 0. Distance runs over the N root-level
/// codeword variables.
Qubo build_polar_qubo(const PolarCodeConfig& cfg, const Eigen::VectorXd& llrs, double w_s);

/// x^T Q x + offset. Throws LengthMismatch.
double qubo_cost(const Qubo& q, const BinVector& x);

/// Exact substitution x = (1 - z)/2; energies agree pointwise.
IsingModel qubo_to_ising(const Qubo& q);

/// Costs of all 2^n assignments, indexed by basis index (variable i = bit i
/// of the index). Gray-code walk, O(2^n n). Throws SizeLimit beyond cap.
std::vector<double> qubo_cost_table(const Qubo& q, int cap = 24);

struct BruteForceResult {
    BinVector argmin;
    double min_cost = 0.0;
    BinVector argmax;
    double max_cost = 0.0;
};

/// Exhaustive extrema; ties resolved toward the lexicographically smallest
/// bitstring (variable 0 most significant). Throws SizeLimit beyond cap.
BruteForceResult brute_force_extrema(const Qubo& q, int cap = 24);
std::pair<BinVector, double> brute_force_min(const Qubo& q, int cap = 24);

/// Sparse text format: header "n offset", then "i j value" lines with i <= j,
/// values printed to full precision (bit-exact round-trip).
void save_qubo(std::ostream& out, const Qubo& q);
Qubo load_qubo(std::istream& in);
void save_qubo_file(const std::string& path, const Qubo& q);
Qubo load_qubo_file(const std::string& path);

} // namespace fdeq
