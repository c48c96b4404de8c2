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

#include "fdeq/channel.hpp"
#include "fdeq/code.hpp"
#include "fdeq/density.hpp"
#include "fdeq/measure.hpp"
#include "fdeq/optimize.hpp"
#include "fdeq/qubo.hpp"
#include "fdeq/statevector.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

namespace fdeq {

/// The 2p ansatz angles (gamma per cost layer, beta per mixer layer).
struct AnsatzParams {
    Eigen::VectorXd gammas;
    Eigen::VectorXd betas;

    int layers() const { return static_cast<int>(gammas.size()); }
    Eigen::VectorXd flat() const;
    static AnsatzParams from_flat(const Eigen::VectorXd& v);
};

struct TemporalInit {
    AnsatzParams params;
};
struct RandomInit {
    std::uint64_t seed = 0;
};
struct ZeroInit {};
/// Temporal reuses previously optimized angles; Random draws each angle
/// uniformly from [0, pi]; Zero sets every angle to 1e-4.
using InitStrategy = std::variant<TemporalInit, RandomInit, ZeroInit>;

AnsatzParams initial_params(const InitStrategy& init, int p);

/// Linear-ramp seed schedule gamma_l = (l/p) g0, beta_l = (1-(l-1)/p) b0.
AnsatzParams linear_ramp_params(int p, double gamma0 = 0.5, double beta0 = 0.5);

/// sum_{i<=j} |Q_ij| — the gamma rescaling denominator is its square root.
double qubo_coefficient_sum(const Qubo& q);

/// Gate realization of one ansatz: |+>^n, then per layer RZ(2 gamma h_i) on
/// each qubit with h_i != 0, CNOT(i,j) RZ(2 gamma J_ij) CNOT(i,j) per
/// coupling, then RX(2 beta) on every qubit. Equals the phase-mixer operator
/// product up to global phase.
Circuit build_ansatz_circuit(const IsingModel& ising, const AnsatzParams& params,
                             bool initial_plus = true);

/// Exact evaluator for the ansatz state: each cost layer applied as one
/// diagonal phase (per-basis-state QUBO cost table), the mixer as RX
/// butterflies. Algebraically identical to simulating the gate circuit.
class AnsatzEvaluator {
public:
    explicit AnsatzEvaluator(const Qubo& q);

    int n_vars() const { return n_; }
    const std::vector<double>& cost_table() const { return cost_; }

    StateVector state(const AnsatzParams& params) const;
    double objective(const AnsatzParams& params) const;
    double cost_of_index(std::uint64_t idx) const { return cost_[idx]; }

private:
    int n_;
    std::vector<double> cost_;
};

struct ExactBackend {};
struct SampledBackend {
    int n_shots = 1024;
    std::uint64_t seed = 0;
};
using ObjectiveBackend = std::variant<ExactBackend, SampledBackend>;

/// Expected QUBO cost of the ansatz state; the sampled backend returns the
/// shot mean. Throws SizeLimit beyond the statevector cap.
double qaoa_objective(const Qubo& q, const AnsatzParams& params,
                      const ObjectiveBackend& backend = ExactBackend{});

struct OptimizeOutcome {
    AnsatzParams params;
    double objective = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// sqrt(sum_{i<=j}|Q_ij|): the natural gamma unit of a QUBO's ansatz.
double ansatz_gamma_scale(const Qubo& q);

/// Descent over the 2p angles in scale-normalized coordinates
/// (gamma * gamma_scale, beta); the objective is evaluated at physical
/// angles. All angle optimization funnels through here.
OptimizeOutcome minimize_over_angles(const std::function<double(const AnsatzParams&)>& objective,
                                     const AnsatzParams& init, const OptimizerConfig& cfg,
                                     double gamma_scale);

/// Derivative-free local descent over the 2p angles (see optimize.hpp).
/// Final objective never exceeds the initial one.
OptimizeOutcome optimize_params(const Qubo& q, const AnsatzParams& init,
                                const OptimizerConfig& cfg,
                                const ObjectiveBackend& backend = ExactBackend{});

using QuboBuilder = std::function<Qubo(const ReceivedBlock&)>;

/// Offline search on the first preamble block: linear-ramp seed, gammas
/// rescaled by 1/sqrt(sum_{i<=j}|Q_ij|), then an optimization run with the
/// given budget (default 500 iterations). Throws NoPreamble.
AnsatzParams warm_start_from_preamble(const Frame& frame, const QuboBuilder& builder, int p,
                                      const OptimizerConfig& budget = {.max_iterations = 500});

struct ExactExtraction {
    int top_m = 128;
};
struct SampledExtraction {
    int n_shots = 1024;
    std::uint64_t seed = 0;
};
using Extraction = std::variant<ExactExtraction, SampledExtraction>;

struct DecodeResult {
    BinVector solution_bits;
    BinVector data_bits;
    BinVector codeword_bits;
    double energy = 0.0;
    double normalized_energy = 0.0; // NaN when extrema are unavailable
    int iterations_used = 0;
    AnsatzParams params_final;
};

/// Builds the QUBO from the block LLRs, optimizes per cfg (max_iterations 0 =
/// default budget, 1 = one-iteration mode), runs the final ansatz, and takes
/// the minimum-cost bitstring among the top-m most probable basis states
/// (exact) or among the sampled shots. A noise model switches the final
/// state and objective to the density-matrix backend; otherwise `objective`
/// selects the exact or shot-mean optimization target.
DecodeResult decode_block(const ReceivedBlock& block, const Code& code, int p,
                          const InitStrategy& init, const OptimizerConfig& cfg,
                          const Extraction& extraction = ExactExtraction{},
                          const std::optional<NoiseModel>& noise = std::nullopt,
                          double w_s = std::numeric_limits<double>::quiet_NaN(),
                          const ObjectiveBackend& objective = ExactBackend{});

/// Noisy expected cost of the ansatz run under depolarizing noise; used by
/// the noise-sweep path. Throws SizeLimit beyond the density cap.
double noisy_expected_energy(const Qubo& q, const AnsatzParams& params, const NoiseModel& noise);

} // namespace fdeq
