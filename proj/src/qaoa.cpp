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

#include "fdeq/qaoa.hpp"

#include "fdeq/errors.hpp"
#include "fdeq/rng.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace fdeq {

Eigen::VectorXd AnsatzParams::flat() const {
    Eigen::VectorXd v(gammas.size() + betas.size());
    v << gammas, betas;
    return v;
}

AnsatzParams AnsatzParams::from_flat(const Eigen::VectorXd& v) {
    const Eigen::Index p = v.size() / 2;
    AnsatzParams out;
    out.gammas = v.head(p);
    out.betas = v.tail(p);
    return out;
}

AnsatzParams initial_params(const InitStrategy& init, int p) {
    if (p < 1) throw LengthMismatch("initial_params: p must be >= 1");
    if (const auto* t = std::get_if<TemporalInit>(&init)) {
        if (t->params.layers() != p || t->params.betas.size() != p)
            throw LengthMismatch("initial_params: temporal params have wrong layer count");
        return t->params;
    }
    AnsatzParams out;
    out.gammas.resize(p);
    out.betas.resize(p);
    if (const auto* r = std::get_if<RandomInit>(&init)) {
        Rng rng(r->seed);
        constexpr double pi = 3.141592653589793238462643383279502884;
        for (int l = 0; l < p; ++l) out.gammas[l] = rng.uniform(0.0, pi);
        for (int l = 0; l < p; ++l) out.betas[l] = rng.uniform(0.0, pi);
    } else {
        out.gammas.setConstant(1e-4);
        out.betas.setConstant(1e-4);
    }
    return out;
}

AnsatzParams linear_ramp_params(int p, double gamma0, double beta0) {
    AnsatzParams out;
    out.gammas.resize(p);
    out.betas.resize(p);
    for (int l = 1; l <= p; ++l) {
        out.gammas[l - 1] = gamma0 * static_cast<double>(l) / p;
        out.betas[l - 1] = beta0 * (1.0 - static_cast<double>(l - 1) / p);
    }
    return out;
}

double qubo_coefficient_sum(const Qubo& q) {
    double s = 0.0;
    for (int i = 0; i < q.n_vars; ++i)
        for (int j = i; j < q.n_vars; ++j) s += std::abs(q.q(i, j));
    return s;
}

Circuit build_ansatz_circuit(const IsingModel& ising, const AnsatzParams& params,
                             bool initial_plus) {
    const int n = static_cast<int>(ising.h.size());
    Circuit c(n, initial_plus ? InitialState::Plus : InitialState::Zero);
    for (int l = 0; l < params.layers(); ++l) {
        const double gamma = params.gammas[l];
        const double beta = params.betas[l];
        for (int i = 0; i < n; ++i)
            if (ising.h[i] != 0.0) c.rz(i, 2.0 * gamma * ising.h[i]);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (ising.j(i, j) == 0.0) continue;
                c.cnot(i, j);
                c.rz(j, 2.0 * gamma * ising.j(i, j));
                c.cnot(i, j);
            }
        }
        for (int i = 0; i < n; ++i) c.rx(i, 2.0 * beta);
    }
    return c;
}

AnsatzEvaluator::AnsatzEvaluator(const Qubo& q) : n_(q.n_vars) {
    if (n_ > kStateVectorQubitCap) throw SizeLimit("AnsatzEvaluator: QUBO exceeds simulator cap");
    cost_ = qubo_cost_table(q);
}

StateVector AnsatzEvaluator::state(const AnsatzParams& params) const {
    StateVector psi = plus_state(n_);
    const auto dim = static_cast<Eigen::Index>(cost_.size());
    for (int l = 0; l < params.layers(); ++l) {
        const double gamma = params.gammas[l];
        const double beta2 = 2.0 * params.betas[l];
        std::complex<double>* p = psi.data();
        for (Eigen::Index x = 0; x < dim; ++x)
            p[x] *= std::polar(1.0, -gamma * cost_[static_cast<std::size_t>(x)]);
        for (int qb = 0; qb < n_; ++qb) apply_rx(psi, qb, beta2);
    }
    return psi;
}

double AnsatzEvaluator::objective(const AnsatzParams& params) const {
    return expectation_diag(probabilities(state(params)), cost_);
}

namespace {

double sampled_mean(const AnsatzEvaluator& ev, const StateVector& psi, int n_shots,
                    std::uint64_t seed) {
    const auto idx = sample_indices(probabilities(psi), n_shots, seed);
    double acc = 0.0;
    for (std::uint64_t i : idx) acc += ev.cost_of_index(i);
    return acc / static_cast<double>(idx.size());
}

} // namespace

double qaoa_objective(const Qubo& q, const AnsatzParams& params, const ObjectiveBackend& backend) {
    const AnsatzEvaluator ev(q);
    if (const auto* s = std::get_if<SampledBackend>(&backend))
        return sampled_mean(ev, ev.state(params), s->n_shots, s->seed);
    return ev.objective(params);
}

double ansatz_gamma_scale(const Qubo& q) {
    return std::max(std::sqrt(qubo_coefficient_sum(q)), 1e-12);
}

OptimizeOutcome minimize_over_angles(const std::function<double(const AnsatzParams&)>& objective,
                                     const AnsatzParams& init, const OptimizerConfig& cfg,
                                     double gamma_scale) {
    // The gamma landscape lives on the 1/sqrt(sum|Q|) scale while betas are
    // O(1); optimizing in rescaled coordinates keeps the trust region
    // meaningful in both.
    const int p = init.layers();
    auto from_scaled = [p, gamma_scale](const Eigen::VectorXd& v) {
        AnsatzParams out = AnsatzParams::from_flat(v);
        out.gammas /= gamma_scale;
        return out;
    };
    Eigen::VectorXd x0 = init.flat();
    x0.head(p) *= gamma_scale;
    auto f = [&](const Eigen::VectorXd& v) { return objective(from_scaled(v)); };
    const OptimResult r = minimize_linear_trust(f, x0, cfg);
    return {from_scaled(r.x), r.value, r.iterations, r.converged};
}

OptimizeOutcome optimize_params(const Qubo& q, const AnsatzParams& init, const OptimizerConfig& cfg,
                                const ObjectiveBackend& backend) {
    const AnsatzEvaluator ev(q);
    std::uint64_t call = 0;
    std::function<double(const AnsatzParams&)> f;
    if (const auto* s = std::get_if<SampledBackend>(&backend)) {
        const SampledBackend sb = *s;
        f = [&ev, sb, &call](const AnsatzParams& p) {
            return sampled_mean(ev, ev.state(p), sb.n_shots, derive_seed(sb.seed, 0x5A0A, call++));
        };
    } else {
        f = [&ev](const AnsatzParams& p) { return ev.objective(p); };
    }
    // Physical angle coordinates: the generic local optimizer applied to any
    // initialization, as in the reference setup.
    return minimize_over_angles(f, init, cfg, 1.0);
}

AnsatzParams warm_start_from_preamble(const Frame& frame, const QuboBuilder& builder, int p,
                                      const OptimizerConfig& budget) {
    if (frame.preamble.empty()) throw NoPreamble("warm_start_from_preamble: frame has no preamble");
    const Qubo q = builder(frame.preamble.front());
    AnsatzParams seed = linear_ramp_params(p);
    const double scale = ansatz_gamma_scale(q);
    seed.gammas /= scale;
    OptimizerConfig cfg = budget;
    if (cfg.max_iterations <= 0) cfg.max_iterations = 500;
    // The offline search runs in the same normalized coordinates the seed
    // rescaling defines, so the trust region stays on the landscape's scale.
    const AnsatzEvaluator ev(q);
    auto f = [&ev](const AnsatzParams& params) { return ev.objective(params); };
    return minimize_over_angles(f, seed, cfg, scale).params;
}

double noisy_expected_energy(const Qubo& q, const AnsatzParams& params, const NoiseModel& noise) {
    if (q.n_vars > kDensityQubitCap) throw SizeLimit("noisy_expected_energy: beyond density cap");
    const Circuit c = build_ansatz_circuit(qubo_to_ising(q), params);
    const DensityMatrix rho = run_density(c, noise);
    return expectation_diag(probabilities(rho), qubo_cost_table(q));
}

namespace {

std::uint64_t pick_solution(const Eigen::VectorXd& probs, const AnsatzEvaluator& ev,
                            const Extraction& extraction, int n) {
    std::vector<std::uint64_t> candidates;
    if (const auto* se = std::get_if<SampledExtraction>(&extraction)) {
        candidates = sample_indices(probs, se->n_shots, se->seed);
    } else {
        const auto& ex = std::get<ExactExtraction>(extraction);
        std::vector<std::uint64_t> order;
        order.reserve(static_cast<std::size_t>(probs.size()));
        for (Eigen::Index i = 0; i < probs.size(); ++i)
            if (probs[i] > 0.0) order.push_back(static_cast<std::uint64_t>(i));
        const std::size_t m = std::min<std::size_t>(order.size(), static_cast<std::size_t>(ex.top_m));
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m),
                          order.end(), [&](std::uint64_t a, std::uint64_t b) {
                              const double pa = probs[static_cast<Eigen::Index>(a)];
                              const double pb = probs[static_cast<Eigen::Index>(b)];
                              if (pa != pb) return pa > pb;
                              return a < b;
                          });
        order.resize(m);
        candidates = std::move(order);
    }
    if (candidates.empty()) throw EmptyInput("decode_block: no extraction candidates");

    std::uint64_t best = candidates.front();
    double best_cost = ev.cost_of_index(best);
    for (std::uint64_t c : candidates) {
        const double cc = ev.cost_of_index(c);
        if (cc < best_cost ||
            (cc == best_cost && bits_less(index_to_bits(c, n), index_to_bits(best, n)))) {
            best = c;
            best_cost = cc;
        }
    }
    return best;
}

} // namespace

DecodeResult decode_block(const ReceivedBlock& block, const Code& code, int p,
                          const InitStrategy& init, const OptimizerConfig& cfg,
                          const Extraction& extraction, const std::optional<NoiseModel>& noise,
                          double w_s, const ObjectiveBackend& objective) {
    const Qubo q = build_decoding_qubo(code, block.llrs, w_s);
    if (noise && q.n_vars > kDensityQubitCap)
        throw SizeLimit("decode_block: noisy backend beyond density cap");
    const AnsatzEvaluator ev(q);
    const AnsatzParams start = initial_params(init, p);

    OptimizeOutcome opt;
    if (noise) {
        const NoiseModel nm = *noise;
        const IsingModel ising = qubo_to_ising(q);
        auto f = [&](const AnsatzParams& p) {
            const Circuit c = build_ansatz_circuit(ising, p);
            return expectation_diag(probabilities(run_density(c, nm)), ev.cost_table());
        };
        opt = minimize_over_angles(f, start, cfg, 1.0);
    } else {
        opt = optimize_params(q, start, cfg, objective);
    }

    Eigen::VectorXd probs;
    if (noise) {
        const Circuit c = build_ansatz_circuit(qubo_to_ising(q), opt.params);
        probs = probabilities(run_density(c, *noise));
    } else {
        probs = probabilities(ev.state(opt.params));
    }

    const std::uint64_t sol = pick_solution(probs, ev, extraction, q.n_vars);

    DecodeResult res;
    res.solution_bits = index_to_bits(sol, q.n_vars);
    res.energy = ev.cost_of_index(sol);
    res.iterations_used = opt.iterations;
    res.params_final = opt.params;

    res.data_bits.resize(static_cast<Eigen::Index>(q.data_map.size()));
    for (std::size_t j = 0; j < q.data_map.size(); ++j)
        res.data_bits[static_cast<Eigen::Index>(j)] = res.solution_bits[q.data_map[j]];
    res.codeword_bits.resize(static_cast<Eigen::Index>(q.codeword_map.size()));
    for (std::size_t j = 0; j < q.codeword_map.size(); ++j)
        res.codeword_bits[static_cast<Eigen::Index>(j)] = res.solution_bits[q.codeword_map[j]];

    if (q.n_vars <= 16) {
        const BruteForceResult bf = brute_force_extrema(q);
        const double span = bf.max_cost - bf.min_cost;
        res.normalized_energy =
            span > 0.0 ? std::clamp((res.energy - bf.min_cost) / span, 0.0, 1.0) : 0.0;
    } else {
        res.normalized_energy = std::numeric_limits<double>::quiet_NaN();
    }
    return res;
}

} // namespace fdeq
