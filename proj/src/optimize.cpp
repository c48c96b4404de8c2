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

#include "fdeq/optimize.hpp"

#include "fdeq/errors.hpp"

#include <cmath>
#include <vector>

namespace fdeq {

int default_eval_budget(int dim) { return 100 + 40 * dim; }

OptimResult minimize_linear_trust(const std::function<double(const Eigen::VectorXd&)>& f,
                                  const Eigen::VectorXd& x0, const OptimizerConfig& cfg) {
    const int n = static_cast<int>(x0.size());
    if (n < 1) throw EmptyInput("minimize_linear_trust: empty parameter vector");
    const int budget = cfg.max_iterations > 0 ? cfg.max_iterations : default_eval_budget(n);
    const double rho_end = cfg.convergence_tol;
    double rho = cfg.initial_step;

    OptimResult res;
    res.x = x0;
    res.value = f(x0);
    res.iterations = 0;

    auto eval = [&](const Eigen::VectorXd& x) {
        const double v = f(x);
        ++res.iterations;
        if (v < res.value) {
            res.value = v;
            res.x = x;
        }
        return v;
    };

    struct Vertex {
        Eigen::VectorXd x;
        double fx;
    };
    std::vector<Vertex> simplex;
    bool need_rebuild = true;

    while (res.iterations < budget && rho >= rho_end) {
        if (need_rebuild) {
            // Coordinate simplex of edge length rho around the incumbent.
            simplex.clear();
            simplex.push_back({res.x, res.value});
            for (int i = 0; i < n && res.iterations < budget; ++i) {
                Eigen::VectorXd xi = simplex[0].x;
                xi[i] += rho;
                simplex.push_back({xi, eval(xi)});
            }
            if (static_cast<int>(simplex.size()) < n + 1) break; // budget hit mid-build
            need_rebuild = false;
            continue;
        }

        // Best and worst vertices of the current simplex.
        std::size_t ib = 0, iw = 0;
        for (std::size_t j = 1; j < simplex.size(); ++j) {
            if (simplex[j].fx < simplex[ib].fx) ib = j;
            if (simplex[j].fx > simplex[iw].fx) iw = j;
        }

        // Linear interpolation through the simplex: edges from the best
        // vertex against function differences.
        Eigen::MatrixXd d(n, n);
        Eigen::VectorXd df(n);
        int row = 0;
        for (std::size_t j = 0; j < simplex.size(); ++j) {
            if (j == ib) continue;
            d.row(row) = (simplex[j].x - simplex[ib].x).transpose();
            df[row] = simplex[j].fx - simplex[ib].fx;
            ++row;
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(d);
        if (qr.rank() < n) {
            need_rebuild = true;
            continue;
        }
        const Eigen::VectorXd g = qr.solve(df);
        const double gn = g.norm();
        if (!std::isfinite(gn) || gn < 1e-300) {
            rho *= 0.5;
            need_rebuild = true;
            continue;
        }

        const double f_best_prev = res.value;
        const Eigen::VectorXd cand = simplex[ib].x - (rho / gn) * g;
        const double fc = eval(cand);

        if (fc < f_best_prev) {
            simplex[iw] = {cand, fc};
            rho = std::min(rho * 1.5, cfg.initial_step);
        } else {
            if (fc < simplex[iw].fx) simplex[iw] = {cand, fc};
            rho *= 0.5;
            // Rebuild once the simplex scale no longer matches the radius.
            double max_edge = 0.0;
            for (const auto& v : simplex) max_edge = std::max(max_edge, (v.x - res.x).norm());
            if (max_edge > 4.0 * rho) need_rebuild = true;
        }
    }

    res.converged = rho < rho_end;
    return res;
}

} // namespace fdeq
