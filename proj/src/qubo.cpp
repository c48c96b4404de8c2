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

#include "fdeq/qubo.hpp"

#include "fdeq/errors.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fdeq {

namespace {

/// Accumulates polynomial terms into a symmetric Q with x^2 = x folded onto
/// the diagonal. Off-diagonal coefficients are split in half so that
/// x^T Q x reproduces each cross term once.
class QuboAccum {
public:
    explicit QuboAccum(int n) : q_(Eigen::MatrixXd::Zero(n, n)) {}

    void linear(int i, double c) { q_(i, i) += c; }

    void quad(int i, int j, double c) {
        if (i == j) {
            q_(i, i) += c;
            return;
        }
        q_(i, j) += c / 2.0;
        q_(j, i) += c / 2.0;
    }

    /// w * (sum_b x_b - 2 sum_a x_a)^2 expanded over binaries.
    void even_parity_penalty(const std::vector<int>& b, const std::vector<int>& a, double w) {
        for (std::size_t u = 0; u < b.size(); ++u) {
            linear(b[u], w);
            for (std::size_t v = u + 1; v < b.size(); ++v) quad(b[u], b[v], 2.0 * w);
        }
        for (int bu : b)
            for (int av : a) quad(bu, av, -4.0 * w);
        for (std::size_t u = 0; u < a.size(); ++u) {
            linear(a[u], 4.0 * w);
            for (std::size_t v = u + 1; v < a.size(); ++v) quad(a[u], a[v], 8.0 * w);
        }
    }

    Eigen::MatrixXd take() { return std::move(q_); }

private:
    Eigen::MatrixXd q_;
};

void check_weight(const Eigen::VectorXd& llrs, double w_s) {
    if (w_s <= llrs.cwiseAbs().sum())
        throw WeightTooSmall("satisfier weight must exceed sum|LLR| to pin codewords as minima");
}

} // namespace

double default_satisfier_weight(const Eigen::VectorXd& llrs) {
    return llrs.cwiseAbs().sum() + 1.0;
}

Qubo build_ldpc_qubo(const ParityCheckMatrix& h, const Eigen::VectorXd& llrs, double w_s) {
    if (llrs.size() != h.bits) throw LengthMismatch("build_ldpc_qubo: len(llrs) != N");
    if (w_s <= 0) throw WeightTooSmall("build_ldpc_qubo: w_s must be positive");
    check_weight(llrs, w_s);

    const int n_bits = h.bits;
    int total = n_bits;
    for (int c = 0; c < h.checks; ++c) total += h.row_degree(c) / 2;

    QuboAccum acc(total);
    Qubo out;
    out.n_vars = total;
    out.roles.assign(static_cast<std::size_t>(total), VarRole::Ancilla);
    for (int i = 0; i < n_bits; ++i) out.roles[static_cast<std::size_t>(i)] = VarRole::CodewordBit;

    int next = n_bits;
    for (int c = 0; c < h.checks; ++c) {
        const auto& bits_of_check = h.row_support[static_cast<std::size_t>(c)];
        std::vector<int> anc;
        for (int m = h.row_degree(c) / 2; m > 0; --m) anc.push_back(next++);
        acc.even_parity_penalty(bits_of_check, anc, w_s);
    }
    for (int i = 0; i < n_bits; ++i) acc.linear(i, llrs[i]);

    out.q = acc.take();
    out.codeword_map.resize(static_cast<std::size_t>(n_bits));
    for (int i = 0; i < n_bits; ++i) out.codeword_map[static_cast<std::size_t>(i)] = i;
    const LdpcGenerator gen = ldpc_generator_from_h(h);
    out.data_map = gen.data_positions();
    return out;
}

Qubo build_polar_qubo(const PolarCodeConfig& cfg, const Eigen::VectorXd& llrs, double w_s) {
    const int n = cfg.block_length;
    if (llrs.size() != n) throw LengthMismatch("build_polar_qubo: len(llrs) != N");
    if (w_s <= 0) throw WeightTooSmall("build_polar_qubo: w_s must be positive");
    check_weight(llrs, w_s);

    // Abstract ids: inputs 0..N-1, then one fresh XOR output and one ancilla
    // per tree node, in bottom-up creation order.
    struct XorConstraint {
        int left, right, fresh, anc;
    };
    std::vector<XorConstraint> constraints;
    std::vector<int> out_vars(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out_vars[static_cast<std::size_t>(i)] = i;
    int next_abstract = n;
    for (int len = 2; len <= n; len <<= 1) {
        const int half = len / 2;
        for (int blk = 0; blk < n; blk += len) {
            for (int j = 0; j < half; ++j) {
                const int l = out_vars[static_cast<std::size_t>(blk + j)];
                const int r = out_vars[static_cast<std::size_t>(blk + half + j)];
                const int z = next_abstract++;
                const int a = next_abstract++;
                constraints.push_back({l, r, z, a});
                out_vars[static_cast<std::size_t>(blk + j)] = z;
            }
        }
    }

    // Frozen inputs are the constant 0: they get no variable index.
    std::vector<int> active(static_cast<std::size_t>(next_abstract), -1);
    int n_active = 0;
    for (int i = 0; i < next_abstract; ++i) {
        if (i < n && cfg.is_frozen(i)) continue;
        active[static_cast<std::size_t>(i)] = n_active++;
    }

    QuboAccum acc(n_active);
    Qubo out;
    out.n_vars = n_active;
    out.eliminated_vars = n - cfg.data_bits;
    out.roles.assign(static_cast<std::size_t>(n_active), VarRole::Intermediate);
    for (int i = 0; i < n; ++i)
        if (active[static_cast<std::size_t>(i)] >= 0)
            out.roles[static_cast<std::size_t>(active[static_cast<std::size_t>(i)])] = VarRole::InputBit;

    for (const auto& c : constraints) {
        std::vector<int> b;
        for (int v : {c.left, c.right, c.fresh}) {
            const int av = active[static_cast<std::size_t>(v)];
            if (av >= 0) b.push_back(av);
        }
        const int aa = active[static_cast<std::size_t>(c.anc)];
        out.roles[static_cast<std::size_t>(aa)] = VarRole::Ancilla;
        acc.even_parity_penalty(b, {aa}, w_s);
    }

    out.codeword_map.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int av = active[static_cast<std::size_t>(out_vars[static_cast<std::size_t>(i)])];
        out.codeword_map[static_cast<std::size_t>(i)] = av;
        acc.linear(av, llrs[i]);
        if (out.roles[static_cast<std::size_t>(av)] == VarRole::Intermediate)
            out.roles[static_cast<std::size_t>(av)] = VarRole::CodewordBit;
    }
    for (int i = 0; i < n; ++i)
        if (!cfg.is_frozen(i)) out.data_map.push_back(active[static_cast<std::size_t>(i)]);

    out.q = acc.take();
    return out;
}

double qubo_cost(const Qubo& q, const BinVector& x) {
    if (x.size() != q.n_vars) throw LengthMismatch("qubo_cost: len(x) != n_vars");
    const Eigen::VectorXd xd = x.cast<double>();
    return xd.dot(q.q * xd) + q.offset;
}

IsingModel qubo_to_ising(const Qubo& q) {
    const int n = q.n_vars;
    IsingModel m;
    m.h = Eigen::VectorXd::Zero(n);
    m.j = Eigen::MatrixXd::Zero(n, n);
    m.constant = q.offset;
    for (int i = 0; i < n; ++i) {
        m.h[i] -= q.q(i, i) / 2.0;
        m.constant += q.q(i, i) / 2.0;
        for (int jj = i + 1; jj < n; ++jj) {
            const double w = q.q(i, jj) + q.q(jj, i); // coefficient of x_i x_j
            if (w == 0.0) continue;
            m.j(i, jj) += w / 4.0;
            m.j(jj, i) += w / 4.0;
            m.h[i] -= w / 4.0;
            m.h[jj] -= w / 4.0;
            m.constant += w / 4.0;
        }
    }
    return m;
}

std::vector<double> qubo_cost_table(const Qubo& q, int cap) {
    const int n = q.n_vars;
    if (n < 1) throw LengthMismatch("qubo_cost_table: empty QUBO");
    if (n > cap) throw SizeLimit("qubo_cost_table: n_vars exceeds cap");
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<double> table(dim);
    std::vector<std::uint8_t> x(static_cast<std::size_t>(n), 0);
    double cost = q.offset;
    table[0] = cost;
    for (std::uint64_t m = 1; m < dim; ++m) {
        const int k = std::countr_zero(m);
        double s = q.q(k, k);
        for (int j = 0; j < n; ++j)
            if (j != k && x[static_cast<std::size_t>(j)]) s += 2.0 * q.q(k, j);
        cost += x[static_cast<std::size_t>(k)] ? -s : s;
        x[static_cast<std::size_t>(k)] ^= 1;
        table[m ^ (m >> 1)] = cost;
    }
    return table;
}

BruteForceResult brute_force_extrema(const Qubo& q, int cap) {
    const int n = q.n_vars;
    if (n < 1) throw LengthMismatch("brute_force_extrema: empty QUBO");
    if (n > cap) throw SizeLimit("brute_force_extrema: n_vars exceeds cap");
    const std::uint64_t dim = std::uint64_t{1} << n;

    std::vector<std::uint8_t> x(static_cast<std::size_t>(n), 0);
    auto as_vec = [&] {
        BinVector v(n);
        for (int i = 0; i < n; ++i) v[i] = x[static_cast<std::size_t>(i)];
        return v;
    };

    double cost = q.offset;
    BruteForceResult best;
    best.argmin = as_vec();
    best.min_cost = cost;
    best.argmax = best.argmin;
    best.max_cost = cost;

    for (std::uint64_t m = 1; m < dim; ++m) {
        const int k = std::countr_zero(m);
        double s = q.q(k, k);
        for (int j = 0; j < n; ++j)
            if (j != k && x[static_cast<std::size_t>(j)]) s += 2.0 * q.q(k, j);
        cost += x[static_cast<std::size_t>(k)] ? -s : s;
        x[static_cast<std::size_t>(k)] ^= 1;

        if (cost < best.min_cost) {
            best.min_cost = cost;
            best.argmin = as_vec();
        } else if (cost == best.min_cost) {
            BinVector v = as_vec();
            if (bits_less(v, best.argmin)) best.argmin = std::move(v);
        }
        if (cost > best.max_cost) {
            best.max_cost = cost;
            best.argmax = as_vec();
        } else if (cost == best.max_cost) {
            BinVector v = as_vec();
            if (bits_less(v, best.argmax)) best.argmax = std::move(v);
        }
    }
    // Report exact (non-incremental) costs for the chosen extrema.
    best.min_cost = qubo_cost(q, best.argmin);
    best.max_cost = qubo_cost(q, best.argmax);
    return best;
}

std::pair<BinVector, double> brute_force_min(const Qubo& q, int cap) {
    BruteForceResult r = brute_force_extrema(q, cap);
    return {std::move(r.argmin), r.min_cost};
}

namespace {

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void save_qubo(std::ostream& out, const Qubo& q) {
    out << q.n_vars << ' ' << fmt_full(q.offset) << '\n';
    for (int i = 0; i < q.n_vars; ++i)
        for (int j = i; j < q.n_vars; ++j)
            if (q.q(i, j) != 0.0) out << i << ' ' << j << ' ' << fmt_full(q.q(i, j)) << '\n';
}

Qubo load_qubo(std::istream& in) {
    Qubo q;
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("qubo file: missing header");
    {
        std::istringstream h(line);
        if (!(h >> q.n_vars >> q.offset)) throw ConfigError("qubo file: header must be \"n offset\"");
    }
    if (q.n_vars < 1) throw ConfigError("qubo file: n must be positive");
    q.q = Eigen::MatrixXd::Zero(q.n_vars, q.n_vars);
    q.roles.assign(static_cast<std::size_t>(q.n_vars), VarRole::Intermediate);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int i, j;
        double v;
        if (!(ls >> i >> j >> v)) throw ConfigError("qubo file: bad entry line");
        if (i > j || i < 0 || j >= q.n_vars) throw ConfigError("qubo file: index out of range");
        q.q(i, j) = v;
        q.q(j, i) = v;
    }
    return q;
}

void save_qubo_file(const std::string& path, const Qubo& q) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    save_qubo(out, q);
}

Qubo load_qubo_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open qubo file: " + path);
    return load_qubo(in);
}

} // namespace fdeq
