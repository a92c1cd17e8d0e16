#include "rhythmkit/rankselect.hpp"

#include <algorithm>
#include <limits>

#include "rhythmkit/errors.hpp"
#include "rhythmkit/parallel.hpp"
#include "rhythmkit/stats.hpp"

namespace rhythmkit {

std::vector<int> argmax_assignments(const Eigen::MatrixXd& W) {
    if (W.rows() < 1 || W.cols() < 1) throw ConfigError("argmax_assignments: empty matrix");
    std::vector<int> assignment(static_cast<std::size_t>(W.rows()));
    for (Eigen::Index i = 0; i < W.rows(); ++i) {
        int arg = 0;
        double best = W(i, 0);
        for (Eigen::Index j = 1; j < W.cols(); ++j)
            if (W(i, j) > best) {
                best = W(i, j);
                arg = static_cast<int>(j);
            }
        assignment[static_cast<std::size_t>(i)] = arg;
    }
    return assignment;
}

Eigen::MatrixXd connectivity(const Eigen::MatrixXd& W) {
    if (W.rows() < 2) throw ConfigError("connectivity: need at least two rows");
    const std::vector<int> assignment = argmax_assignments(W);
    const Eigen::Index n = W.rows();
    Eigen::MatrixXd C(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            C(i, j) = assignment[static_cast<std::size_t>(i)] ==
                              assignment[static_cast<std::size_t>(j)]
                          ? 1.0
                          : 0.0;
    return C;
}

Eigen::MatrixXd consensus(const std::vector<Eigen::MatrixXd>& connectivities) {
    if (connectivities.size() < 2)
        throw ConfigError("consensus: need at least two connectivity matrices");
    const Eigen::Index rows = connectivities.front().rows();
    const Eigen::Index cols = connectivities.front().cols();
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(rows, cols);
    for (const Eigen::MatrixXd& c : connectivities) {
        if (c.rows() != rows || c.cols() != cols)
            throw DataError("consensus: connectivity matrices differ in shape");
        sum += c;
    }
    return sum / static_cast<double>(connectivities.size());
}

double cophenetic_coefficient(const Eigen::MatrixXd& consensus_matrix) {
    const Eigen::Index n = consensus_matrix.rows();
    if (consensus_matrix.cols() != n) throw DataError("cophenetic_coefficient: matrix not square");
    if (n < 3) throw ConfigError("cophenetic_coefficient: need at least three items");

    std::vector<double> original;
    original.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) original.push_back(1.0 - consensus_matrix(i, j));

    // Average-linkage agglomeration. Clusters live at the index of their
    // smallest member; ties in the minimum search resolve to the
    // lexicographically smallest pair.
    Eigen::MatrixXd dist(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            dist(i, j) = i == j ? 0.0 : 1.0 - consensus_matrix(i, j);

    std::vector<bool> active(static_cast<std::size_t>(n), true);
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) members[static_cast<std::size_t>(i)] = {static_cast<int>(i)};

    Eigen::MatrixXd coph = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index merge = 0; merge + 1 < n; ++merge) {
        Eigen::Index a = -1;
        Eigen::Index b = -1;
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!active[static_cast<std::size_t>(i)]) continue;
            for (Eigen::Index j = i + 1; j < n; ++j) {
                if (!active[static_cast<std::size_t>(j)]) continue;
                if (dist(i, j) < best) {
                    best = dist(i, j);
                    a = i;
                    b = j;
                }
            }
        }
        for (int p : members[static_cast<std::size_t>(a)])
            for (int q : members[static_cast<std::size_t>(b)]) {
                coph(p, q) = best;
                coph(q, p) = best;
            }
        const double size_a = size[static_cast<std::size_t>(a)];
        const double size_b = size[static_cast<std::size_t>(b)];
        for (Eigen::Index k = 0; k < n; ++k) {
            if (!active[static_cast<std::size_t>(k)] || k == a || k == b) continue;
            const double merged = (size_a * dist(a, k) + size_b * dist(b, k)) / (size_a + size_b);
            dist(a, k) = merged;
            dist(k, a) = merged;
        }
        size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
        auto& mem_a = members[static_cast<std::size_t>(a)];
        auto& mem_b = members[static_cast<std::size_t>(b)];
        mem_a.insert(mem_a.end(), mem_b.begin(), mem_b.end());
        mem_b.clear();
        active[static_cast<std::size_t>(b)] = false;
    }

    std::vector<double> heights;
    heights.reserve(original.size());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) heights.push_back(coph(i, j));

    return pearson_r(original, heights);
}

RankSweepResult rank_sweep(const Eigen::MatrixXd& X, const std::vector<int>& k_range,
                           int runs_per_k, const SolverConfig& config,
                           std::uint64_t base_seed, int threads) {
    if (k_range.empty()) throw ConfigError("rank_sweep: empty rank range");
    if (runs_per_k < 2) throw ConfigError("rank_sweep: need at least two runs per rank");
    const Eigen::Index k_max = std::min(X.rows(), X.cols());
    for (int k : k_range)
        if (k < 2 || k > k_max)
            throw ConfigError("rank_sweep: k = " + std::to_string(k) + " outside [2, " +
                              std::to_string(k_max) + "]");

    RankSweepResult result;
    result.curve.reserve(k_range.size());
    for (int k : k_range) {
        std::vector<Eigen::MatrixXd> connectivities(static_cast<std::size_t>(runs_per_k));
        parallel_for(static_cast<std::size_t>(runs_per_k), threads, [&](std::size_t run) {
            const std::uint64_t seed =
                base_seed + static_cast<std::uint64_t>(k) * 1'000'000ull + run;
            connectivities[run] = connectivity(hals_factorize(X, k, seed, config).W);
        });
        ConsensusResult entry;
        entry.k = k;
        entry.runs = runs_per_k;
        entry.consensus = consensus(connectivities);
        try {
            entry.cophenetic = cophenetic_coefficient(entry.consensus);
        } catch (const DegeneracyError&) {
            entry.cophenetic = 1.0;  // perfectly stable consensus
            entry.degenerate = true;
        }
        result.curve.push_back(std::move(entry));
    }

    const ConsensusResult* best = nullptr;
    for (const ConsensusResult& entry : result.curve) {
        const bool better = !best || entry.cophenetic > best->cophenetic ||
                            (entry.cophenetic == best->cophenetic && entry.k < best->k);
        if (better) best = &entry;
    }
    result.selected_k = best->k;
    return result;
}

}  // namespace rhythmkit
