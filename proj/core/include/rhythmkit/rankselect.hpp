#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "rhythmkit/nmf.hpp"

namespace rhythmkit {

// Dominant-component index per row of W; ties go to the smaller index.
std::vector<int> argmax_assignments(const Eigen::MatrixXd& W);

// Binary N x N matrix with 1 where two rows of W share their dominant
// component. Symmetric, unit diagonal.
Eigen::MatrixXd connectivity(const Eigen::MatrixXd& W);

// Element-wise mean of equally shaped connectivity matrices, summed in the
// given order.
Eigen::MatrixXd consensus(const std::vector<Eigen::MatrixXd>& connectivities);

// Builds the average-linkage dendrogram over D = 1 - consensus and returns
// the Pearson correlation between the pairwise distances and their dendrogram
// merge heights. Constant distances (a perfectly stable consensus) are a
// degeneracy; rank_sweep treats that case as a coefficient of 1.
double cophenetic_coefficient(const Eigen::MatrixXd& consensus_matrix);

struct ConsensusResult {
    int k = 0;
    Eigen::MatrixXd consensus;
    double cophenetic = 0.0;
    int runs = 0;
    bool degenerate = false;  // constant consensus distances; coefficient pinned to 1
};

struct RankSweepResult {
    std::vector<ConsensusResult> curve;
    int selected_k = 0;
};

// For each candidate rank, factorizes runs_per_k times on the seed schedule
// base_seed + k*1'000'000 + run, averages the run connectivities into a
// consensus matrix, and scores it. The rank with the highest cophenetic
// coefficient wins; ties go to the smaller rank.
RankSweepResult rank_sweep(const Eigen::MatrixXd& X, const std::vector<int>& k_range,
                           int runs_per_k, const SolverConfig& config,
                           std::uint64_t base_seed = 0, int threads = 0);

}  // namespace rhythmkit
