#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace rhythmkit {

// Row-labeled non-negative data matrix: one row per person, one column per
// feature (a weekly hour bin in the pipeline; general widths are supported).
struct DataMatrix {
    Eigen::MatrixXd values;
    std::vector<std::string> row_labels;

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index cols() const { return values.cols(); }
    void validate() const;  // labels match rows; entries finite and >= 0
};

struct SolverConfig {
    static std::vector<std::uint64_t> default_restart_seeds();  // 0..999

    int max_iterations = 500;
    double relative_tolerance = 1e-6;
    double epsilon_floor = 1e-12;
    std::vector<std::uint64_t> restart_seeds = default_restart_seeds();
};

// One converged run: X ~= W Hᵀ with W (N x K) and H (M x K) element-wise
// non-negative (at least epsilon_floor where the update clamped).
struct Factorization {
    Eigen::MatrixXd W;
    Eigen::MatrixXd H;
    double final_error = 0.0;
    std::uint64_t seed = 0;
    int iterations_run = 0;
    std::vector<double> sweep_errors;  // error after init, then after each sweep

    Eigen::Index components() const { return W.cols(); }
};

// E = 1/2 * sum_ij (x_ij - sum_k w_ik h_jk)^2.
double frobenius_error(const Eigen::MatrixXd& X, const Eigen::MatrixXd& W,
                       const Eigen::MatrixXd& H);

// Hierarchical alternating least squares. Each sweep updates every column of
// H, then every column of W, to its per-entry constrained least squares
// optimum given the other columns, clamped at config.epsilon_floor. The
// per-sweep error sequence is non-increasing and the run is bit-reproducible
// for fixed (X, k, seed, config).
Factorization hals_factorize(const Eigen::MatrixXd& X, int k, std::uint64_t seed,
                             const SolverConfig& config);

// Best run over config.restart_seeds, smallest final error; ties go to the
// smallest seed. The reduction is a total order, so the winner does not
// depend on evaluation order or thread count.
Factorization multi_restart(const Eigen::MatrixXd& X, int k, const SolverConfig& config,
                            int threads = 0);

// W Hᵀ, the sum of the K rank-one component matrices.
Eigen::MatrixXd reconstruct(const Factorization& f);

// Rows scaled to sum to one; the dominant component per row is unchanged.
// All-zero rows are reported as a degeneracy naming the offending rows.
Eigen::MatrixXd normalize_weights(const Eigen::MatrixXd& W,
                                  const std::vector<std::string>* row_labels = nullptr);

}  // namespace rhythmkit
