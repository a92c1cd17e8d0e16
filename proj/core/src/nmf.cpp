#include "rhythmkit/nmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "rhythmkit/errors.hpp"
#include "rhythmkit/parallel.hpp"
#include "rhythmkit/rng.hpp"

namespace rhythmkit {

void DataMatrix::validate() const {
    if (row_labels.size() != static_cast<std::size_t>(values.rows()))
        throw DataError("data matrix: row label count does not match row count");
    if (!values.allFinite()) throw DataError("data matrix: non-finite entry");
    if ((values.array() < 0.0).any()) throw DataError("data matrix: negative entry");
}

std::vector<std::uint64_t> SolverConfig::default_restart_seeds() {
    std::vector<std::uint64_t> seeds(1000);
    std::iota(seeds.begin(), seeds.end(), std::uint64_t{0});
    return seeds;
}

double frobenius_error(const Eigen::MatrixXd& X, const Eigen::MatrixXd& W,
                       const Eigen::MatrixXd& H) {
    if (W.rows() != X.rows() || H.rows() != X.cols() || W.cols() != H.cols()) {
        std::ostringstream msg;
        msg << "frobenius_error: dimension mismatch, X " << X.rows() << "x" << X.cols()
            << ", W " << W.rows() << "x" << W.cols() << ", H " << H.rows() << "x" << H.cols();
        throw DataError(msg.str());
    }
    return 0.5 * (X - W * H.transpose()).squaredNorm();
}

namespace {

void check_factorize_inputs(const Eigen::MatrixXd& X, int k, const SolverConfig& config) {
    if (X.rows() == 0 || X.cols() == 0) throw ConfigError("hals_factorize: empty matrix");
    const Eigen::Index k_max = std::min(X.rows(), X.cols());
    if (k < 1 || k > k_max)
        throw ConfigError("hals_factorize: k = " + std::to_string(k) +
                          " outside [1, " + std::to_string(k_max) + "]");
    if (!X.allFinite()) throw DataError("hals_factorize: non-finite entry in data matrix");
    if ((X.array() < 0.0).any())
        throw DataError("hals_factorize: negative entry in data matrix");
    if (config.max_iterations < 1) throw ConfigError("hals_factorize: max_iterations < 1");
    if (!(config.relative_tolerance > 0.0))
        throw ConfigError("hals_factorize: relative_tolerance must be positive");
    if (!(config.epsilon_floor > 0.0))
        throw ConfigError("hals_factorize: epsilon_floor must be positive");
}

// One half-sweep for A ~= coef * basisᵀ: column j of coef moves to the
// least squares optimum over [eps, inf) per entry, columns updated in index
// order so later columns see earlier updates. A basis column whose norm has
// collapsed below eps is restored to the floor before it is used as a
// denominator.
void half_sweep(const Eigen::MatrixXd& A, Eigen::MatrixXd& coef, Eigen::MatrixXd& basis,
                double eps) {
    Eigen::MatrixXd gram = basis.transpose() * basis;  // K x K
    Eigen::MatrixXd proj = A * basis;                  // rows(A) x K
    const Eigen::Index k = coef.cols();
    for (Eigen::Index j = 0; j < k; ++j) {
        if (gram(j, j) < eps * eps) {
            basis.col(j).setConstant(eps);
            gram = basis.transpose() * basis;
            proj = A * basis;
        }
        coef.col(j) =
            (coef.col(j) + (proj.col(j) - coef * gram.col(j)) / gram(j, j)).cwiseMax(eps);
    }
}

}  // namespace

Factorization hals_factorize(const Eigen::MatrixXd& X, int k, std::uint64_t seed,
                             const SolverConfig& config) {
    check_factorize_inputs(X, k, config);
    const Eigen::Index n = X.rows();
    const Eigen::Index m = X.cols();
    const double eps = config.epsilon_floor;

    Factorization f;
    f.seed = seed;
    f.W.resize(n, k);
    f.H.resize(m, k);

    // Uniform (0,1) entries scaled by sqrt(mean(X)/k); W is filled row-major
    // first, then H, which pins the seed-to-init mapping.
    CounterRng rng(seed);
    const double scale = std::sqrt(X.mean() / static_cast<double>(k));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < k; ++j) f.W(i, j) = rng.uniform() * scale;
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < k; ++j) f.H(i, j) = rng.uniform() * scale;

    const Eigen::MatrixXd XT = X.transpose();
    double prev = 0.5 * (X - f.W * f.H.transpose()).squaredNorm();
    f.sweep_errors.push_back(prev);

    for (int sweep = 0; sweep < config.max_iterations; ++sweep) {
        half_sweep(XT, f.H, f.W, eps);
        half_sweep(X, f.W, f.H, eps);
        const double error = 0.5 * (X - f.W * f.H.transpose()).squaredNorm();
        f.sweep_errors.push_back(error);
        f.iterations_run = sweep + 1;
        const double rel_change = std::abs(prev - error) / std::max(prev, eps);
        prev = error;
        if (rel_change < config.relative_tolerance) break;
    }
    f.final_error = prev;
    return f;
}

Factorization multi_restart(const Eigen::MatrixXd& X, int k, const SolverConfig& config,
                            int threads) {
    if (config.restart_seeds.empty()) throw ConfigError("multi_restart: empty seed list");
    check_factorize_inputs(X, k, config);

    const std::vector<std::uint64_t>& seeds = config.restart_seeds;
    std::vector<Factorization> runs(seeds.size());
    parallel_for(seeds.size(), threads,
                 [&](std::size_t i) { runs[i] = hals_factorize(X, k, seeds[i], config); });

    std::size_t best = 0;
    for (std::size_t i = 1; i < runs.size(); ++i) {
        const bool better = runs[i].final_error < runs[best].final_error ||
                            (runs[i].final_error == runs[best].final_error &&
                             runs[i].seed < runs[best].seed);
        if (better) best = i;
    }
    return std::move(runs[best]);
}

Eigen::MatrixXd reconstruct(const Factorization& f) {
    if (f.W.cols() != f.H.cols())
        throw DataError("reconstruct: W and H disagree on the component count");
    return f.W * f.H.transpose();
}

Eigen::MatrixXd normalize_weights(const Eigen::MatrixXd& W,
                                  const std::vector<std::string>* row_labels) {
    if (row_labels && row_labels->size() != static_cast<std::size_t>(W.rows()))
        throw ConfigError("normalize_weights: row label count does not match W");
    if ((W.array() < 0.0).any()) throw DataError("normalize_weights: negative weight");

    std::vector<Eigen::Index> degenerate;
    for (Eigen::Index i = 0; i < W.rows(); ++i)
        if (W.row(i).sum() <= 0.0) degenerate.push_back(i);
    if (!degenerate.empty()) {
        std::ostringstream msg;
        msg << "normalize_weights: all-zero weight rows:";
        for (Eigen::Index i : degenerate) {
            msg << ' ';
            if (row_labels)
                msg << (*row_labels)[static_cast<std::size_t>(i)];
            else
                msg << i;
        }
        throw DegeneracyError(msg.str());
    }

    Eigen::MatrixXd out = W;
    for (Eigen::Index i = 0; i < out.rows(); ++i) out.row(i) /= out.row(i).sum();
    return out;
}

}  // namespace rhythmkit
