#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rhythmkit/sleep.hpp"

namespace rhythmkit {

struct PearsonResult {
    double r = 0.0;
    double p = 1.0;
    std::size_t n = 0;
};

// Sample Pearson correlation with a two-sided p-value from the exact
// t-distribution, t = r*sqrt((n-2)/(1-r^2)) with n-2 degrees of freedom.
// Needs n >= 3 and non-constant inputs.
PearsonResult pearson(std::span<const double> x, std::span<const double> y);

// Correlation only; same preconditions.
double pearson_r(std::span<const double> x, std::span<const double> y);

// Regularized incomplete beta I_x(a, b) by continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

// P(|T| >= |t|) for Student's t with nu degrees of freedom.
double student_t_two_sided_p(double t, double nu);

struct CorrelationReport {
    std::string x_label;
    std::string y_label;
    double r = 0.0;
    double p = 1.0;
    std::size_t n = 0;
};

// Default component labels "c1".."cK".
std::vector<std::string> component_labels(Eigen::Index k);

// All K(K-1)/2 component-pair correlations of row-normalized weights.
std::vector<CorrelationReport> weight_correlations(const Eigen::MatrixXd& w_normalized,
                                                   std::vector<std::string> labels = {});

inline constexpr std::array<const char*, 4> kSleepParameterLabels = {
    "sleep_time", "wake_time", "mid_sleep", "duration"};

struct SleepWeightCell {
    double r = 0.0;
    double p = 1.0;
    std::size_t n = 0;
};

// Component x parameter grid of correlations between per-person weights and
// sleep parameters. Sleep, wake, and mid-sleep hours are correlated on the
// 15:00-anchored scale so a midnight wrap cannot split a night cluster.
struct SleepWeightReport {
    std::vector<std::string> component_labels;
    std::vector<std::array<SleepWeightCell, 4>> cells;  // [component][parameter]
};

// person_ids label the rows of w_normalized; the summary set must contain
// exactly those persons.
SleepWeightReport sleep_weight_correlations(const Eigen::MatrixXd& w_normalized,
                                            const std::vector<std::string>& person_ids,
                                            const std::vector<SleepSummary>& summaries,
                                            std::vector<std::string> labels = {});

struct Hist2D {
    std::vector<double> x_edges;  // nbins + 1 ascending edges
    std::vector<double> y_edges;
    std::vector<std::vector<std::int64_t>> counts;  // counts[x_bin][y_bin]
};

// Equal-width bins spanning [min, max] per axis; the right-most edge is
// inclusive, so every point lands in some cell. A zero-width axis is widened
// by half a unit on both sides.
Hist2D hist2d(std::span<const double> x, std::span<const double> y, int nbins);

}  // namespace rhythmkit
