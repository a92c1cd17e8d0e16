#include "rhythmkit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "rhythmkit/errors.hpp"

namespace rhythmkit {

namespace {

// Modified Lentz evaluation of the incomplete beta continued fraction.
double beta_cont_fraction(double a, double b, double x) {
    constexpr int max_iter = 500;
    constexpr double eps = 3e-16;
    constexpr double fpmin = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h;
}

struct Moments {
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    std::size_t n = 0;
};

Moments central_moments(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ConfigError("pearson: input lengths differ");
    if (x.size() < 3) throw ConfigError("pearson: need at least three samples");
    const std::size_t n = x.size();
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);
    Moments m;
    m.n = n;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        m.sxx += dx * dx;
        m.syy += dy * dy;
        m.sxy += dx * dy;
    }
    if (m.sxx <= 0.0 || m.syy <= 0.0) throw DegeneracyError("pearson: constant input vector");
    return m;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw ConfigError("incomplete beta: parameters must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cont_fraction(a, b, x) / a;
    return 1.0 - front * beta_cont_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double nu) {
    if (!(nu > 0.0)) throw ConfigError("student t: degrees of freedom must be positive");
    if (std::isinf(t)) return 0.0;
    return regularized_incomplete_beta(nu / 2.0, 0.5, nu / (nu + t * t));
}

double pearson_r(std::span<const double> x, std::span<const double> y) {
    const Moments m = central_moments(x, y);
    return std::clamp(m.sxy / std::sqrt(m.sxx * m.syy), -1.0, 1.0);
}

PearsonResult pearson(std::span<const double> x, std::span<const double> y) {
    const Moments m = central_moments(x, y);
    PearsonResult result;
    result.n = m.n;
    result.r = std::clamp(m.sxy / std::sqrt(m.sxx * m.syy), -1.0, 1.0);
    const double r2 = result.r * result.r;
    if (r2 >= 1.0) {
        result.p = 0.0;
        return result;
    }
    const double nu = static_cast<double>(m.n - 2);
    const double t = std::sqrt(r2 * nu / (1.0 - r2));
    result.p = student_t_two_sided_p(t, nu);
    return result;
}

std::vector<std::string> component_labels(Eigen::Index k) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) labels.push_back("c" + std::to_string(i + 1));
    return labels;
}

std::vector<CorrelationReport> weight_correlations(const Eigen::MatrixXd& w_normalized,
                                                   std::vector<std::string> labels) {
    const Eigen::Index k = w_normalized.cols();
    if (k < 2) throw ConfigError("weight_correlations: need at least two components");
    if (labels.empty()) labels = component_labels(k);
    if (labels.size() != static_cast<std::size_t>(k))
        throw ConfigError("weight_correlations: label count does not match component count");

    std::vector<CorrelationReport> reports;
    reports.reserve(static_cast<std::size_t>(k * (k - 1) / 2));
    for (Eigen::Index a = 0; a < k; ++a) {
        const Eigen::VectorXd col_a = w_normalized.col(a);
        for (Eigen::Index b = a + 1; b < k; ++b) {
            const Eigen::VectorXd col_b = w_normalized.col(b);
            const PearsonResult res = pearson({col_a.data(), static_cast<std::size_t>(col_a.size())},
                                              {col_b.data(), static_cast<std::size_t>(col_b.size())});
            reports.push_back(CorrelationReport{labels[static_cast<std::size_t>(a)],
                                                labels[static_cast<std::size_t>(b)], res.r, res.p,
                                                res.n});
        }
    }
    return reports;
}

SleepWeightReport sleep_weight_correlations(const Eigen::MatrixXd& w_normalized,
                                            const std::vector<std::string>& person_ids,
                                            const std::vector<SleepSummary>& summaries,
                                            std::vector<std::string> labels) {
    const Eigen::Index n = w_normalized.rows();
    const Eigen::Index k = w_normalized.cols();
    if (person_ids.size() != static_cast<std::size_t>(n))
        throw ConfigError("sleep_weight_correlations: person_ids do not match W rows");
    if (labels.empty()) labels = component_labels(k);
    if (labels.size() != static_cast<std::size_t>(k))
        throw ConfigError("sleep_weight_correlations: label count does not match components");

    std::unordered_map<std::string, const SleepSummary*> by_person;
    by_person.reserve(summaries.size());
    for (const SleepSummary& s : summaries) by_person[s.person_id] = &s;
    if (by_person.size() != summaries.size())
        throw DataError("sleep_weight_correlations: duplicate person in summaries");
    if (summaries.size() != static_cast<std::size_t>(n))
        throw DataError("sleep_weight_correlations: person sets misaligned (" +
                        std::to_string(summaries.size()) + " summaries vs " + std::to_string(n) +
                        " weight rows)");

    std::vector<double> sleep_hours(static_cast<std::size_t>(n));
    std::vector<double> wake_hours(static_cast<std::size_t>(n));
    std::vector<double> mid_hours(static_cast<std::size_t>(n));
    std::vector<double> durations(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto it = by_person.find(person_ids[static_cast<std::size_t>(i)]);
        if (it == by_person.end())
            throw DataError("sleep_weight_correlations: person '" +
                            person_ids[static_cast<std::size_t>(i)] + "' has no sleep summary");
        const SleepSummary& s = *it->second;
        const std::size_t idx = static_cast<std::size_t>(i);
        sleep_hours[idx] = clock_to_anchored(s.typical_sleep_time);
        wake_hours[idx] = clock_to_anchored(s.typical_wake_time);
        mid_hours[idx] = std::fmod(s.typical_mid_sleep + 9.0, 24.0);
        durations[idx] = s.mean_duration_hours;
    }

    SleepWeightReport report;
    report.component_labels = std::move(labels);
    report.cells.resize(static_cast<std::size_t>(k));
    const std::array<const std::vector<double>*, 4> params = {&sleep_hours, &wake_hours,
                                                              &mid_hours, &durations};
    for (Eigen::Index comp = 0; comp < k; ++comp) {
        const Eigen::VectorXd weights = w_normalized.col(comp);
        const std::span<const double> w{weights.data(), static_cast<std::size_t>(weights.size())};
        for (std::size_t param = 0; param < params.size(); ++param) {
            const PearsonResult res = pearson(w, *params[param]);
            report.cells[static_cast<std::size_t>(comp)][param] =
                SleepWeightCell{res.r, res.p, res.n};
        }
    }
    return report;
}

Hist2D hist2d(std::span<const double> x, std::span<const double> y, int nbins) {
    if (x.size() != y.size()) throw ConfigError("hist2d: input lengths differ");
    if (x.empty()) throw ConfigError("hist2d: need at least one point");
    if (nbins < 1) throw ConfigError("hist2d: need at least one bin");

    const auto edges = [&](std::span<const double> v) {
        double lo = v[0];
        double hi = v[0];
        for (double val : v) {
            lo = std::min(lo, val);
            hi = std::max(hi, val);
        }
        if (lo == hi) {
            lo -= 0.5;
            hi += 0.5;
        }
        std::vector<double> e(static_cast<std::size_t>(nbins) + 1);
        const double width = (hi - lo) / nbins;
        for (int i = 0; i <= nbins; ++i) e[static_cast<std::size_t>(i)] = lo + width * i;
        e.back() = hi;
        return e;
    };

    Hist2D hist;
    hist.x_edges = edges(x);
    hist.y_edges = edges(y);
    hist.counts.assign(static_cast<std::size_t>(nbins),
                       std::vector<std::int64_t>(static_cast<std::size_t>(nbins), 0));

    const auto bin_of = [nbins](const std::vector<double>& e, double v) {
        const double lo = e.front();
        const double hi = e.back();
        const int idx = static_cast<int>((v - lo) / (hi - lo) * nbins);
        return std::clamp(idx, 0, nbins - 1);
    };
    for (std::size_t i = 0; i < x.size(); ++i)
        ++hist.counts[static_cast<std::size_t>(bin_of(hist.x_edges, x[i]))]
                     [static_cast<std::size_t>(bin_of(hist.y_edges, y[i]))];
    return hist;
}

}  // namespace rhythmkit
