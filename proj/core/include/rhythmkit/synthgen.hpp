#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rhythmkit/events.hpp"

namespace rhythmkit {

// Circular activity bumps over the hour of day, replicated across the week
// and normalized to sum to one per component. Components with an attenuation
// below one are damped on Saturday and Sunday.
struct TemplateConfig {
    std::vector<double> peak_hours = {8.5, 13.5, 18.5, 21.5};  // morning, noon, evening, night
    double concentration = 6.0;
    std::vector<double> weekend_attenuation = {0.5, 0.5, 1.0, 1.0};
};

// 168 x K matrix, one template per column.
Eigen::MatrixXd default_templates(const TemplateConfig& config = {});

// Per-person nightly sleep window. The onset can shift later with the weight
// on one designated component; a negative component index keeps the onset
// fixed for everyone.
struct SleepPlan {
    double base_onset_clock_hour = 23.0;
    int duration_hours = 8;
    double night_onset_shift_hours = 0.0;
    int night_component = -1;
};

struct PopulationSpec {
    int n_persons = 1;
    Eigen::MatrixXd templates;          // 168 x K, non-negative columns
    std::vector<double> weight_alphas;  // Dirichlet concentration per component; empty = all 1
    std::optional<Eigen::MatrixXd> fixed_weights;  // n x K override of the prior
    double events_per_week = 300.0;
    int weeks = 50;
    SleepPlan sleep;
    double noise_rate = 0.0;  // chance of a stray event in each slept hour
    std::uint64_t seed = 0;
    int year = 2014;
    int start_week = 2;
    int tz_offset_minutes = 0;

    StudyWindow window() const {
        return StudyWindow{year, start_week, start_week + weeks - 1, tz_offset_minutes};
    }
};

struct SleepWindowTruth {
    int onset_clock_hour = 0;
    int duration_hours = 0;
};

struct GroundTruth {
    std::vector<std::string> person_ids;
    Eigen::MatrixXd weights;  // n x K, rows on the simplex
    std::vector<SleepWindowTruth> sleep;
    Eigen::MatrixXd templates;  // the generating templates, normalized
};

struct SynthResult {
    std::vector<EventLog> logs;
    GroundTruth truth;
};

// Draws each person's weekly profile as a weight mixture of the templates,
// zeroes it inside the person's sleep window, and emits screen-on events:
// every awake hour gets at least one event plus a counted Poisson surplus
// proportional to the profile, so the sleep window is the unique inactivity
// run when noise_rate is zero. Deterministic given spec.seed; persons use
// independent derived streams, so output does not depend on scheduling.
SynthResult generate_population(const PopulationSpec& spec, int threads = 0);

// Per-component cosine similarity under the component permutation that
// maximizes the total; exact search over all permutations (small K only).
struct ComponentMatch {
    std::vector<int> permutation;  // estimated column assigned to each reference column
    std::vector<double> cosines;
};

ComponentMatch match_components(const Eigen::MatrixXd& estimated,
                                const Eigen::MatrixXd& reference);

}  // namespace rhythmkit
