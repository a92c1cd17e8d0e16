#include "rhythmkit/synthgen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "rhythmkit/errors.hpp"
#include "rhythmkit/parallel.hpp"
#include "rhythmkit/rhythm.hpp"
#include "rhythmkit/rng.hpp"
#include "rhythmkit/sleep.hpp"

namespace rhythmkit {

namespace {

constexpr std::uint64_t kPersonStreamTag = 0x706572736F6Eull;  // "person"

double circular_hours(double a, double b) {
    const double d = std::fmod(std::abs(a - b), 24.0);
    return std::min(d, 24.0 - d);
}

}  // namespace

Eigen::MatrixXd default_templates(const TemplateConfig& config) {
    const std::size_t k = config.peak_hours.size();
    if (k == 0) throw ConfigError("default_templates: no peak hours");
    if (config.weekend_attenuation.size() != k)
        throw ConfigError("default_templates: weekend attenuation count must match peaks");
    if (!(config.concentration > 0.0))
        throw ConfigError("default_templates: concentration must be positive");

    Eigen::MatrixXd templates(kBinsPerWeek, static_cast<Eigen::Index>(k));
    for (std::size_t c = 0; c < k; ++c) {
        for (int day = 0; day < 7; ++day) {
            const double day_factor = day >= 5 ? config.weekend_attenuation[c] : 1.0;
            for (int hour = 0; hour < 24; ++hour) {
                const double angle =
                    circular_hours(hour + 0.5, config.peak_hours[c]) * std::numbers::pi / 12.0;
                templates(day * 24 + hour, static_cast<Eigen::Index>(c)) =
                    day_factor * std::exp(config.concentration * (std::cos(angle) - 1.0));
            }
        }
        templates.col(static_cast<Eigen::Index>(c)) /=
            templates.col(static_cast<Eigen::Index>(c)).sum();
    }
    return templates;
}

namespace {

void validate_spec(const PopulationSpec& spec) {
    if (spec.n_persons < 1) throw ConfigError("generate_population: n_persons < 1");
    if (spec.templates.rows() != kBinsPerWeek || spec.templates.cols() < 1)
        throw ConfigError("generate_population: templates must be 168 x K with K >= 1");
    if ((spec.templates.array() < 0.0).any())
        throw ConfigError("generate_population: negative template entry");
    for (Eigen::Index c = 0; c < spec.templates.cols(); ++c)
        if (spec.templates.col(c).sum() <= 0.0)
            throw ConfigError("generate_population: template column sums to zero");
    const std::size_t k = static_cast<std::size_t>(spec.templates.cols());
    if (!spec.weight_alphas.empty()) {
        if (spec.weight_alphas.size() != k)
            throw ConfigError("generate_population: weight_alphas size must match K");
        for (double a : spec.weight_alphas)
            if (!(a > 0.0)) throw ConfigError("generate_population: non-positive alpha");
    }
    if (spec.fixed_weights) {
        if (spec.fixed_weights->rows() != spec.n_persons ||
            spec.fixed_weights->cols() != spec.templates.cols())
            throw ConfigError("generate_population: fixed_weights must be n_persons x K");
        if ((spec.fixed_weights->array() < 0.0).any())
            throw ConfigError("generate_population: negative fixed weight");
        for (Eigen::Index i = 0; i < spec.fixed_weights->rows(); ++i)
            if (spec.fixed_weights->row(i).sum() <= 0.0)
                throw ConfigError("generate_population: fixed weight row sums to zero");
    }
    if (!(spec.events_per_week > 0.0)) throw ConfigError("generate_population: zero event rate");
    if (spec.weeks < 1) throw ConfigError("generate_population: weeks < 1");
    if (spec.sleep.duration_hours < 1 || spec.sleep.duration_hours > 23)
        throw ConfigError("generate_population: sleep duration outside [1, 23]");
    if (spec.sleep.night_component >= static_cast<int>(k))
        throw ConfigError("generate_population: night_component out of range");
    if (spec.noise_rate < 0.0 || spec.noise_rate > 1.0)
        throw ConfigError("generate_population: noise_rate outside [0, 1]");
    spec.window().validate();
}

std::string person_label(int index) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "p%05d", index);
    return buf;
}

}  // namespace

SynthResult generate_population(const PopulationSpec& spec, int threads) {
    validate_spec(spec);
    const Eigen::Index k = spec.templates.cols();
    const int n = spec.n_persons;

    Eigen::MatrixXd templates = spec.templates;
    for (Eigen::Index c = 0; c < k; ++c) templates.col(c) /= templates.col(c).sum();

    std::vector<double> alphas = spec.weight_alphas;
    if (alphas.empty()) alphas.assign(static_cast<std::size_t>(k), 1.0);

    SynthResult result;
    result.logs.resize(static_cast<std::size_t>(n));
    result.truth.person_ids.resize(static_cast<std::size_t>(n));
    result.truth.weights.resize(n, k);
    result.truth.sleep.resize(static_cast<std::size_t>(n));
    result.truth.templates = templates;

    const std::int64_t tz_seconds = static_cast<std::int64_t>(spec.tz_offset_minutes) * 60;

    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t p) {
        CounterRng rng(derive_seed(spec.seed, kPersonStreamTag, p));

        Eigen::VectorXd weights(k);
        if (spec.fixed_weights) {
            weights = spec.fixed_weights->row(static_cast<Eigen::Index>(p));
        } else {
            for (Eigen::Index c = 0; c < k; ++c)
                weights(c) = rng.gamma(alphas[static_cast<std::size_t>(c)]);
        }
        const double weight_sum = weights.sum();
        if (weight_sum > 0.0)
            weights /= weight_sum;
        else
            weights.setConstant(1.0 / static_cast<double>(k));

        double onset_real = spec.sleep.base_onset_clock_hour;
        if (spec.sleep.night_component >= 0)
            onset_real += spec.sleep.night_onset_shift_hours * weights(spec.sleep.night_component);
        const int onset = static_cast<int>(std::llround(onset_real)) % 24;
        const int duration = spec.sleep.duration_hours;
        // The inactivity run must fit strictly inside a 15:00-anchored day,
        // with an awake hour after it, or the planted night is unrecoverable.
        if (clock_to_anchored(onset) + duration > 23)
            throw ConfigError("generate_population: sleep window [" + std::to_string(onset) +
                              ":00 +" + std::to_string(duration) +
                              "h] does not fit a 15:00-anchored day");

        std::array<bool, 24> asleep{};
        for (int h = 0; h < duration; ++h) asleep[static_cast<std::size_t>((onset + h) % 24)] = true;

        Eigen::VectorXd profile = templates * weights;
        for (int bin = 0; bin < kBinsPerWeek; ++bin)
            if (asleep[static_cast<std::size_t>(bin % 24)]) profile(bin) = 0.0;
        const double mass = profile.sum();
        if (mass <= 0.0)
            throw ConfigError("generate_population: profile vanishes outside the sleep window");
        profile /= mass;

        std::vector<Event> events;
        events.reserve(static_cast<std::size_t>(spec.events_per_week * spec.weeks * 1.2));
        for (int week = 0; week < spec.weeks; ++week) {
            const std::int64_t monday = iso_week_monday(spec.year, spec.start_week + week);
            for (int day = 0; day < 7; ++day) {
                const std::int64_t day_number = monday + day;
                for (int hour = 0; hour < 24; ++hour) {
                    const std::int64_t hour_begin =
                        day_number * 86400 + static_cast<std::int64_t>(hour) * 3600 - tz_seconds;
                    if (asleep[static_cast<std::size_t>(hour)]) {
                        if (spec.noise_rate > 0.0 && rng.uniform() < spec.noise_rate)
                            events.push_back(Event{
                                hour_begin + static_cast<std::int64_t>(rng.uniform() * 3600.0),
                                EventKind::screen_on});
                        continue;
                    }
                    const double target = spec.events_per_week * profile(day * 24 + hour);
                    const std::uint64_t count = 1 + rng.poisson(target - 1.0);
                    for (std::uint64_t c = 0; c < count; ++c)
                        events.push_back(
                            Event{hour_begin + static_cast<std::int64_t>(rng.uniform() * 3600.0),
                                  EventKind::screen_on});
                }
            }
        }
        std::stable_sort(events.begin(), events.end(),
                         [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });

        result.logs[p] = EventLog{person_label(static_cast<int>(p)), std::move(events)};
        result.truth.person_ids[p] = result.logs[p].person_id;
        result.truth.weights.row(static_cast<Eigen::Index>(p)) = weights;
        result.truth.sleep[p] = SleepWindowTruth{onset, duration};
    });

    return result;
}

ComponentMatch match_components(const Eigen::MatrixXd& estimated,
                                const Eigen::MatrixXd& reference) {
    if (estimated.rows() != reference.rows())
        throw ConfigError("match_components: row counts differ");
    if (estimated.cols() != reference.cols())
        throw ConfigError("match_components: component counts differ");
    const Eigen::Index k = reference.cols();
    if (k < 1 || k > 9) throw ConfigError("match_components: K must be in [1, 9]");

    Eigen::MatrixXd cosine(k, k);
    for (Eigen::Index e = 0; e < k; ++e)
        for (Eigen::Index r = 0; r < k; ++r) {
            const double denom = estimated.col(e).norm() * reference.col(r).norm();
            cosine(e, r) = denom > 0.0 ? estimated.col(e).dot(reference.col(r)) / denom : 0.0;
        }

    std::vector<int> perm(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = static_cast<int>(i);
    std::vector<int> best = perm;
    double best_total = -std::numeric_limits<double>::infinity();
    do {
        double total = 0.0;
        for (Eigen::Index r = 0; r < k; ++r)
            total += cosine(perm[static_cast<std::size_t>(r)], r);
        if (total > best_total) {
            best_total = total;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    ComponentMatch match;
    match.permutation = best;
    match.cosines.resize(static_cast<std::size_t>(k));
    for (Eigen::Index r = 0; r < k; ++r)
        match.cosines[static_cast<std::size_t>(r)] = cosine(best[static_cast<std::size_t>(r)], r);
    return match;
}

}  // namespace rhythmkit
