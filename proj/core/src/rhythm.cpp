#include "rhythmkit/rhythm.hpp"

#include <cstdio>

#include "rhythmkit/errors.hpp"

namespace rhythmkit {

const std::vector<std::string>& weekly_bin_labels() {
    static const std::vector<std::string> labels = [] {
        static constexpr const char* days[7] = {"mon", "tue", "wed", "thu", "fri", "sat", "sun"};
        std::vector<std::string> out;
        out.reserve(kBinsPerWeek);
        char buf[8];
        for (int d = 0; d < 7; ++d)
            for (int h = 0; h < 24; ++h) {
                std::snprintf(buf, sizeof(buf), "%s_%02d", days[d], h);
                out.emplace_back(buf);
            }
        return out;
    }();
    return labels;
}

ActivityRhythm build_weekly_rhythm(const EventLog& log, const StudyWindow& window) {
    window.validate();
    std::array<std::int64_t, kBinsPerWeek> counts{};
    std::int64_t total = 0;
    for (const Event& event : log.events) {
        if (event.kind != EventKind::screen_on) continue;
        if (!window.contains(event.timestamp)) continue;
        const std::int64_t local = window.local_seconds(event.timestamp);
        const std::int64_t day = floor_div(local, 86400);
        const int hour = static_cast<int>((local - day * 86400) / 3600);
        const int bin = weekday_from_days(day) * 24 + hour;
        ++counts[bin];
        ++total;
    }
    if (total == 0)
        throw DataError("build_weekly_rhythm: no screen_on events inside the window for person '" +
                        log.person_id + "'");
    ActivityRhythm rhythm;
    rhythm.person_id = log.person_id;
    for (int i = 0; i < kBinsPerWeek; ++i)
        rhythm.bins[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    return rhythm;
}

std::array<double, kBinsPerWeek> population_average(const std::vector<ActivityRhythm>& rhythms) {
    if (rhythms.empty()) throw DataError("population_average: no rhythms");
    std::array<double, kBinsPerWeek> mean{};
    for (const ActivityRhythm& rhythm : rhythms)
        for (int i = 0; i < kBinsPerWeek; ++i) mean[i] += rhythm.bins[i];
    for (double& v : mean) v /= static_cast<double>(rhythms.size());
    return mean;
}

}  // namespace rhythmkit
