#include "rhythmkit/sleep.hpp"

#include <algorithm>

#include "rhythmkit/errors.hpp"

namespace rhythmkit {

DayPresence daily_presence(const EventLog& log, std::int64_t anchor_day, int tz_offset_minutes) {
    DayPresence presence;
    presence.person_id = log.person_id;
    presence.anchor_day = anchor_day;
    const std::int64_t begin =
        anchor_day * 86400 + 15 * 3600 - static_cast<std::int64_t>(tz_offset_minutes) * 60;
    const std::int64_t end = begin + 86400;
    auto it = std::lower_bound(log.events.begin(), log.events.end(), begin,
                               [](const Event& e, std::int64_t t) { return e.timestamp < t; });
    for (; it != log.events.end() && it->timestamp < end; ++it) {
        if (it->kind != EventKind::screen_on) continue;
        presence.active[static_cast<std::size_t>((it->timestamp - begin) / 3600)] = true;
    }
    return presence;
}

std::optional<InactiveRun> longest_inactive_run(const DayPresence& presence) {
    InactiveRun best{0, 0};
    int start = -1;
    for (int h = 0; h <= 24; ++h) {
        const bool active = h == 24 ? true : presence.active[static_cast<std::size_t>(h)];
        if (!active) {
            if (start < 0) start = h;
        } else if (start >= 0) {
            const int length = h - start;
            if (length > best.length) best = InactiveRun{start, length};
            start = -1;
        }
    }
    if (best.length == 0) return std::nullopt;
    // A run ending at the window edge has no active hour after it, so the
    // wake time is undefined and the night is discarded.
    if (best.start + best.length == 24) return std::nullopt;
    return best;
}

std::optional<NightRecord> infer_night(const DayPresence& presence) {
    const std::optional<InactiveRun> run = longest_inactive_run(presence);
    if (!run) return std::nullopt;
    NightRecord night;
    night.sleep_onset_hour = run->start;
    night.duration_hours = run->length;
    night.wake_hour = run->start + run->length;
    night.mid_sleep_hour = run->start + run->length / 2.0;
    return night;
}

std::vector<NightRecord> collect_nights(const EventLog& log, const StudyWindow& window,
                                        const SleepConfig& config) {
    window.validate();
    std::vector<NightRecord> nights;
    // The final window day only contributes the tail of the previous anchored
    // day; starting a new one there would reach past the window.
    for (std::int64_t day = window.first_day(); day < window.last_day(); ++day) {
        const DayPresence presence = daily_presence(log, day, window.tz_offset_minutes);
        const std::optional<NightRecord> night = infer_night(presence);
        if (night && night->duration_hours >= config.min_duration_hours)
            nights.push_back(*night);
    }
    return nights;
}

namespace {

// Index of the most frequent value; ties toward the smallest index.
template <std::size_t N>
int mode_index(const std::array<int, N>& counts) {
    int best = 0;
    for (std::size_t i = 1; i < N; ++i)
        if (counts[i] > counts[static_cast<std::size_t>(best)]) best = static_cast<int>(i);
    return best;
}

}  // namespace

SleepSummary summarize(const std::vector<NightRecord>& nights, const std::string& person_id) {
    if (nights.empty()) throw DataError("summarize: no nights for person '" + person_id + "'");

    std::array<int, 24> onset_counts{};
    std::array<int, 24> wake_counts{};
    std::array<int, 48> mid_counts{};  // half-hour bins over the anchored day
    double duration_sum = 0.0;
    for (const NightRecord& night : nights) {
        ++onset_counts[static_cast<std::size_t>(night.sleep_onset_hour)];
        ++wake_counts[static_cast<std::size_t>(night.wake_hour)];
        const int half_bin = static_cast<int>(std::lround(night.mid_sleep_hour * 2.0));
        ++mid_counts[static_cast<std::size_t>(std::clamp(half_bin, 0, 47))];
        duration_sum += night.duration_hours;
    }

    SleepSummary summary;
    summary.person_id = person_id;
    summary.typical_sleep_time = anchored_to_clock(mode_index(onset_counts));
    summary.typical_wake_time = anchored_to_clock(mode_index(wake_counts));
    summary.typical_mid_sleep = anchored_real_to_clock(mode_index(mid_counts) / 2.0);
    summary.mean_duration_hours = duration_sum / static_cast<double>(nights.size());
    summary.nights_used = static_cast<int>(nights.size());
    return summary;
}

}  // namespace rhythmkit
