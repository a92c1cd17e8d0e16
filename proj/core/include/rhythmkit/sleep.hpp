#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rhythmkit/events.hpp"

namespace rhythmkit {

// Hour-resolution presence over a 24-hour window anchored at 15:00 local, so
// a normal night of sleep sits inside one window instead of being split at
// midnight. Index 0 covers 15:00-16:00 on anchor_day, index 23 covers
// 14:00-15:00 the next day.
struct DayPresence {
    std::string person_id;
    std::int64_t anchor_day = 0;  // local day number of the 15:00 anchor
    std::array<bool, 24> active{};
};

struct InactiveRun {
    int start = 0;
    int length = 0;
};

// One night in anchored hour indices: wake_hour = sleep_onset_hour +
// duration_hours and mid_sleep_hour = sleep_onset_hour + duration_hours / 2.
struct NightRecord {
    int sleep_onset_hour = 0;
    int wake_hour = 0;
    double mid_sleep_hour = 0.0;
    int duration_hours = 0;
};

struct SleepSummary {
    std::string person_id;
    int typical_sleep_time = 0;      // clock hour, mode over nights
    int typical_wake_time = 0;       // clock hour, mode over nights
    double typical_mid_sleep = 0.0;  // clock hour, mode over half-hour bins
    double mean_duration_hours = 0.0;
    int nights_used = 0;
};

struct SleepConfig {
    int min_duration_hours = 2;  // shorter inactivity runs are not counted as sleep
};

inline int clock_to_anchored(int clock_hour) { return (clock_hour + 9) % 24; }
inline int anchored_to_clock(int anchored_hour) { return (anchored_hour + 15) % 24; }
inline double anchored_real_to_clock(double anchored) { return std::fmod(anchored + 15.0, 24.0); }

// active[h] is true iff at least one screen-on event falls in anchored hour
// h; hours are half-open, so an event exactly at 15:00 lands in index 0.
DayPresence daily_presence(const EventLog& log, std::int64_t anchor_day, int tz_offset_minutes);

// Longest run of inactive hours, ties toward the earliest start. No result
// when every hour is active, or when the run reaches the window's end and
// leaves the wake hour undefined.
std::optional<InactiveRun> longest_inactive_run(const DayPresence& presence);

std::optional<NightRecord> infer_night(const DayPresence& presence);

// Nights over every anchored day fully contained in the window, with runs
// shorter than config.min_duration_hours dropped.
std::vector<NightRecord> collect_nights(const EventLog& log, const StudyWindow& window,
                                        const SleepConfig& config = {});

// Modes are taken in anchored coordinates (mid-sleep on half-hour bins,
// ties toward the earlier anchored value) and converted to clock hours;
// duration is averaged.
SleepSummary summarize(const std::vector<NightRecord>& nights, const std::string& person_id);

}  // namespace rhythmkit
