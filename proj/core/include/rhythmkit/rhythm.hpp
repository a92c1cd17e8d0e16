#pragma once

#include <array>
#include <string>
#include <vector>

#include "rhythmkit/events.hpp"

namespace rhythmkit {

inline constexpr int kBinsPerWeek = 168;

// Normalized weekly histogram of screen-on activity. Bin 0 is Monday
// 00:00-01:00 local, bin 167 Sunday 23:00-24:00; bins are half-open on the
// right, so an event exactly on the hour falls into the later bin.
struct ActivityRhythm {
    std::string person_id;
    std::array<double, kBinsPerWeek> bins{};
};

// "mon_00" ... "sun_23".
const std::vector<std::string>& weekly_bin_labels();

// Counts screen-on events per (weekday, hour) over every week of the window,
// then scales so the bins sum to one.
ActivityRhythm build_weekly_rhythm(const EventLog& log, const StudyWindow& window);

// Element-wise arithmetic mean; still sums to one.
std::array<double, kBinsPerWeek> population_average(const std::vector<ActivityRhythm>& rhythms);

}  // namespace rhythmkit
