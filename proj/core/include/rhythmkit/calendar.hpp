#pragma once

#include <cstdint>

namespace rhythmkit {

// Days since 1970-01-01 for a proleptic Gregorian date.
std::int64_t days_from_civil(int year, int month, int day);

// 0 = Monday ... 6 = Sunday.
int weekday_from_days(std::int64_t days);

// 52 or 53.
int iso_weeks_in_year(int year);

// Day number of the Monday starting ISO week `week` of `year`.
std::int64_t iso_week_monday(int year, int week);

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

}  // namespace rhythmkit
