#include "rhythmkit/calendar.hpp"

namespace rhythmkit {

std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 +
                         static_cast<unsigned>(d) - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

int weekday_from_days(std::int64_t days) {
    // 1970-01-01 was a Thursday.
    return static_cast<int>(((days % 7) + 10) % 7);
}

int iso_weeks_in_year(int year) {
    const int jan1 = weekday_from_days(days_from_civil(year, 1, 1));
    const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    // 53 weeks when the year starts on Thursday, or on Wednesday in a leap year.
    return (jan1 == 3 || (leap && jan1 == 2)) ? 53 : 52;
}

std::int64_t iso_week_monday(int year, int week) {
    // Week 1 contains January 4th.
    const std::int64_t jan4 = days_from_civil(year, 1, 4);
    const std::int64_t week1_monday = jan4 - weekday_from_days(jan4);
    return week1_monday + static_cast<std::int64_t>(week - 1) * 7;
}

}  // namespace rhythmkit
