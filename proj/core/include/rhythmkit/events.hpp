#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "rhythmkit/calendar.hpp"

namespace rhythmkit {

enum class EventKind { screen_on, screen_off };

const char* to_string(EventKind kind);

struct Event {
    std::int64_t timestamp = 0;  // epoch seconds, UTC
    EventKind kind = EventKind::screen_on;
};

// All events of one person, sorted by timestamp.
struct EventLog {
    std::string person_id;
    std::vector<Event> events;
};

// ISO weeks [start_week, end_week] of one calendar year, observed at a fixed
// UTC offset. No DST transitions are modeled; the offset keeps local hour
// bins well-defined.
struct StudyWindow {
    int year = 2014;
    int start_week = 2;
    int end_week = 51;
    int tz_offset_minutes = 0;

    void validate() const;  // throws ConfigError

    std::int64_t first_day() const;  // local day number of the first Monday
    std::int64_t last_day() const;   // local day number of the final Sunday
    int day_count() const { return (end_week - start_week + 1) * 7; }
    int week_count() const { return end_week - start_week + 1; }

    std::int64_t epoch_begin() const;  // UTC epoch seconds, inclusive
    std::int64_t epoch_end() const;    // UTC epoch seconds, exclusive
    bool contains(std::int64_t timestamp) const {
        return timestamp >= epoch_begin() && timestamp < epoch_end();
    }

    std::int64_t local_seconds(std::int64_t timestamp) const {
        return timestamp + static_cast<std::int64_t>(tz_offset_minutes) * 60;
    }
    std::int64_t local_day_of(std::int64_t timestamp) const {
        return floor_div(local_seconds(timestamp), 86400);
    }
};

struct FilterCriteria {
    double min_active_day_fraction = 0.8;
    double min_mean_weekly_events = 280.0;
};

struct ParseReport {
    std::size_t lines_total = 0;
    std::size_t lines_blank = 0;
    std::size_t lines_malformed = 0;
    std::size_t events = 0;
};

struct ParseResult {
    std::vector<EventLog> logs;  // sorted by person_id, events sorted by time
    ParseReport report;
};

// Reads `person_id,epoch_seconds,kind` lines (LF or CRLF, kind in
// {screen_on, screen_off}). Malformed lines are counted and reported; more
// than max_malformed_lines of them is a format error.
ParseResult parse_events(std::istream& in, std::size_t max_malformed_lines = 0);

struct FilterReport {
    std::size_t total = 0;
    std::size_t retained = 0;
    std::size_t failed_day_fraction = 0;  // per-criterion counts; one person may fail both
    std::size_t failed_event_rate = 0;
    int window_days = 0;
    int window_weeks = 0;
};

struct FilterResult {
    std::vector<EventLog> retained;  // events clipped to the window
    FilterReport report;
};

// Keeps persons with events (of either kind) on at least
// min_active_day_fraction of the window's days and a mean weekly event count
// of at least min_mean_weekly_events. Retained logs carry only events inside
// the window. Filtering an already-filtered population retains everyone.
FilterResult filter_participants(const std::vector<EventLog>& logs,
                                 const FilterCriteria& criteria,
                                 const StudyWindow& window);

}  // namespace rhythmkit
