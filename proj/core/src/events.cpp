#include "rhythmkit/events.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "rhythmkit/errors.hpp"

namespace rhythmkit {

const char* to_string(EventKind kind) {
    return kind == EventKind::screen_on ? "screen_on" : "screen_off";
}

void StudyWindow::validate() const {
    if (start_week > end_week)
        throw ConfigError("study window: start_week must not exceed end_week");
    const int weeks = iso_weeks_in_year(year);
    if (start_week < 1 || end_week > weeks)
        throw ConfigError("study window: weeks must lie in [1, " + std::to_string(weeks) +
                          "] of year " + std::to_string(year));
    if (tz_offset_minutes < -18 * 60 || tz_offset_minutes > 18 * 60)
        throw ConfigError("study window: implausible UTC offset");
}

std::int64_t StudyWindow::first_day() const { return iso_week_monday(year, start_week); }

std::int64_t StudyWindow::last_day() const { return iso_week_monday(year, end_week) + 6; }

std::int64_t StudyWindow::epoch_begin() const {
    return first_day() * 86400 - static_cast<std::int64_t>(tz_offset_minutes) * 60;
}

std::int64_t StudyWindow::epoch_end() const {
    return (last_day() + 1) * 86400 - static_cast<std::int64_t>(tz_offset_minutes) * 60;
}

namespace {

bool parse_line(std::string_view line, std::string& person_id, Event& event) {
    const std::size_t c1 = line.find(',');
    if (c1 == std::string_view::npos || c1 == 0) return false;
    const std::size_t c2 = line.find(',', c1 + 1);
    if (c2 == std::string_view::npos) return false;
    if (line.find(',', c2 + 1) != std::string_view::npos) return false;

    const std::string_view ts = line.substr(c1 + 1, c2 - c1 - 1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), value);
    if (ec != std::errc{} || ptr != ts.data() + ts.size()) return false;

    const std::string_view kind = line.substr(c2 + 1);
    if (kind == "screen_on")
        event.kind = EventKind::screen_on;
    else if (kind == "screen_off")
        event.kind = EventKind::screen_off;
    else
        return false;

    person_id.assign(line.substr(0, c1));
    event.timestamp = value;
    return true;
}

}  // namespace

ParseResult parse_events(std::istream& in, std::size_t max_malformed_lines) {
    ParseResult result;
    std::map<std::string, std::vector<Event>> by_person;
    std::string line;
    std::string person_id;
    while (std::getline(in, line)) {
        ++result.report.lines_total;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            ++result.report.lines_blank;
            continue;
        }
        Event event;
        if (!parse_line(line, person_id, event)) {
            if (++result.report.lines_malformed > max_malformed_lines)
                throw DataError("event stream: malformed line " +
                                std::to_string(result.report.lines_total) + ": '" + line + "'");
            continue;
        }
        by_person[person_id].push_back(event);
        ++result.report.events;
    }
    if (in.bad()) throw DataError("event stream: read failure");

    result.logs.reserve(by_person.size());
    for (auto& [id, events] : by_person) {
        std::stable_sort(events.begin(), events.end(),
                         [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
        result.logs.push_back(EventLog{id, std::move(events)});
    }
    return result;
}

FilterResult filter_participants(const std::vector<EventLog>& logs,
                                 const FilterCriteria& criteria,
                                 const StudyWindow& window) {
    window.validate();
    const int days = window.day_count();
    const int weeks = window.week_count();
    if (days <= 0) throw ConfigError("filter_participants: window contains no days");

    FilterResult result;
    result.report.total = logs.size();
    result.report.window_days = days;
    result.report.window_weeks = weeks;

    const std::int64_t begin = window.epoch_begin();
    const std::int64_t end = window.epoch_end();

    for (const EventLog& log : logs) {
        std::vector<Event> inside;
        int active_days = 0;
        std::int64_t last_day = -1;
        bool first = true;
        for (const Event& event : log.events) {
            if (event.timestamp < begin || event.timestamp >= end) continue;
            inside.push_back(event);
            const std::int64_t day = window.local_day_of(event.timestamp);
            if (first || day != last_day) {
                ++active_days;
                last_day = day;
                first = false;
            }
        }
        const double day_fraction = static_cast<double>(active_days) / days;
        const double weekly_events = static_cast<double>(inside.size()) / weeks;
        const bool enough_days = day_fraction >= criteria.min_active_day_fraction;
        const bool enough_events = weekly_events >= criteria.min_mean_weekly_events;
        if (!enough_days) ++result.report.failed_day_fraction;
        if (!enough_events) ++result.report.failed_event_rate;
        if (enough_days && enough_events)
            result.retained.push_back(EventLog{log.person_id, std::move(inside)});
    }
    result.report.retained = result.retained.size();
    return result;
}

}  // namespace rhythmkit
