#include "rhythmkit/io.hpp"

#include <charconv>

#include "rhythmkit/errors.hpp"

namespace rhythmkit {

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw DataError("invalid numeric field: '" + std::string(text) + "'");
    return value;
}

std::int64_t parse_int64(std::string_view text) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw DataError("invalid integer field: '" + std::string(text) + "'");
    return value;
}

std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            return fields;
        }
        fields.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

namespace {

std::string read_line(std::istream& in, bool& ok) {
    std::string line;
    ok = static_cast<bool>(std::getline(in, line));
    if (ok && !line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

void write_rhythm_matrix(std::ostream& out, const std::vector<ActivityRhythm>& rhythms) {
    out << "person_id";
    for (const std::string& label : weekly_bin_labels()) out << ',' << label;
    out << '\n';
    for (const ActivityRhythm& rhythm : rhythms) {
        out << rhythm.person_id;
        for (double bin : rhythm.bins) out << ',' << format_double(bin);
        out << '\n';
    }
}

DataMatrix read_rhythm_matrix(std::istream& in) {
    bool ok = false;
    const std::string header = read_line(in, ok);
    if (!ok) throw DataError("rhythm matrix: empty file");
    const std::vector<std::string> fields = split_csv(header);
    const std::vector<std::string>& labels = weekly_bin_labels();
    if (fields.size() != labels.size() + 1 || fields.front() != "person_id")
        throw DataError("rhythm matrix: bad header");
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (fields[i + 1] != labels[i])
            throw DataError("rhythm matrix: unexpected bin label '" + fields[i + 1] + "'");

    std::vector<std::string> ids;
    std::vector<std::array<double, kBinsPerWeek>> rows;
    for (;;) {
        const std::string line = read_line(in, ok);
        if (!ok) break;
        if (line.empty()) continue;
        const std::vector<std::string> parts = split_csv(line);
        if (parts.size() != labels.size() + 1)
            throw DataError("rhythm matrix: row with " + std::to_string(parts.size()) +
                            " fields (expected " + std::to_string(labels.size() + 1) + ")");
        ids.push_back(parts.front());
        std::array<double, kBinsPerWeek> row{};
        for (int i = 0; i < kBinsPerWeek; ++i)
            row[static_cast<std::size_t>(i)] = parse_double(parts[static_cast<std::size_t>(i) + 1]);
        rows.push_back(row);
    }
    if (in.bad()) throw DataError("rhythm matrix: read failure");
    if (rows.empty()) throw DataError("rhythm matrix: no data rows");

    DataMatrix matrix;
    matrix.row_labels = std::move(ids);
    matrix.values.resize(static_cast<Eigen::Index>(rows.size()), kBinsPerWeek);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < kBinsPerWeek; ++j)
            matrix.values(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
    matrix.validate();
    return matrix;
}

void write_labeled_matrix(std::ostream& out, const Eigen::MatrixXd& values,
                          const std::string& key_header,
                          const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels) {
    if (row_labels.size() != static_cast<std::size_t>(values.rows()) ||
        col_labels.size() != static_cast<std::size_t>(values.cols()))
        throw ConfigError("write_labeled_matrix: label counts do not match the matrix");
    out << key_header;
    for (const std::string& label : col_labels) out << ',' << label;
    out << '\n';
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        out << row_labels[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < values.cols(); ++j) out << ',' << format_double(values(i, j));
        out << '\n';
    }
}

LabeledMatrix read_labeled_matrix(std::istream& in) {
    bool ok = false;
    const std::string header = read_line(in, ok);
    if (!ok) throw DataError("labeled matrix: empty file");
    std::vector<std::string> fields = split_csv(header);
    if (fields.size() < 2) throw DataError("labeled matrix: header needs a key and a column");

    LabeledMatrix matrix;
    matrix.key_header = fields.front();
    matrix.col_labels.assign(fields.begin() + 1, fields.end());

    std::vector<std::vector<double>> rows;
    for (;;) {
        const std::string line = read_line(in, ok);
        if (!ok) break;
        if (line.empty()) continue;
        const std::vector<std::string> parts = split_csv(line);
        if (parts.size() != fields.size())
            throw DataError("labeled matrix: row width mismatch");
        matrix.row_labels.push_back(parts.front());
        std::vector<double> row;
        row.reserve(parts.size() - 1);
        for (std::size_t i = 1; i < parts.size(); ++i) row.push_back(parse_double(parts[i]));
        rows.push_back(std::move(row));
    }
    if (in.bad()) throw DataError("labeled matrix: read failure");
    if (rows.empty()) throw DataError("labeled matrix: no data rows");

    matrix.values.resize(static_cast<Eigen::Index>(rows.size()),
                         static_cast<Eigen::Index>(matrix.col_labels.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            matrix.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return matrix;
}

void write_event_logs(std::ostream& out, const std::vector<EventLog>& logs) {
    for (const EventLog& log : logs)
        for (const Event& event : log.events)
            out << log.person_id << ',' << event.timestamp << ',' << to_string(event.kind) << '\n';
}

void write_sleep_summaries(std::ostream& out, const std::vector<SleepSummary>& summaries) {
    out << "person_id,sleep_time,wake_time,mid_sleep,mean_duration,nights_used\n";
    for (const SleepSummary& s : summaries)
        out << s.person_id << ',' << s.typical_sleep_time << ',' << s.typical_wake_time << ','
            << format_double(s.typical_mid_sleep) << ',' << format_double(s.mean_duration_hours)
            << ',' << s.nights_used << '\n';
}

std::vector<SleepSummary> read_sleep_summaries(std::istream& in) {
    bool ok = false;
    const std::string header = read_line(in, ok);
    if (!ok) throw DataError("sleep summaries: empty file");
    if (header != "person_id,sleep_time,wake_time,mid_sleep,mean_duration,nights_used")
        throw DataError("sleep summaries: bad header");

    std::vector<SleepSummary> summaries;
    for (;;) {
        const std::string line = read_line(in, ok);
        if (!ok) break;
        if (line.empty()) continue;
        const std::vector<std::string> parts = split_csv(line);
        if (parts.size() != 6) throw DataError("sleep summaries: row width mismatch");
        SleepSummary s;
        s.person_id = parts[0];
        s.typical_sleep_time = static_cast<int>(parse_int64(parts[1]));
        s.typical_wake_time = static_cast<int>(parse_int64(parts[2]));
        s.typical_mid_sleep = parse_double(parts[3]);
        s.mean_duration_hours = parse_double(parts[4]);
        s.nights_used = static_cast<int>(parse_int64(parts[5]));
        summaries.push_back(std::move(s));
    }
    if (in.bad()) throw DataError("sleep summaries: read failure");
    return summaries;
}

void write_rank_curve(std::ostream& out, const std::vector<ConsensusResult>& curve) {
    out << "k,cophenetic\n";
    for (const ConsensusResult& entry : curve)
        out << entry.k << ',' << format_double(entry.cophenetic) << '\n';
}

void write_weight_correlations(std::ostream& out, const std::vector<CorrelationReport>& reports) {
    out << "component_a,component_b,r,p,n\n";
    for (const CorrelationReport& report : reports)
        out << report.x_label << ',' << report.y_label << ',' << format_double(report.r) << ','
            << format_double(report.p) << ',' << report.n << '\n';
}

void write_sleep_weight_report(std::ostream& out, const SleepWeightReport& report) {
    out << "component";
    for (const char* parameter : kSleepParameterLabels)
        out << ',' << parameter << "_r," << parameter << "_p";
    out << '\n';
    for (std::size_t comp = 0; comp < report.component_labels.size(); ++comp) {
        out << report.component_labels[comp];
        for (const SleepWeightCell& cell : report.cells[comp])
            out << ',' << format_double(cell.r) << ',' << format_double(cell.p);
        out << '\n';
    }
}

}  // namespace rhythmkit
