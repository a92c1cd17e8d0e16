#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rhythmkit/events.hpp"
#include "rhythmkit/nmf.hpp"
#include "rhythmkit/rankselect.hpp"
#include "rhythmkit/rhythm.hpp"
#include "rhythmkit/sleep.hpp"
#include "rhythmkit/stats.hpp"

namespace rhythmkit {

// Shortest round-trip decimal form; locale-independent, so exports are
// byte-stable across runs.
std::string format_double(double value);
double parse_double(std::string_view text);        // strict, throws DataError
std::int64_t parse_int64(std::string_view text);   // strict, throws DataError

std::vector<std::string> split_csv(std::string_view line);

// Rhythm matrix: header `person_id,mon_00..sun_23`, one row per person.
void write_rhythm_matrix(std::ostream& out, const std::vector<ActivityRhythm>& rhythms);
DataMatrix read_rhythm_matrix(std::istream& in);

// Generic labeled table: header `key,<col>...`, then label + values per row.
struct LabeledMatrix {
    std::string key_header;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Eigen::MatrixXd values;
};

void write_labeled_matrix(std::ostream& out, const Eigen::MatrixXd& values,
                          const std::string& key_header,
                          const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels);
LabeledMatrix read_labeled_matrix(std::istream& in);

// `person_id,epoch_seconds,kind` lines, the format parse_events consumes.
void write_event_logs(std::ostream& out, const std::vector<EventLog>& logs);

void write_sleep_summaries(std::ostream& out, const std::vector<SleepSummary>& summaries);
std::vector<SleepSummary> read_sleep_summaries(std::istream& in);

// Two columns: k, cophenetic.
void write_rank_curve(std::ostream& out, const std::vector<ConsensusResult>& curve);

void write_weight_correlations(std::ostream& out, const std::vector<CorrelationReport>& reports);

// Wide component x parameter table with an r and p column per parameter.
void write_sleep_weight_report(std::ostream& out, const SleepWeightReport& report);

}  // namespace rhythmkit
