#pragma once

// Recall / precision / F1, per-system averaging, rank aggregation across
// systems, clone coverage and the ATC/CCC summary.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ccbench/cochange.hpp"
#include "ccbench/core_model.hpp"

namespace ccbench {

/// tp / ccc_size. Throws InputError when ccc_size is 0 or tp > ccc_size.
double recall(std::size_t tp, std::size_t ccc_size);

/// matched / pcc_size, and 0 for an empty prediction.
double precision(std::size_t matched_pcc, std::size_t pcc_size);

/// Harmonic mean; 0 when both inputs are 0.
double f1_score(double recall_value, double precision_value) noexcept;

struct MetricRecord {
    std::string tool_id;
    std::string system_id;
    std::size_t n_targets = 0;
    double avg_recall = 0.0;
    double avg_precision = 0.0;
    double f1 = 0.0;
    bool no_targets = false;

    bool operator==(const MetricRecord&) const = default;
};

/// Unweighted means over targets; F1 from the two means (not a mean of F1s).
/// Sums run in the order given.
MetricRecord system_averages(std::string tool_id, std::string system_id, std::span<const ConfusionCounts> records);

/// Dense row-major matrix with row and column labels (tools x systems).
struct LabeledMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<double> values;

    LabeledMatrix() = default;
    LabeledMatrix(std::vector<std::string> rows, std::vector<std::string> cols);

    std::size_t rows() const noexcept { return row_labels.size(); }
    std::size_t cols() const noexcept { return col_labels.size(); }
    double& operator()(std::size_t r, std::size_t c) { return values[r * cols() + c]; }
    double operator()(std::size_t r, std::size_t c) const { return values[r * cols() + c]; }
    std::vector<double> row(std::size_t r) const;
    std::vector<double> col(std::size_t c) const;

    bool operator==(const LabeledMatrix&) const = default;
};

/// Fractional (mid) ranks, 1 = best. `descending` ranks the largest value first.
std::vector<double> fractional_ranks(std::span<const double> values, bool descending = true);

/// Per system column: descending-F1 fractional ranks.
LabeledMatrix rank_per_system(const LabeledMatrix& f1);

struct RankTable {
    std::vector<std::string> systems;
    std::vector<std::string> tools;
    LabeledMatrix per_system_rank;
    std::vector<double> rank_sum;
    std::vector<int> final_rank;
    std::vector<bool> tie;  // rank sum shared with another tool; broken by tool id

    /// Tool indices ordered by final rank.
    std::vector<std::size_t> order() const;
};

RankTable aggregate_ranks(const LabeledMatrix& per_system_rank);

struct CoverageStats {
    std::string tool_id;
    std::string system_id;
    std::size_t fragment_count = 0;
    std::size_t unique_line_count = 0;

    bool operator==(const CoverageStats&) const = default;
};

/// Fragments summed over the reports; unique (revision, file, line) triples.
CoverageStats coverage_stats(std::string tool_id, std::string system_id, std::span<const CloneReport> reports);

struct Normalized {
    std::vector<double> values;
    bool degenerate = false;  // all inputs equal; every output is 1
};

/// (v - min) / (max - min). Throws InputError for an empty input.
Normalized minmax_normalize(std::span<const double> values);

struct SystemCounts {
    std::string system_id;
    std::size_t atc = 0;
    std::size_t ccc = 0;
};

struct SummaryRow {
    std::string system_id;
    std::size_t atc = 0;
    std::size_t ccc = 0;
    double pct_atc = 0.0;
    double pct_ccc = 0.0;
};

struct SummaryStats {
    std::vector<SummaryRow> rows;
    std::size_t total_atc = 0;
    std::size_t total_ccc = 0;
};

SummaryStats summary_stats(std::span<const SystemCounts> counts);

/// ATC = non-excluded targets, CCC = sum of their ground-truth sizes.
SystemCounts count_ground_truth(std::string system_id, std::span<const GroundTruth> truths);

}  // namespace ccbench
