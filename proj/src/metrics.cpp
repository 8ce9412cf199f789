#include "ccbench/metrics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "ccbench/error.hpp"

namespace ccbench {

double recall(std::size_t tp, std::size_t ccc_size) {
    if (ccc_size == 0) throw InputError("recall: empty ground truth (excluded target)");
    if (tp > ccc_size) throw InputError(fmt::format("recall: tp {} exceeds ground truth size {}", tp, ccc_size));
    return static_cast<double>(tp) / static_cast<double>(ccc_size);
}

double precision(std::size_t matched_pcc, std::size_t pcc_size) {
    if (matched_pcc > pcc_size) {
        throw InputError(fmt::format("precision: {} matched of {} predicted", matched_pcc, pcc_size));
    }
    if (pcc_size == 0) return 0.0;
    return static_cast<double>(matched_pcc) / static_cast<double>(pcc_size);
}

double f1_score(double recall_value, double precision_value) noexcept {
    const double sum = recall_value + precision_value;
    if (sum <= 0.0) return 0.0;
    return 2.0 * recall_value * precision_value / sum;
}

MetricRecord system_averages(std::string tool_id, std::string system_id, std::span<const ConfusionCounts> records) {
    MetricRecord record;
    record.tool_id = std::move(tool_id);
    record.system_id = std::move(system_id);
    record.n_targets = records.size();
    if (records.empty()) {
        record.no_targets = true;
        return record;
    }
    double recall_sum = 0.0;
    double precision_sum = 0.0;
    for (const auto& counts : records) {
        recall_sum += recall(counts.tp, counts.ccc_size);
        precision_sum += precision(counts.matched_pcc(), counts.pcc_size);
    }
    const auto n = static_cast<double>(records.size());
    record.avg_recall = recall_sum / n;
    record.avg_precision = precision_sum / n;
    record.f1 = f1_score(record.avg_recall, record.avg_precision);
    return record;
}

LabeledMatrix::LabeledMatrix(std::vector<std::string> rows, std::vector<std::string> cols)
    : row_labels(std::move(rows)), col_labels(std::move(cols)), values(row_labels.size() * col_labels.size(), 0.0) {}

std::vector<double> LabeledMatrix::row(std::size_t r) const {
    return {values.begin() + static_cast<std::ptrdiff_t>(r * cols()),
            values.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols())};
}

std::vector<double> LabeledMatrix::col(std::size_t c) const {
    std::vector<double> out(rows());
    for (std::size_t r = 0; r < rows(); ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<double> fractional_ranks(std::span<const double> values, bool descending) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return descending ? values[a] > values[b] : values[a] < values[b];
    });
    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        // positions i..j (0-based) share the mean of ranks i+1..j+1
        const double mid = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
        i = j + 1;
    }
    return ranks;
}

LabeledMatrix rank_per_system(const LabeledMatrix& f1) {
    LabeledMatrix ranks(f1.row_labels, f1.col_labels);
    for (std::size_t c = 0; c < f1.cols(); ++c) {
        const auto column = f1.col(c);
        const auto column_ranks = fractional_ranks(column, true);
        for (std::size_t r = 0; r < f1.rows(); ++r) ranks(r, c) = column_ranks[r];
    }
    return ranks;
}

std::vector<std::size_t> RankTable::order() const {
    std::vector<std::size_t> idx(tools.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return final_rank[a] < final_rank[b]; });
    return idx;
}

RankTable aggregate_ranks(const LabeledMatrix& per_system_rank) {
    RankTable table;
    table.tools = per_system_rank.row_labels;
    table.systems = per_system_rank.col_labels;
    table.per_system_rank = per_system_rank;
    const std::size_t n = per_system_rank.rows();
    table.rank_sum.assign(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < per_system_rank.cols(); ++c) table.rank_sum[r] += per_system_rank(r, c);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (table.rank_sum[a] != table.rank_sum[b]) return table.rank_sum[a] < table.rank_sum[b];
        return table.tools[a] < table.tools[b];
    });
    table.final_rank.assign(n, 0);
    table.tie.assign(n, false);
    for (std::size_t pos = 0; pos < n; ++pos) {
        table.final_rank[order[pos]] = static_cast<int>(pos + 1);
        if (pos + 1 < n && table.rank_sum[order[pos]] == table.rank_sum[order[pos + 1]]) {
            table.tie[order[pos]] = true;
            table.tie[order[pos + 1]] = true;
        }
    }
    return table;
}

CoverageStats coverage_stats(std::string tool_id, std::string system_id, std::span<const CloneReport> reports) {
    CoverageStats stats;
    stats.tool_id = std::move(tool_id);
    stats.system_id = std::move(system_id);

    // (revision, file) -> ranges, merged to count distinct lines.
    std::map<std::pair<std::string, std::string>, std::vector<LineRange>> ranges;
    for (const auto& report : reports) {
        for (const auto& clone_class : report.classes) {
            for (const auto& fragment : clone_class.fragments) {
                ++stats.fragment_count;
                ranges[{report.revision_id, fragment.anchor.file_path}].push_back(fragment.anchor.range);
            }
        }
    }
    for (auto& [key, list] : ranges) {
        std::sort(list.begin(), list.end());
        LineNo covered_until = 0;  // last line already counted
        for (const auto& range : list) {
            const LineNo from = std::max(range.start_line, covered_until + 1);
            if (range.end_line >= from) {
                stats.unique_line_count += static_cast<std::size_t>(range.end_line - from + 1);
                covered_until = range.end_line;
            }
        }
    }
    return stats;
}

Normalized minmax_normalize(std::span<const double> values) {
    if (values.empty()) throw InputError("minmax_normalize: no values");
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    Normalized out;
    out.values.reserve(values.size());
    if (*hi == *lo) {
        out.degenerate = true;
        out.values.assign(values.size(), 1.0);
        return out;
    }
    const double span = *hi - *lo;
    for (double v : values) out.values.push_back((v - *lo) / span);
    return out;
}

SummaryStats summary_stats(std::span<const SystemCounts> counts) {
    SummaryStats stats;
    for (const auto& row : counts) {
        stats.total_atc += row.atc;
        stats.total_ccc += row.ccc;
    }
    for (const auto& row : counts) {
        SummaryRow out;
        out.system_id = row.system_id;
        out.atc = row.atc;
        out.ccc = row.ccc;
        out.pct_atc = stats.total_atc == 0 ? 0.0
                                           : 100.0 * static_cast<double>(row.atc) / static_cast<double>(stats.total_atc);
        out.pct_ccc = stats.total_ccc == 0 ? 0.0
                                           : 100.0 * static_cast<double>(row.ccc) / static_cast<double>(stats.total_ccc);
        stats.rows.push_back(std::move(out));
    }
    return stats;
}

SystemCounts count_ground_truth(std::string system_id, std::span<const GroundTruth> truths) {
    SystemCounts counts;
    counts.system_id = std::move(system_id);
    for (const auto& truth : truths) {
        if (truth.excluded()) continue;
        ++counts.atc;
        counts.ccc += truth.ccc.size();
    }
    return counts;
}

}  // namespace ccbench
