#include "ccbench/wilcoxon.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ccbench {

std::string_view to_string(Alternative alternative) noexcept {
    switch (alternative) {
        case Alternative::two_sided: return "two-sided";
        case Alternative::greater: return "greater";
        case Alternative::less: return "less";
    }
    return "two-sided";
}

Alternative alternative_from_string(std::string_view text) {
    if (text == "two-sided") return Alternative::two_sided;
    if (text == "greater") return Alternative::greater;
    if (text == "less") return Alternative::less;
    throw InputError(fmt::format("unknown alternative '{}' (expected two-sided, greater or less)", text));
}

std::string_view to_string(WilcoxonMode mode) noexcept {
    return mode == WilcoxonMode::exact ? "exact" : "normal-approx";
}

namespace {

bool nearly_equal(double a, double b, double tolerance) {
    return std::fabs(a - b) <= tolerance * std::max(std::fabs(a), std::fabs(b));
}

// Doubled mid-ranks of ascending magnitudes, ties grouped by tolerance.
// Also returns the tie group sizes.
std::vector<long> doubled_midranks(std::span<const double> magnitudes, double tolerance,
                                   std::vector<std::size_t>& tie_sizes) {
    std::vector<std::size_t> order(magnitudes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return magnitudes[a] < magnitudes[b]; });
    std::vector<long> ranks(magnitudes.size(), 0);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && nearly_equal(magnitudes[order[j + 1]], magnitudes[order[j]], tolerance)) ++j;
        const long doubled = static_cast<long>(i + 1 + j + 1);  // 2 * mean of ranks i+1..j+1
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = doubled;
        tie_sizes.push_back(j - i + 1);
        i = j + 1;
    }
    return ranks;
}

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

std::vector<double> signed_rank_counts(std::span<const long> doubled_ranks) {
    const long total = std::accumulate(doubled_ranks.begin(), doubled_ranks.end(), 0L);
    std::vector<double> counts(static_cast<std::size_t>(total) + 1, 0.0);
    counts[0] = 1.0;
    long reach = 0;
    for (long r : doubled_ranks) {
        for (long s = reach; s >= 0; --s) {
            if (counts[static_cast<std::size_t>(s)] != 0.0) {
                counts[static_cast<std::size_t>(s + r)] += counts[static_cast<std::size_t>(s)];
            }
        }
        reach += r;
    }
    return counts;
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    const WilcoxonOptions& options) {
    if (x.size() != y.size()) {
        throw InputError(fmt::format("wilcoxon: samples differ in length ({} vs {})", x.size(), y.size()));
    }
    if (x.empty()) throw InputError("wilcoxon: empty samples");

    std::vector<double> diffs(x.size());
    std::vector<bool> zero(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        diffs[i] = x[i] - y[i];
        zero[i] = diffs[i] == 0.0 || nearly_equal(x[i], y[i], options.relative_tolerance);
    }
    const auto n_zero = static_cast<std::size_t>(std::count(zero.begin(), zero.end(), true));
    const std::size_t n_eff = x.size() - n_zero;
    if (n_eff == 0) throw NoInformationError("wilcoxon: all differences are zero");

    // Ranked set: non-zero differences only (discard) or everything (pratt).
    std::vector<double> magnitudes;
    std::vector<std::size_t> source;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (zero[i] && options.zero_policy == ZeroPolicy::discard) continue;
        magnitudes.push_back(zero[i] ? 0.0 : std::fabs(diffs[i]));
        source.push_back(i);
    }
    std::vector<std::size_t> tie_sizes_all;
    const auto ranks = doubled_midranks(magnitudes, options.relative_tolerance, tie_sizes_all);

    std::vector<long> nonzero_ranks;
    long w_plus2 = 0;
    long w_minus2 = 0;
    for (std::size_t k = 0; k < source.size(); ++k) {
        const std::size_t i = source[k];
        if (zero[i]) continue;
        nonzero_ranks.push_back(ranks[k]);
        (diffs[i] > 0 ? w_plus2 : w_minus2) += ranks[k];
    }

    WilcoxonResult result;
    result.n_effective = n_eff;
    result.alternative = options.alternative;
    result.w_plus = static_cast<double>(w_plus2) / 2.0;
    result.w_minus = static_cast<double>(w_minus2) / 2.0;
    result.statistic_w = std::min(result.w_plus, result.w_minus);
    result.direction = w_plus2 > w_minus2   ? Direction::x_greater
                       : w_plus2 < w_minus2 ? Direction::y_greater
                                            : Direction::none;

    if (n_eff <= kExactLimit) {
        result.mode = WilcoxonMode::exact;
        const auto counts = signed_rank_counts(nonzero_ranks);
        const double total = std::ldexp(1.0, static_cast<int>(n_eff));
        double at_most = 0.0;   // P(W+ <= observed)
        double at_least = 0.0;  // P(W+ >= observed)
        for (std::size_t s = 0; s < counts.size(); ++s) {
            if (static_cast<long>(s) <= w_plus2) at_most += counts[s];
            if (static_cast<long>(s) >= w_plus2) at_least += counts[s];
        }
        at_most /= total;
        at_least /= total;
        switch (options.alternative) {
            case Alternative::two_sided: result.p_value = std::min(1.0, 2.0 * std::min(at_most, at_least)); break;
            case Alternative::greater: result.p_value = at_least; break;
            case Alternative::less: result.p_value = at_most; break;
        }
        return result;
    }

    result.mode = WilcoxonMode::normal_approx;
    const auto n_all = static_cast<double>(magnitudes.size());
    double mean = n_all * (n_all + 1.0) / 4.0;
    double variance = n_all * (n_all + 1.0) * (2.0 * n_all + 1.0) / 24.0;
    if (options.zero_policy == ZeroPolicy::pratt && n_zero > 0) {
        const auto z = static_cast<double>(n_zero);
        mean -= z * (z + 1.0) / 4.0;
        variance -= z * (z + 1.0) * (2.0 * z + 1.0) / 24.0;
    }
    // Tie correction over the non-zero ranks.
    std::vector<long> sorted_ranks = nonzero_ranks;
    std::sort(sorted_ranks.begin(), sorted_ranks.end());
    for (std::size_t i = 0; i < sorted_ranks.size();) {
        std::size_t j = i;
        while (j < sorted_ranks.size() && sorted_ranks[j] == sorted_ranks[i]) ++j;
        const auto t = static_cast<double>(j - i);
        variance -= (t * t * t - t) / 48.0;
        i = j;
    }
    const double sd = std::sqrt(std::max(variance, 0.0));
    if (sd == 0.0) {
        result.p_value = 1.0;
        return result;
    }
    const double deviation = result.w_plus - mean;
    switch (options.alternative) {
        case Alternative::two_sided:
            result.p_value = std::min(1.0, 2.0 * normal_upper_tail(std::max(std::fabs(deviation) - 0.5, 0.0) / sd));
            break;
        case Alternative::greater: result.p_value = normal_upper_tail((deviation - 0.5) / sd); break;
        case Alternative::less: result.p_value = normal_upper_tail(-(deviation + 0.5) / sd); break;
    }
    return result;
}

SignificanceTable pairwise_significance(const LabeledMatrix& f1, double alpha, Alternative alternative,
                                        ZeroPolicy zero_policy) {
    if (f1.rows() < 2) throw InputError("pairwise significance needs at least two tools");
    if (f1.cols() < 1) throw InputError("pairwise significance needs at least one system");
    if (alternative == Alternative::less) {
        throw InputError("pairwise significance supports the two-sided and greater alternatives");
    }

    SignificanceTable table;
    table.tools = f1.row_labels;
    table.alpha = alpha;
    table.alternative = alternative;
    table.better_than.resize(f1.rows());

    WilcoxonOptions options;
    options.alternative = alternative;
    options.zero_policy = zero_policy;
    for (std::size_t a = 0; a < f1.rows(); ++a) {
        const auto xa = f1.row(a);
        for (std::size_t b = 0; b < f1.rows(); ++b) {
            if (a == b) continue;
            PairwiseEntry entry;
            entry.tool_a = f1.row_labels[a];
            entry.tool_b = f1.row_labels[b];
            const auto yb = f1.row(b);
            try {
                entry.result = wilcoxon_signed_rank(xa, yb, options);
                entry.significant =
                    entry.result->p_value < alpha && entry.result->direction == Direction::x_greater;
            } catch (const NoInformationError&) {
                entry.result.reset();
            }
            if (entry.significant) table.better_than[a].push_back(entry.tool_b);
            table.entries.push_back(std::move(entry));
        }
    }
    return table;
}

}  // namespace ccbench
