#pragma once

// Paired Wilcoxon signed-rank test and the pairwise tool-significance table.
//
// Exact p-values come from the full sign-flip distribution of the realized
// (mid-)rank multiset, so tied magnitudes stay exact. Above 25 non-zero
// differences a tie-corrected normal approximation with continuity
// correction is used instead.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccbench/error.hpp"
#include "ccbench/metrics.hpp"

namespace ccbench {

enum class Alternative { two_sided, greater, less };
enum class ZeroPolicy { discard, pratt };
enum class WilcoxonMode { exact, normal_approx };
enum class Direction { none, x_greater, y_greater };

std::string_view to_string(Alternative alternative) noexcept;
Alternative alternative_from_string(std::string_view text);
std::string_view to_string(WilcoxonMode mode) noexcept;

inline constexpr std::size_t kExactLimit = 25;

struct WilcoxonOptions {
    Alternative alternative = Alternative::two_sided;
    ZeroPolicy zero_policy = ZeroPolicy::discard;
    /// |a - b| <= tolerance * max(|a|, |b|) counts as equal, both for zero
    /// differences and for ties between magnitudes. Absorbs binary
    /// representation noise in decimal data such as 0.32 - 0.30.
    double relative_tolerance = 1e-9;
};

struct WilcoxonResult {
    std::size_t n_effective = 0;
    double w_plus = 0.0;
    double w_minus = 0.0;
    double statistic_w = 0.0;  // min(w_plus, w_minus)
    double p_value = 1.0;
    Alternative alternative = Alternative::two_sided;
    WilcoxonMode mode = WilcoxonMode::exact;
    Direction direction = Direction::none;  // sample with the larger signed-rank sum
};

/// All differences were zero: the test carries no information.
class NoInformationError : public InputError {
public:
    using InputError::InputError;
};

/// Throws InputError on length mismatch or empty input, NoInformationError
/// when no non-zero difference remains.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    const WilcoxonOptions& options = {});

/// Exact null distribution of W+ for ranks given in half units (2 * rank):
/// entry s is the number of sign assignments with 2 * W+ == s.
std::vector<double> signed_rank_counts(std::span<const long> doubled_ranks);

struct PairwiseEntry {
    std::string tool_a;
    std::string tool_b;
    std::optional<WilcoxonResult> result;  // empty when no information
    bool significant = false;              // tool_a significantly better than tool_b
};

struct SignificanceTable {
    std::vector<std::string> tools;
    double alpha = 0.05;
    Alternative alternative = Alternative::two_sided;
    std::vector<PairwiseEntry> entries;                // ordered (a, b), a != b
    std::vector<std::vector<std::string>> better_than;  // per tool, in row order of beaten tools

    std::size_t count_better(std::size_t tool) const { return better_than[tool].size(); }
};

/// Tests every ordered pair of rows. A beats B when p < alpha and the signed
/// ranks favor A. Only two-sided and greater alternatives are meaningful here.
SignificanceTable pairwise_significance(const LabeledMatrix& f1, double alpha = 0.05,
                                        Alternative alternative = Alternative::two_sided,
                                        ZeroPolicy zero_policy = ZeroPolicy::discard);

}  // namespace ccbench
