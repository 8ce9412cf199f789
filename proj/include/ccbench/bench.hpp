#pragma once

// Run configuration, end-to-end evaluation over a revision store, and
// emission of the CSV tables and SVG plots.
//
// Revision store:  <revisions_root>/<system>/<ordinal>_<revision>/<tree>
// Clone reports:   <reports_root>/<system>/<revision>.<json|xml|csv>
// A pair (older, newer) is scored with the reports of the older revision.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccbench/clone_ingest.hpp"
#include "ccbench/cochange.hpp"
#include "ccbench/core_model.hpp"
#include "ccbench/metrics.hpp"
#include "ccbench/toml_lite.hpp"
#include "ccbench/wilcoxon.hpp"

namespace ccbench {

struct RevisionEntry {
    std::string id;
    std::filesystem::path dir;
};

struct SystemPlan {
    std::string id;
    std::filesystem::path revisions_root;
    std::vector<RevisionEntry> revisions;  // ordinal order
};

struct ToolPlan {
    std::string id;
    ReportFormat format = ReportFormat::interchange;
    std::filesystem::path reports_root;
    ToolMeta meta;
    std::string path_prefix;
};

struct RunPlan {
    std::vector<SystemPlan> systems;
    std::vector<ToolPlan> tools;
    std::vector<std::string> file_extensions{".c", ".h", ".java"};
    double alpha = 0.05;
    Alternative alternative = Alternative::two_sided;
    std::filesystem::path output_dir = "bench_out";
    std::size_t parallelism = 0;  // 0: hardware concurrency
};

/// Parses and validates a TOML run configuration. Relative paths resolve
/// against the directory holding the file. Missing keys and dangling paths
/// raise InputError naming the key or path.
RunPlan load_plan(const std::filesystem::path& config);
RunPlan plan_from_toml(const toml::Table& doc, const std::filesystem::path& base_dir);

/// Revision directories of one system, sorted by numeric ordinal. When
/// `declared` is non-empty only those ids are kept, and all must exist.
std::vector<RevisionEntry> discover_revisions(const std::filesystem::path& revisions_root, const std::string& system_id,
                                              const std::vector<std::string>& declared = {});

struct AuditRow {
    std::string system_id;
    ConfusionCounts counts;
};

struct CoverageRow {
    std::string scope;  // system id, or "ALL"
    CoverageStats stats;
    double norm_fragments = 0.0;
    double norm_unique_lines = 0.0;
    bool degenerate = false;
};

struct ResultBundle {
    std::vector<std::string> tools;
    std::vector<std::string> systems;
    std::vector<MetricRecord> metrics;  // tool-major, then system
    LabeledMatrix recall;
    LabeledMatrix precision;
    LabeledMatrix f1;
    std::optional<RankTable> ranks;
    std::optional<SignificanceTable> significance;
    std::vector<CoverageRow> coverage;  // per scope, tools in plan order
    SummaryStats summary;
    std::vector<AuditRow> audit;        // (system, pair, target, tool)
    std::vector<std::string> warnings;
    std::size_t n_pairs = 0;
};

/// Fills ranks and significance from `bundle.f1`; used by evaluation and by
/// the matrix-only subcommands.
void attach_statistics(ResultBundle& bundle, double alpha, Alternative alternative);

ResultBundle run_evaluation(const RunPlan& plan);

enum class OutputFormat { csv, svg, both };
OutputFormat output_format_from_string(std::string_view text);

/// Writes the artifacts into `out_dir`. Files are staged and renamed at the
/// end; on failure the staged files are removed and the error rethrown.
/// Returns the written file names.
std::vector<std::string> emit_report(const ResultBundle& bundle, const std::filesystem::path& out_dir,
                                     OutputFormat format);

/// One artifact by file name (e.g. "rank_table.csv", "f1_boxplot.svg").
std::string render_table(const ResultBundle& bundle, std::string_view name);

/// Writes `name.partial` files, then renames them all. On failure the staged
/// files and any targets already renamed by this call are removed.
void write_staged(const std::filesystem::path& out_dir,
                  const std::vector<std::pair<std::string, std::string>>& files);

/// Tools x systems matrix from either a wide CSV (`tool,<system>...`) or the
/// long metrics.csv form (`tool,system,...,<value_column>,...`).
LabeledMatrix read_matrix_csv(const std::filesystem::path& path, const std::string& value_column = "f1");

/// Rebuilds the metric matrices, ranks and coverage from a previous output
/// directory (metrics.csv and coverage.csv).
ResultBundle load_bundle(const std::filesystem::path& out_dir);

}  // namespace ccbench
