#include "ccbench/bench.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <thread>

#include "ccbench/diff.hpp"
#include "ccbench/error.hpp"
#include "ccbench/io.hpp"

namespace ccbench {

namespace fs = std::filesystem;

namespace {

const toml::Value& require(const toml::Table& table, std::string_view key, std::string_view where) {
    const auto* value = toml::find(table, key);
    if (value == nullptr) throw InputError(fmt::format("{}missing key '{}'", where, key));
    return *value;
}

std::string require_string(const toml::Table& table, std::string_view key, std::string_view where) {
    const auto& value = require(table, key, where);
    if (!value.is_string()) {
        throw InputError(fmt::format("{}key '{}' must be a string, got {}", where, key, value.type_name()));
    }
    return value.as_string();
}

std::optional<std::string> optional_string(const toml::Table& table, std::string_view key, std::string_view where) {
    if (toml::find(table, key) == nullptr) return std::nullopt;
    return require_string(table, key, where);
}

std::vector<std::string> string_list(const toml::Value& value, std::string_view key, std::string_view where) {
    if (!value.is_array()) throw InputError(fmt::format("{}key '{}' must be an array of strings", where, key));
    std::vector<std::string> out;
    for (const auto& item : value.as_array()) {
        if (!item.is_string()) throw InputError(fmt::format("{}key '{}' must be an array of strings", where, key));
        out.push_back(item.as_string());
    }
    return out;
}

const toml::Array& table_array(const toml::Table& doc, std::string_view key) {
    const auto& value = require(doc, key, "");
    if (!value.is_array() || value.as_array().empty() || !value.as_array().front().is_table()) {
        throw InputError(fmt::format("'{}' must be a non-empty array of tables ([[{}]])", key, key));
    }
    return value.as_array();
}

fs::path resolve(const fs::path& base, const std::string& raw) {
    fs::path p(raw);
    return p.is_absolute() ? p : base / p;
}

void require_directory(const fs::path& path, std::string_view what) {
    if (!fs::is_directory(path)) throw InputError(fmt::format("{} '{}' does not exist", what, path.string()));
}

bool valid_id(const std::string& id) {
    return !id.empty() && id.find('/') == std::string::npos && id.find('\\') == std::string::npos && id != "." &&
           id != "..";
}

}  // namespace

std::vector<RevisionEntry> discover_revisions(const fs::path& revisions_root, const std::string& system_id,
                                              const std::vector<std::string>& declared) {
    const fs::path system_dir = revisions_root / system_id;
    require_directory(system_dir, "revision store");
    std::vector<std::pair<unsigned long long, RevisionEntry>> found;
    for (const auto& entry : fs::directory_iterator(system_dir)) {
        if (!entry.is_directory()) continue;
        const std::string name = entry.path().filename().string();
        const auto underscore = name.find('_');
        if (underscore == 0 || underscore == std::string::npos || underscore + 1 == name.size()) continue;
        unsigned long long ordinal = 0;
        auto [ptr, ec] = std::from_chars(name.data(), name.data() + underscore, ordinal);
        if (ec != std::errc{} || ptr != name.data() + underscore) continue;
        found.push_back({ordinal, {name.substr(underscore + 1), entry.path()}});
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < found.size(); ++i) {
        if (found[i].first == found[i - 1].first) {
            throw InputError(fmt::format("system '{}': revision ordinal {} used twice ('{}' and '{}')", system_id,
                                         found[i].first, found[i - 1].second.dir.string(), found[i].second.dir.string()));
        }
    }
    std::vector<RevisionEntry> out;
    for (auto& [ordinal, entry] : found) {
        if (!declared.empty() && std::find(declared.begin(), declared.end(), entry.id) == declared.end()) continue;
        out.push_back(std::move(entry));
    }
    for (const auto& id : declared) {
        if (std::none_of(out.begin(), out.end(), [&](const RevisionEntry& e) { return e.id == id; })) {
            throw InputError(fmt::format("system '{}': declared revision '{}' not found under '{}'", system_id, id,
                                         system_dir.string()));
        }
    }
    return out;
}

RunPlan plan_from_toml(const toml::Table& doc, const fs::path& base_dir) {
    RunPlan plan;
    if (auto out = optional_string(doc, "output_dir", "")) plan.output_dir = resolve(base_dir, *out);
    else plan.output_dir = base_dir / "bench_out";
    if (const auto* alpha = toml::find(doc, "alpha")) {
        if (!alpha->is_integer() && !alpha->is_float()) throw InputError("key 'alpha' must be a number");
        plan.alpha = alpha->as_number();
        if (!(plan.alpha > 0.0 && plan.alpha < 1.0)) throw InputError(fmt::format("alpha {} outside (0, 1)", plan.alpha));
    }
    if (auto alt = optional_string(doc, "alternative", "")) plan.alternative = alternative_from_string(*alt);
    if (const auto* ext = toml::find(doc, "file_extensions")) {
        plan.file_extensions = string_list(*ext, "file_extensions", "");
    }
    if (const auto* jobs = toml::find(doc, "parallelism")) {
        if (!jobs->is_integer() || jobs->as_integer() < 0) throw InputError("key 'parallelism' must be a non-negative integer");
        plan.parallelism = static_cast<std::size_t>(jobs->as_integer());
    }

    const auto& systems = table_array(doc, "systems");
    for (std::size_t i = 0; i < systems.size(); ++i) {
        const std::string where = fmt::format("systems[{}]: ", i);
        const auto& table = systems[i].as_table();
        SystemPlan system;
        system.id = require_string(table, "id", where);
        if (!valid_id(system.id)) throw InputError(fmt::format("{}invalid id '{}'", where, system.id));
        system.revisions_root = resolve(base_dir, require_string(table, "revisions_root", where));
        require_directory(system.revisions_root, "revisions_root");
        std::vector<std::string> declared;
        if (const auto* revs = toml::find(table, "revisions")) declared = string_list(*revs, "revisions", where);
        system.revisions = discover_revisions(system.revisions_root, system.id, declared);
        for (const auto& other : plan.systems) {
            if (other.id == system.id) throw InputError(fmt::format("{}duplicate system id '{}'", where, system.id));
        }
        plan.systems.push_back(std::move(system));
    }

    const auto& tools = table_array(doc, "tools");
    for (std::size_t i = 0; i < tools.size(); ++i) {
        const std::string where = fmt::format("tools[{}]: ", i);
        const auto& table = tools[i].as_table();
        ToolPlan tool;
        tool.id = require_string(table, "id", where);
        if (!valid_id(tool.id)) throw InputError(fmt::format("{}invalid id '{}'", where, tool.id));
        tool.format = report_format_from_string(require_string(table, "format", where));
        tool.reports_root = resolve(base_dir, require_string(table, "reports_root", where));
        require_directory(tool.reports_root, "reports_root");
        if (auto type = optional_string(table, "clone_type", where)) tool.meta.clone_type = clone_type_from_string(*type);
        if (auto proc = optional_string(table, "processing", where)) tool.meta.processing = processing_from_string(*proc);
        if (auto prefix = optional_string(table, "path_prefix", where)) tool.path_prefix = *prefix;
        for (const auto& other : plan.tools) {
            if (other.id == tool.id) throw InputError(fmt::format("{}duplicate tool id '{}'", where, tool.id));
        }
        plan.tools.push_back(std::move(tool));
    }
    return plan;
}

RunPlan load_plan(const fs::path& config) {
    const auto doc = toml::parse_file(config);
    return plan_from_toml(doc, config.has_parent_path() ? config.parent_path() : fs::path("."));
}

namespace {

struct WorkItem {
    std::size_t system = 0;
    std::size_t pair = 0;  // older revision ordinal index
};

struct WorkResult {
    PairEvaluation evaluation;
    std::vector<CloneReport> reports;  // one per tool
    std::vector<std::string> warnings;
};

CloneReport load_tool_report(const ToolPlan& tool, const SystemPlan& system, const RevisionEntry& revision,
                             const FileLengthTable& lengths, std::vector<std::string>& warnings) {
    const fs::path path = tool.reports_root / system.id / (revision.id + std::string(file_extension(tool.format)));
    CloneReport empty;
    empty.tool_id = tool.id;
    empty.tool_meta = tool.meta;
    empty.system_id = system.id;
    empty.revision_id = revision.id;
    if (!fs::is_regular_file(path)) {
        warnings.push_back(fmt::format("tool '{}' system '{}' revision '{}': report '{}' missing, treated as empty",
                                       tool.id, system.id, revision.id, path.string()));
        return empty;
    }
    const auto where = [&] {
        return fmt::format("tool '{}' system '{}' revision '{}' report '{}'", tool.id, system.id, revision.id,
                           path.string());
    };
    IngestOptions options{tool.id, system.id, revision.id, tool.meta, tool.path_prefix};
    ParsedReport parsed;
    try {
        parsed = parse_report(tool.format, read_text_file(path), options);
    } catch (const InputError& e) {
        throw InputError(fmt::format("{}: {}", where(), e.what()));
    }
    for (const auto& finding : parsed.warnings) warnings.push_back(fmt::format("{}: {}", where(), format_finding(finding)));
    // The plan's ids are authoritative; the document's are only checked.
    auto& header = parsed.report;
    if (header.tool_id != tool.id || header.system_id != system.id || header.revision_id != revision.id) {
        warnings.push_back(fmt::format("{}: document names tool '{}' system '{}' revision '{}'; using the plan's ids",
                                       where(), header.tool_id, header.system_id, header.revision_id));
        header.tool_id = tool.id;
        header.system_id = system.id;
        header.revision_id = revision.id;
    }
    auto validated = validate_report(parsed.report, &lengths);
    for (const auto& finding : validated.findings) {
        if (finding.severity == Severity::error) throw InputError(fmt::format("{}: {}", where(), format_finding(finding)));
        warnings.push_back(fmt::format("{}: {}", where(), format_finding(finding)));
    }
    return std::move(validated.normalized);
}

WorkResult run_item(const RunPlan& plan, const WorkItem& item) {
    const auto& system = plan.systems[item.system];
    const auto& older_rev = system.revisions[item.pair];
    const auto& newer_rev = system.revisions[item.pair + 1];
    WorkResult result;
    const auto older = load_snapshot(older_rev.dir, system.id, older_rev.id, plan.file_extensions);
    const auto newer = load_snapshot(newer_rev.dir, system.id, newer_rev.id, plan.file_extensions);
    auto fragments = extract_change_fragments(older, newer, plan.file_extensions);
    const auto lengths = older.file_lengths();
    for (const auto& tool : plan.tools) {
        result.reports.push_back(load_tool_report(tool, system, older_rev, lengths, result.warnings));
    }
    result.evaluation = evaluate_pair(std::move(fragments), result.reports);
    return result;
}

// Workers claim items through an atomic cursor and write into their own
// slot; merging happens afterwards in item order.
std::vector<WorkResult> run_items(const RunPlan& plan, const std::vector<WorkItem>& items) {
    std::vector<WorkResult> results(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::size_t workers = plan.parallelism == 0 ? std::max(1u, std::thread::hardware_concurrency()) : plan.parallelism;
    workers = std::min(workers, std::max<std::size_t>(items.size(), 1));
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        for (std::size_t i = cursor++; i < items.size(); i = cursor++) {
            try {
                results[i] = run_item(plan, items[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (const auto& error : errors) {
        if (error) std::rethrow_exception(error);
    }
    return results;
}

}  // namespace

void attach_statistics(ResultBundle& bundle, double alpha, Alternative alternative) {
    bundle.ranks.reset();
    bundle.significance.reset();
    if (bundle.f1.rows() == 0 || bundle.f1.cols() == 0) return;
    bundle.ranks = aggregate_ranks(rank_per_system(bundle.f1));
    if (bundle.f1.rows() >= 2) bundle.significance = pairwise_significance(bundle.f1, alpha, alternative);
}

ResultBundle run_evaluation(const RunPlan& plan) {
    if (plan.systems.empty()) throw InputError("run plan has no systems");
    if (plan.tools.empty()) throw InputError("run plan has no tools");

    ResultBundle bundle;
    for (const auto& tool : plan.tools) bundle.tools.push_back(tool.id);
    for (const auto& system : plan.systems) bundle.systems.push_back(system.id);

    std::vector<WorkItem> items;
    for (std::size_t s = 0; s < plan.systems.size(); ++s) {
        const auto& revisions = plan.systems[s].revisions;
        if (revisions.size() < 2) {
            bundle.warnings.push_back(fmt::format("system '{}': no revision pairs", plan.systems[s].id));
            continue;
        }
        for (std::size_t p = 0; p + 1 < revisions.size(); ++p) items.push_back({s, p});
    }
    bundle.n_pairs = items.size();
    if (items.empty()) {
        for (const auto& w : bundle.warnings) spdlog::warn("{}", w);
        return bundle;
    }
    auto results = run_items(plan, items);

    const std::size_t n_tools = plan.tools.size();
    const std::size_t n_systems = plan.systems.size();
    std::vector<std::vector<std::vector<ConfusionCounts>>> per_cell(
        n_tools, std::vector<std::vector<ConfusionCounts>>(n_systems));
    std::vector<std::vector<std::vector<CloneReport>>> reports(n_tools, std::vector<std::vector<CloneReport>>(n_systems));
    std::vector<std::vector<GroundTruth>> truths(n_systems);

    std::map<std::string, std::size_t> tool_index;
    for (std::size_t t = 0; t < n_tools; ++t) tool_index[plan.tools[t].id] = t;

    for (std::size_t i = 0; i < items.size(); ++i) {
        auto& result = results[i];
        const std::size_t s = items[i].system;
        for (auto& w : result.warnings) bundle.warnings.push_back(std::move(w));
        for (const auto& counts : result.evaluation.confusions) {
            per_cell[tool_index.at(counts.tool_id)][s].push_back(counts);
            bundle.audit.push_back({plan.systems[s].id, counts});
        }
        for (const auto& truth : result.evaluation.ground_truth) truths[s].push_back(truth);
        for (std::size_t t = 0; t < n_tools; ++t) reports[t][s].push_back(std::move(result.reports[t]));
    }

    bundle.recall = LabeledMatrix(bundle.tools, bundle.systems);
    bundle.precision = LabeledMatrix(bundle.tools, bundle.systems);
    bundle.f1 = LabeledMatrix(bundle.tools, bundle.systems);
    for (std::size_t t = 0; t < n_tools; ++t) {
        for (std::size_t s = 0; s < n_systems; ++s) {
            auto record = system_averages(bundle.tools[t], bundle.systems[s], per_cell[t][s]);
            if (record.no_targets) {
                bundle.warnings.push_back(fmt::format("tool '{}' system '{}': no scored targets, F1 taken as 0",
                                                      bundle.tools[t], bundle.systems[s]));
            }
            bundle.recall(t, s) = record.avg_recall;
            bundle.precision(t, s) = record.avg_precision;
            bundle.f1(t, s) = record.f1;
            bundle.metrics.push_back(std::move(record));
        }
    }
    attach_statistics(bundle, plan.alpha, plan.alternative);

    // Coverage per system and over all systems; normalized across tools.
    auto add_scope = [&](const std::string& scope, const std::vector<CoverageStats>& stats) {
        std::vector<double> fragments, lines;
        for (const auto& st : stats) {
            fragments.push_back(static_cast<double>(st.fragment_count));
            lines.push_back(static_cast<double>(st.unique_line_count));
        }
        const auto nf = minmax_normalize(fragments);
        const auto nl = minmax_normalize(lines);
        for (std::size_t t = 0; t < stats.size(); ++t) {
            bundle.coverage.push_back({scope, stats[t], nf.values[t], nl.values[t], nf.degenerate || nl.degenerate});
        }
    };
    std::vector<CoverageStats> all(n_tools);
    for (std::size_t t = 0; t < n_tools; ++t) {
        all[t].tool_id = bundle.tools[t];
        all[t].system_id = "ALL";
    }
    for (std::size_t s = 0; s < n_systems; ++s) {
        std::vector<CoverageStats> stats;
        for (std::size_t t = 0; t < n_tools; ++t) {
            stats.push_back(coverage_stats(bundle.tools[t], bundle.systems[s], reports[t][s]));
            all[t].fragment_count += stats.back().fragment_count;
            all[t].unique_line_count += stats.back().unique_line_count;
        }
        add_scope(bundle.systems[s], stats);
    }
    add_scope("ALL", all);

    std::vector<SystemCounts> counts;
    for (std::size_t s = 0; s < n_systems; ++s) counts.push_back(count_ground_truth(bundle.systems[s], truths[s]));
    bundle.summary = summary_stats(counts);

    for (const auto& w : bundle.warnings) spdlog::warn("{}", w);
    return bundle;
}

}  // namespace ccbench
