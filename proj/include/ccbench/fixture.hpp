#pragma once

// Deterministic synthetic revision store with planted clone classes.
//
// Files are built from 10-line slots. Edits only substitute lines (never
// insert or delete), so line coordinates are identical in every revision and
// the first and last line of a slot are never touched. A co-change event
// edits every member of one planted class within one revision pair; noise
// edits touch slots that belong to no class. Three mock tools report:
//   oracle   the planted classes exactly
//   partial  each class minus its last member (size-2 classes vanish)
//   noisy    each class plus one never-edited decoy slot
// Expected per-target counts follow from this bookkeeping alone.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace ccbench {

struct FixtureSpec {
    std::uint64_t seed = 42;
    std::size_t n_revisions = 6;
    std::size_t n_files = 4;
    std::size_t n_classes = 6;
    std::size_t class_size_min = 2;
    std::size_t class_size_max = 4;
    std::size_t cochange_edits = 8;
    std::size_t noise_edits = 10;
    std::string system_id = "synth";

    /// Throws InputError for impossible specs (e.g. class_size_min < 2).
    void validate() const;
};

struct ExpectedTarget {
    std::string tool_id;
    std::string target_id;
    std::size_t tp = 0, fp = 0, fn = 0, pcc_size = 0, ccc_size = 0;
};

struct ExpectedToolMetrics {
    std::string tool_id;
    std::size_t n_targets = 0;
    double avg_recall = 0.0;
    double avg_precision = 0.0;
    double f1 = 0.0;
};

struct FixtureManifest {
    FixtureSpec spec;
    std::vector<std::string> revisions;
    std::size_t atc = 0;
    std::size_t ccc = 0;
    std::vector<ExpectedTarget> targets;    // pair order, then (path, line), then tool
    std::vector<ExpectedToolMetrics> tools;  // oracle, partial, noisy

    nlohmann::ordered_json to_json() const;
    static FixtureManifest from_json(const nlohmann::json& doc);
};

inline const std::vector<std::string>& fixture_tools() {
    static const std::vector<std::string> tools{"oracle", "partial", "noisy"};
    return tools;
}

/// Writes revisions/, reports/, bench.toml and expected_metrics.json under
/// `out_dir` and returns the manifest. Same spec, same bytes.
FixtureManifest generate_fixture(const FixtureSpec& spec, const std::filesystem::path& out_dir);

}  // namespace ccbench
