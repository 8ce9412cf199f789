#pragma once

// Co-change groups, clone-based prediction, the cross-tool ground truth and
// per-(tool, target) confusion counts.
//
// Fragments of one revision pair are addressed by their index in the pair's
// fragment list; groups, predictions and ground truths store those indices.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ccbench/core_model.hpp"

namespace ccbench {

struct CoChangeGroup {
    RevisionPair revisions;
    std::size_t target = 0;
    std::vector<std::size_t> candidates;  // every other fragment of the pair, ascending
};

/// One group per fragment when there are at least two fragments, none otherwise.
std::vector<CoChangeGroup> build_cochange_groups(std::span<const ChangeFragment> fragments);

/// A change fragment touches a clone anchor when they intersect and the change
/// is not a synthetic insert anchor.
bool touches(const ChangeFragment& change, const FileAnchor& anchor) noexcept;

/// Per-file index over a report's fragments for overlap queries.
class CloneIndex {
public:
    explicit CloneIndex(const CloneReport& report);

    const CloneReport& report() const noexcept { return *report_; }

    /// Indices of classes with at least one fragment intersecting `anchor`, ascending.
    std::vector<std::size_t> classes_intersecting(const FileAnchor& anchor) const;

private:
    struct Entry {
        LineRange range;
        std::size_t class_index;
    };
    struct FileEntries {
        std::vector<Entry> entries;  // sorted by start line
        LineNo max_length = 0;
    };

    const CloneReport* report_;
    std::map<std::string, FileEntries, std::less<>> files_;
};

/// Predicted cloned co-change candidates: the union, over every class with a
/// fragment intersecting the target, of that class's fragments that do not
/// intersect the target. Deduplicated by (file, range); sorted by anchor.
std::vector<CloneFragment> predict_cochange(const ChangeFragment& target, const CloneIndex& index);
std::vector<CloneFragment> predict_cochange(const ChangeFragment& target, const CloneReport& report);

struct Prediction {
    std::string tool_id;
    std::size_t target = 0;
    std::vector<CloneFragment> pcc;
    std::vector<std::size_t> matched_candidates;  // ascending fragment indices
    std::size_t matched_pcc_count = 0;
};

Prediction score_target(std::string tool_id, std::size_t target, std::vector<CloneFragment> pcc,
                        std::span<const ChangeFragment> fragments, std::span<const std::size_t> candidates);

struct GroundTruth {
    std::size_t target = 0;
    std::vector<std::size_t> ccc;  // ascending fragment indices
    bool excluded() const noexcept { return ccc.empty(); }
};

/// Union of every tool's matched candidates for one target.
GroundTruth build_ground_truth(std::size_t target, std::span<const Prediction> predictions);

struct ConfusionCounts {
    std::string tool_id;
    std::string target_id;
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t pcc_size = 0;
    std::size_t ccc_size = 0;

    std::size_t matched_pcc() const noexcept { return pcc_size - fp; }

    bool operator==(const ConfusionCounts&) const = default;
};

/// Throws InputError for excluded targets.
ConfusionCounts confusion(const Prediction& prediction, const GroundTruth& truth, std::string target_id);

/// Stable label for a target in audit output: `<system>:<older>..<newer>:<fragment id>`.
std::string target_label(const ChangeFragment& fragment);

/// Everything computed for one revision pair.
struct PairEvaluation {
    std::vector<ChangeFragment> fragments;      // canonical order: (file, range, kind, id)
    std::vector<CoChangeGroup> groups;
    std::vector<std::vector<Prediction>> predictions;  // [target][tool]
    std::vector<GroundTruth> ground_truth;      // one per target
    std::vector<ConfusionCounts> confusions;    // non-excluded targets only, ordered (target, tool)
};

/// Runs prediction, scoring, ground truth and confusion for one pair. `reports`
/// holds one report per tool, in the run's tool order.
PairEvaluation evaluate_pair(std::vector<ChangeFragment> fragments, std::span<const CloneReport> reports);

}  // namespace ccbench
