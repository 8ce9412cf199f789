#include "ccbench/cochange.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "ccbench/error.hpp"

namespace ccbench {

std::vector<CoChangeGroup> build_cochange_groups(std::span<const ChangeFragment> fragments) {
    std::vector<CoChangeGroup> groups;
    if (fragments.size() < 2) return groups;
    groups.reserve(fragments.size());
    for (std::size_t t = 0; t < fragments.size(); ++t) {
        CoChangeGroup group;
        group.revisions = fragments[t].revisions;
        group.target = t;
        group.candidates.reserve(fragments.size() - 1);
        for (std::size_t c = 0; c < fragments.size(); ++c) {
            if (c != t) group.candidates.push_back(c);
        }
        groups.push_back(std::move(group));
    }
    return groups;
}

bool touches(const ChangeFragment& change, const FileAnchor& anchor) noexcept {
    return !change.synthetic() && intersects(change.anchor, anchor);
}

CloneIndex::CloneIndex(const CloneReport& report) : report_(&report) {
    for (std::size_t ci = 0; ci < report.classes.size(); ++ci) {
        for (const auto& fragment : report.classes[ci].fragments) {
            auto& file = files_[fragment.anchor.file_path];
            file.entries.push_back({fragment.anchor.range, ci});
            file.max_length = std::max(file.max_length, fragment.anchor.range.length());
        }
    }
    for (auto& [path, file] : files_) {
        std::sort(file.entries.begin(), file.entries.end(), [](const Entry& a, const Entry& b) {
            return std::tie(a.range.start_line, a.range.end_line, a.class_index) <
                   std::tie(b.range.start_line, b.range.end_line, b.class_index);
        });
    }
}

std::vector<std::size_t> CloneIndex::classes_intersecting(const FileAnchor& anchor) const {
    std::vector<std::size_t> hits;
    auto file = files_.find(anchor.file_path);
    if (file == files_.end()) return hits;
    const auto& entries = file->second.entries;
    // An entry can only overlap if it starts within max_length-1 lines before the query.
    const LineNo lowest_start = anchor.range.start_line - file->second.max_length + 1;
    auto it = std::lower_bound(entries.begin(), entries.end(), lowest_start,
                               [](const Entry& e, LineNo value) { return e.range.start_line < value; });
    for (; it != entries.end() && it->range.start_line <= anchor.range.end_line; ++it) {
        if (overlaps(it->range, anchor.range)) hits.push_back(it->class_index);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return hits;
}

std::vector<CloneFragment> predict_cochange(const ChangeFragment& target, const CloneIndex& index) {
    std::vector<CloneFragment> pcc;
    if (target.synthetic()) return pcc;
    std::set<FileAnchor> seen;
    for (std::size_t ci : index.classes_intersecting(target.anchor)) {
        for (const auto& fragment : index.report().classes[ci].fragments) {
            if (intersects(fragment.anchor, target.anchor)) continue;
            if (seen.insert(fragment.anchor).second) pcc.push_back(fragment);
        }
    }
    std::sort(pcc.begin(), pcc.end(),
              [](const CloneFragment& a, const CloneFragment& b) { return a.anchor < b.anchor; });
    return pcc;
}

std::vector<CloneFragment> predict_cochange(const ChangeFragment& target, const CloneReport& report) {
    return predict_cochange(target, CloneIndex(report));
}

Prediction score_target(std::string tool_id, std::size_t target, std::vector<CloneFragment> pcc,
                        std::span<const ChangeFragment> fragments, std::span<const std::size_t> candidates) {
    Prediction prediction;
    prediction.tool_id = std::move(tool_id);
    prediction.target = target;

    std::vector<char> candidate_hit(candidates.size(), 0);
    for (const auto& predicted : pcc) {
        bool hit = false;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            if (touches(fragments[candidates[k]], predicted.anchor)) {
                candidate_hit[k] = 1;
                hit = true;
            }
        }
        if (hit) ++prediction.matched_pcc_count;
    }
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (candidate_hit[k]) prediction.matched_candidates.push_back(candidates[k]);
    }
    std::sort(prediction.matched_candidates.begin(), prediction.matched_candidates.end());
    prediction.pcc = std::move(pcc);
    return prediction;
}

GroundTruth build_ground_truth(std::size_t target, std::span<const Prediction> predictions) {
    GroundTruth truth;
    truth.target = target;
    for (const auto& prediction : predictions) {
        if (prediction.target != target) {
            throw InvariantError(fmt::format("prediction for target {} merged into ground truth of target {}",
                                             prediction.target, target));
        }
        std::vector<std::size_t> merged;
        std::set_union(truth.ccc.begin(), truth.ccc.end(), prediction.matched_candidates.begin(),
                       prediction.matched_candidates.end(), std::back_inserter(merged));
        truth.ccc = std::move(merged);
    }
    return truth;
}

ConfusionCounts confusion(const Prediction& prediction, const GroundTruth& truth, std::string target_id) {
    if (truth.excluded()) {
        throw InputError(fmt::format("confusion requested for excluded target '{}'", target_id));
    }
    std::vector<std::size_t> common;
    std::set_intersection(prediction.matched_candidates.begin(), prediction.matched_candidates.end(),
                          truth.ccc.begin(), truth.ccc.end(), std::back_inserter(common));
    if (common.size() != prediction.matched_candidates.size()) {
        throw InvariantError(fmt::format("tool '{}' matched candidates outside the ground truth of '{}'",
                                         prediction.tool_id, target_id));
    }
    ConfusionCounts counts;
    counts.tool_id = prediction.tool_id;
    counts.target_id = std::move(target_id);
    counts.tp = common.size();
    counts.pcc_size = prediction.pcc.size();
    counts.fp = prediction.pcc.size() - prediction.matched_pcc_count;
    counts.ccc_size = truth.ccc.size();
    counts.fn = counts.ccc_size - counts.tp;
    return counts;
}

std::string target_label(const ChangeFragment& fragment) {
    return fmt::format("{}:{}..{}:{}", fragment.system_id, fragment.revisions.older, fragment.revisions.newer,
                       fragment.fragment_id);
}

PairEvaluation evaluate_pair(std::vector<ChangeFragment> fragments, std::span<const CloneReport> reports) {
    PairEvaluation eval;
    std::sort(fragments.begin(), fragments.end(), [](const ChangeFragment& a, const ChangeFragment& b) {
        return std::tie(a.anchor, a.kind, a.fragment_id) < std::tie(b.anchor, b.kind, b.fragment_id);
    });
    eval.fragments = std::move(fragments);
    eval.groups = build_cochange_groups(eval.fragments);
    if (eval.groups.empty()) return eval;

    std::vector<CloneIndex> indexes;
    indexes.reserve(reports.size());
    for (const auto& report : reports) indexes.emplace_back(report);

    eval.predictions.resize(eval.groups.size());
    for (const auto& group : eval.groups) {
        auto& row = eval.predictions[group.target];
        row.reserve(reports.size());
        for (std::size_t t = 0; t < reports.size(); ++t) {
            auto pcc = predict_cochange(eval.fragments[group.target], indexes[t]);
            row.push_back(score_target(reports[t].tool_id, group.target, std::move(pcc), eval.fragments,
                                       group.candidates));
        }
        eval.ground_truth.push_back(build_ground_truth(group.target, row));
    }
    for (const auto& truth : eval.ground_truth) {
        if (truth.excluded()) continue;
        const std::string label = target_label(eval.fragments[truth.target]);
        for (const auto& prediction : eval.predictions[truth.target]) {
            eval.confusions.push_back(confusion(prediction, truth, label));
        }
    }
    return eval;
}

}  // namespace ccbench
