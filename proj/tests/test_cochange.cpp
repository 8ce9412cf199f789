#include <gtest/gtest.h>

#include <fmt/format.h>

#include <random>

#include "ccbench/cochange.hpp"
#include "ccbench/error.hpp"
#include "ccbench/metrics.hpp"
#include "oracles.hpp"

using namespace ccbench;

namespace {

ChangeFragment change(std::string id, std::string file, LineNo s, LineNo e, ChangeKind kind = ChangeKind::modify) {
    return {"sys", {"r1", "r2"}, {std::move(file), {s, e}}, kind, std::move(id)};
}

CloneFragment frag(std::string file, LineNo s, LineNo e) { return {{std::move(file), {s, e}}, 0}; }

struct RandomPair {
    std::vector<ChangeFragment> changes;
    std::vector<CloneReport> reports;
};

RandomPair random_pair(std::mt19937_64& rng, std::size_t n_tools) {
    auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
    RandomPair p;
    const auto n = pick(0, 40);
    for (std::int64_t i = 0; i < n; ++i) {
        const auto s = pick(1, 120);
        const auto kind = pick(0, 5) == 0 ? ChangeKind::insert_anchor : ChangeKind::modify;
        p.changes.push_back(change(fmt::format("c{}", i), pick(0, 1) ? "a.c" : "b.c", s,
                                   kind == ChangeKind::insert_anchor ? s : s + pick(0, 5), kind));
    }
    for (std::size_t t = 0; t < n_tools; ++t) {
        CloneReport r;
        r.tool_id = fmt::format("t{}", t);
        const auto k = pick(0, 12);
        for (std::int64_t c = 0; c < k; ++c) {
            CloneClass cls{fmt::format("k{}", c), {}};
            const auto size = pick(2, 5);
            for (std::int64_t m = 0; m < size; ++m) {
                const auto s = pick(1, 120);
                cls.fragments.push_back(frag(pick(0, 1) ? "a.c" : "b.c", s, s + pick(0, 10)));
            }
            r.classes.push_back(cls);
        }
        p.reports.push_back(r);
    }
    return p;
}

}  // namespace

TEST(CoChange, GroupsNeedTwoFragments) {
    const std::vector<ChangeFragment> one{change("x", "a.c", 1, 2)};
    EXPECT_TRUE(build_cochange_groups(one).empty());
    const std::vector<ChangeFragment> three{change("x", "a.c", 1, 2), change("y", "a.c", 5, 6), change("z", "b.c", 1, 1)};
    const auto groups = build_cochange_groups(three);
    ASSERT_EQ(groups.size(), 3U);
    EXPECT_EQ(groups[1].target, 1U);
    EXPECT_EQ(groups[1].candidates, (std::vector<std::size_t>{0, 2}));
}

TEST(CoChange, InsertAnchorsTouchNothing) {
    const auto ins = change("i", "a.c", 5, 5, ChangeKind::insert_anchor);
    EXPECT_FALSE(touches(ins, {"a.c", {1, 10}}));
    EXPECT_TRUE(touches(change("m", "a.c", 5, 5), {"a.c", {1, 10}}));
}

TEST(CoChange, PredictionExcludesFragmentsOnTarget) {
    CloneReport r;
    r.classes.push_back({"k", {frag("a.c", 1, 10), frag("a.c", 8, 20), frag("b.c", 1, 10), frag("b.c", 1, 10)}});
    r.classes.push_back({"j", {frag("a.c", 30, 40), frag("b.c", 50, 60)}});
    const auto pcc = predict_cochange(change("t", "a.c", 9, 9), r);
    ASSERT_EQ(pcc.size(), 1U);
    EXPECT_EQ(pcc[0].anchor, (FileAnchor{"b.c", {1, 10}}));
}

TEST(CoChange, IndexAgreesWithLinearScan) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_pair(rng, 1);
        const CloneIndex index(p.reports[0]);
        for (int q = 0; q < 20; ++q) {
            const auto s = static_cast<LineNo>(1 + rng() % 130);
            const FileAnchor probe{rng() % 2 ? "a.c" : "b.c", {s, s + static_cast<LineNo>(rng() % 15)}};
            std::vector<std::size_t> want;
            for (std::size_t c = 0; c < p.reports[0].classes.size(); ++c) {
                for (const auto& f : p.reports[0].classes[c].fragments) {
                    if (oracle::share_line(f.anchor, probe)) {
                        want.push_back(c);
                        break;
                    }
                }
            }
            ASSERT_EQ(index.classes_intersecting(probe), want);
        }
    }
}

TEST(CoChange, EvaluatePairMatchesEnumerator) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 300; ++i) {
        const auto p = random_pair(rng, 3);
        const auto want = oracle::pipeline_counts(p.changes, p.reports);
        const auto got = evaluate_pair(p.changes, p.reports);
        std::map<std::string, std::string> id_of;
        for (const auto& f : p.changes) id_of[target_label(f)] = f.fragment_id;
        ASSERT_EQ(got.confusions.size(), want.size());
        for (const auto& k : got.confusions) {
            const auto it = want.find({id_of.at(k.target_id), k.tool_id});
            ASSERT_NE(it, want.end());
            EXPECT_EQ((oracle::Counts{k.tp, k.fp, k.fn, k.pcc_size, k.ccc_size}), it->second) << k.target_id;
        }
    }
}

TEST(CoChange, CountInvariants) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        const auto p = random_pair(rng, 3);
        const auto got = evaluate_pair(p.changes, p.reports);
        for (const auto& k : got.confusions) {
            EXPECT_LE(k.tp, k.ccc_size);
            EXPECT_EQ(k.tp + k.fn, k.ccc_size);
            EXPECT_LE(k.fp, k.pcc_size);
        }
        for (std::size_t t = 0; t < got.predictions.size(); ++t) {
            for (const auto& pred : got.predictions[t]) {
                // tp <= pcc_size needs each predicted fragment to hit at most one candidate.
                std::size_t widest = 0;
                for (const auto& f : pred.pcc) {
                    EXPECT_FALSE(touches(got.fragments[t], f.anchor));
                    std::size_t hit = 0;
                    for (std::size_t c = 0; c < got.fragments.size(); ++c) {
                        hit += c != t && touches(got.fragments[c], f.anchor) ? 1 : 0;
                    }
                    widest = std::max(widest, hit);
                }
                if (widest <= 1) EXPECT_LE(pred.matched_candidates.size(), pred.pcc.size());
                EXPECT_LE(pred.matched_pcc_count, pred.pcc.size());
            }
        }
    }
}

TEST(CoChange, WideCloneFragmentCanMatchSeveralCandidates) {
    const std::vector<ChangeFragment> changes{change("t", "a.c", 1, 2), change("u", "b.c", 3, 3),
                                              change("v", "b.c", 7, 7), change("w", "b.c", 12, 12)};
    CloneReport r;
    r.tool_id = "t";
    r.classes.push_back({"k", {frag("a.c", 1, 10), frag("b.c", 1, 20)}});
    const auto eval = evaluate_pair(changes, std::vector<CloneReport>{r});
    const auto& k = eval.confusions.front();
    EXPECT_EQ(k.target_id, "sys:r1..r2:t");
    EXPECT_EQ(k.pcc_size, 1U);
    EXPECT_EQ(k.tp, 3U);
    EXPECT_EQ(k.fp, 0U);
    EXPECT_EQ(precision(k.matched_pcc(), k.pcc_size), 1.0);
}

TEST(CoChange, AddingToolIsMonotone) {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_pair(rng, 3);
        const std::vector<CloneReport> two(p.reports.begin(), p.reports.begin() + 2);
        const auto small = evaluate_pair(p.changes, two);
        const auto big = evaluate_pair(p.changes, p.reports);
        std::map<std::pair<std::string, std::string>, ConfusionCounts> after;
        for (const auto& k : big.confusions) after[{k.target_id, k.tool_id}] = k;
        for (const auto& k : small.confusions) {
            const auto it = after.find({k.target_id, k.tool_id});
            ASSERT_NE(it, after.end());
            EXPECT_GE(it->second.ccc_size, k.ccc_size);
            EXPECT_LE(recall(it->second.tp, it->second.ccc_size), recall(k.tp, k.ccc_size));
            EXPECT_EQ(precision(it->second.matched_pcc(), it->second.pcc_size), precision(k.matched_pcc(), k.pcc_size));
        }
    }
}

TEST(CoChange, ExcludedTargetsAreNotScored) {
    const std::vector<ChangeFragment> changes{change("x", "a.c", 1, 2), change("y", "a.c", 50, 60)};
    CloneReport r;
    r.tool_id = "t";
    r.classes.push_back({"k", {frag("a.c", 1, 3), frag("b.c", 1, 3)}});
    const auto eval = evaluate_pair(changes, std::vector<CloneReport>{r});
    EXPECT_TRUE(eval.confusions.empty());
    ASSERT_EQ(eval.ground_truth.size(), 2U);
    EXPECT_TRUE(eval.ground_truth[0].excluded());
    EXPECT_THROW(confusion(eval.predictions[0][0], eval.ground_truth[0], "x"), InputError);
}
