#include <gtest/gtest.h>

#include <random>

#include "ccbench/core_model.hpp"
#include "ccbench/error.hpp"
#include "oracles.hpp"

using namespace ccbench;

namespace {

FileAnchor anchor(std::string file, LineNo start, LineNo end) { return {std::move(file), {start, end}}; }

}  // namespace

TEST(LineRange, MakeRejectsBadBounds) {
    EXPECT_THROW(LineRange::make(0, 3), InputError);
    EXPECT_THROW(LineRange::make(5, 4), InputError);
    EXPECT_EQ(LineRange::make(4, 4).length(), 1);
}

TEST(Intersects, MatchesLineEnumeration) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<LineNo> start(1, 10000);
    std::uniform_int_distribution<LineNo> len(0, 40);
    std::uniform_int_distribution<int> file(0, 1);
    for (int i = 0; i < 3000; ++i) {
        auto s1 = start(rng);
        auto s2 = i % 2 ? s1 + len(rng) - 20 : start(rng);  // half the pairs are close together
        s2 = std::clamp<LineNo>(s2, 1, 10000);
        const auto a = anchor(file(rng) ? "x.c" : "y.c", s1, std::min<LineNo>(s1 + len(rng), 10000));
        const auto b = anchor(file(rng) ? "x.c" : "y.c", s2, std::min<LineNo>(s2 + len(rng), 10000));
        ASSERT_EQ(intersects(a, b), oracle::share_line(a, b))
            << a.file_path << ":" << a.range.start_line << "-" << a.range.end_line << " vs " << b.file_path << ":"
            << b.range.start_line << "-" << b.range.end_line;
    }
}

TEST(Intersects, SymmetricReflexiveAndContainment) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<LineNo> start(1, 60);
    std::uniform_int_distribution<LineNo> len(0, 10);
    auto draw = [&] {
        const auto s = start(rng);
        return anchor("f.c", s, s + len(rng));
    };
    for (int i = 0; i < 2000; ++i) {
        const auto a = draw(), b = draw(), c = draw();
        EXPECT_TRUE(intersects(a, a));
        EXPECT_EQ(intersects(a, b), intersects(b, a));
        const bool b_in_c = c.range.start_line <= b.range.start_line && b.range.end_line <= c.range.end_line;
        if (intersects(a, b) && b_in_c) EXPECT_TRUE(intersects(a, c));
    }
}

TEST(Intersects, DifferentFilesNeverIntersect) {
    EXPECT_FALSE(intersects(anchor("a.c", 1, 10), anchor("b.c", 1, 10)));
    EXPECT_TRUE(intersects(anchor("a.c", 1, 10), anchor("a.c", 10, 12)));
    EXPECT_FALSE(intersects(anchor("a.c", 1, 10), anchor("a.c", 11, 12)));
}

TEST(NormalizePath, CollapsesSegments) {
    EXPECT_EQ(normalize_path("src\\a\\b.c"), "src/a/b.c");
    EXPECT_EQ(normalize_path("./src//x/../b.c"), "src/b.c");
    EXPECT_TRUE(is_normalized_path("src/b.c"));
    EXPECT_FALSE(is_normalized_path("./src/b.c"));
    EXPECT_THROW(normalize_path("/abs/b.c"), InputError);
    EXPECT_THROW(normalize_path("../b.c"), InputError);
    EXPECT_THROW(normalize_path("."), InputError);
}

TEST(EnumStrings, RoundTrip) {
    for (auto k : {ChangeKind::modify, ChangeKind::remove, ChangeKind::insert_anchor}) {
        EXPECT_EQ(change_kind_from_string(to_string(k)), k);
    }
    for (auto t : {CloneType::T1, CloneType::T2, CloneType::T3}) EXPECT_EQ(clone_type_from_string(to_string(t)), t);
    for (auto p : {Processing::text, Processing::token, Processing::pattern}) {
        EXPECT_EQ(processing_from_string(to_string(p)), p);
    }
    EXPECT_THROW(clone_type_from_string("T4"), InputError);
}

TEST(ValidateReport, LeavesInputUntouchedAndNormalizes) {
    CloneReport report;
    report.tool_id = "t";
    report.classes.push_back({"c1", {{anchor("a.c", 1, 5), 0}, {anchor("./a.c", 1, 5), 1}, {anchor("b.c", 3, 90), 2}}});
    report.classes.push_back({"c2", {{anchor("a.c", 7, 9), 0}}});
    report.classes.push_back({"c3", {{anchor("a.c", 4, 2), 0}, {anchor("b.c", 1, 2), 1}}});
    report.classes.push_back({"c4", {{anchor("a.c", 50, 60), 0}, {anchor("b.c", 1, 2), 1}, {anchor("b.c", 5, 6), 2}}});
    const CloneReport before = report;

    const FileLengthTable lengths{{"a.c", 40}, {"b.c", 30}};
    const auto result = validate_report(report, &lengths);
    EXPECT_EQ(report, before);
    EXPECT_TRUE(result.has_errors());

    // c1: duplicate after normalization removed, b.c clipped; c2/c3 dropped; c4 loses its past-end fragment.
    ASSERT_EQ(result.normalized.classes.size(), 2U);
    const auto& c1 = result.normalized.classes[0];
    ASSERT_EQ(c1.fragments.size(), 2U);
    EXPECT_EQ(c1.fragments[1].anchor, anchor("b.c", 3, 30));
    EXPECT_EQ(result.normalized.classes[1].fragments.size(), 2U);
    for (const auto& cls : result.normalized.classes) {
        std::set<FileAnchor> seen;
        for (const auto& f : cls.fragments) {
            EXPECT_TRUE(f.anchor.range.valid());
            EXPECT_TRUE(is_normalized_path(f.anchor.file_path));
            EXPECT_TRUE(seen.insert(f.anchor).second);
        }
    }
}

TEST(ValidateReport, CleanReportHasNoFindings) {
    CloneReport report;
    report.classes.push_back({"c", {{anchor("a.c", 1, 5), 0}, {anchor("a.c", 10, 15), 1}}});
    const auto result = validate_report(report);
    EXPECT_TRUE(result.findings.empty());
    EXPECT_EQ(result.normalized.classes, report.classes);
}
