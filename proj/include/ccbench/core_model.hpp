#pragma once

// Shared domain types: line ranges, file anchors, change fragments and clone
// reports, plus the intersection algebra the rest of the harness builds on.
//
// Line coordinates are 1-based and inclusive everywhere.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ccbench {

using LineNo = std::int64_t;

struct LineRange {
    LineNo start_line = 1;
    LineNo end_line = 1;

    /// Throws InputError unless 1 <= start <= end.
    static LineRange make(LineNo start, LineNo end);

    bool valid() const noexcept { return start_line >= 1 && end_line >= start_line; }
    LineNo length() const noexcept { return end_line - start_line + 1; }
    bool contains(LineNo line) const noexcept { return line >= start_line && line <= end_line; }

    auto operator<=>(const LineRange&) const = default;
};

/// True iff the two ranges share at least one line.
constexpr bool overlaps(const LineRange& a, const LineRange& b) noexcept {
    return std::max(a.start_line, b.start_line) <= std::min(a.end_line, b.end_line);
}

struct FileAnchor {
    std::string file_path;
    LineRange range;

    auto operator<=>(const FileAnchor&) const = default;
};

/// Same file and at least one common line. Full and partial overlaps both count.
bool intersects(const FileAnchor& a, const FileAnchor& b) noexcept;

/// Normalizes a relative path: '\' becomes '/', empty and '.' segments are
/// dropped, 'x/..' pairs collapse. Throws InputError for empty results,
/// absolute paths and paths escaping their root.
std::string normalize_path(std::string_view raw);

bool is_normalized_path(std::string_view path) noexcept;

enum class ChangeKind { modify, remove, insert_anchor };

std::string_view to_string(ChangeKind kind) noexcept;
ChangeKind change_kind_from_string(std::string_view text);

struct RevisionPair {
    std::string older;
    std::string newer;

    auto operator<=>(const RevisionPair&) const = default;
};

/// One contiguous changed range in one file, in OLDER-revision coordinates.
/// Insert anchors mark pure insertions: a one-line synthetic anchor that never
/// intersects anything.
struct ChangeFragment {
    std::string system_id;
    RevisionPair revisions;
    FileAnchor anchor;
    ChangeKind kind = ChangeKind::modify;
    std::string fragment_id;

    bool synthetic() const noexcept { return kind == ChangeKind::insert_anchor; }

    bool operator==(const ChangeFragment&) const = default;
};

enum class CloneType { T1, T2, T3 };
enum class Processing { text, token, pattern };

std::string_view to_string(CloneType type) noexcept;
std::string_view to_string(Processing processing) noexcept;
CloneType clone_type_from_string(std::string_view text);
Processing processing_from_string(std::string_view text);

struct ToolMeta {
    CloneType clone_type = CloneType::T3;
    Processing processing = Processing::text;

    bool operator==(const ToolMeta&) const = default;
};

struct CloneFragment {
    FileAnchor anchor;
    std::size_t fragment_index = 0;

    bool operator==(const CloneFragment&) const = default;
};

struct CloneClass {
    std::string class_id;
    std::vector<CloneFragment> fragments;

    bool operator==(const CloneClass&) const = default;
};

struct CloneReport {
    std::string tool_id;
    ToolMeta tool_meta;
    std::string system_id;
    std::string revision_id;
    std::vector<CloneClass> classes;

    std::size_t fragment_count() const noexcept;

    bool operator==(const CloneReport&) const = default;
};

enum class Severity { warning, error };

struct Finding {
    Severity severity = Severity::warning;
    std::string location;
    std::string message;
};

std::string format_finding(const Finding& finding);

/// Line counts of the files in a revision snapshot, keyed by normalized path.
using FileLengthTable = std::map<std::string, std::size_t, std::less<>>;

struct ValidationResult {
    std::vector<Finding> findings;
    CloneReport normalized;

    bool has_errors() const noexcept;
};

/// Checks a report against the type invariants and (optionally) a snapshot.
/// The input is left untouched; `normalized` drops malformed fragments and
/// classes, deduplicates fragments within a class, and clips ranges that run
/// past the end of their file.
ValidationResult validate_report(const CloneReport& report, const FileLengthTable* snapshot = nullptr);

}  // namespace ccbench
