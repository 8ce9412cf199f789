#pragma once

// Line diffing between adjacent revision snapshots.
//
// diff_lines() computes a minimal (LCS-optimal) edit script and groups it into
// hunks the way classic `diff` normal format does: zero context lines, one
// hunk per maximal run of changed lines, kinds `c` / `d` / `a`.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccbench/core_model.hpp"

namespace ccbench {

using Lines = std::vector<std::string>;

/// A hunk in normal-format coordinates. A side with count 0 is a zero-length
/// anchor: `start` is then the line after which the edit applies (possibly 0).
struct EditHunk {
    enum class Kind { change, remove, add };

    Kind kind = Kind::change;
    LineNo old_start = 0;
    LineNo old_count = 0;
    LineNo new_start = 0;
    LineNo new_count = 0;

    std::optional<LineRange> old_range() const;
    std::optional<LineRange> new_range() const;

    bool operator==(const EditHunk&) const = default;
};

/// Splits on '\n' only. A trailing newline does not produce an empty last
/// line; a missing final newline is tolerated. '\r' stays in the content.
Lines split_lines(std::string_view text);

std::vector<EditHunk> diff_lines(std::span<const std::string> older, std::span<const std::string> newer);

/// Rebuilds the newer sequence from `older`, the hunks, and the newer side's
/// text for inserted lines. Throws InvariantError if the hunks are
/// inconsistent with either side.
Lines apply_hunks(std::span<const std::string> older, std::span<const std::string> newer,
                  std::span<const EditHunk> hunks);

/// Classic normal-format rendering (`2,3c2`, `< old`, `---`, `> new`).
std::string format_normal_diff(std::span<const std::string> older, std::span<const std::string> newer,
                               std::span<const EditHunk> hunks);

/// Unified rendering of one file pair with `context` lines around changes.
std::string format_unified_diff(const std::string& path, std::span<const std::string> older,
                                std::span<const std::string> newer, std::span<const EditHunk> hunks,
                                int context = 3);

struct RevisionSnapshot {
    std::string system_id;
    std::string revision_id;
    std::map<std::string, Lines, std::less<>> files;

    FileLengthTable file_lengths() const;
};

/// Reads every regular file below `root` whose extension is in `extensions`
/// (all files when empty). Unreadable or binary files are skipped with a
/// logged warning.
RevisionSnapshot load_snapshot(const std::filesystem::path& root, std::string system_id, std::string revision_id,
                               std::span<const std::string> extensions = {});

bool has_extension(std::string_view path, std::span<const std::string> extensions) noexcept;

/// One fragment per hunk for every file present in both snapshots, in older
/// coordinates. Fragment ids are `<path>#<hunk ordinal>` (1-based per file).
/// Files only present on one side contribute nothing.
std::vector<ChangeFragment> extract_change_fragments(const RevisionSnapshot& older, const RevisionSnapshot& newer,
                                                     std::span<const std::string> extensions);

/// Parses a unified diff. Context lines are stripped: each maximal run of
/// '-'/'+' lines becomes one fragment. Created or deleted files (/dev/null)
/// are skipped. Throws ParseError naming the line number on malformed input.
std::vector<ChangeFragment> import_unified_diff(std::string_view text, const std::string& system_id = {},
                                                const RevisionPair& revisions = {});

}  // namespace ccbench
