#include "ccbench/diff.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "ccbench/error.hpp"

namespace ccbench {

std::optional<LineRange> EditHunk::old_range() const {
    if (old_count == 0) return std::nullopt;
    return LineRange{old_start, old_start + old_count - 1};
}

std::optional<LineRange> EditHunk::new_range() const {
    if (new_count == 0) return std::nullopt;
    return LineRange{new_start, new_start + new_count - 1};
}

Lines split_lines(std::string_view text) {
    Lines lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('\n', pos);
        if (next == std::string_view::npos) {
            lines.emplace_back(text.substr(pos));
            break;
        }
        lines.emplace_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return lines;
}

namespace {

// Linear-space Myers diff (middle-snake bisection). Marks removed old lines
// and added new lines; the unmarked lines form a longest common subsequence.
class MyersDiff {
public:
    MyersDiff(std::vector<int> a, std::vector<int> b)
        : a_(std::move(a)), b_(std::move(b)), removed_(a_.size(), 0), added_(b_.size(), 0) {}

    void run() { compare(0, 0, static_cast<long>(a_.size()), static_cast<long>(b_.size())); }

    const std::vector<char>& removed() const { return removed_; }
    const std::vector<char>& added() const { return added_; }

private:
    struct Snake {
        long x0, y0, x1, y1;
    };

    bool eq(long x, long y) const { return a_[static_cast<std::size_t>(x)] == b_[static_cast<std::size_t>(y)]; }

    void compare(long left, long top, long right, long bottom) {
        while (left < right && top < bottom && eq(left, top)) {
            ++left;
            ++top;
        }
        while (left < right && top < bottom && eq(right - 1, bottom - 1)) {
            --right;
            --bottom;
        }
        if (left == right) {
            for (long y = top; y < bottom; ++y) added_[static_cast<std::size_t>(y)] = 1;
            return;
        }
        if (top == bottom) {
            for (long x = left; x < right; ++x) removed_[static_cast<std::size_t>(x)] = 1;
            return;
        }
        const Snake s = middle_snake(left, top, right, bottom);
        compare(left, top, s.x0, s.y0);
        compare(s.x0, s.y0, s.x1, s.y1);
        compare(s.x1, s.y1, right, bottom);
    }

    Snake middle_snake(long left, long top, long right, long bottom) {
        const long width = right - left;
        const long height = bottom - top;
        const long delta = width - height;
        const bool odd = (delta % 2) != 0;
        const long max_d = (width + height + 1) / 2;
        const long offset = max_d + 1;
        std::vector<long> vf(static_cast<std::size_t>(2 * max_d + 3), 0);
        std::vector<long> vb(static_cast<std::size_t>(2 * max_d + 3), 0);
        auto f = [&](long k) -> long& { return vf[static_cast<std::size_t>(k + offset)]; };
        auto b = [&](long c) -> long& { return vb[static_cast<std::size_t>(c + offset)]; };
        f(1) = left;
        b(1) = bottom;

        for (long d = 0; d <= max_d; ++d) {
            for (long k = -d; k <= d; k += 2) {
                const long c = k - delta;
                long x;
                long px;
                if (k == -d || (k != d && f(k - 1) < f(k + 1))) {
                    px = x = f(k + 1);
                } else {
                    px = f(k - 1);
                    x = px + 1;
                }
                long y = top + (x - left) - k;
                const long py = (d == 0 || x != px) ? y : y - 1;
                while (x < right && y < bottom && eq(x, y)) {
                    ++x;
                    ++y;
                }
                f(k) = x;
                if (odd && c >= -(d - 1) && c <= d - 1 && y >= b(c)) return {px, py, x, y};
            }
            for (long c = -d; c <= d; c += 2) {
                const long k = c + delta;
                long y;
                long py;
                if (c == -d || (c != d && b(c - 1) > b(c + 1))) {
                    py = y = b(c + 1);
                } else {
                    py = b(c - 1);
                    y = py - 1;
                }
                long x = left + (y - top) + k;
                const long px = (d == 0 || y != py) ? x : x + 1;
                while (x > left && y > top && eq(x - 1, y - 1)) {
                    --x;
                    --y;
                }
                b(c) = y;
                if (!odd && k >= -d && k <= d && x <= f(k)) return {x, y, px, py};
            }
        }
        throw InvariantError("diff: middle snake not found");
    }

    std::vector<int> a_;
    std::vector<int> b_;
    std::vector<char> removed_;
    std::vector<char> added_;
};

}  // namespace

std::vector<EditHunk> diff_lines(std::span<const std::string> older, std::span<const std::string> newer) {
    // Compare integer ids instead of strings.
    std::unordered_map<std::string_view, int> ids;
    auto intern = [&](std::span<const std::string> lines) {
        std::vector<int> out;
        out.reserve(lines.size());
        for (const auto& line : lines) {
            auto [it, inserted] = ids.try_emplace(line, static_cast<int>(ids.size()));
            out.push_back(it->second);
        }
        return out;
    };
    std::vector<int> a = intern(older);
    std::vector<int> b = intern(newer);

    MyersDiff myers(std::move(a), std::move(b));
    myers.run();
    const auto& removed = myers.removed();
    const auto& added = myers.added();

    std::vector<EditHunk> hunks;
    const std::size_t n = older.size();
    const std::size_t m = newer.size();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < n || j < m) {
        if (i < n && j < m && !removed[i] && !added[j]) {
            ++i;
            ++j;
            continue;
        }
        const std::size_t i0 = i;
        const std::size_t j0 = j;
        while (i < n && removed[i]) ++i;
        while (j < m && added[j]) ++j;
        if (i == i0 && j == j0) throw InvariantError("diff: edit script out of sync");

        EditHunk hunk;
        hunk.old_count = static_cast<LineNo>(i - i0);
        hunk.new_count = static_cast<LineNo>(j - j0);
        hunk.old_start = static_cast<LineNo>(hunk.old_count > 0 ? i0 + 1 : i0);
        hunk.new_start = static_cast<LineNo>(hunk.new_count > 0 ? j0 + 1 : j0);
        if (hunk.old_count > 0 && hunk.new_count > 0) {
            hunk.kind = EditHunk::Kind::change;
        } else if (hunk.old_count > 0) {
            hunk.kind = EditHunk::Kind::remove;
        } else {
            hunk.kind = EditHunk::Kind::add;
        }
        hunks.push_back(hunk);
    }
    return hunks;
}

namespace {

// 0-based index of the first line a hunk side covers (or the insertion point).
std::size_t first_index(LineNo start, LineNo count) {
    return static_cast<std::size_t>(count > 0 ? start - 1 : start);
}

}  // namespace

Lines apply_hunks(std::span<const std::string> older, std::span<const std::string> newer,
                  std::span<const EditHunk> hunks) {
    Lines out;
    out.reserve(newer.size());
    std::size_t pos = 0;
    for (const auto& hunk : hunks) {
        const std::size_t old_first = first_index(hunk.old_start, hunk.old_count);
        const std::size_t new_first = first_index(hunk.new_start, hunk.new_count);
        if (old_first < pos || old_first + static_cast<std::size_t>(hunk.old_count) > older.size() ||
            new_first + static_cast<std::size_t>(hunk.new_count) > newer.size()) {
            throw InvariantError("apply_hunks: hunk out of range");
        }
        out.insert(out.end(), older.begin() + static_cast<std::ptrdiff_t>(pos),
                   older.begin() + static_cast<std::ptrdiff_t>(old_first));
        if (out.size() != new_first) throw InvariantError("apply_hunks: hunk positions disagree");
        out.insert(out.end(), newer.begin() + static_cast<std::ptrdiff_t>(new_first),
                   newer.begin() + static_cast<std::ptrdiff_t>(new_first + static_cast<std::size_t>(hunk.new_count)));
        pos = old_first + static_cast<std::size_t>(hunk.old_count);
    }
    out.insert(out.end(), older.begin() + static_cast<std::ptrdiff_t>(pos), older.end());
    return out;
}

namespace {

std::string normal_range(LineNo start, LineNo count) {
    if (count <= 1) return std::to_string(start);
    return fmt::format("{},{}", start, start + count - 1);
}

}  // namespace

std::string format_normal_diff(std::span<const std::string> older, std::span<const std::string> newer,
                               std::span<const EditHunk> hunks) {
    std::string out;
    for (const auto& h : hunks) {
        const char op = h.kind == EditHunk::Kind::change ? 'c' : h.kind == EditHunk::Kind::remove ? 'd' : 'a';
        out += normal_range(h.old_start, h.old_count);
        out += op;
        out += normal_range(h.new_start, h.new_count);
        out += '\n';
        for (LineNo k = 0; k < h.old_count; ++k) {
            out += "< " + older[static_cast<std::size_t>(h.old_start - 1 + k)] + "\n";
        }
        if (h.kind == EditHunk::Kind::change) out += "---\n";
        for (LineNo k = 0; k < h.new_count; ++k) {
            out += "> " + newer[static_cast<std::size_t>(h.new_start - 1 + k)] + "\n";
        }
    }
    return out;
}

std::string format_unified_diff(const std::string& path, std::span<const std::string> older,
                                std::span<const std::string> newer, std::span<const EditHunk> hunks,
                                int context) {
    if (hunks.empty()) return {};
    const auto ctx = static_cast<std::size_t>(std::max(context, 0));
    std::string out = fmt::format("--- a/{}\n+++ b/{}\n", path, path);

    std::size_t g = 0;
    while (g < hunks.size()) {
        // Group hunks whose unchanged gap is at most 2*context lines.
        std::size_t last = g;
        while (last + 1 < hunks.size()) {
            const auto& cur = hunks[last];
            const auto& nxt = hunks[last + 1];
            const std::size_t gap = first_index(nxt.old_start, nxt.old_count) -
                                    (first_index(cur.old_start, cur.old_count) + static_cast<std::size_t>(cur.old_count));
            if (gap > 2 * ctx) break;
            ++last;
        }
        const auto& h0 = hunks[g];
        const auto& h1 = hunks[last];
        const std::size_t old_begin = first_index(h0.old_start, h0.old_count) -
                                      std::min(ctx, first_index(h0.old_start, h0.old_count));
        const std::size_t new_begin = first_index(h0.new_start, h0.new_count) -
                                      std::min(ctx, first_index(h0.new_start, h0.new_count));
        const std::size_t old_end = std::min(
            older.size(), first_index(h1.old_start, h1.old_count) + static_cast<std::size_t>(h1.old_count) + ctx);
        const std::size_t new_end = std::min(
            newer.size(), first_index(h1.new_start, h1.new_count) + static_cast<std::size_t>(h1.new_count) + ctx);
        const std::size_t old_len = old_end - old_begin;
        const std::size_t new_len = new_end - new_begin;
        out += fmt::format("@@ -{},{} +{},{} @@\n", old_len > 0 ? old_begin + 1 : old_begin, old_len,
                           new_len > 0 ? new_begin + 1 : new_begin, new_len);

        std::size_t pos = old_begin;
        for (std::size_t k = g; k <= last; ++k) {
            const auto& h = hunks[k];
            const std::size_t of = first_index(h.old_start, h.old_count);
            const std::size_t nf = first_index(h.new_start, h.new_count);
            for (; pos < of; ++pos) out += " " + older[pos] + "\n";
            for (LineNo t = 0; t < h.old_count; ++t) out += "-" + older[of + static_cast<std::size_t>(t)] + "\n";
            for (LineNo t = 0; t < h.new_count; ++t) out += "+" + newer[nf + static_cast<std::size_t>(t)] + "\n";
            pos = of + static_cast<std::size_t>(h.old_count);
        }
        for (; pos < old_end; ++pos) out += " " + older[pos] + "\n";
        g = last + 1;
    }
    return out;
}

FileLengthTable RevisionSnapshot::file_lengths() const {
    FileLengthTable table;
    for (const auto& [path, lines] : files) table.emplace(path, lines.size());
    return table;
}

bool has_extension(std::string_view path, std::span<const std::string> extensions) noexcept {
    if (extensions.empty()) return true;
    for (const auto& ext : extensions) {
        if (path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext) return true;
    }
    return false;
}

RevisionSnapshot load_snapshot(const std::filesystem::path& root, std::string system_id, std::string revision_id,
                               std::span<const std::string> extensions) {
    namespace fs = std::filesystem;
    RevisionSnapshot snapshot;
    snapshot.system_id = std::move(system_id);
    snapshot.revision_id = std::move(revision_id);
    if (!fs::is_directory(root)) throw InputError(fmt::format("revision directory '{}' not found", root.string()));

    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        std::string rel = fs::relative(entry.path(), root).generic_string();
        if (!has_extension(rel, extensions)) continue;
        std::ifstream in(entry.path(), std::ios::binary);
        if (!in) {
            spdlog::warn("skipping unreadable file {}", entry.path().string());
            continue;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        if (text.find('\0') != std::string::npos) {
            spdlog::warn("skipping binary file {}", entry.path().string());
            continue;
        }
        snapshot.files.emplace(normalize_path(rel), split_lines(text));
    }
    return snapshot;
}

std::vector<ChangeFragment> extract_change_fragments(const RevisionSnapshot& older, const RevisionSnapshot& newer,
                                                     std::span<const std::string> extensions) {
    std::vector<ChangeFragment> fragments;
    const RevisionPair pair{older.revision_id, newer.revision_id};
    for (const auto& [path, old_lines] : older.files) {
        if (!has_extension(path, extensions)) continue;
        auto other = newer.files.find(path);
        if (other == newer.files.end()) continue;

        const auto hunks = diff_lines(old_lines, other->second);
        int ordinal = 0;
        for (const auto& hunk : hunks) {
            ChangeFragment fragment;
            fragment.system_id = older.system_id;
            fragment.revisions = pair;
            fragment.anchor.file_path = path;
            fragment.fragment_id = fmt::format("{}#{}", path, ++ordinal);
            if (auto range = hunk.old_range()) {
                fragment.anchor.range = *range;
                fragment.kind = hunk.kind == EditHunk::Kind::change ? ChangeKind::modify : ChangeKind::remove;
            } else {
                const LineNo line = std::max<LineNo>(hunk.old_start, 1);
                fragment.anchor.range = {line, line};
                fragment.kind = ChangeKind::insert_anchor;
            }
            fragments.push_back(std::move(fragment));
        }
    }
    return fragments;
}

namespace {

struct HunkHeader {
    LineNo old_start = 0;
    LineNo old_count = 1;
    LineNo new_start = 0;
    LineNo new_count = 1;
};

bool parse_number(std::string_view text, LineNo& value) {
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && ptr == text.data() + text.size() && value >= 0;
}

bool parse_side(std::string_view text, char sign, LineNo& start, LineNo& count) {
    if (text.empty() || text.front() != sign) return false;
    text.remove_prefix(1);
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        count = 1;
        return parse_number(text, start);
    }
    return parse_number(text.substr(0, comma), start) && parse_number(text.substr(comma + 1), count);
}

std::optional<HunkHeader> parse_hunk_header(std::string_view line) {
    // @@ -a,b +c,d @@ optional section heading
    if (!line.starts_with("@@ ")) return std::nullopt;
    line.remove_prefix(3);
    const auto space = line.find(' ');
    if (space == std::string_view::npos) return std::nullopt;
    const auto rest = line.substr(space + 1);
    const auto close = rest.find(" @@");
    if (close == std::string_view::npos) return std::nullopt;
    HunkHeader header;
    if (!parse_side(line.substr(0, space), '-', header.old_start, header.old_count)) return std::nullopt;
    if (!parse_side(rest.substr(0, close), '+', header.new_start, header.new_count)) return std::nullopt;
    return header;
}

std::string header_path(std::string_view line) {
    line.remove_prefix(4);
    const auto tab = line.find('\t');
    if (tab != std::string_view::npos) line = line.substr(0, tab);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    return std::string(line);
}

}  // namespace

std::vector<ChangeFragment> import_unified_diff(std::string_view text, const std::string& system_id,
                                                const RevisionPair& revisions) {
    std::vector<ChangeFragment> fragments;
    const Lines lines = split_lines(text);

    std::string old_path;
    std::string new_path;
    std::string current;  // normalized path of the file being read; empty = skip
    std::map<std::string, int, std::less<>> ordinals;

    bool in_hunk = false;
    LineNo old_left = 0;
    LineNo new_left = 0;
    LineNo old_cursor = 0;  // next old line number

    // Current run of changed lines.
    LineNo run_first = 0;
    LineNo run_last = 0;
    LineNo run_anchor = 0;
    bool run_added = false;
    bool run_open = false;

    auto flush = [&] {
        if (!run_open) return;
        run_open = false;
        if (current.empty()) return;
        ChangeFragment fragment;
        fragment.system_id = system_id;
        fragment.revisions = revisions;
        fragment.anchor.file_path = current;
        fragment.fragment_id = fmt::format("{}#{}", current, ++ordinals[current]);
        if (run_first > 0) {
            fragment.anchor.range = {run_first, run_last};
            fragment.kind = run_added ? ChangeKind::modify : ChangeKind::remove;
        } else {
            const LineNo line = std::max<LineNo>(run_anchor, 1);
            fragment.anchor.range = {line, line};
            fragment.kind = ChangeKind::insert_anchor;
        }
        fragments.push_back(std::move(fragment));
    };
    auto open_run = [&] {
        if (run_open) return;
        run_open = true;
        run_first = 0;
        run_last = 0;
        run_added = false;
        run_anchor = old_cursor - 1;
    };

    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const std::string_view line = lines[idx];
        const std::string where = fmt::format("line {}", idx + 1);

        if (in_hunk) {
            if (line.starts_with("\\")) continue;  // "\ No newline at end of file"
            const char tag = line.empty() ? ' ' : line.front();
            if (tag == ' ') {
                if (old_left == 0 || new_left == 0) throw ParseError(where, "context line exceeds hunk line counts");
                flush();
                --old_left;
                --new_left;
                ++old_cursor;
            } else if (tag == '-') {
                if (old_left == 0) throw ParseError(where, "removed line exceeds hunk old line count");
                open_run();
                if (run_first == 0) run_first = old_cursor;
                run_last = old_cursor;
                --old_left;
                ++old_cursor;
            } else if (tag == '+') {
                if (new_left == 0) throw ParseError(where, "added line exceeds hunk new line count");
                open_run();
                run_added = true;
                --new_left;
            } else {
                throw ParseError(where, "hunk body shorter than its header's line counts");
            }
            if (old_left == 0 && new_left == 0) {
                flush();
                in_hunk = false;
            }
            continue;
        }

        if (line.starts_with("--- ")) {
            old_path = header_path(line);
            new_path.clear();
        } else if (line.starts_with("+++ ")) {
            if (old_path.empty()) throw ParseError(where, "'+++' header without preceding '---' header");
            new_path = header_path(line);
            current.clear();
            if (old_path != "/dev/null" && new_path != "/dev/null") {
                std::string path = old_path;
                if (path.starts_with("a/") && new_path.starts_with("b/")) path = path.substr(2);
                try {
                    current = normalize_path(path);
                } catch (const InputError& e) {
                    throw ParseError(where, e.what());
                }
            }
        } else if (line.starts_with("@@")) {
            if (new_path.empty()) throw ParseError(where, "hunk header before file headers");
            auto header = parse_hunk_header(line);
            if (!header) throw ParseError(where, fmt::format("malformed hunk header '{}'", line));
            in_hunk = header->old_count > 0 || header->new_count > 0;
            old_left = header->old_count;
            new_left = header->new_count;
            old_cursor = header->old_count > 0 ? header->old_start : header->old_start + 1;
        }
        // Anything else between files (diff --git, index, mode lines) is ignored.
    }
    if (in_hunk) throw ParseError(fmt::format("line {}", lines.size()), "document ends inside a hunk");
    return fragments;
}

}  // namespace ccbench
