#include "ccbench/core_model.hpp"

#include <fmt/format.h>

#include <set>

#include "ccbench/error.hpp"

namespace ccbench {

LineRange LineRange::make(LineNo start, LineNo end) {
    LineRange range{start, end};
    if (!range.valid()) {
        throw InputError(fmt::format("invalid line range {}-{}", start, end));
    }
    return range;
}

bool intersects(const FileAnchor& a, const FileAnchor& b) noexcept {
    return a.file_path == b.file_path && overlaps(a.range, b.range);
}

std::string normalize_path(std::string_view raw) {
    std::string text(raw);
    for (char& c : text) {
        if (c == '\\') c = '/';
    }
    if (text.empty()) throw InputError("empty path");
    if (text.front() == '/' || (text.size() > 1 && text[1] == ':')) {
        throw InputError(fmt::format("absolute path '{}' not allowed here", raw));
    }

    std::vector<std::string> segments;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('/', pos);
        if (next == std::string::npos) next = text.size();
        std::string segment = text.substr(pos, next - pos);
        if (segment == "..") {
            if (segments.empty()) throw InputError(fmt::format("path '{}' escapes its root", raw));
            segments.pop_back();
        } else if (!segment.empty() && segment != ".") {
            segments.push_back(std::move(segment));
        }
        pos = next + 1;
    }
    if (segments.empty()) throw InputError(fmt::format("path '{}' normalizes to nothing", raw));

    std::string out;
    for (const auto& segment : segments) {
        if (!out.empty()) out += '/';
        out += segment;
    }
    return out;
}

bool is_normalized_path(std::string_view path) noexcept {
    try {
        return normalize_path(path) == path;
    } catch (const InputError&) {
        return false;
    }
}

std::string_view to_string(ChangeKind kind) noexcept {
    switch (kind) {
        case ChangeKind::modify: return "modify";
        case ChangeKind::remove: return "delete";
        case ChangeKind::insert_anchor: return "insert-anchor";
    }
    return "modify";
}

ChangeKind change_kind_from_string(std::string_view text) {
    if (text == "modify") return ChangeKind::modify;
    if (text == "delete") return ChangeKind::remove;
    if (text == "insert-anchor") return ChangeKind::insert_anchor;
    throw InputError(fmt::format("unknown change kind '{}'", text));
}

std::string_view to_string(CloneType type) noexcept {
    switch (type) {
        case CloneType::T1: return "T1";
        case CloneType::T2: return "T2";
        case CloneType::T3: return "T3";
    }
    return "T3";
}

std::string_view to_string(Processing processing) noexcept {
    switch (processing) {
        case Processing::text: return "text";
        case Processing::token: return "token";
        case Processing::pattern: return "pattern";
    }
    return "text";
}

CloneType clone_type_from_string(std::string_view text) {
    if (text == "T1") return CloneType::T1;
    if (text == "T2") return CloneType::T2;
    if (text == "T3") return CloneType::T3;
    throw InputError(fmt::format("unknown clone type '{}' (expected T1, T2 or T3)", text));
}

Processing processing_from_string(std::string_view text) {
    if (text == "text") return Processing::text;
    if (text == "token") return Processing::token;
    if (text == "pattern") return Processing::pattern;
    throw InputError(fmt::format("unknown processing technique '{}' (expected text, token or pattern)", text));
}

std::size_t CloneReport::fragment_count() const noexcept {
    std::size_t total = 0;
    for (const auto& clone_class : classes) total += clone_class.fragments.size();
    return total;
}

std::string format_finding(const Finding& finding) {
    return fmt::format("{}: {}: {}", finding.severity == Severity::error ? "error" : "warning",
                       finding.location, finding.message);
}

bool ValidationResult::has_errors() const noexcept {
    for (const auto& finding : findings) {
        if (finding.severity == Severity::error) return true;
    }
    return false;
}

ValidationResult validate_report(const CloneReport& report, const FileLengthTable* snapshot) {
    ValidationResult result;
    auto& out = result.normalized;
    out.tool_id = report.tool_id;
    out.tool_meta = report.tool_meta;
    out.system_id = report.system_id;
    out.revision_id = report.revision_id;

    auto add = [&](Severity severity, std::string location, std::string message) {
        result.findings.push_back({severity, std::move(location), std::move(message)});
    };

    std::set<std::string, std::less<>> seen_ids;
    for (std::size_t ci = 0; ci < report.classes.size(); ++ci) {
        const CloneClass& in_class = report.classes[ci];
        const std::string class_loc = fmt::format("class[{}] '{}'", ci, in_class.class_id);

        if (in_class.fragments.size() < 2) {
            add(Severity::error, class_loc,
                fmt::format("class has {} fragment(s), at least 2 required", in_class.fragments.size()));
            continue;
        }

        CloneClass kept;
        kept.class_id = in_class.class_id;
        std::set<FileAnchor> identities;
        for (std::size_t fi = 0; fi < in_class.fragments.size(); ++fi) {
            const std::string loc = fmt::format("{} fragment[{}]", class_loc, fi);
            FileAnchor anchor = in_class.fragments[fi].anchor;

            if (!anchor.range.valid()) {
                add(Severity::error, loc,
                    fmt::format("invalid range {}-{}", anchor.range.start_line, anchor.range.end_line));
                continue;
            }
            if (!is_normalized_path(anchor.file_path)) {
                try {
                    anchor.file_path = normalize_path(anchor.file_path);
                    add(Severity::warning, loc, fmt::format("path normalized to '{}'", anchor.file_path));
                } catch (const InputError& e) {
                    add(Severity::error, loc, e.what());
                    continue;
                }
            }
            if (snapshot != nullptr) {
                auto file = snapshot->find(anchor.file_path);
                if (file == snapshot->end()) {
                    add(Severity::warning, loc, fmt::format("file '{}' not in snapshot", anchor.file_path));
                } else {
                    const auto length = static_cast<LineNo>(file->second);
                    if (anchor.range.start_line > length) {
                        add(Severity::warning, loc,
                            fmt::format("range {}-{} starts past end of '{}' ({} lines); dropped",
                                        anchor.range.start_line, anchor.range.end_line, anchor.file_path, length));
                        continue;
                    }
                    if (anchor.range.end_line > length) {
                        add(Severity::warning, loc,
                            fmt::format("range {}-{} clipped to {}-{} (file has {} lines)", anchor.range.start_line,
                                        anchor.range.end_line, anchor.range.start_line, length, length));
                        anchor.range.end_line = length;
                    }
                }
            }
            if (!identities.insert(anchor).second) {
                add(Severity::warning, loc,
                    fmt::format("duplicate fragment {}:{}-{} removed", anchor.file_path, anchor.range.start_line,
                                anchor.range.end_line));
                continue;
            }
            kept.fragments.push_back({std::move(anchor), kept.fragments.size()});
        }

        if (kept.fragments.size() < 2) {
            add(Severity::warning, class_loc, "fewer than 2 fragments survive normalization; class dropped");
            continue;
        }
        if (!seen_ids.insert(kept.class_id).second) {
            std::string renamed = kept.class_id;
            for (int k = 2; seen_ids.contains(renamed); ++k) renamed = fmt::format("{}#{}", kept.class_id, k);
            add(Severity::warning, class_loc, fmt::format("duplicate class id renamed to '{}'", renamed));
            seen_ids.insert(renamed);
            kept.class_id = std::move(renamed);
        }
        out.classes.push_back(std::move(kept));
    }
    return result;
}

}  // namespace ccbench
