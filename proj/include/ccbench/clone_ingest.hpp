#pragma once

// Clone-detector output adapters. Every adapter produces the same normalized
// CloneReport: fragments deduplicated per class, classes with fewer than two
// surviving fragments dropped with a warning.
//
// Interchange JSON (field names are fixed):
//   { "tool": str, "system": str, "revision": str,
//     "clone_type": "T1"|"T2"|"T3", "processing": "text"|"token"|"pattern",
//     "classes": [ { "id": str,
//                    "fragments": [ { "file": str, "start_line": int, "end_line": int } ] } ] }

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccbench/core_model.hpp"

namespace ccbench {

/// Values the XML and CSV formats cannot carry, plus path re-rooting.
struct IngestOptions {
    std::string tool_id;
    std::string system_id;
    std::string revision_id;
    ToolMeta tool_meta;
    /// Absolute paths must start with this prefix, which is stripped.
    /// Relative paths starting with it are stripped as well.
    std::string path_prefix;
};

struct ParsedReport {
    CloneReport report;
    std::vector<Finding> warnings;
};

enum class ReportFormat { interchange, xml, csv };

std::string_view to_string(ReportFormat format) noexcept;
ReportFormat report_format_from_string(std::string_view text);
std::string_view file_extension(ReportFormat format) noexcept;

/// Throws ParseError naming the JSON path of the offending value.
ParsedReport parse_interchange(std::string_view document, const IngestOptions& options = {});

/// NiCad-style XML: <classes><class classid=".."><source file=".." startline=".."
/// endline=".."/>...</class></classes>. A <clones><clone> root is accepted as
/// well. Missing class ids become 1-based ordinals.
ParsedReport parse_class_xml(std::string_view document, const IngestOptions& options);

/// Header `class_id,file,start_line,end_line`; rows sharing a class id form one
/// class in row order, classes ordered by first appearance.
ParsedReport parse_generic_csv(std::string_view document, const IngestOptions& options);

ParsedReport parse_report(ReportFormat format, std::string_view document, const IngestOptions& options);

std::string to_interchange_json(const CloneReport& report);

}  // namespace ccbench
