#pragma once

// Minimal RFC 4180 reading and writing.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ccbench {

struct CsvRow {
    std::size_t line = 0;  // 1-based line where the row starts
    std::vector<std::string> fields;
};

/// Blank lines are skipped; '\r' before '\n' is dropped. Unterminated quotes
/// run to the end of input rather than failing.
std::vector<CsvRow> parse_csv(std::string_view text);

std::string csv_escape(std::string_view field);

/// Joins already formatted fields with commas, escaping as needed.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace ccbench
