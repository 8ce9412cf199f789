#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace ccbench {

/// Whole file as bytes. Throws InputError naming the path when unreadable.
std::string read_text_file(const std::filesystem::path& path);

/// Creates parent directories. Throws InputError naming the path on failure.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace ccbench
