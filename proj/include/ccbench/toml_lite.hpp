#pragma once

// Reader for the TOML subset used by run configurations: comments, bare and
// quoted keys, basic and literal strings, integers, floats, booleans,
// (multi-line) arrays, [tables] and [[arrays of tables]]. Dotted keys, inline
// tables, dates and multi-line strings are rejected with a ParseError.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ccbench::toml {

struct Value;
using Array = std::vector<Value>;
using Table = std::map<std::string, Value, std::less<>>;

struct Value {
    std::variant<std::string, std::int64_t, double, bool, Array, Table> data;

    bool is_string() const noexcept { return std::holds_alternative<std::string>(data); }
    bool is_integer() const noexcept { return std::holds_alternative<std::int64_t>(data); }
    bool is_float() const noexcept { return std::holds_alternative<double>(data); }
    bool is_bool() const noexcept { return std::holds_alternative<bool>(data); }
    bool is_array() const noexcept { return std::holds_alternative<Array>(data); }
    bool is_table() const noexcept { return std::holds_alternative<Table>(data); }

    const std::string& as_string() const { return std::get<std::string>(data); }
    std::int64_t as_integer() const { return std::get<std::int64_t>(data); }
    bool as_bool() const { return std::get<bool>(data); }
    const Array& as_array() const { return std::get<Array>(data); }
    const Table& as_table() const { return std::get<Table>(data); }
    /// Integers widen to double.
    double as_number() const;

    std::string_view type_name() const noexcept;
};

/// `source` names the document in ParseError locations ("<source>:<line>").
Table parse(std::string_view text, std::string_view source = "<string>");
Table parse_file(const std::filesystem::path& path);

const Value* find(const Table& table, std::string_view key);

}  // namespace ccbench::toml
